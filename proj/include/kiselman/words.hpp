// Words over the generator alphabet {1, ..., n} of Kiselman's semigroup K_n,
// sets of letters, and the purely combinatorial predicates on words
// (subword, quasi-subword, canonicality) used throughout the library.

#ifndef KISELMAN_WORDS_HPP_
#define KISELMAN_WORDS_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint8_t, uint32_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <map>               // for map
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

namespace kiselman {

  using letter_type = std::uint8_t;

  // Largest supported rank; letter sets are stored as 32-bit masks.
  inline constexpr std::size_t max_rank = 32;

  // Throws ValidationError unless 1 <= rank <= max_rank.
  void validate_rank(std::size_t rank);

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  // A finite word a_{i_1} ... a_{i_k} over {1, ..., rank}.  The rank travels
  // with the word so that operations on words of different ranks fail
  // instead of silently reinterpreting letters.
  //
  // Ordering is short-lex: shorter words first, then lexicographic.
  class Word {
   public:
    explicit Word(std::size_t rank);
    Word(std::size_t rank, std::initializer_list<int> letters);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] letter_type operator[](std::size_t pos) const {
      return _letters[pos];
    }
    [[nodiscard]] std::span<letter_type const> letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] auto begin() const noexcept {
      return _letters.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _letters.cend();
    }

    // Appends a letter, validating its range.
    void push_back(int letter);
    void pop_back() {
      _letters.pop_back();
    }
    // Removes the letter at pos (no range check on pos beyond size()).
    [[nodiscard]] Word erased(std::size_t pos) const;
    // Contiguous factor [first, first + count).
    [[nodiscard]] Word factor(std::size_t first, std::size_t count) const;

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& lhs,
                                            Word const& rhs) noexcept;

   private:
    Word(std::size_t rank, std::vector<letter_type>&& letters) noexcept
        : _rank(rank), _letters(std::move(letters)) {}

    friend Word word_from_indices(std::span<int const>, std::size_t);
    friend Word concat(Word const&, Word const&);
    friend Word mirror(Word const&);
    friend Word reversed(Word const&);

    std::size_t              _rank;
    std::vector<letter_type> _letters;
  };

  // Builds a word from 1-based letter indices.  Throws ValidationError naming
  // the first offending position if an index lies outside [1, rank].
  Word word_from_indices(std::span<int const> indices, std::size_t rank);

  // Concatenation; throws ValidationError on rank mismatch.
  Word concat(Word const& u, Word const& v);

  // Parses "3 2 1" (whitespace separated decimal indices; "" is the empty
  // word).  Throws ValidationError on malformed input.
  Word parse_word(std::string_view text, std::size_t rank);

  // "3 2 1"; the empty word is the empty string.
  std::string to_string(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // LetterSet
  ////////////////////////////////////////////////////////////////////////

  // A subset of {1, ..., rank}.
  class LetterSet {
   public:
    explicit LetterSet(std::size_t rank);
    LetterSet(std::size_t rank, std::initializer_list<int> members);

    // {lo, lo + 1, ..., hi}; empty when hi < lo.
    static LetterSet range(int lo, int hi, std::size_t rank);
    static LetterSet full(std::size_t rank) {
      return range(1, static_cast<int>(rank), rank);
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] bool contains(int letter) const noexcept;
    void               insert(int letter);
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool        empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] bool is_subset_of(LetterSet const& other) const;
    [[nodiscard]] std::uint32_t bits() const noexcept {
      return _bits;
    }
    // Members in increasing order.
    [[nodiscard]] std::vector<int> members() const;

    friend LetterSet operator|(LetterSet const& lhs, LetterSet const& rhs);
    friend bool      operator==(LetterSet const&, LetterSet const&) = default;

   private:
    std::size_t   _rank;
    std::uint32_t _bits = 0;
  };

  // "{1,3}"
  std::string to_string(LetterSet const& s);

  // The set of letters occurring in w.
  LetterSet letters_of(Word const& w);

  // True iff every letter of w lies in s.
  bool is_over(Word const& w, LetterSet const& s);

  ////////////////////////////////////////////////////////////////////////
  // Predicates and maps on words
  ////////////////////////////////////////////////////////////////////////

  // u occurs as a contiguous factor of w.
  bool is_subword(Word const& u, Word const& w);

  // v is a (not necessarily contiguous) subsequence of w.
  bool is_quasi_subword(Word const& v, Word const& w);

  // Every factor a_i u a_i of w has letters both larger and smaller than i
  // inside u.
  bool is_canonical(Word const& w);

  // Letter-wise i -> rank - i + 1.
  Word mirror(Word const& w);

  // Reverses the order of the letters.
  Word reversed(Word const& w);

  // The word a_{i_1} ... a_{i_k} with i_1 > ... > i_k enumerating X.
  Word idempotent_word(LetterSet const& x);

  // Multiplicity of every letter 1..rank (absent letters map to 0).
  std::map<int, std::size_t> occurrence_counts(Word const& w);

  // Maximum number of occurrences of a_i in a canonical word of rank n:
  // 2^{i-1} for i <= ceil(n/2) and 2^{n-i} for i >= ceil((n+1)/2).
  std::size_t occurrence_bound(int letter, std::size_t rank);

  namespace detail {
    // A pair of consecutive occurrences of `letter` at positions
    // left < right, with the extreme letters strictly between them.  The gap
    // is empty iff max_between == 0.
    struct Redex {
      int         letter;
      std::size_t left;
      std::size_t right;
      bool        gap_below;  // every letter in the gap is < letter
      bool        gap_above;  // every letter in the gap is > letter
    };

    // First pair of consecutive equal letters, by increasing right position,
    // whose gap is entirely below or entirely above the letter.  Positions
    // before `start` are assumed to contain no such right endpoint.
    std::optional<Redex> first_redex(std::span<letter_type const> letters,
                                     std::size_t                  rank,
                                     std::size_t                  start = 0);
  }  // namespace detail

}  // namespace kiselman

template <>
struct std::hash<kiselman::Word> {
  std::size_t operator()(kiselman::Word const& w) const noexcept;
};

#endif  // KISELMAN_WORDS_HPP_
