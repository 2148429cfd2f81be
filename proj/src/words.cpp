#include "kiselman/words.hpp"

#include <algorithm>  // for equal, search, reverse
#include <array>      // for array
#include <bit>        // for popcount
#include <charconv>   // for from_chars
#include <limits>     // for numeric_limits

#include "kiselman/exception.hpp"  // for ValidationError

namespace kiselman {

  namespace {
    void validate_letter(int letter, std::size_t rank, std::size_t pos) {
      if (letter < 1 || static_cast<std::size_t>(letter) > rank) {
        throw ValidationError("index out of range: letter " + std::to_string(letter)
                              + " at position " + std::to_string(pos)
                              + " is not in [1, " + std::to_string(rank) + "]");
      }
    }

    void check_same_rank(std::size_t lhs, std::size_t rhs) {
      if (lhs != rhs) {
        throw ValidationError("rank mismatch: " + std::to_string(lhs) + " vs "
                              + std::to_string(rhs));
      }
    }
  }  // namespace

  void validate_rank(std::size_t rank) {
    if (rank < 1 || rank > max_rank) {
      throw ValidationError("rank must lie in [1, " + std::to_string(max_rank)
                            + "], found " + std::to_string(rank));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::size_t rank) : _rank(rank), _letters() {
    validate_rank(rank);
  }

  Word::Word(std::size_t rank, std::initializer_list<int> letters)
      : Word(rank) {
    _letters.reserve(letters.size());
    for (int a : letters) {
      push_back(a);
    }
  }

  void Word::push_back(int letter) {
    validate_letter(letter, _rank, _letters.size());
    _letters.push_back(static_cast<letter_type>(letter));
  }

  Word Word::erased(std::size_t pos) const {
    std::vector<letter_type> out;
    out.reserve(_letters.size() - 1);
    out.insert(out.end(), _letters.begin(), _letters.begin() + pos);
    out.insert(out.end(), _letters.begin() + pos + 1, _letters.end());
    return Word(_rank, std::move(out));
  }

  Word Word::factor(std::size_t first, std::size_t count) const {
    return Word(_rank,
                std::vector<letter_type>(_letters.begin() + first,
                                         _letters.begin() + first + count));
  }

  std::strong_ordering operator<=>(Word const& lhs, Word const& rhs) noexcept {
    if (auto c = lhs._rank <=> rhs._rank; c != 0) {
      return c;
    }
    if (auto c = lhs.size() <=> rhs.size(); c != 0) {
      return c;
    }
    return lhs._letters <=> rhs._letters;
  }

  Word word_from_indices(std::span<int const> indices, std::size_t rank) {
    validate_rank(rank);
    std::vector<letter_type> out;
    out.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      validate_letter(indices[i], rank, i);
      out.push_back(static_cast<letter_type>(indices[i]));
    }
    return Word(rank, std::move(out));
  }

  Word concat(Word const& u, Word const& v) {
    check_same_rank(u.rank(), v.rank());
    std::vector<letter_type> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u._letters.begin(), u._letters.end());
    out.insert(out.end(), v._letters.begin(), v._letters.end());
    return Word(u.rank(), std::move(out));
  }

  Word parse_word(std::string_view text, std::size_t rank) {
    validate_rank(rank);
    std::vector<int> indices;
    std::size_t      i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) {
        ++j;
      }
      auto token = text.substr(i, j - i);
      int  value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ValidationError("cannot parse letter \"" + std::string(token)
                              + "\" at position " + std::to_string(indices.size()));
      }
      indices.push_back(value);
      i = j;
    }
    return word_from_indices(indices, rank);
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // LetterSet
  ////////////////////////////////////////////////////////////////////////

  LetterSet::LetterSet(std::size_t rank) : _rank(rank) {
    validate_rank(rank);
  }

  LetterSet::LetterSet(std::size_t rank, std::initializer_list<int> members)
      : LetterSet(rank) {
    for (int a : members) {
      insert(a);
    }
  }

  LetterSet LetterSet::range(int lo, int hi, std::size_t rank) {
    LetterSet out(rank);
    for (int a = std::max(lo, 1); a <= hi; ++a) {
      out.insert(a);
    }
    return out;
  }

  bool LetterSet::contains(int letter) const noexcept {
    if (letter < 1 || static_cast<std::size_t>(letter) > _rank) {
      return false;
    }
    return (_bits >> (letter - 1)) & 1U;
  }

  void LetterSet::insert(int letter) {
    validate_letter(letter, _rank, size());
    _bits |= (std::uint32_t{1} << (letter - 1));
  }

  std::size_t LetterSet::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(_bits));
  }

  bool LetterSet::is_subset_of(LetterSet const& other) const {
    check_same_rank(_rank, other._rank);
    return (_bits & ~other._bits) == 0;
  }

  std::vector<int> LetterSet::members() const {
    std::vector<int> out;
    for (int a = 1; a <= static_cast<int>(_rank); ++a) {
      if (contains(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  LetterSet operator|(LetterSet const& lhs, LetterSet const& rhs) {
    check_same_rank(lhs._rank, rhs._rank);
    LetterSet out(lhs._rank);
    out._bits = lhs._bits | rhs._bits;
    return out;
  }

  std::string to_string(LetterSet const& s) {
    std::string out = "{";
    bool        first = true;
    for (int a : s.members()) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(a);
      first = false;
    }
    return out + "}";
  }

  LetterSet letters_of(Word const& w) {
    LetterSet out(w.rank());
    for (auto a : w) {
      out.insert(a);
    }
    return out;
  }

  bool is_over(Word const& w, LetterSet const& s) {
    check_same_rank(w.rank(), s.rank());
    return std::all_of(w.begin(), w.end(), [&s](auto a) { return s.contains(a); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates and maps
  ////////////////////////////////////////////////////////////////////////

  bool is_subword(Word const& u, Word const& w) {
    check_same_rank(u.rank(), w.rank());
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end()
           || u.empty();
  }

  bool is_quasi_subword(Word const& v, Word const& w) {
    check_same_rank(v.rank(), w.rank());
    auto it = v.begin();
    for (auto a : w) {
      if (it == v.end()) {
        break;
      }
      if (*it == a) {
        ++it;
      }
    }
    return it == v.end();
  }

  bool is_canonical(Word const& w) {
    return !detail::first_redex(w.letters(), w.rank()).has_value();
  }

  Word mirror(Word const& w) {
    std::vector<letter_type> out(w.begin(), w.end());
    auto const               top = static_cast<int>(w.rank()) + 1;
    for (auto& a : out) {
      a = static_cast<letter_type>(top - a);
    }
    return Word(w.rank(), std::move(out));
  }

  Word reversed(Word const& w) {
    std::vector<letter_type> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return Word(w.rank(), std::move(out));
  }

  Word idempotent_word(LetterSet const& x) {
    Word out(x.rank());
    auto members = x.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      out.push_back(*it);
    }
    return out;
  }

  std::map<int, std::size_t> occurrence_counts(Word const& w) {
    std::map<int, std::size_t> out;
    for (int a = 1; a <= static_cast<int>(w.rank()); ++a) {
      out[a] = 0;
    }
    for (auto a : w) {
      ++out[a];
    }
    return out;
  }

  std::size_t occurrence_bound(int letter, std::size_t rank) {
    validate_letter(letter, rank, 0);
    auto const i = static_cast<std::size_t>(letter);
    // ceil(n/2) and ceil((n+1)/2)
    if (i <= (rank + 1) / 2) {
      return std::size_t{1} << (i - 1);
    }
    return std::size_t{1} << (rank - i);
  }

  namespace detail {
    std::optional<Redex> first_redex(std::span<letter_type const> letters,
                                     std::size_t                  rank,
                                     std::size_t                  start) {
      constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
      // For each letter: its last position so far, and the min/max letter
      // seen strictly after it.
      std::array<std::size_t, max_rank + 1> last;
      std::array<int, max_rank + 1>         lo;
      std::array<int, max_rank + 1>         hi;
      last.fill(none);
      lo.fill(std::numeric_limits<int>::max());
      hi.fill(0);

      for (std::size_t q = 0; q < letters.size(); ++q) {
        int const b = letters[q];
        if (q >= start && last[b] != none) {
          bool const below = hi[b] < b;
          bool const above = lo[b] > b;
          if (below || above) {
            return Redex{b, last[b], q, below, above};
          }
        }
        for (std::size_t a = 1; a <= rank; ++a) {
          if (last[a] != none) {
            lo[a] = std::min(lo[a], b);
            hi[a] = std::max(hi[a], b);
          }
        }
        last[b] = q;
        lo[b]   = std::numeric_limits<int>::max();
        hi[b]   = 0;
      }
      return std::nullopt;
    }
  }  // namespace detail

}  // namespace kiselman

std::size_t std::hash<kiselman::Word>::operator()(
    kiselman::Word const& w) const noexcept {
  // FNV-1a over the rank and letters.
  std::size_t h = 1469598103934665603ULL;
  auto        mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(w.rank());
  for (auto a : w) {
    mix(a);
  }
  return h;
}
