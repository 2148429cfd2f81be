// Exhaustive construction of K_n.
//
// Two independent routes are provided so that each validates the other:
//   * enumerate_elements: closure of {e} under right multiplication by the
//     generators, using the rewriting system;
//   * enumerate_canonical_words: backtracking over words that satisfy the
//     canonicality condition, pruned by the occurrence bounds.

#ifndef KISELMAN_ENUMERATE_HPP_
#define KISELMAN_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <filesystem>  // for path
#include <optional>    // for optional
#include <span>        // for span
#include <unordered_map>  // for unordered_map
#include <vector>      // for vector

#include "algebra.hpp"  // for Element
#include "words.hpp"    // for Word, LetterSet

namespace kiselman {

  inline constexpr std::size_t default_element_limit = 10'000'000;
  // Ranks above this are refused unless explicitly allowed.
  inline constexpr std::size_t default_max_rank = 6;

  // Throws ResourceError if rank > default_max_rank and !allow_large.
  void check_rank_policy(std::size_t rank, bool allow_large);

  struct GenerationStats {
    std::size_t rounds          = 0;
    std::size_t multiplications = 0;
  };

  class EnumerationResult {
   public:
    // elements need not be sorted or unique on input.
    EnumerationResult(std::size_t          rank,
                      std::vector<Element> elements,
                      GenerationStats      stats = {});

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    // Short-lex ordered.
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::size_t cardinality() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] GenerationStats const& stats() const noexcept {
      return _stats;
    }
    [[nodiscard]] bool contains(Element const& x) const;
    [[nodiscard]] std::optional<std::size_t> index_of(Element const& x) const;

   private:
    std::size_t          _rank;
    std::vector<Element> _elements;
    GenerationStats      _stats;
  };

  // Breadth-first closure of {e} under right multiplication by a_1..a_n.
  // Throws ResourceError if more than limit elements are produced.
  EnumerationResult enumerate_elements(std::size_t rank,
                                       std::size_t limit = default_element_limit);

  // Closure of {e} under right multiplication by the generators in
  // `generators`, i.e. the submonoid they generate.
  EnumerationResult enumerate_submonoid(LetterSet const& generators,
                                        std::size_t limit = default_element_limit);

  // All canonical words over {1..rank}, short-lex ordered.
  std::vector<Word> enumerate_canonical_words(std::size_t rank,
                                              std::size_t limit
                                              = default_element_limit);

  // |K_n| via canonical words, with |K_0| = 1.
  std::size_t cardinality(std::size_t rank,
                          std::size_t limit = default_element_limit);

  // Elements x with required ⊆ content(x) ⊆ allowed.
  std::vector<Element> filter_by_content(EnumerationResult const& res,
                                         LetterSet const&         required,
                                         LetterSet const&         allowed);

  ////////////////////////////////////////////////////////////////////////
  // Multiplication table
  ////////////////////////////////////////////////////////////////////////

  // Cayley table of an enumerated K_n, indexed by positions in
  // EnumerationResult::elements().  A dense table precomputes all |K_n|^2
  // products; a lazy one multiplies on demand and only stores the index.
  // The table keeps a reference to `res`, which must outlive it.
  class MultiplicationTable {
   public:
    using index_type = std::uint32_t;

    explicit MultiplicationTable(EnumerationResult const& res, bool dense = true);

    [[nodiscard]] std::size_t size() const noexcept {
      return _res->cardinality();
    }
    [[nodiscard]] bool dense() const noexcept {
      return !_table.empty() || size() == 0;
    }
    [[nodiscard]] index_type product(std::size_t i, std::size_t j) const {
      if (!_table.empty()) {
        return _table[i * size() + j];
      }
      return compute(i, j);
    }

   private:
    index_type compute(std::size_t i, std::size_t j) const;

    EnumerationResult const*                _res;
    std::unordered_map<Element, index_type> _index;
    std::vector<index_type>                 _table;
  };

  ////////////////////////////////////////////////////////////////////////
  // Parity
  ////////////////////////////////////////////////////////////////////////

  enum class Parity { even, odd };

  // Counts behind |K_n| = |K_{n-2}| + 2(|K_{n-1}| - |K_{n-2}|) + 2|V_1|, where
  // V is the set of canonical words containing both a_1 and a_n, V_1 those
  // with a_1 first and V_2 those with a_n first.
  struct ParityReport {
    std::size_t rank;
    std::size_t card_n;
    std::size_t card_n1;  // |K_{n-1}|, with |K_0| = 1
    std::size_t card_n2;  // |K_{n-2}|, with |K_0| = 1 and |K_{-1}| = 0
    std::size_t v1_count;
    std::size_t v2_count;
    // Sizes of the four content classes: letters 1 and n both absent, only 1,
    // only n, both.
    std::size_t inner_count;
    std::size_t left_count;
    std::size_t right_count;
    std::size_t both_count;
    bool        base_case;        // rank < 3: the counts are reported directly
    bool        mirror_bijective; // t restricted to V_1 is a bijection onto V_2
    bool        v_letters_once;   // a_1 and a_n occur once in each word of V
    bool        partition_holds;  // class sizes match |K_{n-2}|, |K_{n-1}|-|K_{n-2}|, ...
    bool        identity_holds;
    Parity      parity;
  };

  ParityReport parity_report(std::size_t rank,
                             std::size_t limit = default_element_limit);

  ////////////////////////////////////////////////////////////////////////
  // Cache files
  ////////////////////////////////////////////////////////////////////////

  // <dir>/kiselman-n<rank>.cache
  std::filesystem::path cache_path(std::filesystem::path const& dir,
                                   std::size_t                  rank);

  // Header "kiselman-cache v1 n=<rank> count=<N>", then one canonical word per
  // line.
  void write_cache(std::filesystem::path const& file,
                   std::size_t                  rank,
                   std::span<Word const>        words);

  // Reads and validates a cache file (header, count, range, canonicality).
  // Throws ValidationError on any mismatch.
  std::vector<Word> read_cache(std::filesystem::path const& file,
                               std::size_t                  rank);

  // Enumerates K_n, going through <dir> if given: a valid cache file is read
  // back, otherwise the closure is computed and the cache written.
  EnumerationResult load_or_enumerate(std::size_t                           rank,
                                      std::optional<std::filesystem::path> const& dir,
                                      std::size_t limit = default_element_limit);

}  // namespace kiselman

#endif  // KISELMAN_ENUMERATE_HPP_
