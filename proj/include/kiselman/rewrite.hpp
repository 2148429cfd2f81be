// The one-letter deletion relation on words and the canonical form can(w).
//
// A word w reduces to w' if w = w1 a_i s a_i w2 and either
//   * w' = w1 a_i s w2 with every letter of s smaller than i (right deletion),
//   * w' = w1 s a_i w2 with every letter of s larger than i (left deletion).
// The relation is terminating and confluent; its normal forms are exactly the
// canonical words.

#ifndef KISELMAN_REWRITE_HPP_
#define KISELMAN_REWRITE_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "words.hpp"  // for Word

namespace kiselman {

  enum class DeletionKind { right, left };

  // "RightDeletion" / "LeftDeletion"
  std::string_view to_string(DeletionKind kind) noexcept;

  // A single deletion step.  Positions are 0-based indices into the source
  // word; both hold `letter`.
  struct Reduction {
    DeletionKind kind;
    int          letter;
    std::size_t  kept_position;
    std::size_t  removed_position;

    friend bool operator==(Reduction const&, Reduction const&) = default;
  };

  struct ReductionTrace {
    Word                                 source;
    std::vector<std::pair<Reduction, Word>> steps;

    [[nodiscard]] Word const& result() const {
      return steps.empty() ? source : steps.back().second;
    }
  };

  // Every w' with w -> w', each with a witnessing reduction.  Ordered by the
  // position of the right occurrence of the pair, right deletions first.  The
  // same w' may appear twice (an empty gap admits both deletions).  Empty iff
  // w is canonical.
  std::vector<std::pair<Reduction, Word>> one_step_reductions(Word const& w);

  // The unique canonical word representing the same element as w.
  Word canonical_form(Word const& w);

  // The deterministic chain w -> ... -> canonical_form(w).  At each step the
  // redex whose right occurrence is leftmost is applied, right deletion
  // preferred when the gap is empty.
  ReductionTrace reduction_trace(Word const& w);

  inline constexpr std::size_t default_node_budget = 1'000'000;

  // Exhaustive search over all reduction sequences from w; returns the set of
  // irreducible words reached (sorted).  Throws ResourceError once more than
  // node_budget distinct words have been visited.
  std::vector<Word> all_normal_forms(Word const& w,
                                     std::size_t node_budget
                                     = default_node_budget);

  // "<kind> letter=<i> keep=<p> remove=<q> -> <word>" per step, then
  // "canonical: <word>"; newline terminated.
  std::string format_trace(ReductionTrace const& trace);

}  // namespace kiselman

#endif  // KISELMAN_REWRITE_HPP_
