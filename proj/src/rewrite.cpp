#include "kiselman/rewrite.hpp"

#include <algorithm>      // for sort
#include <unordered_set>  // for unordered_set

#include "kiselman/exception.hpp"  // for ResourceError

namespace kiselman {

  std::string_view to_string(DeletionKind kind) noexcept {
    return kind == DeletionKind::right ? "RightDeletion" : "LeftDeletion";
  }

  std::vector<std::pair<Reduction, Word>> one_step_reductions(Word const& w) {
    std::vector<std::pair<Reduction, Word>> out;
    // Only consecutive occurrences of a letter can bound a redex: another a_i
    // in the gap is neither smaller nor larger than i.
    for (std::size_t q = 1; q < w.size(); ++q) {
      int const b = w[q];
      std::size_t p = q;
      int lo = static_cast<int>(w.rank()) + 1;
      int hi = 0;
      while (p-- > 0 && w[p] != b) {
        lo = std::min<int>(lo, w[p]);
        hi = std::max<int>(hi, w[p]);
      }
      if (p == static_cast<std::size_t>(-1)) {
        continue;
      }
      if (hi < b) {
        out.emplace_back(Reduction{DeletionKind::right, b, p, q}, w.erased(q));
      }
      if (lo > b) {
        out.emplace_back(Reduction{DeletionKind::left, b, q, p}, w.erased(p));
      }
    }
    return out;
  }

  namespace {
    template <typename Callback>
    Word reduce(Word w, Callback&& on_step) {
      std::size_t start = 0;
      while (auto redex = detail::first_redex(w.letters(), w.rank(), start)) {
        Reduction r;
        r.letter = redex->letter;
        if (redex->gap_below) {
          r.kind             = DeletionKind::right;
          r.kept_position    = redex->left;
          r.removed_position = redex->right;
        } else {
          r.kind             = DeletionKind::left;
          r.kept_position    = redex->right;
          r.removed_position = redex->left;
        }
        w = w.erased(r.removed_position);
        on_step(r, w);
        // The prefix before the deleted letter is unchanged and contained no
        // redex endpoint.
        start = r.removed_position;
      }
      return w;
    }
  }  // namespace

  Word canonical_form(Word const& w) {
    return reduce(w, [](Reduction const&, Word const&) {});
  }

  ReductionTrace reduction_trace(Word const& w) {
    ReductionTrace trace{w, {}};
    reduce(w, [&trace](Reduction const& r, Word const& next) {
      trace.steps.emplace_back(r, next);
    });
    return trace;
  }

  std::vector<Word> all_normal_forms(Word const& w, std::size_t node_budget) {
    std::unordered_set<Word> visited{w};
    std::vector<Word>        stack{w};
    std::vector<Word>        out;
    while (!stack.empty()) {
      Word current = std::move(stack.back());
      stack.pop_back();
      auto next = one_step_reductions(current);
      if (next.empty()) {
        out.push_back(std::move(current));
        continue;
      }
      for (auto& [r, v] : next) {
        if (visited.insert(v).second) {
          if (visited.size() > node_budget) {
            throw ResourceError("node budget of " + std::to_string(node_budget)
                                + " exceeded while exploring reductions of \""
                                + to_string(w) + "\"");
          }
          stack.push_back(std::move(v));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string format_trace(ReductionTrace const& trace) {
    std::string out;
    for (auto const& [r, word] : trace.steps) {
      out += to_string(r.kind);
      out += " letter=" + std::to_string(r.letter);
      out += " keep=" + std::to_string(r.kept_position);
      out += " remove=" + std::to_string(r.removed_position);
      out += " -> " + to_string(word) + "\n";
    }
    out += "canonical: " + to_string(trace.result()) + "\n";
    return out;
  }

}  // namespace kiselman
