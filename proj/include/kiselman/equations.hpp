// Equations over the zero element f = a_n ... a_1 of K_n.
//
// Brute-force solvers run over an enumerated K_n.  The set
// R = { x : x a_1 = f } additionally has a constructive description
//
//   R = { e_{2..n} } ∪ T,   T = { x a_1 e_{2..m(x)} : x ∈ <a_2, ..., a_n> },
//
// which only needs the submonoid <a_2, ..., a_n> ≅ K_{n-1}.

#ifndef KISELMAN_EQUATIONS_HPP_
#define KISELMAN_EQUATIONS_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "algebra.hpp"    // for Element
#include "enumerate.hpp"  // for EnumerationResult

namespace kiselman {

  struct RDecomposition {
    Element              special;  // e_{2..n}
    std::vector<Element> t_part;   // T, short-lex ordered
  };

  struct ZeroSolutionSet {
    std::size_t                   rank;
    Element                       y;
    std::vector<Element>          solutions;  // short-lex ordered
    std::optional<RDecomposition> decomposition;  // present iff y = a_1

    [[nodiscard]] bool contains(Element const& x) const;
  };

  // { x : x y = f }.  Throws InvariantError if the result contradicts the
  // content characterization of trivial solutions.
  ZeroSolutionSet solve_right_zero(EnumerationResult const& res,
                                   Element const&           y);

  // { y : x y = f }.
  std::vector<Element> solve_left_zero(EnumerationResult const& res,
                                       Element const&           x);

  // R built from <a_2, ..., a_n> without enumerating K_n.  Throws
  // InvariantError if |T| != |K_{n-1}| or the construction collides.
  ZeroSolutionSet construct_R(std::size_t rank,
                              std::size_t limit = default_element_limit);

  // ζ(x) a_1 ē_{2..m(x)} for x over {2..n}, checked against the canonical
  // form of the product.  Throws DomainError if 1 ∈ content(x).
  Word canonical_form_of_T_element(Element const& x);

  // Product inside R by the case rule
  //   e_{2..n} e_{2..n} = e_{2..n},  x e_{2..n} = x (x ∈ T),  x y = f (y ∈ T),
  // checked against multiply.  Throws DomainError if x or y is not in R.
  Element r_multiply(ZeroSolutionSet const& r, Element const& x, Element const& y);

  struct CancellationViolation {
    std::string            clause;
    Element                x;
    Element                y;
    std::optional<Element> z;
  };

  struct CancellationReport {
    std::size_t                        rank;
    std::size_t                        checked_pairs   = 0;
    std::size_t                        checked_triples = 0;
    std::vector<CancellationViolation> violations;

    [[nodiscard]] bool verified() const noexcept {
      return violations.empty();
    }
  };

  inline constexpr std::size_t default_triple_samples = 100'000;

  // Pair scan of both cancellation clauses and of the single generator
  // corollary, exhaustive unless pair_samples is given; sampled (seeded) scan
  // of the three-factor corollary x y z = f with c(x) ⊆ {1..n-1},
  // c(z) ⊆ {2..n} implies y = f.
  CancellationReport verify_zero_cancellation(
      EnumerationResult const&   res,
      MultiplicationTable const& table,
      std::uint64_t              seed           = 0,
      std::size_t                triple_samples = default_triple_samples,
      std::optional<std::size_t> pair_samples   = std::nullopt);

  // Whether x a_k = f for some k in {2..n}.  Throws DomainError at rank 1.
  bool characterize_zero(Element const& x);

}  // namespace kiselman

#endif  // KISELMAN_EQUATIONS_HPP_
