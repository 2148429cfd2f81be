#include "kiselman/equations.hpp"

#include <algorithm>  // for binary_search, sort, adjacent_find
#include <random>     // for mt19937_64, uniform_int_distribution

#include "kiselman/exception.hpp"  // for DomainError, InvariantError

namespace kiselman {

  namespace {
    LetterSet upper_letters(std::size_t rank) {
      return LetterSet::range(2, static_cast<int>(rank), rank);
    }

    LetterSet lower_letters(std::size_t rank) {
      return LetterSet::range(1, static_cast<int>(rank) - 1, rank);
    }

    Element e_upper(std::size_t rank) {
      return idempotent(upper_letters(rank));
    }
  }  // namespace

  bool ZeroSolutionSet::contains(Element const& x) const {
    return std::binary_search(solutions.begin(), solutions.end(), x);
  }

  ZeroSolutionSet solve_right_zero(EnumerationResult const& res,
                                   Element const&           y) {
    auto const rank = res.rank();
    if (y.rank() != rank) {
      throw ValidationError("rank mismatch in solve_right_zero");
    }
    auto const f = zero(rank);

    ZeroSolutionSet out{rank, y, {}, std::nullopt};
    for (auto const& x : res.elements()) {
      if (x * y == f) {
        out.solutions.push_back(x);
      }
    }

    bool const trivial_only = content(y).is_subset_of(upper_letters(rank));
    if (trivial_only != (out.solutions == std::vector<Element>{f})) {
      throw InvariantError("x y = f has "
                           + std::to_string(out.solutions.size())
                           + " solutions for y = " + to_string(y, true)
                           + " with content " + to_string(content(y)));
    }

    if (y == generator(1, rank)) {
      RDecomposition d{e_upper(rank), {}};
      std::vector<Element> rest;
      for (auto const& x : out.solutions) {
        (content(x).contains(1) ? d.t_part : rest).push_back(x);
      }
      if (rest != std::vector<Element>{d.special}) {
        throw InvariantError("solutions of x a_1 = f outside K_n^1 are not "
                             "exactly e_{2..n}");
      }
      out.decomposition = std::move(d);
    }
    return out;
  }

  std::vector<Element> solve_left_zero(EnumerationResult const& res,
                                       Element const&           x) {
    if (x.rank() != res.rank()) {
      throw ValidationError("rank mismatch in solve_left_zero");
    }
    auto const           f = zero(res.rank());
    std::vector<Element> out;
    for (auto const& y : res.elements()) {
      if (x * y == f) {
        out.push_back(y);
      }
    }
    return out;
  }

  ZeroSolutionSet construct_R(std::size_t rank, std::size_t limit) {
    validate_rank(rank);
    auto const a1        = generator(1, rank);
    auto const submonoid = enumerate_submonoid(upper_letters(rank), limit);

    RDecomposition d{e_upper(rank), {}};
    for (auto const& x : submonoid.elements()) {
      auto const m = static_cast<int>(m_value(x));
      d.t_part.push_back(x * a1 * idempotent(LetterSet::range(2, m, rank)));
    }
    std::sort(d.t_part.begin(), d.t_part.end());
    if (std::adjacent_find(d.t_part.begin(), d.t_part.end()) != d.t_part.end()) {
      throw InvariantError("x -> x a_1 e_{2..m(x)} is not injective");
    }
    auto const expected = cardinality(rank - 1, limit);
    if (d.t_part.size() != expected) {
      throw InvariantError("|T| = " + std::to_string(d.t_part.size())
                           + " but |K_{n-1}| = " + std::to_string(expected));
    }
    if (std::binary_search(d.t_part.begin(), d.t_part.end(), d.special)) {
      throw InvariantError("e_{2..n} lies in T");
    }

    ZeroSolutionSet out{rank, a1, d.t_part, std::nullopt};
    out.solutions.push_back(d.special);
    std::sort(out.solutions.begin(), out.solutions.end());
    out.decomposition = std::move(d);
    return out;
  }

  Word canonical_form_of_T_element(Element const& x) {
    auto const rank = x.rank();
    if (!content(x).is_subset_of(upper_letters(rank))) {
      throw DomainError("x = " + to_string(x, true)
                        + " does not lie in <a_2, ..., a_n>");
    }
    auto const m = static_cast<int>(m_value(x));
    auto const e = idempotent_word(LetterSet::range(2, m, rank));
    auto const w = concat(concat(x.word(), Word(rank, {1})), e);
    auto const product = x * generator(1, rank) * Element::from_canonical(e);
    if (product.word() != w) {
      throw InvariantError("canonical form of x a_1 e_{2..m(x)} is \""
                           + to_string(product.word()) + "\", expected \""
                           + to_string(w) + "\"");
    }
    return w;
  }

  Element r_multiply(ZeroSolutionSet const& r, Element const& x, Element const& y) {
    if (!r.decomposition) {
      throw DomainError("solution set is not R = { x : x a_1 = f }");
    }
    for (auto const* z : {&x, &y}) {
      if (!r.contains(*z)) {
        throw DomainError("not in R: " + to_string(*z, true));
      }
    }
    auto const& special = r.decomposition->special;
    Element     result  = zero(r.rank);
    if (x == special && y == special) {
      result = special;
    } else if (y == special) {
      result = x;
    }
    auto const expected = x * y;
    if (result != expected) {
      throw InvariantError("R multiplication rule gives " + to_string(result, true)
                           + " but " + to_string(x, true) + " * "
                           + to_string(y, true) + " = "
                           + to_string(expected, true));
    }
    return result;
  }

  CancellationReport verify_zero_cancellation(EnumerationResult const&   res,
                                              MultiplicationTable const& table,
                                              std::uint64_t              seed,
                                              std::size_t triple_samples,
                                              std::optional<std::size_t> pair_samples) {
    auto const  rank  = res.rank();
    auto const& elts  = res.elements();
    auto const  size  = elts.size();
    auto const  f     = *res.index_of(zero(rank));
    auto const  upper = upper_letters(rank);
    auto const  lower = lower_letters(rank);

    std::vector<bool> in_upper(size), in_lower(size);
    std::vector<int>  gen_letter(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      auto const c = content(elts[i]);
      in_upper[i]  = c.is_subset_of(upper);
      in_lower[i]  = c.is_subset_of(lower);
      if (elts[i].word().size() == 1) {
        gen_letter[i] = elts[i].word()[0];
      }
    }

    CancellationReport report{rank, 0, 0, {}};
    auto violate = [&](char const* clause, std::size_t i, std::size_t j) {
      report.violations.push_back({clause, elts[i], elts[j], std::nullopt});
    };
    auto check_pair = [&](std::size_t i, std::size_t j) {
      ++report.checked_pairs;
      if (table.product(i, j) != f) {
        return;
      }
      if (in_upper[j] && i != f) {
        violate("c(y) in {2..n} and xy = f but x != f", i, j);
      }
      if (in_lower[i] && j != f) {
        violate("c(x) in {1..n-1} and xy = f but y != f", i, j);
      }
      if (gen_letter[j] >= 2 && i != f) {
        violate("x a_k = f with k >= 2 but x != f", i, j);
      }
      if (gen_letter[i] >= 1 && gen_letter[i] <= static_cast<int>(rank) - 1
          && j != f) {
        violate("a_l x = f with l <= n-1 but x != f", i, j);
      }
    };

    std::mt19937_64 rng(seed);
    if (pair_samples) {
      std::uniform_int_distribution<std::size_t> pick(0, size - 1);
      for (std::size_t s = 0; s < *pair_samples; ++s) {
        auto const i = pick(rng);
        check_pair(i, pick(rng));
      }
    } else {
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          check_pair(i, j);
        }
      }
    }

    std::vector<std::size_t> lefts, rights;
    for (std::size_t i = 0; i < size; ++i) {
      if (in_lower[i]) {
        lefts.push_back(i);
      }
      if (in_upper[i]) {
        rights.push_back(i);
      }
    }
    std::uniform_int_distribution<std::size_t> pick_x(0, lefts.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_y(0, size - 1);
    std::uniform_int_distribution<std::size_t> pick_z(0, rights.size() - 1);
    for (std::size_t s = 0; s < triple_samples; ++s) {
      auto const i = lefts[pick_x(rng)];
      auto const j = pick_y(rng);
      auto const k = rights[pick_z(rng)];
      ++report.checked_triples;
      if (table.product(table.product(i, j), k) == f && j != f) {
        report.violations.push_back({"xyz = f with c(x) in {1..n-1}, c(z) in "
                                     "{2..n} but y != f",
                                     elts[i], elts[j], elts[k]});
      }
    }
    return report;
  }

  bool characterize_zero(Element const& x) {
    auto const rank = x.rank();
    if (rank < 2) {
      throw DomainError("characterize_zero needs rank >= 2");
    }
    auto const f = zero(rank);
    for (int k = 2; k <= static_cast<int>(rank); ++k) {
      if (x * generator(k, rank) == f) {
        return true;
      }
    }
    return false;
  }

}  // namespace kiselman
