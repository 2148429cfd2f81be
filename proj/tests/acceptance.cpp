// Acceptance criteria for the library.  Prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.  Pass --rank5 to extend the word
// bound check to rank 5.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kiselman/equations.hpp"
#include "kiselman/rewrite.hpp"
#include "oracles.hpp"

using namespace kiselman;

namespace {
  struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  std::vector<Word> words_of(EnumerationResult const& res) {
    std::vector<Word> out;
    for (auto const& x : res.elements()) {
      out.push_back(x.word());
    }
    return out;
  }

  Element e_upper(std::size_t n) {
    return idempotent(LetterSet::range(2, static_cast<int>(n), n));
  }

  Outcome base_cardinalities() {
    Outcome    o;
    auto const k1 = enumerate_elements(1);
    auto const k2 = enumerate_elements(2);
    o.require(k1.cardinality() == 2, "|K_1| != 2");
    o.require(k2.cardinality() == 5, "|K_2| != 5");
    std::vector<Element> listed{identity(2), generator(1, 2), generator(2, 2),
                                generator(1, 2) * generator(2, 2),
                                generator(2, 2) * generator(1, 2)};
    std::sort(listed.begin(), listed.end());
    o.require(k2.elements() == listed, "K_2 differs from {e, a1, a2, a1a2, a2a1}");
    o.require(k1.elements() == std::vector<Element>{identity(1), generator(1, 1)},
              "K_1 differs from {e, a1}");
    o.detail = o.ok ? "|K_1| = 2, |K_2| = 5" : o.detail;
    return o;
  }

  Outcome parity() {
    Outcome o;
    for (std::size_t n : {3, 4}) {
      auto const closure = words_of(enumerate_elements(n));
      o.require(closure == enumerate_canonical_words(n),
                "enumerators disagree at n = " + std::to_string(n));
      auto const r = parity_report(n);
      o.require(r.identity_holds, "counting identity fails at n = " + std::to_string(n));
      o.require(r.v1_count == r.v2_count, "|V1| != |V2| at n = " + std::to_string(n));
      o.require(r.mirror_bijective, "t: V1 -> V2 not bijective at n = " + std::to_string(n));
      o.require(r.partition_holds, "decomposition is not a partition at n = "
                                       + std::to_string(n));
      o.require(r.card_n == closure.size(), "report cardinality mismatch");
      o.require(r.parity == (n % 2 ? Parity::even : Parity::odd),
                "wrong parity at n = " + std::to_string(n));
    }
    o.require(cardinality(3) % 2 == 0, "|K_3| is odd");
    o.require(cardinality(4) % 2 == 1, "|K_4| is even");
    o.require(cardinality(3) == 18, "|K_3| != 18");
    o.require(cardinality(4) == 115, "|K_4| != 115");
    o.detail = o.ok ? "|K_3| = 18 even, |K_4| = 115 odd" : o.detail;
    return o;
  }

  Outcome confluence() {
    Outcome         o;
    std::mt19937_64 rng(0);
    std::size_t     count = 0;
    for (; count < 10'000 && o.ok; ++count) {
      auto const rank = 1 + count % 4;
      auto const w    = oracle::random_word(rng, rank, 12);
      auto const nf   = all_normal_forms(w);
      o.require(nf == std::vector<Word>{canonical_form(w)},
                "non-unique normal form for \"" + to_string(w) + "\"");
    }
    o.detail = o.ok ? std::to_string(count) + " random words, 0 exceptions" : o.detail;
    return o;
  }

  Outcome idempotents() {
    Outcome o;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const        res = enumerate_elements(n);
      std::set<Element> found, expected;
      for (auto const& x : res.elements()) {
        if (x * x == x) {
          found.insert(x);
        }
      }
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        LetterSet s(n);
        for (int a = 1; a <= static_cast<int>(n); ++a) {
          if (bits >> (a - 1) & 1) {
            s.insert(a);
          }
        }
        expected.insert(idempotent(s));
      }
      o.require(expected.size() == (std::size_t{1} << n),
                "e_X not distinct at n = " + std::to_string(n));
      o.require(found == expected, "idempotents != {e_X} at n = " + std::to_string(n));
    }
    o.detail = o.ok ? "2^n idempotents, all e_X, n = 1..4" : o.detail;
    return o;
  }

  Outcome zero_cancellation() {
    Outcome     o;
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
      auto const                res = enumerate_elements(n);
      MultiplicationTable const table(res);
      auto const                rep = verify_zero_cancellation(res, table);
      pairs += rep.checked_pairs;
      o.require(rep.checked_pairs == res.cardinality() * res.cardinality(),
                "pair scan not exhaustive at n = " + std::to_string(n));
      o.require(rep.verified(), "violation at n = " + std::to_string(n)
                                    + (rep.violations.empty()
                                           ? ""
                                           : ": " + rep.violations.front().clause));
    }
    o.detail = o.ok ? std::to_string(pairs) + " pairs, 0 violations" : o.detail;
    return o;
  }

  Outcome equation_structure() {
    Outcome o;
    for (std::size_t n = 2; n <= 4; ++n) {
      auto const tag = " at n = " + std::to_string(n);
      auto const res = enumerate_elements(n);
      auto const r   = solve_right_zero(res, generator(1, n));
      o.require(r.solutions.size() == 1 + cardinality(n - 1), "|R| != 1 + |K_{n-1}|" + tag);
      auto const c = construct_R(n);
      o.require(c.solutions == r.solutions, "construct_R differs from brute force" + tag);
      auto const sub = enumerate_submonoid(LetterSet::range(2, static_cast<int>(n), n));
      std::set<Element> image;
      for (auto const& x : sub.elements()) {
        auto const m = static_cast<int>(m_value(x));
        auto const t = x * generator(1, n) * idempotent(LetterSet::range(2, m, n));
        o.require(t.word() == canonical_form_of_T_element(x),
                  "T canonical form mismatch" + tag);
      }
      for (auto const& t : c.decomposition->t_part) {
        image.insert(pi(t));
      }
      o.require(image.size() == c.decomposition->t_part.size()
                    && std::vector<Element>(image.begin(), image.end()) == sub.elements(),
                "pi|_T is not a bijection onto the submonoid" + tag);
      for (auto const& x : c.solutions) {
        for (auto const& y : c.solutions) {
          o.require(r_multiply(c, x, y) == x * y, "r_multiply disagrees" + tag);
        }
      }
      o.require(c.decomposition->special == e_upper(n), "special != e_{2..n}" + tag);
    }
    o.detail = o.ok ? "|R| = 1 + |K_{n-1}| and R structure, n = 2..4" : o.detail;
    return o;
  }

  Outcome word_bounds(std::size_t max_rank) {
    Outcome     o;
    std::size_t words = 0;
    for (std::size_t n = 1; n <= max_rank; ++n) {
      auto const closure = words_of(enumerate_elements(n));
      auto const search  = enumerate_canonical_words(n);
      for (auto const* list : {&closure, &search}) {
        for (auto const& w : *list) {
          ++words;
          for (auto [a, k] : occurrence_counts(w)) {
            o.require(k <= occurrence_bound(a, n),
                      "\"" + to_string(w) + "\" exceeds the bound for letter "
                          + std::to_string(a));
          }
        }
      }
    }
    o.detail = o.ok ? std::to_string(words) + " words, n <= " + std::to_string(max_rank)
                    : o.detail;
    return o;
  }

  Outcome structural_maps() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const  res = enumerate_elements(n);
      auto const& k   = res.elements();
      o.require(antiautomorphism(zero(n)) == zero(n), "tau does not fix f");
      for (auto const& x : k) {
        o.require(antiautomorphism(antiautomorphism(x)) == x, "tau is not an involution");
        for (auto const& y : k) {
          o.require(antiautomorphism(x * y) == antiautomorphism(y) * antiautomorphism(x),
                    "tau is not an antihomomorphism");
          if (n == 3) {
            o.require(content(x * y) == (content(x) | content(y)),
                      "c(xy) != c(x) u c(y)");
          }
        }
      }
    }
    auto const x = generator(1, 2) * generator(2, 2);
    auto const y = generator(1, 2);
    o.require(pi(x * y) == generator(2, 2), "pi(a1a2 a1) != a2");
    o.require(pi(x) * pi(y) == identity(2), "pi(a1a2) pi(a1) != e");
    o.detail = o.ok ? "tau, c, pi witness" : o.detail;
    return o;
  }

  Outcome oracle_equivalence() {
    Outcome o;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const closure = enumerate_elements(n);
      auto const search  = enumerate_canonical_words(n);
      o.require(words_of(closure) == search,
                "element sets differ at n = " + std::to_string(n));
      std::set<Element> mapped;
      for (auto const& w : search) {
        mapped.insert(from_word(w));
      }
      o.require(mapped.size() == search.size(), "from_word not injective on canonical words");
    }
    o.detail = o.ok ? "closure == canonical-word search, n = 1..4" : o.detail;
    return o;
  }
}  // namespace

int main(int argc, char** argv) {
  bool rank5 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--rank5") == 0) {
      rank5 = true;
    } else {
      std::fprintf(stderr, "usage: %s [--rank5]\n", argv[0]);
      return 2;
    }
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "base cardinalities", 1, base_cardinalities},
      {2, "parity", 30, parity},
      {3, "confluence", 60, confluence},
      {4, "idempotents", 30, idempotents},
      {5, "zero cancellation", 300, zero_cancellation},
      {6, "equation structure", 60, equation_structure},
      {7, "word bounds", 60, [rank5] { return word_bounds(rank5 ? 5 : 4); }},
      {8, "structural maps", 10, structural_maps},
      {9, "oracle equivalence", 60, oracle_equivalence},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const elapsed
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && elapsed >= c.seconds) {
      out = {false, "took " + std::to_string(elapsed) + " s"};
    }
    failures += !out.ok;
    std::printf("[%s] %d %-20s %.3f s (< %g s)  %s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.name, elapsed, c.seconds, out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
