#include "kiselman/verify.hpp"

#include <algorithm>   // for sort, find, all_of
#include <functional>  // for function
#include <memory>      // for unique_ptr
#include <optional>    // for optional
#include <random>      // for mt19937_64, seed_seq

#include "kiselman/algebra.hpp"    // for Element, multiply, ...
#include "kiselman/equations.hpp"  // for solve_right_zero, construct_R, ...
#include "kiselman/exception.hpp"  // for ResourceError, InvariantError
#include "kiselman/rewrite.hpp"    // for canonical_form, all_normal_forms

namespace kiselman {

  std::string_view to_string(SuiteStatus status) noexcept {
    switch (status) {
      case SuiteStatus::passed:
        return "pass";
      case SuiteStatus::failed:
        return "fail";
      case SuiteStatus::skipped:
        return "skipped";
    }
    return "";
  }

  bool VerifyReport::passed() const noexcept {
    return !aborted
           && std::none_of(suites.begin(), suites.end(), [](auto const& s) {
                return s.status == SuiteStatus::failed;
              });
  }

  namespace {
    constexpr std::size_t max_counterexamples = 20;

    using rng_type = std::mt19937_64;

    class Context {
     public:
      explicit Context(VerifyOptions const& opts) : options(opts), rank(opts.rank) {}

      VerifyOptions const& options;
      std::size_t const    rank;

      EnumerationResult const& elements() {
        if (!_elements) {
          _elements = std::make_unique<EnumerationResult>(
              enumerate_elements(rank, options.limit));
        }
        return *_elements;
      }

      std::vector<Word> const& canonical_words() {
        if (!_words) {
          _words = enumerate_canonical_words(rank, options.limit);
        }
        return *_words;
      }

      // Canonical words over {2..n}: the words of <a_2, ..., a_n>.
      std::vector<Word> const& upper_words() {
        if (!_upper) {
          _upper.emplace();
          auto const upper = LetterSet::range(2, static_cast<int>(rank), rank);
          for (auto const& w : canonical_words()) {
            if (is_over(w, upper)) {
              _upper->push_back(w);
            }
          }
        }
        return *_upper;
      }

      bool exhaustive() {
        return elements().cardinality() <= options.exhaustive_size;
      }

      MultiplicationTable const& table() {
        if (!_table) {
          _table = std::make_unique<MultiplicationTable>(elements(), exhaustive());
        }
        return *_table;
      }

      std::optional<ZeroSolutionSet> const& r_brute() {
        if (!_r) {
          _r = solve_right_zero(elements(), generator(1, rank));
        }
        return _r;
      }

     private:
      std::unique_ptr<EnumerationResult>   _elements;
      std::optional<std::vector<Word>>     _words;
      std::optional<std::vector<Word>>     _upper;
      std::unique_ptr<MultiplicationTable> _table;
      std::optional<ZeroSolutionSet>       _r;
    };

    void fail(SuiteResult& r, std::string what) {
      r.status = SuiteStatus::failed;
      if (r.counterexamples.size() < max_counterexamples) {
        r.counterexamples.push_back(std::move(what));
      }
    }

    void check(SuiteResult& r, bool ok, std::string const& what) {
      ++r.checked;
      if (!ok) {
        fail(r, what);
      }
    }

    void fact(SuiteResult& r, std::string key, std::size_t value) {
      r.facts.emplace_back(std::move(key), std::to_string(value));
    }

    std::string q(Word const& w) {
      return "\"" + to_string(w) + "\"";
    }

    std::string q(Element const& x) {
      return q(x.word());
    }

    Word random_word(rng_type&          rng,
                     LetterSet const&   allowed,
                     std::size_t        max_length) {
      auto const letters = allowed.members();
      Word       w(allowed.rank());
      if (letters.empty()) {
        return w;
      }
      std::uniform_int_distribution<std::size_t> length(0, max_length);
      std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
      for (std::size_t k = length(rng); k > 0; --k) {
        w.push_back(letters[pick(rng)]);
      }
      return w;
    }

    // All words over `allowed` of length <= max_length.
    std::vector<Word> all_words(LetterSet const& allowed, std::size_t max_length) {
      std::vector<Word> out{Word(allowed.rank())};
      std::size_t       begin = 0;
      for (std::size_t len = 1; len <= max_length; ++len) {
        auto const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (int a : allowed.members()) {
            auto w = out[i];
            w.push_back(a);
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    void suite_cardinality(Context& ctx, rng_type&, SuiteResult& r) {
      auto const& res   = ctx.elements();
      auto const& words = ctx.canonical_words();
      auto const  rank  = ctx.rank;
      fact(r, "closure_count", res.cardinality());
      fact(r, "canonical_word_count", words.size());
      fact(r, "closure_rounds", res.stats().rounds);
      fact(r, "closure_multiplications", res.stats().multiplications);

      std::vector<Word> closure_words;
      for (auto const& x : res.elements()) {
        closure_words.push_back(x.word());
      }
      check(r, closure_words == words,
            "closure and canonical-word enumerations differ");

      check(r, res.contains(identity(rank)), "identity missing");
      check(r, res.contains(zero(rank)), "zero missing");
      for (int a = 1; a <= static_cast<int>(rank); ++a) {
        check(r, res.contains(generator(a, rank)),
              "generator " + std::to_string(a) + " missing");
        for (auto const& x : res.elements()) {
          auto const y = x * generator(a, rank);
          check(r, res.contains(y), "not closed: " + q(x) + " * a_" + std::to_string(a));
        }
      }
      if (rank == 1) {
        check(r, res.cardinality() == 2, "|K_1| != 2");
      }
      if (rank == 2) {
        std::vector<Word> expected{Word(2), Word(2, {1}), Word(2, {2}),
                                   Word(2, {1, 2}), Word(2, {2, 1})};
        check(r, words == expected, "K_2 != {e, a1, a2, a1a2, a2a1}");
      }
    }

    void suite_confluence(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const all = LetterSet::full(ctx.rank);
      for (std::size_t s = 0; s < ctx.options.random_words; ++s) {
        auto const w     = random_word(rng, all, ctx.options.max_word_length);
        auto const can   = canonical_form(w);
        auto const forms = all_normal_forms(w);
        check(r, forms == std::vector<Word>{can},
              q(w) + " has " + std::to_string(forms.size()) + " normal forms");
        check(r, is_canonical(can), "can(" + q(w) + ") not canonical");
        check(r, canonical_form(can) == can, "can not idempotent on " + q(w));
        check(r, is_quasi_subword(can, w), "can(" + q(w) + ") not <= w");
        check(r, is_canonical(w) == (can == w),
              "is_canonical disagrees with can on " + q(w));
        auto const trace = reduction_trace(w);
        check(r, trace.result() == can && trace.steps.size() == w.size() - can.size(),
              "trace of " + q(w) + " inconsistent");
        auto const cw = occurrence_counts(w);
        auto const cc = occurrence_counts(can);
        bool       ok = true;
        for (auto const& [a, k] : cc) {
          ok = ok && k <= cw.at(a);
        }
        check(r, ok, "can(" + q(w) + ") has more occurrences of a letter");
      }
    }

    void suite_canonical_words(Context& ctx, rng_type& rng, SuiteResult& r) {
      for (auto const& w : ctx.canonical_words()) {
        check(r, is_canonical(mirror(w)), "mirror of " + q(w) + " not canonical");
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t len = 1; i + len <= w.size(); ++len) {
            check(r, is_canonical(w.factor(i, len)),
                  "factor of canonical " + q(w) + " not canonical");
          }
        }
      }
      auto const all = LetterSet::full(ctx.rank);
      for (std::size_t s = 0; s < ctx.options.random_words; ++s) {
        auto const w = random_word(rng, all, ctx.options.max_word_length);
        check(r, is_canonical(w) == is_canonical(mirror(w)),
              "mirror changes canonicality of " + q(w));
      }
    }

    void suite_word_bounds(Context& ctx, rng_type&, SuiteResult& r) {
      for (auto const& w : ctx.canonical_words()) {
        for (auto const& [a, k] : occurrence_counts(w)) {
          check(r, k <= occurrence_bound(a, ctx.rank),
                q(w) + " has " + std::to_string(k) + " occurrences of a_"
                    + std::to_string(a));
        }
      }
    }

    void suite_associativity(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const& t    = ctx.table();
      auto const& elts = ctx.elements().elements();
      auto const  n    = elts.size();
      auto        triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        check(r, t.product(t.product(i, j), k) == t.product(i, t.product(j, k)),
              "(xy)z != x(yz) for " + q(elts[i]) + ", " + q(elts[j]) + ", "
                  + q(elts[k]));
      };
      if (n * n * n <= 20'000'000 && t.dense()) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              triple(i, j, k);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < ctx.options.triple_samples; ++s) {
          auto const i = pick(rng), j = pick(rng), k = pick(rng);
          triple(i, j, k);
        }
        r.note = "sampled";
      }
    }

    void suite_idempotents(Context& ctx, rng_type&, SuiteResult& r) {
      auto const          rank = ctx.rank;
      std::vector<Element> found;
      for (auto const& x : ctx.elements().elements()) {
        if (x * x == x) {
          found.push_back(x);
        }
      }
      std::vector<Element> expected;
      for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << rank); ++bits) {
        LetterSet x(rank);
        for (int a = 1; a <= static_cast<int>(rank); ++a) {
          if ((bits >> (a - 1)) & 1U) {
            x.insert(a);
          }
        }
        auto const e = idempotent(x);
        check(r, e * e == e, "e_" + to_string(x) + " not idempotent");
        check(r, content(e) == x, "content(e_X) != X for X = " + to_string(x));
        expected.push_back(e);
      }
      std::sort(expected.begin(), expected.end());
      check(r, std::adjacent_find(expected.begin(), expected.end()) == expected.end(),
            "e_X not pairwise distinct");
      check(r, found.size() == (std::size_t{1} << rank),
            "found " + std::to_string(found.size()) + " idempotents");
      check(r, found == expected, "idempotents are not exactly the e_X");
      fact(r, "idempotents", found.size());
    }

    template <typename F>
    void for_pairs(Context& ctx, rng_type& rng, SuiteResult& r, F&& f) {
      auto const n = ctx.elements().cardinality();
      if (ctx.exhaustive()) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            f(i, j);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < ctx.options.pair_samples; ++s) {
          auto const i = pick(rng);
          f(i, pick(rng));
        }
        r.note = "sampled";
      }
    }

    void suite_content_homomorphism(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const& t    = ctx.table();
      auto const& elts = ctx.elements().elements();
      std::vector<LetterSet> c;
      for (auto const& x : elts) {
        c.push_back(content(x));
      }
      for_pairs(ctx, rng, r, [&](std::size_t i, std::size_t j) {
        check(r, c[t.product(i, j)] == (c[i] | c[j]),
              "c(xy) != c(x) u c(y) for " + q(elts[i]) + ", " + q(elts[j]));
      });
      std::vector<std::uint32_t> images;
      for (auto const& s : c) {
        images.push_back(s.bits());
      }
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      check(r, images.size() == (std::size_t{1} << ctx.rank), "c is not onto");
    }

    void suite_antiautomorphism(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const  rank = ctx.rank;
      auto const& res  = ctx.elements();
      auto const& elts = res.elements();
      auto const& t    = ctx.table();
      auto const  f    = zero(rank);
      check(r, antiautomorphism(f) == f, "tau(f) != f");
      for (int a = 1; a <= static_cast<int>(rank); ++a) {
        check(r, antiautomorphism(generator(a, rank))
                     == generator(static_cast<int>(rank) - a + 1, rank),
              "tau(a_" + std::to_string(a) + ") != a_{n-i+1}");
      }
      std::vector<std::size_t> tau;
      for (auto const& x : elts) {
        auto const y = antiautomorphism(x);
        check(r, antiautomorphism(y) == x, "tau(tau(x)) != x for " + q(x));
        tau.push_back(*res.index_of(y));
      }
      for_pairs(ctx, rng, r, [&](std::size_t i, std::size_t j) {
        check(r, tau[t.product(i, j)] == t.product(tau[j], tau[i]),
              "tau(xy) != tau(y)tau(x) for " + q(elts[i]) + ", " + q(elts[j]));
      });
    }

    void suite_deletion_identities(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const                             rank = ctx.rank;
      std::uniform_int_distribution<int> pick(1, static_cast<int>(rank));
      for (std::size_t s = 0; s < ctx.options.random_words; ++s) {
        int const  i  = pick(rng);
        auto const ai = Word(rank, {i});
        auto const below = random_word(rng, LetterSet::range(1, i - 1, rank), 8);
        auto const above = random_word(
            rng, LetterSet::range(i + 1, static_cast<int>(rank), rank), 8);
        check(r, Element(concat(concat(ai, below), ai)) == Element(concat(ai, below)),
              "a_i w a_i != a_i w for w = " + q(below));
        check(r, Element(concat(concat(ai, above), ai)) == Element(concat(above, ai)),
              "a_i w a_i != w a_i for w = " + q(above));
      }
    }

    // Words u over {2..n} for the prefix suites: exhaustive for rank <= 3,
    // random otherwise.
    std::vector<Word> upper_samples(Context& ctx, rng_type& rng) {
      auto const upper = LetterSet::range(2, static_cast<int>(ctx.rank), ctx.rank);
      if (ctx.rank <= 3) {
        return all_words(upper, 6);
      }
      std::vector<Word> out;
      for (std::size_t s = 0; s < 64; ++s) {
        out.push_back(random_word(rng, upper, 8));
      }
      return out;
    }

    void suite_prefix_stability(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const a1 = Word(ctx.rank, {1});
      auto const us = upper_samples(ctx, rng);
      for (auto const& w : ctx.upper_words()) {
        auto const prefix = concat(w, a1);
        for (auto const& u : us) {
          auto const c  = canonical_form(concat(prefix, u));
          bool       ok = c.size() >= prefix.size()
                    && c.factor(0, prefix.size()) == prefix
                    && is_quasi_subword(
                        c.factor(prefix.size(), c.size() - prefix.size()), u);
          check(r, ok, "can(w a1 u) = " + q(c) + " for w = " + q(w) + ", u = " + q(u));
        }
      }
    }

    void suite_prefix_recovery(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const us = upper_samples(ctx, rng);
      for (auto const& w : ctx.canonical_words()) {
        for (auto const& u : us) {
          auto const c   = canonical_form(concat(w, u));
          auto const pos = std::find(c.begin(), c.end(), letter_type{1});
          ++r.checked;
          if (pos == c.end()) {
            continue;
          }
          auto const len = static_cast<std::size_t>(pos - c.begin()) + 1;
          bool const ok  = std::count(c.begin(), c.end(), letter_type{1}) == 1
                          && w.size() >= len && w.factor(0, len) == c.factor(0, len);
          if (!ok) {
            fail(r, "can(wu) = " + q(c) + " for w = " + q(w) + ", u = " + q(u));
          }
        }
      }
    }

    void suite_separation(Context& ctx, rng_type&, SuiteResult& r) {
      auto const& words = ctx.upper_words();
      auto const  a1    = Word(ctx.rank, {1});
      for (auto const& w : words) {
        auto const           prefix = concat(w, a1);
        std::vector<std::pair<Word, Word>> images;  // (can(wu), u)
        for (auto const& u : words) {
          if (is_canonical(concat(prefix, u))) {
            images.emplace_back(canonical_form(concat(w, u)), u);
          }
        }
        std::sort(images.begin(), images.end());
        for (std::size_t k = 0; k < images.size(); ++k) {
          bool const ok = k == 0 || images[k - 1].first != images[k].first;
          check(r, ok, "phi(wu) = phi(wv) for w = " + q(w) + ", u = "
                           + q(images[k].second));
        }
      }
    }

    void suite_zero_cancellation(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const report = verify_zero_cancellation(
          ctx.elements(), ctx.table(), rng(), ctx.options.triple_samples,
          ctx.exhaustive() ? std::nullopt
                           : std::optional<std::size_t>(ctx.options.pair_samples));
      r.checked = report.checked_pairs + report.checked_triples;
      fact(r, "checked_pairs", report.checked_pairs);
      fact(r, "checked_triples", report.checked_triples);
      if (!ctx.exhaustive()) {
        r.note = "pairs sampled";
      }
      for (auto const& v : report.violations) {
        fail(r, v.clause + ": x = " + q(v.x) + ", y = " + q(v.y)
                    + (v.z ? ", z = " + q(*v.z) : ""));
      }
    }

    void suite_zero_equations(Context& ctx, rng_type& rng, SuiteResult& r) {
      auto const& res  = ctx.elements();
      auto const& elts = res.elements();
      auto const  f    = zero(ctx.rank);

      // Solving is |K_n| multiplications per right-hand side.
      std::vector<std::size_t> ys;
      if (elts.size() <= 200) {
        for (std::size_t i = 0; i < elts.size(); ++i) {
          ys.push_back(i);
        }
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
        for (int s = 0; s < 50; ++s) {
          ys.push_back(pick(rng));
        }
        r.note = "sampled right-hand sides";
      }
      for (auto i : ys) {
        auto const& y   = elts[i];
        auto const  sol = solve_right_zero(res, y);  // checks the content rule
        check(r, std::all_of(sol.solutions.begin(), sol.solutions.end(),
                             [&](auto const& x) { return x * y == f; }),
              "bad solution for y = " + q(y));
        auto const left = solve_left_zero(res, antiautomorphism(y));
        std::vector<Element> mirrored;
        for (auto const& x : sol.solutions) {
          mirrored.push_back(antiautomorphism(x));
        }
        std::sort(mirrored.begin(), mirrored.end());
        check(r, left == mirrored,
              "left solutions of tau(y) are not tau of right solutions, y = " + q(y));
      }
      for (auto const& x : elts) {
        check(r, characterize_zero(x) == (x == f),
              "characterize_zero wrong for " + q(x));
      }
      check(r, solve_right_zero(res, f).solutions == elts, "x f = f not for all x");
    }

    void suite_r_structure(Context& ctx, rng_type&, SuiteResult& r) {
      auto const  rank  = ctx.rank;
      auto const& brute = *ctx.r_brute();
      auto const  built = construct_R(rank, ctx.options.limit);
      auto const  k_n1  = cardinality(rank - 1, ctx.options.limit);
      fact(r, "R_size", brute.solutions.size());
      fact(r, "K_{n-1}", k_n1);
      check(r, brute.solutions.size() == 1 + k_n1, "|R| != 1 + |K_{n-1}|");
      check(r, built.solutions == brute.solutions,
            "constructed R differs from brute force");
      check(r, built.decomposition->t_part == brute.decomposition->t_part,
            "constructed T differs from brute force");
      check(r, built.decomposition->special == brute.decomposition->special,
            "special solution differs");

      auto const upper = enumerate_submonoid(
          LetterSet::range(2, static_cast<int>(rank), rank), ctx.options.limit);
      for (auto const& x : upper.elements()) {
        auto const w = canonical_form_of_T_element(x);  // throws on mismatch
        check(r, is_canonical(w), "zeta(x) a1 e_{2..m(x)} not canonical, x = " + q(x));
      }

      auto const& sol = brute.solutions;
      for (auto const& x : sol) {
        for (auto const& y : sol) {
          auto const z = r_multiply(brute, x, y);  // throws on disagreement
          check(r, brute.contains(z), "R not closed: " + q(x) + " * " + q(y));
        }
      }

      auto const f = zero(rank);
      for (auto const& x : ctx.elements().elements()) {
        auto const m = m_value(x);
        check(r, (m == 0) == (x == f), "m(x) = 0 iff x = f fails at " + q(x));
        for (std::size_t i = 0; i <= rank; ++i) {
          auto const e = idempotent(LetterSet::range(1, static_cast<int>(i), rank));
          check(r, ((x * e) == f) == (i >= m),
                "x e_{1.." + std::to_string(i) + "} inconsistent with m(x) at " + q(x));
        }
      }
    }

    void suite_pi(Context& ctx, rng_type&, SuiteResult& r) {
      auto const  rank  = ctx.rank;
      auto const& t     = ctx.r_brute()->decomposition->t_part;
      auto const  upper = enumerate_submonoid(
          LetterSet::range(2, static_cast<int>(rank), rank), ctx.options.limit);
      std::vector<Element> images;
      for (auto const& x : t) {
        images.push_back(pi(x));
      }
      std::sort(images.begin(), images.end());
      check(r, std::adjacent_find(images.begin(), images.end()) == images.end(),
            "pi not injective on T");
      check(r, images == upper.elements(), "pi(T) != <a_2, ..., a_n>");

      auto const a1 = generator(1, rank), a2 = generator(2, rank);
      auto const x = a1 * a2, y = a1;
      check(r, pi(x) == identity(rank) && pi(y) == identity(rank) && pi(x * y) == a2,
            "pi(a1 a2 * a1) != a2 witness");
      check(r, pi(x * y) != pi(x) * pi(y), "pi behaved as a homomorphism on the witness");
    }

    void suite_parity(Context& ctx, rng_type&, SuiteResult& r) {
      auto const rank = ctx.rank;
      auto const p    = parity_report(rank, ctx.options.limit);
      fact(r, "K_n", p.card_n);
      fact(r, "K_{n-1}", p.card_n1);
      fact(r, "K_{n-2}", p.card_n2);
      fact(r, "V1", p.v1_count);
      fact(r, "V2", p.v2_count);
      r.facts.emplace_back("parity", p.parity == Parity::even ? "even" : "odd");
      check(r, p.identity_holds, "counting identity fails");
      check(r, p.v1_count == p.v2_count, "|V1| != |V2|");
      check(r, p.mirror_bijective, "t|V1 is not a bijection onto V2");
      check(r, p.v_letters_once, "a_1 or a_n repeated in V");
      check(r, p.partition_holds, "four-part decomposition sizes wrong");
      auto const expected = rank % 2 == 1 ? Parity::even : Parity::odd;
      check(r, p.parity == expected, "parity of |K_n| wrong");
      if (rank >= 3) {
        check(r, p.card_n % 2 == p.card_n2 % 2, "|K_n| !≡ |K_{n-2}| mod 2");
      }
    }

    struct Suite {
      std::string                                       name;
      std::size_t                                       min_rank;
      std::function<void(Context&, rng_type&, SuiteResult&)> run;
    };

    std::vector<Suite> const& suites() {
      static std::vector<Suite> const all = {
          {"cardinality", 1, suite_cardinality},
          {"confluence", 2, suite_confluence},
          {"canonical_words", 2, suite_canonical_words},
          {"word_bounds", 2, suite_word_bounds},
          {"associativity", 2, suite_associativity},
          {"idempotents", 2, suite_idempotents},
          {"content_homomorphism", 2, suite_content_homomorphism},
          {"antiautomorphism", 2, suite_antiautomorphism},
          {"deletion_identities", 2, suite_deletion_identities},
          {"prefix_stability", 2, suite_prefix_stability},
          {"prefix_recovery", 2, suite_prefix_recovery},
          {"separation", 2, suite_separation},
          {"zero_cancellation", 2, suite_zero_cancellation},
          {"zero_equations", 2, suite_zero_equations},
          {"r_structure", 2, suite_r_structure},
          {"pi_bijection", 2, suite_pi},
          {"parity", 1, suite_parity},
      };
      return all;
    }
  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& s : suites()) {
        out.push_back(s.name);
      }
      return out;
    }();
    return names;
  }

  VerifyReport run_verification(VerifyOptions const& options) {
    validate_rank(options.rank);
    for (auto const& name : options.suites) {
      auto const& names = suite_names();
      if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
        throw ValidationError("unknown suite \"" + name + "\"");
      }
    }
    auto selected = [&options](std::string const& name) {
      return options.suites.empty()
             || std::find(options.suites.begin(), options.suites.end(), "all")
                    != options.suites.end()
             || std::find(options.suites.begin(), options.suites.end(), name)
                    != options.suites.end();
    };

    VerifyReport report;
    report.rank = options.rank;
    report.seed = options.seed;
    Context ctx(options);
    for (std::size_t idx = 0; idx < suites().size(); ++idx) {
      auto const& suite = suites()[idx];
      if (!selected(suite.name)) {
        continue;
      }
      SuiteResult result;
      result.name = suite.name;
      if (report.aborted) {
        result.status = SuiteStatus::skipped;
        result.note   = "aborted";
      } else if (options.rank < suite.min_rank) {
        result.status = SuiteStatus::skipped;
        result.note   = "needs rank >= " + std::to_string(suite.min_rank);
      } else {
        // Each suite draws from its own stream so that selecting a subset of
        // suites does not change their samples.
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                          static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(idx)};
        rng_type rng(seq);
        try {
          suite.run(ctx, rng, result);
        } catch (ResourceError const& e) {
          report.aborted      = true;
          report.abort_reason = e.what();
          result.status       = SuiteStatus::skipped;
          result.note         = "aborted";
        } catch (InvariantError const& e) {
          fail(result, std::string("invariant breach: ") + e.what());
        }
      }
      report.suites.push_back(std::move(result));
    }
    return report;
  }

}  // namespace kiselman
