#include <filesystem>
#include <fstream>
#include <set>

#include "catch_amalgamated.hpp"

#include "kiselman/enumerate.hpp"
#include "kiselman/exception.hpp"
#include "oracles.hpp"

using namespace kiselman;
using oracle::w;

namespace {
  std::vector<Word> words_of(EnumerationResult const& res) {
    std::vector<Word> out;
    for (auto const& x : res.elements()) {
      out.push_back(x.word());
    }
    return out;
  }

  std::filesystem::path scratch_dir(char const* name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
  }
}  // namespace

TEST_CASE("small ranks", "[enumerate]") {
  auto const k1 = enumerate_elements(1);
  CHECK(words_of(k1) == std::vector<Word>{Word(1), w(1, {1})});

  auto const k2 = enumerate_elements(2);
  CHECK(words_of(k2)
        == std::vector<Word>{Word(2), w(2, {1}), w(2, {2}), w(2, {1, 2}),
                             w(2, {2, 1})});
  CHECK(enumerate_canonical_words(1) == words_of(k1));
  CHECK(enumerate_canonical_words(2) == words_of(k2));
  CHECK(cardinality(0) == 1);
}

TEST_CASE("three enumerations agree", "[enumerate][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const closure = words_of(enumerate_elements(n));
    auto const search  = enumerate_canonical_words(n);
    auto       filter  = oracle::canonical_words_by_filter(n);
    std::sort(filter.begin(), filter.end());
    CHECK(closure == search);
    CHECK(closure == filter);
    CHECK(cardinality(n) == closure.size());
  }
}

TEST_CASE("golden cardinalities", "[enumerate]") {
  // Frozen once closure, backtracking and the filter oracle agreed.
  CHECK(cardinality(3) == 18);
  CHECK(cardinality(4) == 115);
}

TEST_CASE("closure invariants", "[enumerate]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const res = enumerate_elements(n);
    CHECK(res.contains(identity(n)));
    CHECK(res.contains(zero(n)));
    for (int a = 1; a <= static_cast<int>(n); ++a) {
      CHECK(res.contains(generator(a, n)));
      for (auto const& x : res.elements()) {
        CHECK(res.contains(x * generator(a, n)));
      }
    }
    CHECK(res.stats().rounds > 0);
    CHECK(res.index_of(zero(n)).has_value());
  }
}

TEST_CASE("limits", "[enumerate]") {
  CHECK_THROWS_AS(enumerate_elements(3, 10), ResourceError);
  CHECK_THROWS_WITH(enumerate_elements(3, 10),
                    Catch::Matchers::ContainsSubstring("10"));
  CHECK_THROWS_AS(enumerate_canonical_words(3, 10), ResourceError);
  CHECK_NOTHROW(enumerate_elements(3, 18));
  CHECK_THROWS_AS(check_rank_policy(7, false), ResourceError);
  CHECK_NOTHROW(check_rank_policy(7, true));
  CHECK_NOTHROW(check_rank_policy(6, false));
}

TEST_CASE("filter_by_content", "[enumerate]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const res  = enumerate_elements(n);
    auto const full = LetterSet::full(n);
    auto const k1   = filter_by_content(res, LetterSet(n, {1}), full);
    CHECK(k1.size() == cardinality(n) - cardinality(n - 1));
    auto const upper = filter_by_content(
        res, LetterSet(n), LetterSet::range(2, static_cast<int>(n), n));
    CHECK(upper.size() == cardinality(n - 1));
    CHECK(upper.front() == identity(n));
    auto const all = filter_by_content(res, full, full);
    CHECK(std::find(all.begin(), all.end(), zero(n)) != all.end());
  }
  auto const sub = enumerate_submonoid(LetterSet(4, {2, 3, 4}));
  CHECK(sub.cardinality() == 18);
}

TEST_CASE("multiplication table", "[enumerate]") {
  auto const                res = enumerate_elements(3);
  MultiplicationTable const dense(res, true);
  MultiplicationTable const lazy(res, false);
  CHECK(dense.dense());
  CHECK_FALSE(lazy.dense());
  auto const& e = res.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      CHECK(e[dense.product(i, j)] == e[i] * e[j]);
      CHECK(lazy.product(i, j) == dense.product(i, j));
    }
  }
}

TEST_CASE("parity", "[enumerate]") {
  auto const r3 = parity_report(3);
  CHECK(r3.parity == Parity::even);
  CHECK(r3.identity_holds);
  CHECK(r3.v1_count == r3.v2_count);
  CHECK(r3.card_n == 18);

  auto const r4 = parity_report(4);
  CHECK(r4.parity == Parity::odd);
  CHECK(r4.identity_holds);
  CHECK(r4.v1_count == r4.v2_count);
  CHECK(r4.card_n == 115);

  for (auto const* r : {&r3, &r4}) {
    CHECK(r->mirror_bijective);
    CHECK(r->v_letters_once);
    CHECK(r->partition_holds);
    CHECK_FALSE(r->base_case);
    CHECK(r->card_n
          == r->card_n2 + 2 * (r->card_n1 - r->card_n2) + 2 * r->v1_count);
    CHECK(r->inner_count + r->left_count + r->right_count + r->both_count
          == r->card_n);
    CHECK(r->both_count == r->v1_count + r->v2_count);
  }

  auto const r1 = parity_report(1);
  CHECK(r1.base_case);
  CHECK(r1.card_n == 2);
  CHECK(r1.parity == Parity::even);
  CHECK(r1.identity_holds);
  auto const r2 = parity_report(2);
  CHECK(r2.card_n == 5);
  CHECK(r2.parity == Parity::odd);
  CHECK(r2.identity_holds);
}

TEST_CASE("cache round trip", "[enumerate]") {
  auto const dir  = scratch_dir("kiselman-test-cache");
  auto const file = cache_path(dir, 3);
  CHECK(file.filename() == "kiselman-n3.cache");

  auto const words = enumerate_canonical_words(3);
  write_cache(file, 3, words);
  CHECK(read_cache(file, 3) == words);
  {
    std::ifstream in(file);
    std::string   header;
    std::getline(in, header);
    CHECK(header == "kiselman-cache v1 n=3 count=18");
  }

  auto const res = load_or_enumerate(3, dir);
  CHECK(res.cardinality() == 18);
  auto const fresh = load_or_enumerate(2, dir);
  CHECK(fresh.cardinality() == 5);
  CHECK(std::filesystem::exists(cache_path(dir, 2)));

  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache validation", "[enumerate]") {
  auto const dir  = scratch_dir("kiselman-test-cache-bad");
  auto const file = dir / "bad.cache";
  auto write = [&](std::string const& text) {
    std::ofstream out(file, std::ios::trunc);
    out << text;
  };

  write("kiselman-cache v1 n=2 count=2\n\n1\n");
  CHECK(read_cache(file, 2).size() == 2);

  write("kiselman-cache v2 n=2 count=2\n\n1\n");
  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  write("kiselman-cache v1 n=2 count=3\n\n1\n");
  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  write("kiselman-cache v1 n=2 count=2\n\n1 1\n");
  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  write("kiselman-cache v1 n=2 count=2\n1\n1\n");
  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  write("kiselman-cache v1 n=2 count=1\n3\n");
  CHECK_THROWS_AS(read_cache(file, 2), ValidationError);
  CHECK_THROWS_AS(read_cache(dir / "missing.cache", 2), ValidationError);

  // A corrupt cache is not silently trusted by load_or_enumerate either.
  write("kiselman-cache v1 n=2 count=1\n3\n");
  std::filesystem::rename(file, cache_path(dir, 2));
  CHECK_THROWS_AS(load_or_enumerate(2, dir), ValidationError);
  std::filesystem::remove_all(dir);
}
