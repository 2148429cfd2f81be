#include <random>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"

#include "kiselman/algebra.hpp"
#include "kiselman/exception.hpp"
#include "oracles.hpp"

using namespace kiselman;
using oracle::w;

namespace {
  Element el(std::size_t rank, std::initializer_list<int> letters) {
    return Element(Word(rank, letters));
  }

  std::vector<Element> elements_by_filter(std::size_t rank) {
    std::vector<Element> out;
    for (auto const& x : oracle::canonical_words_by_filter(rank)) {
      out.push_back(Element::from_canonical(x));
    }
    return out;
  }
}  // namespace

TEST_CASE("from_word", "[algebra]") {
  CHECK(el(2, {1, 2, 1}).word() == w(2, {2, 1}));
  CHECK(from_word(Word(3)) == identity(3));
  CHECK(el(3, {3, 2, 1, 1}) == zero(3));
  auto const x = el(4, {4, 1, 3, 1, 2});
  CHECK(from_word(x.word()) == x);
}

TEST_CASE("identity and zero", "[algebra]") {
  CHECK(identity(3).word().empty());
  CHECK(zero(3).word() == w(3, {3, 2, 1}));
  CHECK(zero(1).word() == w(1, {1}));
  CHECK(to_string(identity(2), true) == "e");
  CHECK(to_string(identity(2)).empty());
  CHECK(to_string(zero(2), true) == "2 1");
}

TEST_CASE("multiply", "[algebra]") {
  CHECK(generator(2, 2) * el(2, {1, 2}) == el(2, {2, 1}));
  CHECK((generator(2, 2) * el(2, {1, 2})).word() == w(2, {2, 1}));
  CHECK_THROWS_AS(multiply(identity(2), identity(3)), ValidationError);
  CHECK_THROWS_AS(generator(3, 2), ValidationError);
  for (auto const& x : elements_by_filter(3)) {
    CHECK(zero(3) * x == zero(3));
    CHECK(x * zero(3) == zero(3));
    CHECK(identity(3) * x == x);
    CHECK(x * identity(3) == x);
  }
}

TEST_CASE("associativity", "[algebra][property]") {
  auto const k3 = elements_by_filter(3);
  for (auto const& x : k3) {
    for (auto const& y : k3) {
      auto const xy = x * y;
      for (auto const& z : k3) {
        REQUIRE(xy * z == x * (y * z));
      }
    }
  }
  auto const      k4 = elements_by_filter(4);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, k4.size() - 1);
  for (int s = 0; s < 20000; ++s) {
    auto const& x = k4[pick(rng)];
    auto const& y = k4[pick(rng)];
    auto const& z = k4[pick(rng)];
    REQUIRE((x * y) * z == x * (y * z));
  }
}

TEST_CASE("defining relations hold", "[algebra]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      auto const ai = generator(i, n);
      CHECK(ai * ai == ai);
      for (int j = 1; j < i; ++j) {
        auto const aj = generator(j, n);
        CHECK(ai * aj * ai == ai * aj);
        CHECK(aj * ai * aj == ai * aj);
      }
    }
  }
}

TEST_CASE("idempotents", "[algebra]") {
  CHECK(idempotent(LetterSet::full(4)) == zero(4));
  CHECK(idempotent(LetterSet(4)) == identity(4));
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<Element> expected;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      LetterSet s(n);
      for (int a = 1; a <= static_cast<int>(n); ++a) {
        if (bits >> (a - 1) & 1) {
          s.insert(a);
        }
      }
      auto const e = idempotent(s);
      CHECK(e * e == e);
      CHECK(content(e) == s);
      expected.insert(e);
    }
    CHECK(expected.size() == (std::size_t{1} << n));
    std::set<Element> found;
    for (auto const& x : elements_by_filter(n)) {
      if (x * x == x) {
        found.insert(x);
      }
    }
    CHECK(found == expected);
  }
}

TEST_CASE("content", "[algebra]") {
  CHECK(content(identity(3)).empty());
  CHECK(content(zero(3)) == LetterSet::full(3));
  CHECK(content(el(2, {2, 1})) == LetterSet(2, {1, 2}));
  auto const k3 = elements_by_filter(3);
  for (auto const& x : k3) {
    for (auto const& y : k3) {
      REQUIRE(content(x * y) == (content(x) | content(y)));
    }
  }
}

TEST_CASE("antiautomorphism", "[algebra]") {
  CHECK(antiautomorphism(zero(4)) == zero(4));
  for (int i = 1; i <= 4; ++i) {
    CHECK(antiautomorphism(generator(i, 4)) == generator(5 - i, 4));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const k = elements_by_filter(n);
    for (auto const& x : k) {
      CHECK(antiautomorphism(antiautomorphism(x)) == x);
      for (auto const& y : k) {
        REQUIRE(antiautomorphism(x * y)
                == antiautomorphism(y) * antiautomorphism(x));
      }
    }
  }
  // At rank 2, with the antihomomorphism law confirmed above:
  // t(a_1 a_2) = t(a_2) t(a_1) = a_1 a_2.
  auto const x = el(2, {1, 2});
  CHECK(antiautomorphism(generator(2, 2)) * antiautomorphism(generator(1, 2))
        == x);
  CHECK(antiautomorphism(x).word() == w(2, {1, 2}));
}

TEST_CASE("m_value", "[algebra]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(m_value(zero(n)) == 0);
    CHECK(m_value(identity(n)) == n);
    CHECK(m_value(idempotent(LetterSet::range(2, static_cast<int>(n), n))) == 1);
    for (auto const& x : elements_by_filter(n)) {
      auto const m = m_value(x);
      CHECK((m == 0) == (x == zero(n)));
      for (std::size_t i = 0; i <= n; ++i) {
        auto const e = idempotent(LetterSet::range(1, static_cast<int>(i), n));
        CHECK((x * e == zero(n)) == (i >= m));
      }
    }
  }
}

TEST_CASE("pi", "[algebra]") {
  CHECK(pi(generator(1, 2)) == identity(2));
  CHECK(pi(el(2, {2, 1})) == generator(2, 2));
  CHECK(pi(el(2, {1, 2})) == identity(2));
  CHECK_THROWS_AS(pi(generator(2, 2)), DomainError);
  CHECK_THROWS_AS(pi(identity(3)), DomainError);

  // Not a homomorphism.
  auto const x = el(2, {1, 2});
  auto const y = generator(1, 2);
  CHECK(pi(x * y) == generator(2, 2));
  CHECK(pi(x) * pi(y) == identity(2));
}

TEST_CASE("hash and order", "[algebra]") {
  std::hash<Element> h;
  CHECK(h(el(3, {1, 2, 1})) == h(el(3, {2, 1})));
  CHECK(identity(3) < generator(1, 3));
  CHECK(generator(3, 3) < el(3, {1, 2}));
}
