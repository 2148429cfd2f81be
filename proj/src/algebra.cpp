#include "kiselman/algebra.hpp"

#include <algorithm>  // for find, count
#include <cassert>    // for assert

#include "kiselman/exception.hpp"  // for DomainError, InvariantError
#include "kiselman/rewrite.hpp"    // for canonical_form

namespace kiselman {

  Element::Element(Word const& w) : _canonical(canonical_form(w)) {}

  Element Element::from_canonical(Word w) {
    assert(is_canonical(w));
    return Element(std::move(w), trusted{});
  }

  std::string to_string(Element const& x, bool human_readable) {
    if (human_readable && x.word().empty()) {
      return "e";
    }
    return to_string(x.word());
  }

  Element identity(std::size_t rank) {
    return Element::from_canonical(Word(rank));
  }

  Element zero(std::size_t rank) {
    return Element::from_canonical(idempotent_word(LetterSet::full(rank)));
  }

  Element generator(int letter, std::size_t rank) {
    return Element::from_canonical(Word(rank, {letter}));
  }

  Element multiply(Element const& x, Element const& y) {
    return Element(concat(x.word(), y.word()));
  }

  Element idempotent(LetterSet const& x) {
    return Element::from_canonical(idempotent_word(x));
  }

  LetterSet content(Element const& x) {
    return letters_of(x.word());
  }

  Element antiautomorphism(Element const& x) {
    return Element(reversed(mirror(x.word())));
  }

  std::size_t m_value(Element const& x) {
    auto const f = zero(x.rank());
    for (std::size_t i = 0; i <= x.rank(); ++i) {
      auto const e = idempotent(LetterSet::range(1, static_cast<int>(i), x.rank()));
      if (x * e == f) {
        return i;
      }
    }
    throw InvariantError("x e_{1..n} != f for x = " + to_string(x.word()));
  }

  Element pi(Element const& x) {
    auto const& w     = x.word();
    auto const  first = std::find(w.begin(), w.end(), letter_type{1});
    if (first == w.end()) {
      throw DomainError("pi undefined outside K_n^1: \"" + to_string(x, true)
                        + "\" does not contain the letter 1");
    }
    if (std::count(first, w.end(), letter_type{1}) != 1) {
      throw InvariantError("letter 1 occurs more than once in canonical word \""
                           + to_string(w) + "\"");
    }
    auto const pos = static_cast<std::size_t>(first - w.begin());
    return Element::from_canonical(w.factor(0, pos));
  }

}  // namespace kiselman
