// Elements of Kiselman's semigroup
//
//   K_n = < a_1, ..., a_n | a_i^2 = a_i,
//                           a_i a_j a_i = a_j a_i a_j = a_i a_j (j < i) >
//
// represented by their canonical words.

#ifndef KISELMAN_ALGEBRA_HPP_
#define KISELMAN_ALGEBRA_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <functional>  // for hash
#include <string>      // for string

#include "words.hpp"  // for Word, LetterSet

namespace kiselman {

  class Element {
   public:
    // The element represented by w (canonicalizes).
    explicit Element(Word const& w);

    [[nodiscard]] Word const& word() const noexcept {
      return _canonical;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _canonical.rank();
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend std::strong_ordering operator<=>(Element const& lhs,
                                            Element const& rhs) noexcept {
      return lhs._canonical <=> rhs._canonical;
    }

    // Wraps a word already known to be canonical.  Checked in debug builds.
    static Element from_canonical(Word w);

   private:
    struct trusted {};
    Element(Word&& w, trusted) noexcept : _canonical(std::move(w)) {}

    Word _canonical;
  };

  inline Element from_word(Word const& w) {
    return Element(w);
  }

  // Canonical word as text; the identity is "e" when human_readable is set.
  std::string to_string(Element const& x, bool human_readable = false);

  Element identity(std::size_t rank);
  Element zero(std::size_t rank);
  Element generator(int letter, std::size_t rank);

  // Throws ValidationError on rank mismatch.
  Element multiply(Element const& x, Element const& y);

  inline Element operator*(Element const& x, Element const& y) {
    return multiply(x, y);
  }

  // e_X; e_{} is the identity and e_{1..n} the zero.
  Element idempotent(LetterSet const& x);

  // Letters occurring in the canonical word of x.
  LetterSet content(Element const& x);

  // The antiautomorphism induced by a_i -> a_{n-i+1}.
  Element antiautomorphism(Element const& x);

  // min { i in [0, n] : x e_{1..i} = f }.
  std::size_t m_value(Element const& x);

  // For x whose canonical word is w a_1 u: the element of w.  Throws
  // DomainError if the letter 1 does not occur in x.
  Element pi(Element const& x);

}  // namespace kiselman

template <>
struct std::hash<kiselman::Element> {
  std::size_t operator()(kiselman::Element const& x) const noexcept {
    return std::hash<kiselman::Word>()(x.word());
  }
};

#endif  // KISELMAN_ALGEBRA_HPP_
