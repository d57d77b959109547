#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "brandt/element.hpp"

namespace brandt {

// One factor of a term: either the variable x or a constant from B_n.
struct Factor {
  bool is_var = true;
  Element constant;  // meaningful only when !is_var

  static constexpr Factor var() noexcept { return {}; }
  static constexpr Factor of(Element e) noexcept { return {false, e}; }

  friend constexpr auto operator<=>(const Factor&, const Factor&) = default;
};

// A one-variable word w_1 w_2 ... w_s over B_n u {x}, s >= 1.
struct Term {
  std::vector<Factor> factors;

  friend auto operator<=>(const Term&, const Term&) = default;
};

// The six families of canonical terms. Every function B_n -> B_n induced by
// a term is induced by exactly one canonical term:
//   constant   b            (any b, including 0)
//   variable   x
//   square     x^2
//   left_mul   bx           (b != 0)
//   right_mul  xb           (b != 0)
//   sandwich   bxd          (b, d != 0)
enum class TermClass { constant, variable, square, left_mul, right_mul, sandwich };

std::string to_string(TermClass cls);

struct CanonicalTerm {
  TermClass cls = TermClass::variable;
  Element b;  // parameter of constant/left_mul/right_mul/sandwich
  Element d;  // second parameter of sandwich

  static CanonicalTerm constant(Element b) noexcept;
  static CanonicalTerm variable() noexcept;
  static CanonicalTerm square() noexcept;
  // The factories below throw std::invalid_argument on a zero parameter.
  static CanonicalTerm left_mul(Element b);
  static CanonicalTerm right_mul(Element b);
  static CanonicalTerm sandwich(Element b, Element d);

  friend auto operator<=>(const CanonicalTerm&, const CanonicalTerm&) = default;
};

// Parses the term grammar:
//   term   := factor (('*' | ws) factor)*
//   factor := 'x' | 'x^' INT | '0' | '(' INT ',' INT ')'
// with INT >= 1 in exponents; x^k is stored as k variable factors. Throws
// std::invalid_argument on empty input, syntax errors, or constants outside
// B_n.
Term parse_term(const Semigroup& ctx, std::string_view text);

// Left-to-right product of the factors with x substituted for the variable.
Element evaluate(const Semigroup& ctx, const Term& t, Element x);
Element evaluate(const Semigroup& ctx, const CanonicalTerm& t, Element x);

// Unvalidated evaluation of a canonical term; inputs must already lie in the
// ambient semigroup. This is the census hot path.
constexpr Element apply(const CanonicalTerm& t, Element x) noexcept {
  switch (t.cls) {
    case TermClass::constant: return t.b;
    case TermClass::variable: return x;
    case TermClass::square: return product(x, x);
    case TermClass::left_mul: return product(t.b, x);
    case TermClass::right_mul: return product(x, t.b);
    case TermClass::sandwich: return product(product(t.b, x), t.d);
  }
  return Element::zero();
}

// The unique canonical term inducing the same function as t. Runs in
// O(length): folds adjacent constants, handles the short shapes directly,
// and pins the single possible nonzero point of longer words by propagating
// the index-chaining constraints.
CanonicalTerm normalize(const Semigroup& ctx, const Term& t);

// All canonical terms for B_n, each exactly once, in the fixed order:
// constants in element order, x, x^2, then bx / xb / bxd with parameters in
// lexicographic order. Size is n^4 + 3n^2 + 3.
std::vector<CanonicalTerm> enumerate_canonical(const Semigroup& ctx);

// Values of the induced function at ctx.elements(), in that order. Equal
// tables == equal termal functions.
std::vector<Element> value_table(const Semigroup& ctx, const CanonicalTerm& t);

// The canonical term spelled back as a term, e.g. bxd -> [b, x, d].
Term to_term(const CanonicalTerm& t);

// Throws std::invalid_argument unless every constant of t lies in B_n.
// (Nonzero-ness of canonical parameters is already enforced at construction.)
void require_valid(const Semigroup& ctx, const CanonicalTerm& t);

// Canonical text: "0", "(1,2)", "x", "x^2", "(1,2)x", "x(1,2)", "(1,2)x(2,1)".
std::string to_string(const CanonicalTerm& t);
std::string to_string(const Term& t);

}  // namespace brandt
