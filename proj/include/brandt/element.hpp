#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace brandt {

// An element of the Brandt semigroup B_n: either the zero element or an
// ordered pair (i, j) with 1-based indices. The zero element is encoded as
// i == j == 0; pairs always have both indices >= 1.
struct Element {
  int i = 0;
  int j = 0;

  static constexpr Element zero() noexcept { return {}; }
  static constexpr Element pair(int i, int j) noexcept { return {i, j}; }

  constexpr bool is_zero() const noexcept { return i == 0; }

  // Zero orders before every pair, pairs order lexicographically. This is
  // the enumeration order used everywhere.
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

// Product rule of B_n: zero is absorbing, and
// (e,k)(l,m) = (e,m) if k == l, else 0.
// Inputs must be valid elements (zero or 1-based pairs); the encoding makes
// the zero cases fall out of the single index comparison.
constexpr Element product(Element a, Element b) noexcept {
  return a.j == b.i ? Element{a.i, b.j} : Element{};
}

// The ambient semigroup B_n = {0} u {(i,j) : 1 <= i,j <= n}.
class Semigroup {
 public:
  // Throws std::invalid_argument unless n >= 1.
  explicit Semigroup(int n);

  int n() const noexcept { return n_; }

  // |B_n| = n^2 + 1.
  int size() const noexcept { return n_ * n_ + 1; }

  bool contains(Element e) const noexcept {
    return (e.i == 0 && e.j == 0) ||
           (e.i >= 1 && e.i <= n_ && e.j >= 1 && e.j <= n_);
  }

  // Throws std::invalid_argument if e is not an element of B_n.
  void require(Element e) const;

  // All elements in enumeration order: zero first, then pairs (i,j) in
  // lexicographic order.
  std::vector<Element> elements() const;

  // Position of e in elements() order: zero -> 0, (i,j) -> (i-1)*n + j.
  int index_of(Element e) const noexcept {
    return e.is_zero() ? 0 : (e.i - 1) * n_ + e.j;
  }

 private:
  int n_;
};

// Validated multiplication; throws std::invalid_argument if a or b is not
// an element of B_n.
Element multiply(const Semigroup& ctx, Element a, Element b);

// Textual form used by the CLI and all file formats: "0" or "(i,j)" with no
// interior spaces.
std::string to_string(Element e);
std::ostream& operator<<(std::ostream& os, Element e);

// Parses "0" or "( INT , INT )" with optional whitespace; the entire input
// must be consumed. Throws std::invalid_argument on syntax errors or
// indices outside 1..n.
Element parse_element(const Semigroup& ctx, std::string_view text);

}  // namespace brandt
