#include "brandt/element.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "parsing.hpp"

namespace brandt {

Semigroup::Semigroup(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("Brandt semigroup requires n >= 1, got n = " +
                                std::to_string(n));
  }
  // n^2 + 1 must stay representable as int.
  if (n > 46340) {
    throw std::invalid_argument("Brandt semigroup dimension too large: n = " +
                                std::to_string(n));
  }
}

void Semigroup::require(Element e) const {
  if (!contains(e)) {
    throw std::invalid_argument(to_string(e) + " is not an element of B_" +
                                std::to_string(n_));
  }
}

std::vector<Element> Semigroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  out.push_back(Element::zero());
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      out.push_back(Element::pair(i, j));
    }
  }
  return out;
}

Element multiply(const Semigroup& ctx, Element a, Element b) {
  ctx.require(a);
  ctx.require(b);
  return product(a, b);
}

std::string to_string(Element e) {
  if (e.is_zero()) {
    return "0";
  }
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

std::ostream& operator<<(std::ostream& os, Element e) {
  return os << to_string(e);
}

namespace detail {

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
}

void parse_fail(std::string_view text, std::size_t pos,
                const std::string& what) {
  std::ostringstream msg;
  msg << "parse error at position " << pos << " in \"" << text
      << "\": " << what;
  throw std::invalid_argument(msg.str());
}

int parse_uint(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    parse_fail(s, pos, "expected an integer");
  }
  long value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > 1000000000L) {
      parse_fail(s, pos, "integer too large");
    }
    ++pos;
  }
  return static_cast<int>(value);
}

Element parse_element_at(const Semigroup& ctx, std::string_view s,
                         std::size_t& pos) {
  if (pos < s.size() && s[pos] == '0') {
    ++pos;
    return Element::zero();
  }
  if (pos >= s.size() || s[pos] != '(') {
    parse_fail(s, pos, "expected an element literal '0' or '(i,j)'");
  }
  ++pos;
  skip_ws(s, pos);
  const int i = parse_uint(s, pos);
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != ',') {
    parse_fail(s, pos, "expected ',' in element literal");
  }
  ++pos;
  skip_ws(s, pos);
  const int j = parse_uint(s, pos);
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != ')') {
    parse_fail(s, pos, "expected ')' in element literal");
  }
  ++pos;
  if (i < 1 || i > ctx.n() || j < 1 || j > ctx.n()) {
    parse_fail(s, pos, "(" + std::to_string(i) + "," + std::to_string(j) +
                           ") is out of range for B_" +
                           std::to_string(ctx.n()));
  }
  return Element::pair(i, j);
}

}  // namespace detail

Element parse_element(const Semigroup& ctx, std::string_view text) {
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  const Element e = detail::parse_element_at(ctx, text, pos);
  detail::skip_ws(text, pos);
  if (pos != text.size()) {
    detail::parse_fail(text, pos, "trailing input after element");
  }
  return e;
}

}  // namespace brandt
