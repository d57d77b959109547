#include "brandt/term.hpp"

#include <stdexcept>

#include "parsing.hpp"

namespace brandt {

namespace {

constexpr int kMaxExponent = 1000000;

void require_term(const Semigroup& ctx, const Term& t) {
  if (t.factors.empty()) {
    throw std::invalid_argument("term must have at least one factor");
  }
  for (const Factor& f : t.factors) {
    if (!f.is_var) {
      ctx.require(f.constant);
    }
  }
}

}  // namespace

void require_valid(const Semigroup& ctx, const CanonicalTerm& t) {
  switch (t.cls) {
    case TermClass::constant:
    case TermClass::left_mul:
    case TermClass::right_mul:
      ctx.require(t.b);
      break;
    case TermClass::sandwich:
      ctx.require(t.b);
      ctx.require(t.d);
      break;
    default:
      break;
  }
}

CanonicalTerm CanonicalTerm::constant(Element b) noexcept {
  return {TermClass::constant, b, Element::zero()};
}

CanonicalTerm CanonicalTerm::variable() noexcept {
  return {TermClass::variable, Element::zero(), Element::zero()};
}

CanonicalTerm CanonicalTerm::square() noexcept {
  return {TermClass::square, Element::zero(), Element::zero()};
}

CanonicalTerm CanonicalTerm::left_mul(Element b) {
  if (b.is_zero()) {
    throw std::invalid_argument("left_mul parameter must be nonzero");
  }
  return {TermClass::left_mul, b, Element::zero()};
}

CanonicalTerm CanonicalTerm::right_mul(Element b) {
  if (b.is_zero()) {
    throw std::invalid_argument("right_mul parameter must be nonzero");
  }
  return {TermClass::right_mul, b, Element::zero()};
}

CanonicalTerm CanonicalTerm::sandwich(Element b, Element d) {
  if (b.is_zero() || d.is_zero()) {
    throw std::invalid_argument("sandwich parameters must be nonzero");
  }
  return {TermClass::sandwich, b, d};
}

std::string to_string(TermClass cls) {
  switch (cls) {
    case TermClass::constant: return "constant";
    case TermClass::variable: return "variable";
    case TermClass::square: return "square";
    case TermClass::left_mul: return "left-mul";
    case TermClass::right_mul: return "right-mul";
    case TermClass::sandwich: return "sandwich";
  }
  return "?";
}

Term parse_term(const Semigroup& ctx, std::string_view text) {
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  if (pos == text.size()) {
    detail::parse_fail(text, pos, "empty term");
  }
  Term t;
  while (true) {
    if (text[pos] == 'x') {
      ++pos;
      const std::size_t after_x = pos;
      detail::skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        detail::skip_ws(text, pos);
        const int k = detail::parse_uint(text, pos);
        if (k < 1) {
          detail::parse_fail(text, pos, "exponent must be >= 1");
        }
        if (k > kMaxExponent) {
          detail::parse_fail(text, pos, "exponent too large");
        }
        t.factors.insert(t.factors.end(), static_cast<std::size_t>(k),
                         Factor::var());
      } else {
        pos = after_x;
        t.factors.push_back(Factor::var());
      }
    } else if (text[pos] == '0' || text[pos] == '(') {
      t.factors.push_back(Factor::of(detail::parse_element_at(ctx, text, pos)));
    } else {
      detail::parse_fail(text, pos, "expected 'x' or an element literal");
    }
    detail::skip_ws(text, pos);
    if (pos == text.size()) {
      break;
    }
    if (text[pos] == '*') {
      ++pos;
      detail::skip_ws(text, pos);
      if (pos == text.size()) {
        detail::parse_fail(text, pos, "expected a factor after '*'");
      }
    }
  }
  return t;
}

Element evaluate(const Semigroup& ctx, const Term& t, Element x) {
  require_term(ctx, t);
  ctx.require(x);
  const Factor& first = t.factors.front();
  Element acc = first.is_var ? x : first.constant;
  for (std::size_t k = 1; k < t.factors.size(); ++k) {
    const Factor& f = t.factors[k];
    acc = product(acc, f.is_var ? x : f.constant);
  }
  return acc;
}

Element evaluate(const Semigroup& ctx, const CanonicalTerm& t, Element x) {
  require_valid(ctx, t);
  ctx.require(x);
  return apply(t, x);
}

CanonicalTerm normalize(const Semigroup& ctx, const Term& t) {
  require_term(ctx, t);

  // Fold adjacent constants into their product.
  std::vector<Factor> v;
  v.reserve(t.factors.size());
  for (const Factor& f : t.factors) {
    if (!f.is_var && !v.empty() && !v.back().is_var) {
      v.back().constant = product(v.back().constant, f.constant);
    } else {
      v.push_back(f);
    }
  }
  // A zero constant anywhere kills the whole product.
  for (const Factor& f : v) {
    if (!f.is_var && f.constant.is_zero()) {
      return CanonicalTerm::constant(Element::zero());
    }
  }

  if (v.size() == 1) {
    return v[0].is_var ? CanonicalTerm::variable()
                       : CanonicalTerm::constant(v[0].constant);
  }
  if (v.size() == 2) {
    if (v[0].is_var && v[1].is_var) {
      return CanonicalTerm::square();
    }
    if (!v[0].is_var) {
      return CanonicalTerm::left_mul(v[0].constant);
    }
    return CanonicalTerm::right_mul(v[1].constant);
  }

  bool all_var = true;
  for (const Factor& f : v) {
    all_var = all_var && f.is_var;
  }
  if (all_var) {
    // x^s and x^2 agree on every element for s >= 2.
    return CanonicalTerm::square();
  }

  // At least three alternating factors with a nonzero constant among them:
  // the induced function is nonzero at most at one point x = (p,q). Each
  // adjacency pins a coordinate of that point; inconsistent pins mean the
  // function is identically zero.
  int p = 0;
  int q = 0;  // 0 = not pinned yet
  bool diagonal = false;
  bool consistent = true;
  auto pin = [&consistent](int& slot, int val) {
    if (slot == 0) {
      slot = val;
    } else if (slot != val) {
      consistent = false;
    }
  };
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const Factor& a = v[k];
    const Factor& b = v[k + 1];
    if (!a.is_var && b.is_var) {
      pin(p, a.constant.j);
    } else if (a.is_var && !b.is_var) {
      pin(q, b.constant.i);
    } else {
      // var followed by var; consecutive constants were folded away.
      diagonal = true;
    }
  }
  if (diagonal) {
    if (p != 0) {
      pin(q, p);
    }
    if (q != 0) {
      pin(p, q);
    }
  }
  if (!consistent || p == 0 || q == 0) {
    // p,q are always pinned here: the residue has >= 3 factors, so a
    // constant at either end sits next to a variable and any interior
    // constant pins both sides; an all-variable residue was handled above.
    return CanonicalTerm::constant(Element::zero());
  }

  const Element point = Element::pair(p, q);
  const Element value = evaluate(ctx, Term{v}, point);
  if (value.is_zero()) {
    return CanonicalTerm::constant(Element::zero());
  }
  return CanonicalTerm::sandwich(Element::pair(value.i, point.i),
                                 Element::pair(point.j, value.j));
}

std::vector<CanonicalTerm> enumerate_canonical(const Semigroup& ctx) {
  const std::vector<Element> elems = ctx.elements();
  std::vector<CanonicalTerm> out;
  const std::size_t m = static_cast<std::size_t>(ctx.size());
  out.reserve(m * m + 3 * m);
  for (Element e : elems) {
    out.push_back(CanonicalTerm::constant(e));
  }
  out.push_back(CanonicalTerm::variable());
  out.push_back(CanonicalTerm::square());
  for (Element e : elems) {
    if (!e.is_zero()) {
      out.push_back(CanonicalTerm::left_mul(e));
    }
  }
  for (Element e : elems) {
    if (!e.is_zero()) {
      out.push_back(CanonicalTerm::right_mul(e));
    }
  }
  for (Element b : elems) {
    if (b.is_zero()) {
      continue;
    }
    for (Element d : elems) {
      if (!d.is_zero()) {
        out.push_back(CanonicalTerm::sandwich(b, d));
      }
    }
  }
  return out;
}

std::vector<Element> value_table(const Semigroup& ctx, const CanonicalTerm& t) {
  require_valid(ctx, t);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(ctx.size()));
  for (Element x : ctx.elements()) {
    out.push_back(apply(t, x));
  }
  return out;
}

Term to_term(const CanonicalTerm& t) {
  switch (t.cls) {
    case TermClass::constant: return Term{{Factor::of(t.b)}};
    case TermClass::variable: return Term{{Factor::var()}};
    case TermClass::square: return Term{{Factor::var(), Factor::var()}};
    case TermClass::left_mul: return Term{{Factor::of(t.b), Factor::var()}};
    case TermClass::right_mul: return Term{{Factor::var(), Factor::of(t.b)}};
    case TermClass::sandwich:
      return Term{{Factor::of(t.b), Factor::var(), Factor::of(t.d)}};
  }
  throw std::logic_error("unreachable canonical class");
}

std::string to_string(const CanonicalTerm& t) {
  switch (t.cls) {
    case TermClass::constant: return to_string(t.b);
    case TermClass::variable: return "x";
    case TermClass::square: return "x^2";
    case TermClass::left_mul: return to_string(t.b) + "x";
    case TermClass::right_mul: return "x" + to_string(t.b);
    case TermClass::sandwich:
      return to_string(t.b) + "x" + to_string(t.d);
  }
  return "?";
}

std::string to_string(const Term& t) {
  std::string out;
  for (const Factor& f : t.factors) {
    out += f.is_var ? "x" : to_string(f.constant);
  }
  return out;
}

}  // namespace brandt
