#include "brandt/equation.hpp"

#include <stdexcept>

#include "parsing.hpp"

namespace brandt {

EquationType classify(const Equation& eq) noexcept {
  return {eq.lhs.cls, eq.rhs.cls};
}

Equation parse_equation(const Semigroup& ctx, std::string_view text) {
  const std::size_t eq_pos = text.find('=');
  if (eq_pos == std::string_view::npos) {
    detail::parse_fail(text, text.size(), "expected '=' between two terms");
  }
  if (text.find('=', eq_pos + 1) != std::string_view::npos) {
    detail::parse_fail(text, eq_pos + 1, "more than one '=' in equation");
  }
  const Term lhs = parse_term(ctx, text.substr(0, eq_pos));
  const Term rhs = parse_term(ctx, text.substr(eq_pos + 1));
  return Equation{normalize(ctx, lhs), normalize(ctx, rhs)};
}

SolutionSet solve_brute(const Semigroup& ctx, const Equation& eq) {
  SolutionSet out;
  for (Element x : ctx.elements()) {
    if (evaluate(ctx, eq.lhs, x) == evaluate(ctx, eq.rhs, x)) {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

// The per-type counting rules. `n` is the dimension parameter, N = n^2 + 1
// the order of the semigroup. Each function receives the two canonical
// terms with the classes already matching its name; mixed-class pairs are
// routed through these in either operand order (solution counts are
// symmetric in the two sides).

std::int64_t count_const_const(std::int64_t n, Element b1, Element b2) {
  return b1 == b2 ? n * n + 1 : 0;
}

std::int64_t count_const_var(std::int64_t, Element) {
  // b = x pins x = b.
  return 1;
}

std::int64_t count_const_square(std::int64_t n, Element b) {
  if (b.is_zero()) {
    return n * n + 1 - n;  // everything but the diagonal pairs
  }
  return b.i == b.j ? 1 : 0;
}

std::int64_t count_const_left(std::int64_t n, Element b, Element c) {
  // b = cx; cx is nonzero exactly on the row x = (c.j, *).
  if (b.is_zero()) {
    return n * n + 1 - n;
  }
  return b.i == c.i ? 1 : 0;
}

std::int64_t count_const_right(std::int64_t n, Element b, Element c) {
  if (b.is_zero()) {
    return n * n + 1 - n;
  }
  return b.j == c.j ? 1 : 0;
}

std::int64_t count_const_sandwich(std::int64_t n, Element b, Element c,
                                  Element d) {
  // cxd is nonzero only at x = (c.j, d.i), with value (c.i, d.j).
  if (b.is_zero()) {
    return n * n;
  }
  return (b.i == c.i && b.j == d.j) ? 1 : 0;
}

std::int64_t count_var_var(std::int64_t n) { return n * n + 1; }

std::int64_t count_var_square(std::int64_t n) {
  // zero and the n diagonal pairs
  return n + 1;
}

std::int64_t count_var_left(std::int64_t n, Element b) {
  // x = bx: away from zero this forces x = (b.i, *) with b.i == b.j.
  return b.i == b.j ? n + 1 : 1;
}

std::int64_t count_var_right(std::int64_t n, Element b) {
  return b.i == b.j ? n + 1 : 1;
}

std::int64_t count_var_sandwich(Element b, Element d) {
  // x = bxd: the only nonzero candidate is x = (b.j, d.i), a solution iff
  // it equals the image (b.i, d.j).
  return (b.i == b.j && d.i == d.j) ? 2 : 1;
}

std::int64_t count_square_square(std::int64_t n) { return n * n + 1; }

std::int64_t count_square_left(std::int64_t n, Element b) {
  // x^2 = bx: both sides vanish off the diagonal and off the row (b.j, *);
  // the overlap bookkeeping leaves one extra match when b is diagonal.
  return b.i == b.j ? n * n - 2 * n + 3 : n * n - 2 * n + 2;
}

std::int64_t count_square_right(std::int64_t n, Element b) {
  return b.i == b.j ? n * n - 2 * n + 3 : n * n - 2 * n + 2;
}

std::int64_t count_square_sandwich(std::int64_t n, Element b, Element d) {
  // x^2 = bxd, rhs supported on x = (b.j, d.i).
  if (b.j != d.i) {
    return n * n - n;  // support point and all diagonals fail
  }
  // Support on the diagonal: it is a solution iff the image matches, i.e.
  // b = d = (z,z).
  return (b.i == b.j && d.i == d.j) ? n * n - n + 2 : n * n - n + 1;
}

std::int64_t count_left_left(std::int64_t n, Element b1, Element b2) {
  if (b1 == b2) {
    return n * n + 1;
  }
  // Rows (b1.j, *) and (b2.j, *) are where either side is nonzero.
  return b1.j == b2.j ? n * n - n + 1 : n * n - 2 * n + 1;
}

std::int64_t count_right_right(std::int64_t n, Element b1, Element b2) {
  if (b1 == b2) {
    return n * n + 1;
  }
  return b1.i == b2.i ? n * n - n + 1 : n * n - 2 * n + 1;
}

std::int64_t count_left_right(std::int64_t n, Element b1, Element b2) {
  // b1x = xb2: the row (b1.j, *) and column (*, b2.i) fail except possibly
  // their crossing x = (b1.j, b2.i), which works iff both constants are
  // diagonal.
  return (b1.i == b1.j && b2.i == b2.j) ? n * n - 2 * n + 3
                                        : n * n - 2 * n + 2;
}

std::int64_t count_left_sandwich(std::int64_t n, Element b, Element c,
                                 Element d) {
  // bx = cxd: lhs lives on the row (b.j, *), rhs on the point (c.j, d.i).
  if (c.j != b.j) {
    return n * n - n;
  }
  return (c.i == b.i && d.i == d.j) ? n * n - n + 2 : n * n - n + 1;
}

std::int64_t count_right_sandwich(std::int64_t n, Element b, Element c,
                                  Element d) {
  // xb = cxd: lhs lives on the column (*, b.i), rhs on the point (c.j, d.i).
  if (d.i != b.i) {
    return n * n - n;
  }
  return (b.j == d.j && c.i == c.j) ? n * n - n + 2 : n * n - n + 1;
}

std::int64_t count_sandwich_sandwich(std::int64_t n, const CanonicalTerm& s,
                                     const CanonicalTerm& t) {
  const Element support_s = Element::pair(s.b.j, s.d.i);
  const Element support_t = Element::pair(t.b.j, t.d.i);
  if (support_s != support_t) {
    return n * n - 1;
  }
  const Element image_s = Element::pair(s.b.i, s.d.j);
  const Element image_t = Element::pair(t.b.i, t.d.j);
  return image_s == image_t ? n * n + 1 : n * n;
}

}  // namespace

std::int64_t count_solutions_symbolic(const Semigroup& ctx,
                                      const Equation& eq) {
  require_valid(ctx, eq.lhs);
  require_valid(ctx, eq.rhs);
  // Solution sets are unchanged under swapping the sides; order the classes
  // so that each unordered pair is handled once.
  const CanonicalTerm& s =
      eq.lhs.cls <= eq.rhs.cls ? eq.lhs : eq.rhs;
  const CanonicalTerm& t =
      eq.lhs.cls <= eq.rhs.cls ? eq.rhs : eq.lhs;
  const std::int64_t n = ctx.n();

  switch (s.cls) {
    case TermClass::constant:
      switch (t.cls) {
        case TermClass::constant: return count_const_const(n, s.b, t.b);
        case TermClass::variable: return count_const_var(n, s.b);
        case TermClass::square: return count_const_square(n, s.b);
        case TermClass::left_mul: return count_const_left(n, s.b, t.b);
        case TermClass::right_mul: return count_const_right(n, s.b, t.b);
        case TermClass::sandwich:
          return count_const_sandwich(n, s.b, t.b, t.d);
      }
      break;
    case TermClass::variable:
      switch (t.cls) {
        case TermClass::variable: return count_var_var(n);
        case TermClass::square: return count_var_square(n);
        case TermClass::left_mul: return count_var_left(n, t.b);
        case TermClass::right_mul: return count_var_right(n, t.b);
        case TermClass::sandwich: return count_var_sandwich(t.b, t.d);
        default: break;
      }
      break;
    case TermClass::square:
      switch (t.cls) {
        case TermClass::square: return count_square_square(n);
        case TermClass::left_mul: return count_square_left(n, t.b);
        case TermClass::right_mul: return count_square_right(n, t.b);
        case TermClass::sandwich: return count_square_sandwich(n, t.b, t.d);
        default: break;
      }
      break;
    case TermClass::left_mul:
      switch (t.cls) {
        case TermClass::left_mul: return count_left_left(n, s.b, t.b);
        case TermClass::right_mul: return count_left_right(n, s.b, t.b);
        case TermClass::sandwich: return count_left_sandwich(n, s.b, t.b, t.d);
        default: break;
      }
      break;
    case TermClass::right_mul:
      switch (t.cls) {
        case TermClass::right_mul: return count_right_right(n, s.b, t.b);
        case TermClass::sandwich:
          return count_right_sandwich(n, s.b, t.b, t.d);
        default: break;
      }
      break;
    case TermClass::sandwich:
      if (t.cls == TermClass::sandwich) {
        return count_sandwich_sandwich(n, s, t);
      }
      break;
  }
  throw std::logic_error("unreachable equation type");
}

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

}  // namespace brandt
