#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brandt/term.hpp"

namespace brandt {

// An equation is an ordered pair of termal functions, each identified with
// its canonical term. (f, g) and (g, f) are distinct equations.
struct Equation {
  CanonicalTerm lhs;
  CanonicalTerm rhs;

  friend auto operator<=>(const Equation&, const Equation&) = default;
};

// One of the 36 ordered type labels.
using EquationType = std::pair<TermClass, TermClass>;

// Solutions in element enumeration order, no duplicates.
using SolutionSet = std::vector<Element>;

EquationType classify(const Equation& eq) noexcept;

// Parses "term = term"; both sides are normalized on ingestion.
Equation parse_equation(const Semigroup& ctx, std::string_view text);

// { x in B_n : lhs(x) == rhs(x) }, by direct evaluation at every element.
SolutionSet solve_brute(const Semigroup& ctx, const Equation& eq);

// |solve_brute(ctx, eq)| in O(1), by case analysis on the ordered type and
// the coordinate relations of the parameters; no enumeration over B_n.
std::int64_t count_solutions_symbolic(const Semigroup& ctx, const Equation& eq);

std::string to_string(const Equation& eq);

}  // namespace brandt
