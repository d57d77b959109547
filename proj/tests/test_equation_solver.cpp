#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "brandt/equation.hpp"
#include "test_support.hpp"

using namespace brandt;

TEST_CASE("equation parsing normalizes both sides") {
  const Semigroup b2(2);
  const Equation trivial = parse_equation(b2, "x = x");
  CHECK(trivial.lhs == CanonicalTerm::variable());
  CHECK(trivial.rhs == CanonicalTerm::variable());

  const Semigroup b3(3);
  const Equation folded = parse_equation(b3, "(1,2)(2,3)x = x^3");
  CHECK(folded.lhs == CanonicalTerm::left_mul(Element::pair(1, 3)));
  CHECK(folded.rhs == CanonicalTerm::square());

  CHECK_THROWS_AS(parse_equation(b2, "x ="), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation(b2, "= x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation(b2, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation(b2, "x = x = x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation(b2, "x = (3,1)"), std::invalid_argument);
}

TEST_CASE("brute-force solving of the named examples") {
  const Semigroup b2(2);

  CHECK(solve_brute(b2, parse_equation(b2, "x = x")) == b2.elements());

  CHECK(solve_brute(b2, parse_equation(b2, "x = x^2")) ==
        SolutionSet{Element::zero(), Element::pair(1, 1), Element::pair(2, 2)});

  CHECK(solve_brute(b2, parse_equation(b2, "(1,2)x = x(2,1)")) ==
        SolutionSet{Element::zero(), Element::pair(1, 1)});
}

TEST_CASE("symbolic counting of the named examples") {
  const Semigroup b3(3);
  CHECK(count_solutions_symbolic(b3, parse_equation(b3, "0 = (1,2)x(2,1)")) ==
        9);

  const Semigroup b2(2);
  const Equation same_sandwich = parse_equation(b2, "(1,2)x(2,1) = (1,2)x(2,1)");
  CHECK(count_solutions_symbolic(b2, same_sandwich) == 5);
  CHECK(count_solutions_symbolic(b2, parse_equation(b2, "(1,1) = (2,2)")) == 0);
}

TEST_CASE("classification labels both sides") {
  const Semigroup b2(2);
  CHECK(classify(parse_equation(b2, "x = x^2")) ==
        EquationType{TermClass::variable, TermClass::square});
  CHECK(classify(parse_equation(b2, "0 = (1,2)x(2,1)")) ==
        EquationType{TermClass::constant, TermClass::sandwich});
  CHECK(classify(parse_equation(b2, "(1,2)x = x(2,1)")) ==
        EquationType{TermClass::left_mul, TermClass::right_mul});
}

TEST_CASE("symbolic counts equal brute force on every equation, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    const auto canonical = enumerate_canonical(ctx);
    std::int64_t checked = 0;
    for (const CanonicalTerm& lhs : canonical) {
      for (const CanonicalTerm& rhs : canonical) {
        const Equation eq{lhs, rhs};
        const auto solutions = solve_brute(ctx, eq);
        const std::int64_t symbolic = count_solutions_symbolic(ctx, eq);
        if (symbolic != static_cast<std::int64_t>(solutions.size())) {
          CAPTURE(n);
          CAPTURE(to_string(eq));
          REQUIRE(symbolic == static_cast<std::int64_t>(solutions.size()));
        }
        // Swapping the sides never changes the count.
        CHECK(count_solutions_symbolic(ctx, Equation{rhs, lhs}) == symbolic);
        ++checked;
      }
    }
    const std::int64_t m = static_cast<std::int64_t>(canonical.size());
    CHECK(checked == m * m);
  }
}

TEST_CASE("each ordered type's counting rule agrees with brute force") {
  // Same ground as the exhaustive sweep above, but grouped so a failure
  // names the counting rule it belongs to.
  constexpr TermClass kClasses[] = {TermClass::constant,  TermClass::variable,
                                    TermClass::square,    TermClass::left_mul,
                                    TermClass::right_mul, TermClass::sandwich};
  const Semigroup b3(3);
  const auto canonical = enumerate_canonical(b3);
  for (TermClass lhs_cls : kClasses) {
    for (TermClass rhs_cls : kClasses) {
      const std::string type_name =
          to_string(lhs_cls) + " = " + to_string(rhs_cls);
      CAPTURE(type_name);
      std::int64_t mismatches = 0;
      for (const CanonicalTerm& lhs : canonical) {
        if (lhs.cls != lhs_cls) {
          continue;
        }
        for (const CanonicalTerm& rhs : canonical) {
          if (rhs.cls != rhs_cls) {
            continue;
          }
          const Equation eq{lhs, rhs};
          if (count_solutions_symbolic(b3, eq) !=
              static_cast<std::int64_t>(solve_brute(b3, eq).size())) {
            ++mismatches;
          }
        }
      }
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("an equation with identical sides is solved by all of B_n") {
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    for (const CanonicalTerm& c : enumerate_canonical(ctx)) {
      const Equation eq{c, c};
      CHECK(solve_brute(ctx, eq) == ctx.elements());
      CHECK(count_solutions_symbolic(ctx, eq) == ctx.size());
    }
  }
}

TEST_CASE("zero is a solution whenever both sides vanish at zero") {
  const Semigroup b2(2);
  const auto canonical = enumerate_canonical(b2);
  for (const CanonicalTerm& lhs : canonical) {
    for (const CanonicalTerm& rhs : canonical) {
      if (evaluate(b2, lhs, Element::zero()) ==
          evaluate(b2, rhs, Element::zero())) {
        const auto solutions = solve_brute(b2, Equation{lhs, rhs});
        REQUIRE(!solutions.empty());
        CHECK(solutions.front() == Element::zero());
      }
    }
  }
}

TEST_CASE("solution sets are ordered and duplicate-free") {
  const Semigroup b3(3);
  const auto solutions = solve_brute(b3, parse_equation(b3, "x^2 = (1,1)x"));
  for (std::size_t k = 0; k + 1 < solutions.size(); ++k) {
    CHECK(solutions[k] < solutions[k + 1]);
  }
}
