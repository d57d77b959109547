// Acceptance suite: end-to-end checks of the library against the exact
// counting results it is built to reproduce, with per-criterion PASS/FAIL
// lines and wall-clock budgets.
//
// Criterion 2 is expected to FAIL on its n = 1 slice: B_1 is degenerate
// (every nonzero element is the idempotent (1,1)), so the five
// variable-containing canonical shapes all induce the same function and
// canonical value tables are not pairwise distinct there. Distinctness does
// hold at n = 2 and n = 3. The check is kept as stated rather than
// restricted to the range where it is true.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "brandt/census.hpp"
#include "test_support.hpp"

using namespace brandt;
using brandt::testing::for_each_term;

namespace {

class Criterion {
 public:
  Criterion(int index, std::string name)
      : index_(index), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

  // Prints the one-line verdict and returns ok for the caller to assert.
  bool report(bool ok, const std::string& detail = "") const {
    std::ostringstream line;
    line << "criterion " << index_ << " (" << name_ << "): "
         << (ok ? "PASS" : "FAIL") << " [" << static_cast<long>(elapsed_ms())
         << " ms]";
    if (!detail.empty()) {
      line << " -- " << detail;
    }
    std::cout << line.str() << std::endl;
    return ok;
  }

 private:
  int index_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::map<std::int64_t, BigInt> merged_rows(
    const std::vector<std::pair<Polynomial, Polynomial>>& rows, int n) {
  std::map<std::int64_t, BigInt> out;
  const BigInt x = n;
  for (const auto& [solutions, equations] : rows) {
    const BigInt count = equations(x);
    if (count != 0) {
      out[static_cast<std::int64_t>(solutions(x))] += count;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("criterion 1: canonical term counts for n = 1..6") {
  Criterion c(1, "canonical count n^4+3n^2+3, n=1..6");
  const std::size_t expected[] = {7, 31, 111, 307, 703, 1407};
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const Semigroup ctx(n);
    const std::size_t size = enumerate_canonical(ctx).size();
    ok = ok && size == expected[n - 1] &&
         BigInt(size) == canonical_count(n);
  }
  const bool in_time = c.elapsed_ms() < 1000.0;
  CHECK(c.report(ok && in_time));
}

TEST_CASE("criterion 2: canonical value tables pairwise distinct, n <= 3") {
  Criterion c(2, "distinct canonical value tables, n=1..3");
  bool ok = true;
  std::ostringstream detail;
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    std::set<std::vector<Element>> tables;
    const auto canonical = enumerate_canonical(ctx);
    for (const CanonicalTerm& t : canonical) {
      tables.insert(value_table(ctx, t));
    }
    const bool distinct = tables.size() == canonical.size();
    ok = ok && distinct;
    if (n > 1) {
      detail << "; ";
    }
    detail << "n=" << n << " " << (distinct ? "PASS" : "FAIL") << " ("
           << canonical.size() << " terms, " << tables.size() << " functions)";
  }
  const bool in_time = c.elapsed_ms() < 5000.0;
  CHECK(c.report(ok && in_time, detail.str()));
}

TEST_CASE("criterion 3: every short term over B_2 normalizes soundly") {
  Criterion c(3, "normalize matches value tables, all terms len<=4, n=2");
  const Semigroup b2(2);
  std::set<std::vector<Element>> canonical_tables;
  for (const CanonicalTerm& t : enumerate_canonical(b2)) {
    canonical_tables.insert(value_table(b2, t));
  }
  bool ok = true;
  long checked = 0;
  for (int length = 1; length <= 4; ++length) {
    for_each_term(b2, length, [&](const Term& t) {
      std::vector<Element> table;
      for (Element x : b2.elements()) {
        table.push_back(evaluate(b2, t, x));
      }
      ok = ok && value_table(b2, normalize(b2, t)) == table &&
           canonical_tables.contains(table);
      ++checked;
    });
  }
  // 6 + 6^2 + 6^3 + 6^4 raw shapes over the 6-symbol alphabet.
  ok = ok && checked == 1554;
  const bool in_time = c.elapsed_ms() < 30000.0;
  CHECK(c.report(ok && in_time, std::to_string(checked) + " terms"));
}

TEST_CASE("criterion 4: brute, symbolic and formula censuses agree, n = 1..3") {
  Criterion c(4, "census oracle equivalence, n=1..3");
  const BigInt totals[] = {49, 961, 12321};
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    const CensusTable brute = census(ctx, CensusMode::brute);
    const CensusTable symbolic = census(ctx, CensusMode::symbolic);
    const CensusTable formulas = census_from_formulas(n);
    ok = ok && brute.rows == symbolic.rows && symbolic.rows == formulas.rows &&
         brute.total() == totals[n - 1];
  }
  const bool in_time = c.elapsed_ms() < 60000.0;
  CHECK(c.report(ok && in_time));
}

TEST_CASE("criterion 5: unsolvable counts at n = 1, 2, 3") {
  Criterion c(5, "unsolvable = 2n^6+3n^4-4n^3+3n^2-2n");
  const BigInt expected[] = {2, 152, 1614};
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    const CensusTable brute = census(ctx, CensusMode::brute);
    ok = ok && brute.unsolvable() == expected[n - 1] &&
         unsolvable_count(n) == expected[n - 1];
  }
  CHECK(c.report(ok));
}

TEST_CASE("criterion 6: average number of solutions, exact") {
  Criterion c(6, "average solutions vs closed form");
  bool ok = true;
  // Direct brute-force sum over every equation for n <= 3.
  for (int n = 1; n <= 3; ++n) {
    const Semigroup ctx(n);
    const auto canonical = enumerate_canonical(ctx);
    BigInt solution_sum = 0;
    for (const CanonicalTerm& lhs : canonical) {
      for (const CanonicalTerm& rhs : canonical) {
        solution_sum += solve_brute(ctx, Equation{lhs, rhs}).size();
      }
    }
    const Rational average =
        Rational(solution_sum) / Rational(equation_space_size(n));
    ok = ok && average == average_formula(n);
  }
  // Symbolic census reproduces the closed form for n = 1..8.
  for (int n = 1; n <= 8; ++n) {
    const CensusTable table = census(Semigroup(n), CensusMode::symbolic);
    ok = ok && average_solutions(table) == average_formula(n);
  }
  ok = ok && average_formula(1) == Rational(74, 49);
  const bool in_time = c.elapsed_ms() < 60000.0;
  CHECK(c.report(ok && in_time));
}

TEST_CASE("criterion 7: the sixteen per-type distributions at n = 2, 3") {
  Criterion c(7, "per-type tables vs transcribed polynomials");

  using TC = TermClass;
  struct Family {
    const char* name;
    std::vector<EquationType> types;
    std::vector<std::pair<Polynomial, Polynomial>> rows;  // (solutions, count)
  };
  const std::vector<Family> families = {
      {"const=const",
       {{TC::constant, TC::constant}},
       {{Polynomial{0}, Polynomial{0, 0, 1, 0, 1}},
        {Polynomial{1, 0, 1}, Polynomial{1, 0, 1}}}},
      {"const=x",
       {{TC::constant, TC::variable}, {TC::variable, TC::constant}},
       {{Polynomial{1}, Polynomial{2, 0, 2}}}},
      {"const=x^2",
       {{TC::constant, TC::square}, {TC::square, TC::constant}},
       {{Polynomial{0}, Polynomial{0, -2, 2}},
        {Polynomial{1}, Polynomial{0, 2}},
        {Polynomial{1, -1, 1}, Polynomial{2}}}},
      {"const=bx|xb",
       {{TC::constant, TC::left_mul},
        {TC::left_mul, TC::constant},
        {TC::constant, TC::right_mul},
        {TC::right_mul, TC::constant}},
       {{Polynomial{0}, Polynomial{0, 0, 0, -4, 4}},
        {Polynomial{1}, Polynomial{0, 0, 0, 4}},
        {Polynomial{1, -1, 1}, Polynomial{0, 0, 4}}}},
      {"const=bxd",
       {{TC::constant, TC::sandwich}, {TC::sandwich, TC::constant}},
       {{Polynomial{0}, Polynomial{0, 0, 0, 0, -2, 0, 2}},
        {Polynomial{1}, Polynomial{0, 0, 0, 0, 2}},
        {Polynomial{0, 0, 1}, Polynomial{0, 0, 0, 0, 2}}}},
      {"x=x",
       {{TC::variable, TC::variable}},
       {{Polynomial{1, 0, 1}, Polynomial{1}}}},
      {"x=x^2",
       {{TC::variable, TC::square}, {TC::square, TC::variable}},
       {{Polynomial{1, 1}, Polynomial{2}}}},
      {"x=bx|xb",
       {{TC::variable, TC::left_mul},
        {TC::left_mul, TC::variable},
        {TC::variable, TC::right_mul},
        {TC::right_mul, TC::variable}},
       {{Polynomial{1}, Polynomial{0, -4, 4}},
        {Polynomial{1, 1}, Polynomial{0, 4}}}},
      {"x=bxd",
       {{TC::variable, TC::sandwich}, {TC::sandwich, TC::variable}},
       {{Polynomial{1}, Polynomial{0, 0, -2, 0, 2}},
        {Polynomial{2}, Polynomial{0, 0, 2}}}},
      {"x^2=x^2",
       {{TC::square, TC::square}},
       {{Polynomial{1, 0, 1}, Polynomial{1}}}},
      {"x^2=bx|xb",
       {{TC::square, TC::left_mul},
        {TC::left_mul, TC::square},
        {TC::square, TC::right_mul},
        {TC::right_mul, TC::square}},
       {{Polynomial{2, -2, 1}, Polynomial{0, -4, 4}},
        {Polynomial{3, -2, 1}, Polynomial{0, 4}}}},
      {"x^2=bxd",
       {{TC::square, TC::sandwich}, {TC::sandwich, TC::square}},
       {{Polynomial{0, -1, 1}, Polynomial{0, 0, 0, -2, 2}},
        {Polynomial{1, -1, 1}, Polynomial{0, -2, 0, 2}},
        {Polynomial{2, -1, 1}, Polynomial{0, 2}}}},
      {"bx=bx & xb=xb",
       {{TC::left_mul, TC::left_mul}, {TC::right_mul, TC::right_mul}},
       {{Polynomial{1, -2, 1}, Polynomial{0, 0, 0, -2, 2}},
        {Polynomial{1, -1, 1}, Polynomial{0, 0, -2, 2}},
        {Polynomial{1, 0, 1}, Polynomial{0, 0, 2}}}},
      {"bx=xb",
       {{TC::left_mul, TC::right_mul}, {TC::right_mul, TC::left_mul}},
       {{Polynomial{2, -2, 1}, Polynomial{0, 0, -2, 0, 2}},
        {Polynomial{3, -2, 1}, Polynomial{0, 0, 2}}}},
      {"bx|xb=bxd",
       {{TC::left_mul, TC::sandwich},
        {TC::sandwich, TC::left_mul},
        {TC::right_mul, TC::sandwich},
        {TC::sandwich, TC::right_mul}},
       {{Polynomial{0, -1, 1}, Polynomial{0, 0, 0, 0, 0, -4, 4}},
        {Polynomial{1, -1, 1}, Polynomial{0, 0, 0, -4, 0, 4}},
        {Polynomial{2, -1, 1}, Polynomial{0, 0, 0, 4}}}},
      {"bxd=bxd",
       {{TC::sandwich, TC::sandwich}},
       {{Polynomial{-1, 0, 1}, Polynomial{0, 0, 0, 0, 0, 0, -1, 0, 1}},
        {Polynomial{0, 0, 1}, Polynomial{0, 0, 0, 0, -1, 0, 1}},
        {Polynomial{1, 0, 1}, Polynomial{0, 0, 0, 0, 1}}}},
  };

  bool ok = families.size() == 16;
  for (int n = 2; n <= 3; ++n) {
    const Semigroup ctx(n);
    for (const Family& family : families) {
      std::map<std::int64_t, BigInt> brute;
      std::map<std::int64_t, BigInt> symbolic;
      for (const EquationType& type : family.types) {
        for (const auto& [solutions, equations] :
             type_census(ctx, type, CensusMode::brute).rows) {
          brute[solutions] += equations;
        }
        for (const auto& [solutions, equations] :
             type_census(ctx, type, CensusMode::symbolic).rows) {
          symbolic[solutions] += equations;
        }
      }
      const auto expected = merged_rows(family.rows, n);
      if (brute != expected || symbolic != expected) {
        ok = false;
        std::cout << "  mismatch in family " << family.name << " at n=" << n
                  << std::endl;
      }
    }
  }
  CHECK(c.report(ok, "16 families x n in {2,3}"));
}

TEST_CASE("criterion 8: asymptotics with exact rational bounds") {
  Criterion c(8, "average ~ n^2 and unsolvable share ~ 2/n^2");
  bool ok = true;
  for (int n : {10, 50, 100}) {
    const Rational n2 = Rational(n) * n;
    ok = ok && abs(average_formula(n) / n2 - 1) <=
                   Rational(3) / n2 + Rational(10) / (n2 * n);
    ok = ok && abs(unsolvable_fraction(n) * n2 / 2 - 1) <= Rational(4) / n;
  }
  const bool in_time = c.elapsed_ms() < 1000.0;
  CHECK(c.report(ok && in_time));
}

TEST_CASE("criterion 9: census output is deterministic across thread counts") {
  Criterion c(9, "byte-identical CSV/JSON at n=3 for all thread counts");
  const Semigroup b3(3);
  const CensusTable reference = census(b3, CensusMode::brute, 1);
  const std::string csv = to_csv(reference);
  const std::string json = to_json(reference);
  bool ok = true;
  for (int threads : {2, 3, 4, 8, 13}) {
    const CensusTable again = census(b3, CensusMode::brute, threads);
    ok = ok && to_csv(again) == csv && to_json(again) == json;
  }
  CHECK(c.report(ok));
}
