#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brandt/equation.hpp"
#include "brandt/numeric.hpp"
#include "brandt/polynomial.hpp"

namespace brandt {

inline constexpr int kDefaultBruteCap = 4;

enum class CensusMode { brute, symbolic, formulas };

std::string to_string(CensusMode mode);

// Distribution of solution counts over a set of equations: how many
// equations have exactly k solutions, for each attained k.
struct CensusTable {
  int n = 1;
  CensusMode mode = CensusMode::symbolic;
  // solution count -> number of equations, ascending by key; zero-valued
  // rows are never stored.
  std::map<std::int64_t, BigInt> rows;

  BigInt total() const;
  BigInt unsolvable() const;  // rows[0], or 0 when every equation is solvable
  // Sum of (solutions x equations) over the rows.
  BigInt solution_sum() const;

  bool operator==(const CensusTable& rhs) const = default;
};

// Distribution over all |Eq_n| = (n^4 + 3n^2 + 3)^2 ordered pairs of
// canonical terms.
//
// brute mode evaluates both sides of every equation at every element and is
// refused (std::invalid_argument) for n > brute_cap; symbolic mode uses the
// per-type closed forms and scales to large n. threads controls the brute
// partitioning only; <= 0 picks a thread count automatically, and the result
// is identical for every thread count.
CensusTable census(const Semigroup& ctx, CensusMode mode, int threads = 0,
                   int brute_cap = kDefaultBruteCap);

// Distribution restricted to equations of one ordered type.
CensusTable type_census(const Semigroup& ctx, EquationType type,
                        CensusMode mode, int brute_cap = kDefaultBruteCap);

// The closed-form census: 13 pairs of (solution-count polynomial,
// equation-count polynomial) in n. The size polynomials sum to
// n^8 + 6n^6 + 15n^4 + 18n^2 + 9 = |Eq_n| as polynomials.
struct DistributionRow {
  Polynomial solutions;
  Polynomial equations;
};

const std::vector<DistributionRow>& distribution_formulas();

// Evaluates distribution_formulas() at n, merging rows whose solution
// counts coincide numerically and dropping empty rows.
CensusTable census_from_formulas(int n);

// Exact mean number of solutions per equation of the tabulated set.
Rational average_solutions(const CensusTable& table);

// The closed form for the mean over all of Eq_n:
//   (n^10 + 3n^8 - 4n^7 + 9n^6 - 6n^5 + 22n^4 + 32n^2 + 8n + 9)
//   / (n^8 + 6n^6 + 15n^4 + 18n^2 + 9),
// asymptotically n^2.
Rational average_formula(int n);

// Number of unsolvable equations: 2n^6 + 3n^4 - 4n^3 + 3n^2 - 2n; the
// fraction of Eq_n they make up is asymptotically 2/n^2.
BigInt unsolvable_count(int n);
Rational unsolvable_fraction(int n);

// |Eq_n| and |T| = n^4 + 3n^2 + 3 as exact values.
BigInt equation_space_size(int n);
BigInt canonical_count(int n);

// Stable CSV: header "solutions,equations", one row per bucket ascending.
std::string to_csv(const CensusTable& table);

// Stable single-line JSON with keys n, mode, total, rows, average,
// unsolvable, in that order. Counts are emitted as (arbitrary precision)
// JSON integers.
std::string to_json(const CensusTable& table);

// The per-n consistency checks behind the CLI verify command. For each n,
// three checks against the closed forms: the full distribution, the exact
// average, and the unsolvable count. The enumerated table uses brute force
// when mode is brute and n <= brute_cap, otherwise the symbolic closed
// forms.
struct VerifyCheck {
  int n;
  std::string name;
  bool pass;
};

std::vector<VerifyCheck> verify_range(int lo, int hi, CensusMode mode,
                                      int threads = 0,
                                      int brute_cap = kDefaultBruteCap);

}  // namespace brandt
