#include "brandt/census.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace brandt {

namespace {

Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num) / Rational(den);
}

std::int64_t to_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("solution count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

void add_row(CensusTable& table, std::int64_t solutions,
             const BigInt& equations) {
  if (equations == 0) {
    return;
  }
  table.rows[solutions] += equations;
}

// Closed-form distribution for one unordered pair of classes, from the
// case analysis behind count_solutions_symbolic. Ordered mixed types get
// the same distribution in either order, so the symmetric half applies
// verbatim.
void add_family(CensusTable& out, TermClass a, TermClass b,
                const BigInt& n) {
  if (a > b) {
    std::swap(a, b);
  }
  const std::int64_t sn = to_int64(n);
  const std::int64_t n2 = sn * sn;
  const BigInt p2 = n * n;
  const BigInt p3 = p2 * n;
  const BigInt p4 = p3 * n;
  const BigInt p5 = p4 * n;
  const BigInt p6 = p5 * n;
  const BigInt p8 = p6 * p2;

  using TC = TermClass;
  if (a == TC::constant && b == TC::constant) {
    add_row(out, 0, p4 + p2);
    add_row(out, n2 + 1, p2 + 1);
  } else if (a == TC::constant && b == TC::variable) {
    add_row(out, 1, p2 + 1);
  } else if (a == TC::constant && b == TC::square) {
    add_row(out, 0, p2 - n);
    add_row(out, 1, n);
    add_row(out, n2 - sn + 1, 1);
  } else if (a == TC::constant && (b == TC::left_mul || b == TC::right_mul)) {
    add_row(out, 0, p4 - p3);
    add_row(out, 1, p3);
    add_row(out, n2 - sn + 1, p2);
  } else if (a == TC::constant && b == TC::sandwich) {
    add_row(out, 0, p6 - p4);
    add_row(out, 1, p4);
    add_row(out, n2, p4);
  } else if (a == TC::variable && b == TC::variable) {
    add_row(out, n2 + 1, 1);
  } else if (a == TC::variable && b == TC::square) {
    add_row(out, sn + 1, 1);
  } else if (a == TC::variable && (b == TC::left_mul || b == TC::right_mul)) {
    add_row(out, 1, p2 - n);
    add_row(out, sn + 1, n);
  } else if (a == TC::variable && b == TC::sandwich) {
    add_row(out, 1, p4 - p2);
    add_row(out, 2, p2);
  } else if (a == TC::square && b == TC::square) {
    add_row(out, n2 + 1, 1);
  } else if (a == TC::square && (b == TC::left_mul || b == TC::right_mul)) {
    add_row(out, n2 - 2 * sn + 2, p2 - n);
    add_row(out, n2 - 2 * sn + 3, n);
  } else if (a == TC::square && b == TC::sandwich) {
    add_row(out, n2 - sn, p4 - p3);
    add_row(out, n2 - sn + 1, p3 - n);
    add_row(out, n2 - sn + 2, n);
  } else if ((a == TC::left_mul && b == TC::left_mul) ||
             (a == TC::right_mul && b == TC::right_mul)) {
    add_row(out, n2 - 2 * sn + 1, p4 - p3);
    add_row(out, n2 - sn + 1, p3 - p2);
    add_row(out, n2 + 1, p2);
  } else if (a == TC::left_mul && b == TC::right_mul) {
    add_row(out, n2 - 2 * sn + 2, p4 - p2);
    add_row(out, n2 - 2 * sn + 3, p2);
  } else if ((a == TC::left_mul || a == TC::right_mul) && b == TC::sandwich) {
    add_row(out, n2 - sn, p6 - p5);
    add_row(out, n2 - sn + 1, p5 - p3);
    add_row(out, n2 - sn + 2, p3);
  } else if (a == TC::sandwich && b == TC::sandwich) {
    add_row(out, n2 - 1, p8 - p6);
    add_row(out, n2, p6 - p4);
    add_row(out, n2 + 1, p4);
  } else {
    throw std::logic_error("unreachable class pair");
  }
}

constexpr TermClass kClasses[] = {
    TermClass::constant, TermClass::variable,  TermClass::square,
    TermClass::left_mul, TermClass::right_mul, TermClass::sandwich};

// Flattened element-index value tables for a set of canonical terms; the
// solution count of an equation is the number of agreeing positions.
std::vector<int> index_tables(const Semigroup& ctx,
                              const std::vector<CanonicalTerm>& terms) {
  const std::vector<Element> elems = ctx.elements();
  std::vector<int> tables;
  tables.reserve(terms.size() * elems.size());
  for (const CanonicalTerm& t : terms) {
    for (Element x : elems) {
      tables.push_back(ctx.index_of(apply(t, x)));
    }
  }
  return tables;
}

std::map<std::int64_t, std::uint64_t> count_pairs(
    const std::vector<int>& lhs_tables, std::size_t lhs_begin,
    std::size_t lhs_end, const std::vector<int>& rhs_tables,
    std::size_t rhs_count, std::size_t width) {
  std::map<std::int64_t, std::uint64_t> local;
  for (std::size_t i = lhs_begin; i < lhs_end; ++i) {
    const int* ti = lhs_tables.data() + i * width;
    for (std::size_t j = 0; j < rhs_count; ++j) {
      const int* tj = rhs_tables.data() + j * width;
      std::int64_t matches = 0;
      for (std::size_t k = 0; k < width; ++k) {
        matches += ti[k] == tj[k];
      }
      ++local[matches];
    }
  }
  return local;
}

void require_brute_cap(const Semigroup& ctx, int brute_cap) {
  if (ctx.n() > brute_cap) {
    throw std::invalid_argument(
        "brute census is capped at n <= " + std::to_string(brute_cap) +
        " (got n = " + std::to_string(ctx.n()) +
        "); use symbolic mode or raise the cap");
  }
}

CensusTable brute_census(const Semigroup& ctx, int threads, int brute_cap) {
  require_brute_cap(ctx, brute_cap);
  const std::vector<CanonicalTerm> terms = enumerate_canonical(ctx);
  const std::size_t m = terms.size();
  const std::size_t width = static_cast<std::size_t>(ctx.size());
  const std::vector<int> tables = index_tables(ctx, terms);

  std::size_t workers = threads > 0
                            ? static_cast<std::size_t>(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, m);

  std::vector<std::map<std::int64_t, std::uint64_t>> partials(workers);
  {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (m + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(m, lo + chunk);
      pool.emplace_back([&, lo, hi, w] {
        partials[w] = count_pairs(tables, lo, hi, tables, m, width);
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  CensusTable out;
  out.n = ctx.n();
  out.mode = CensusMode::brute;
  for (const auto& partial : partials) {
    for (const auto& [solutions, equations] : partial) {
      add_row(out, solutions, BigInt(equations));
    }
  }
  return out;
}

CensusTable symbolic_census(const Semigroup& ctx) {
  CensusTable out;
  out.n = ctx.n();
  out.mode = CensusMode::symbolic;
  const BigInt n = ctx.n();
  for (TermClass a : kClasses) {
    for (TermClass b : kClasses) {
      add_family(out, a, b, n);
    }
  }
  return out;
}

}  // namespace

std::string to_string(CensusMode mode) {
  switch (mode) {
    case CensusMode::brute: return "brute";
    case CensusMode::symbolic: return "symbolic";
    case CensusMode::formulas: return "formulas";
  }
  return "?";
}

BigInt CensusTable::total() const {
  BigInt sum = 0;
  for (const auto& [solutions, equations] : rows) {
    sum += equations;
  }
  return sum;
}

BigInt CensusTable::unsolvable() const {
  const auto it = rows.find(0);
  return it == rows.end() ? BigInt(0) : it->second;
}

BigInt CensusTable::solution_sum() const {
  BigInt sum = 0;
  for (const auto& [solutions, equations] : rows) {
    sum += BigInt(solutions) * equations;
  }
  return sum;
}

CensusTable census(const Semigroup& ctx, CensusMode mode, int threads,
                   int brute_cap) {
  switch (mode) {
    case CensusMode::brute:
      return brute_census(ctx, threads, brute_cap);
    case CensusMode::symbolic:
      return symbolic_census(ctx);
    case CensusMode::formulas:
      return census_from_formulas(ctx.n());
  }
  throw std::logic_error("unreachable census mode");
}

CensusTable type_census(const Semigroup& ctx, EquationType type,
                        CensusMode mode, int brute_cap) {
  CensusTable out;
  out.n = ctx.n();
  out.mode = mode;
  if (mode != CensusMode::brute) {
    out.mode = CensusMode::symbolic;
    add_family(out, type.first, type.second, BigInt(ctx.n()));
    return out;
  }

  require_brute_cap(ctx, brute_cap);
  std::vector<CanonicalTerm> lhs_terms;
  std::vector<CanonicalTerm> rhs_terms;
  for (const CanonicalTerm& t : enumerate_canonical(ctx)) {
    if (t.cls == type.first) {
      lhs_terms.push_back(t);
    }
    if (t.cls == type.second) {
      rhs_terms.push_back(t);
    }
  }
  const std::size_t width = static_cast<std::size_t>(ctx.size());
  const std::vector<int> lhs_tables = index_tables(ctx, lhs_terms);
  const std::vector<int> rhs_tables = index_tables(ctx, rhs_terms);
  const auto counts = count_pairs(lhs_tables, 0, lhs_terms.size(), rhs_tables,
                                  rhs_terms.size(), width);
  for (const auto& [solutions, equations] : counts) {
    add_row(out, solutions, BigInt(equations));
  }
  return out;
}

const std::vector<DistributionRow>& distribution_formulas() {
  static const std::vector<DistributionRow> rows = {
      {Polynomial{0}, Polynomial{0, -2, 3, -4, 3, 0, 2}},
      {Polynomial{1}, Polynomial{2, -2, 4, 4, 4}},
      {Polynomial{2}, Polynomial{0, 0, 2}},
      {Polynomial{1, 1}, Polynomial{2, 4}},
      {Polynomial{1, -2, 1}, Polynomial{0, 0, 0, -2, 2}},
      {Polynomial{2, -2, 1}, Polynomial{0, -4, 2, 0, 2}},
      {Polynomial{3, -2, 1}, Polynomial{0, 4, 2}},
      {Polynomial{0, -1, 1}, Polynomial{0, 0, 0, -2, 2, -4, 4}},
      {Polynomial{1, -1, 1}, Polynomial{2, -2, 2, 0, 0, 4}},
      {Polynomial{2, -1, 1}, Polynomial{0, 2, 0, 4}},
      {Polynomial{-1, 0, 1}, Polynomial{0, 0, 0, 0, 0, 0, -1, 0, 1}},
      {Polynomial{0, 0, 1}, Polynomial{0, 0, 0, 0, 1, 0, 1}},
      {Polynomial{1, 0, 1}, Polynomial{3, 0, 3, 0, 1}},
  };
  return rows;
}

CensusTable census_from_formulas(int n) {
  if (n < 1) {
    throw std::invalid_argument("census requires n >= 1");
  }
  CensusTable out;
  out.n = n;
  out.mode = CensusMode::formulas;
  const BigInt x = n;
  for (const DistributionRow& row : distribution_formulas()) {
    add_row(out, to_int64(row.solutions(x)), row.equations(x));
  }
  return out;
}

Rational average_solutions(const CensusTable& table) {
  return make_rational(table.solution_sum(), table.total());
}

Rational average_formula(int n) {
  static const Polynomial numerator{9, 8, 32, 0, 22, -6, 9, -4, 3, 0, 1};
  static const Polynomial denominator{9, 0, 18, 0, 15, 0, 6, 0, 1};
  const BigInt x = n;
  return make_rational(numerator(x), denominator(x));
}

BigInt unsolvable_count(int n) {
  static const Polynomial poly{0, -2, 3, -4, 3, 0, 2};
  return poly(BigInt(n));
}

Rational unsolvable_fraction(int n) {
  return make_rational(unsolvable_count(n), equation_space_size(n));
}

BigInt canonical_count(int n) {
  static const Polynomial poly{3, 0, 3, 0, 1};
  return poly(BigInt(n));
}

BigInt equation_space_size(int n) {
  const BigInt m = canonical_count(n);
  return m * m;
}

std::string to_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "solutions,equations\n";
  for (const auto& [solutions, equations] : table.rows) {
    out << solutions << ',' << equations << '\n';
  }
  return out.str();
}

std::string to_json(const CensusTable& table) {
  std::ostringstream out;
  out << "{\"n\":" << table.n << ",\"mode\":\"" << to_string(table.mode)
      << "\",\"total\":" << table.total() << ",\"rows\":[";
  bool first = true;
  for (const auto& [solutions, equations] : table.rows) {
    if (!first) {
      out << ',';
    }
    first = false;
    out << "{\"solutions\":" << solutions << ",\"equations\":" << equations
        << '}';
  }
  const Rational average = average_solutions(table);
  out << "],\"average\":{\"num\":" << num(average) << ",\"den\":"
      << den(average) << "},\"unsolvable\":" << table.unsolvable() << '}';
  return out.str();
}

std::vector<VerifyCheck> verify_range(int lo, int hi, CensusMode mode,
                                      int threads, int brute_cap) {
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("verify range must satisfy 1 <= first <= last");
  }
  std::vector<VerifyCheck> out;
  for (int n = lo; n <= hi; ++n) {
    const Semigroup ctx(n);
    const CensusTable observed =
        (mode == CensusMode::brute && n <= brute_cap)
            ? census(ctx, CensusMode::brute, threads, brute_cap)
            : census(ctx, CensusMode::symbolic);
    const CensusTable expected = census_from_formulas(n);
    out.push_back({n, "distribution", observed.rows == expected.rows});
    out.push_back(
        {n, "average", average_solutions(observed) == average_formula(n)});
    out.push_back(
        {n, "unsolvable", observed.unsolvable() == unsolvable_count(n)});
  }
  return out;
}

}  // namespace brandt
