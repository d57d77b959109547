// bn: command line front end for the Brandt semigroup library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "brandt/census.hpp"

namespace {

using namespace brandt;

int parse_threads(const std::string& text) {
  if (text == "auto") {
    return 0;
  }
  try {
    const int threads = std::stoi(text);
    if (threads >= 1) {
      return threads;
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--threads expects a positive integer or 'auto'");
}

CensusMode parse_mode(const std::string& text) {
  if (text == "brute") {
    return CensusMode::brute;
  }
  if (text == "symbolic") {
    return CensusMode::symbolic;
  }
  throw std::invalid_argument("--mode expects 'brute' or 'symbolic'");
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  try {
    if (sep != std::string::npos) {
      return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--range expects 'FIRST..LAST'");
}

Semigroup context_for(int n) {
  if (n < 1) {
    throw std::invalid_argument("--n is required and must be >= 1");
  }
  return Semigroup(n);
}

std::string census_text(const CensusTable& table) {
  std::ostringstream out;
  out << "n: " << table.n << '\n';
  out << "mode: " << to_string(table.mode) << '\n';
  out << "solutions equations\n";
  for (const auto& [solutions, equations] : table.rows) {
    out << solutions << ' ' << equations << '\n';
  }
  const Rational average = average_solutions(table);
  out << "total: " << table.total() << '\n';
  out << "average: " << num(average) << '/' << den(average) << '\n';
  out << "unsolvable: " << table.unsolvable() << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brandt semigroup toolbox: multiply elements of B_n, normalize "
               "one-variable terms, solve equations, and tabulate the exact "
               "distribution of solution counts over all equations."};
  app.require_subcommand(1);

  int n = 0;
  std::string threads_text = "auto";
  int brute_cap = kDefaultBruteCap;
  app.add_option("--n", n, "dimension parameter of B_n (|B_n| = n^2 + 1)");
  app.add_option("--threads", threads_text,
                 "worker threads for census partitioning: integer or 'auto'");
  app.add_option("--brute-cap", brute_cap,
                 "largest n admitted by brute-force mode");

  std::string lhs_text;
  std::string rhs_text;
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("a", lhs_text, "left factor, '0' or '(i,j)'")->required();
  mul->add_option("b", rhs_text, "right factor, '0' or '(i,j)'")->required();

  std::string term_text;
  auto* normalize_cmd =
      app.add_subcommand("normalize", "canonical form of a term");
  normalize_cmd->add_option("term", term_text, "term, e.g. '(1,2)x^2(2,1)'")
      ->required();

  std::string equation_text;
  auto* solve = app.add_subcommand("solve", "solve an equation over B_n");
  solve->add_option("equation", equation_text, "equation 'term = term'")
      ->required();

  std::string census_mode_text = "symbolic";
  std::string format = "text";
  auto* census_cmd = app.add_subcommand(
      "census", "distribution of solution counts over all equations");
  census_cmd->add_option("--mode", census_mode_text, "'brute' or 'symbolic'")
      ->capture_default_str();
  census_cmd->add_option("--format", format, "'text', 'csv' or 'json'")
      ->capture_default_str();

  std::string verify_mode_text = "symbolic";
  std::string range_text;
  auto* verify = app.add_subcommand(
      "verify", "check enumerated censuses against the closed forms");
  verify->add_option("--range", range_text,
                     "inclusive range of n, e.g. '1..8' (default: --n alone)");
  verify->add_option("--mode", verify_mode_text, "'brute' or 'symbolic'")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bn: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*mul) {
      const Semigroup ctx = context_for(n);
      std::cout << multiply(ctx, parse_element(ctx, lhs_text),
                            parse_element(ctx, rhs_text))
                << '\n';
    } else if (*normalize_cmd) {
      const Semigroup ctx = context_for(n);
      std::cout << to_string(normalize(ctx, parse_term(ctx, term_text)))
                << '\n';
    } else if (*solve) {
      const Semigroup ctx = context_for(n);
      const SolutionSet solutions =
          solve_brute(ctx, parse_equation(ctx, equation_text));
      std::ostringstream out;
      for (Element x : solutions) {
        out << x << '\n';
      }
      out << "count: " << solutions.size() << '\n';
      std::cout << out.str();
    } else if (*census_cmd) {
      const Semigroup ctx = context_for(n);
      const CensusTable table =
          census(ctx, parse_mode(census_mode_text),
                 parse_threads(threads_text), brute_cap);
      if (format == "csv") {
        std::cout << to_csv(table);
      } else if (format == "json") {
        std::cout << to_json(table) << '\n';
      } else if (format == "text") {
        std::cout << census_text(table);
      } else {
        throw std::invalid_argument("--format expects 'text', 'csv' or 'json'");
      }
    } else if (*verify) {
      const auto [lo, hi] =
          range_text.empty() ? std::pair<int, int>{n, n}
                             : parse_range(range_text);
      const auto checks =
          verify_range(lo, hi, parse_mode(verify_mode_text),
                       parse_threads(threads_text), brute_cap);
      std::ostringstream out;
      bool all_pass = true;
      for (const VerifyCheck& check : checks) {
        out << "n=" << check.n << ' ' << check.name << ' '
            << (check.pass ? "PASS" : "FAIL") << '\n';
        all_pass = all_pass && check.pass;
      }
      std::cout << out.str();
      if (!all_pass) {
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "bn: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
