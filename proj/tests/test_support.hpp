#pragma once

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "brandt/census.hpp"
#include "brandt/equation.hpp"
#include "brandt/term.hpp"

namespace brandt::testing {

// Independent normalization oracle: match the term's full value table
// against the tables of every canonical term. Quadratic and proud of it;
// shares no logic with normalize().
class ReferenceNormalizer {
 public:
  explicit ReferenceNormalizer(const Semigroup& ctx) : ctx_(ctx) {
    for (const CanonicalTerm& c : enumerate_canonical(ctx)) {
      by_table_.emplace(value_table(ctx, c), c);
    }
  }

  CanonicalTerm operator()(const Term& t) const {
    std::vector<Element> table;
    for (Element x : ctx_.elements()) {
      table.push_back(evaluate(ctx_, t, x));
    }
    const auto it = by_table_.find(table);
    if (it == by_table_.end()) {
      throw std::runtime_error("term induces a non-canonical function: " +
                               to_string(t));
    }
    return it->second;
  }

  std::size_t distinct_tables() const { return by_table_.size(); }

 private:
  const Semigroup& ctx_;
  std::map<std::vector<Element>, CanonicalTerm> by_table_;
};

// All terms of length exactly `length` over {x} u B_n, in odometer order.
inline void for_each_term(const Semigroup& ctx, int length,
                          const std::function<void(const Term&)>& fn) {
  const std::vector<Element> elems = ctx.elements();
  const int alphabet = static_cast<int>(elems.size()) + 1;
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    Term t;
    for (int d : digits) {
      t.factors.push_back(d == 0 ? Factor::var()
                                 : Factor::of(elems[static_cast<std::size_t>(d - 1)]));
    }
    fn(t);
    int k = length - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == alphabet - 1) {
      digits[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) {
      return;
    }
    ++digits[static_cast<std::size_t>(k)];
  }
}

inline Term random_term(const Semigroup& ctx, std::mt19937& rng,
                        int max_length) {
  const std::vector<Element> elems = ctx.elements();
  std::uniform_int_distribution<int> length_dist(1, max_length);
  std::uniform_int_distribution<int> symbol_dist(
      0, static_cast<int>(elems.size()));
  Term t;
  const int length = length_dist(rng);
  for (int k = 0; k < length; ++k) {
    const int symbol = symbol_dist(rng);
    t.factors.push_back(symbol == 0
                            ? Factor::var()
                            : Factor::of(elems[static_cast<std::size_t>(symbol - 1)]));
  }
  return t;
}

}  // namespace brandt::testing
