#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "brandt/numeric.hpp"

namespace brandt {

// Dense univariate polynomial with exact integer coefficients, ascending by
// degree. Just enough arithmetic to state and check the census identities.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> ascending_coeffs);
  explicit Polynomial(std::vector<BigInt> ascending_coeffs);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k (zero beyond the stored degree).
  BigInt coeff(int k) const;

  BigInt operator()(const BigInt& x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;

  bool operator==(const Polynomial& rhs) const = default;

  // Human-readable form like "2n^6 + 3n^4 - 4n^3 + 3n^2 - 2n".
  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace brandt
