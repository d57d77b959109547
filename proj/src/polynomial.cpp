#include "brandt/polynomial.hpp"

#include <algorithm>

namespace brandt {

Polynomial::Polynomial(std::initializer_list<long long> ascending_coeffs) {
  coeffs_.assign(ascending_coeffs.begin(), ascending_coeffs.end());
  trim();
}

Polynomial::Polynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

BigInt Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt Polynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < coeffs_.size()) {
      out[k] += coeffs_[k];
    }
    if (k < rhs.coeffs_.size()) {
      out[k] += rhs.coeffs_[k];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < coeffs_.size()) {
      out[k] += coeffs_[k];
    }
    if (k < rhs.coeffs_.size()) {
      out[k] -= rhs.coeffs_[k];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    return {};
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
      out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) {
      continue;
    }
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) {
      out += mag.str();
    }
    if (k >= 1) {
      out += var;
      if (k >= 2) {
        out += "^" + std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace brandt
