#include <stdexcept>
#include <string>
#include <utility>

#include "spgauge/arith.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::arith {

TruncPoly::TruncPoly(std::size_t cap) : coefficients_(cap + 1) {}

TruncPoly::TruncPoly(std::size_t cap, std::vector<BigRat> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(cap + 1);
}

TruncPoly TruncPoly::one(std::size_t cap) { return monomial(cap, 0, BigRat(1)); }

TruncPoly TruncPoly::monomial(std::size_t cap, std::size_t degree, BigRat coefficient) {
  TruncPoly out(cap);
  if (degree <= cap) {
    out.coefficients_[degree] = std::move(coefficient);
  }
  return out;
}

const BigRat& TruncPoly::coeff(std::size_t degree) const {
  if (degree > cap()) {
    throw std::out_of_range("degree " + std::to_string(degree) + " exceeds cap " +
                            std::to_string(cap()));
  }
  return coefficients_[degree];
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& rhs) {
  if (rhs.cap() != cap()) {
    throw DomainError("truncated polynomial cap mismatch");
  }
  for (std::size_t d = 0; d < coefficients_.size(); ++d) {
    coefficients_[d] += rhs.coefficients_[d];
  }
  return *this;
}

TruncPoly trunc_mul(const TruncPoly& p, const TruncPoly& q) {
  if (p.cap() != q.cap()) {
    throw DomainError("truncated polynomial cap mismatch: " + std::to_string(p.cap()) + " vs " +
                      std::to_string(q.cap()));
  }
  const std::size_t cap = p.cap();
  std::vector<BigRat> out(cap + 1);
  for (std::size_t i = 0; i <= cap; ++i) {
    const BigRat& a = p.coeff(i);
    if (a.is_zero()) {
      continue;
    }
    for (std::size_t k = 0; i + k <= cap; ++k) {
      const BigRat& b = q.coeff(k);
      if (!b.is_zero()) {
        out[i + k] += a * b;
      }
    }
  }
  return TruncPoly(cap, std::move(out));
}

TruncPoly exp_minus_one(std::size_t cap) {
  std::vector<BigRat> coeffs(cap + 1);
  BigInt fact = 1;
  for (std::size_t d = 1; d <= cap; ++d) {
    fact *= static_cast<unsigned long>(d);
    coeffs[d] = BigRat(BigInt(1), fact);
  }
  return TruncPoly(cap, std::move(coeffs));
}

TruncPoly exp_minus_one_pow(int j, std::size_t cap) {
  if (j < 1) {
    throw DomainError("exp_minus_one_pow requires j >= 1, got " + std::to_string(j));
  }
  const TruncPoly base = exp_minus_one(cap);
  TruncPoly acc = base;
  for (int i = 1; i < j; ++i) {
    acc = trunc_mul(acc, base);
  }
  return acc;
}

}  // namespace spgauge::arith
