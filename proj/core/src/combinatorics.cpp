#include <algorithm>
#include <string>
#include <vector>

#include "spgauge/arith.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::arith {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(value));
  }
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) {
    throw DomainError("factorial of negative number " + std::to_string(n));
  }
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw DomainError("binomial arguments must be nonnegative");
  }
  if (k > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt stirling2(int d, int j) {
  require_positive(d, "d");
  require_positive(j, "j");
  if (j > d) {
    return 0;
  }
  // row[c] holds S(r, c) for the current row r, c = 0..j.
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, BigInt(0));
  row[0] = 1;
  for (int r = 1; r <= d; ++r) {
    const int top = std::min(r, j);
    for (int c = top; c >= 1; --c) {
      row[c] = BigInt(c) * row[c] + row[c - 1];
    }
    row[0] = 0;
  }
  return row[j];
}

BigInt stirling2_oracle(int d, int j) {
  require_positive(d, "d");
  require_positive(j, "j");
  BigInt sum = 0;
  for (int i = 0; i <= j; ++i) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(d));
    BigInt term = binomial(j, i) * power;
    if ((j - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigInt denom = factorial(j);
  if (!mpz_divisible_p(sum.get_mpz_t(), denom.get_mpz_t())) {
    throw ConsistencyError("inclusion-exclusion sum for S(" + std::to_string(d) + "," +
                           std::to_string(j) + ") not divisible by j!");
  }
  return BigInt(sum / denom);
}

BigInt gcd_list(std::span<const BigInt> values) {
  if (values.empty()) {
    throw DomainError("gcd of an empty list");
  }
  BigInt g = 0;
  for (const auto& v : values) {
    g = gcd(g, v);
  }
  return g;
}

}  // namespace spgauge::arith
