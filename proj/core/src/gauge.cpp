#include <algorithm>
#include <utility>

#include "spgauge/errors.hpp"
#include "spgauge/orders.hpp"

namespace spgauge::orders {

GaugeParams GaugeParams::make(int m, int n, BigInt k) {
  require_gauge_range(m, n);
  BigInt t = falling_product_t(m, n);
  BigInt modulus = t;
  if (m % 2 == 1) {
    modulus *= 2;
  } else if (n % 2 == 0) {
    modulus *= 4;
  }
  return GaugeParams{m, n, std::move(k), std::move(t), std::move(modulus)};
}

BigInt falling_product_t(int m, int n) {
  require_gauge_range(m, n);
  BigInt t = 1;
  for (int j = 2 * n - 2 * m + 2; j <= 2 * n + 1; ++j) {
    t *= j;
  }
  return t;
}

std::string_view parity_branch(int m, int n) {
  if (m % 2 == 1) {
    return "m odd";
  }
  return n % 2 == 1 ? "m even, n odd" : "m even, n even";
}

BigInt gauge_modulus(int m, int n) { return GaugeParams::make(m, n).modulus; }

BigInt gauge_invariant(int m, int n, const BigInt& k) { return gcd(k, gauge_modulus(m, n)); }

bool gauge_necessary_equiv(int m, int n, const BigInt& k, const BigInt& k_prime) {
  const BigInt modulus = gauge_modulus(m, n);
  return gcd(k, modulus) == gcd(k_prime, modulus);
}

void Factorization::multiply_in(std::uint64_t value) {
  if (value == 0) {
    throw DomainError("cannot factor zero");
  }
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      ++exponents_[p];
      value /= p;
    }
  }
  if (value > 1) {
    ++exponents_[value];
  }
}

BigInt Factorization::value() const {
  BigInt out = 1;
  for (const auto& [prime, exp] : exponents_) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), prime, exp);
    out *= power;
  }
  return out;
}

std::uint64_t Factorization::divisor_count() const {
  std::uint64_t count = 1;
  for (const auto& [prime, exp] : exponents_) {
    count *= exp + 1;
  }
  return count;
}

std::vector<BigInt> Factorization::divisors() const {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [prime, exp] : exponents_) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= static_cast<unsigned long>(prime);
      for (std::size_t i = 0; i < base; ++i) {
        out.push_back(out[i] * power);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor_modulus(int m, int n) {
  require_gauge_range(m, n);
  Factorization f;
  for (int j = 2 * n - 2 * m + 2; j <= 2 * n + 1; ++j) {
    f.multiply_in(static_cast<std::uint64_t>(j));
  }
  if (m % 2 == 1) {
    f.multiply_in(2);
  } else if (n % 2 == 0) {
    f.multiply_in(4);
  }
  return f;
}

std::uint64_t count_invariant_classes(int m, int n) { return factor_modulus(m, n).divisor_count(); }

}  // namespace spgauge::orders
