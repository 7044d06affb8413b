#pragma once

// Exact arithmetic layer: big integers, reduced rationals, combinatorial
// primitives and dense truncated power series over Q. Nothing in this
// library touches floating point.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spgauge::arith {

using BigInt = mpz_class;

/// Parses a base-10 integer with optional leading sign. Throws DomainError
/// on anything else (including empty input and embedded whitespace).
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// Reduced rational number. The numerator and denominator are coprime and
/// the denominator is positive after every operation.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `denominator` is zero.
  BigRat(const BigInt& numerator, const BigInt& denominator);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Throws ConsistencyError if the value is not an integer. `context` is
  /// folded into the message.
  [[nodiscard]] BigInt to_integer(std::string_view context = {}) const;

  [[nodiscard]] BigRat abs() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  BigRat& operator+=(const BigRat& rhs);
  BigRat& operator-=(const BigRat& rhs);
  BigRat& operator*=(const BigRat& rhs);
  /// Throws DomainError on division by zero.
  BigRat& operator/=(const BigRat& rhs);

  friend BigRat operator+(BigRat lhs, const BigRat& rhs) { return lhs += rhs; }
  friend BigRat operator-(BigRat lhs, const BigRat& rhs) { return lhs -= rhs; }
  friend BigRat operator*(BigRat lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend BigRat operator/(BigRat lhs, const BigRat& rhs) { return lhs /= rhs; }
  BigRat operator-() const;

  friend bool operator==(const BigRat& lhs, const BigRat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& value);

/// n! for n >= 0. Throws DomainError for negative n.
BigInt factorial(int n);

/// C(n, k); zero when k > n. Throws DomainError for negative arguments.
BigInt binomial(int n, int k);

/// Stirling number of the second kind S(d, j) from the additive recurrence
/// S(d, j) = j S(d-1, j) + S(d-1, j-1). Requires d >= 1, j >= 1.
BigInt stirling2(int d, int j);

/// Inclusion-exclusion form (1/j!) sum_i (-1)^(j-i) C(j, i) i^d. Throws
/// ConsistencyError if the final division is not exact.
BigInt stirling2_oracle(int d, int j);

/// gcd of absolute values; zero iff every entry is zero. Throws DomainError
/// on an empty list.
BigInt gcd_list(std::span<const BigInt> values);

/// Polynomial in t over Q with every term of degree > cap discarded. Models
/// the cohomology ring Z[t]/(t^(N+1)) tensored with Q for N >= cap.
class TruncPoly {
 public:
  /// The zero polynomial.
  explicit TruncPoly(std::size_t cap);
  /// Coefficients beyond `cap` are dropped; missing ones are zero.
  TruncPoly(std::size_t cap, std::vector<BigRat> coefficients);

  static TruncPoly one(std::size_t cap);
  static TruncPoly monomial(std::size_t cap, std::size_t degree, BigRat coefficient);

  [[nodiscard]] std::size_t cap() const { return coefficients_.size() - 1; }
  /// Throws std::out_of_range for degree > cap.
  [[nodiscard]] const BigRat& coeff(std::size_t degree) const;
  [[nodiscard]] std::span<const BigRat> coefficients() const { return coefficients_; }

  TruncPoly& operator+=(const TruncPoly& rhs);
  friend TruncPoly operator+(TruncPoly lhs, const TruncPoly& rhs) { return lhs += rhs; }

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  std::vector<BigRat> coefficients_;
};

/// Truncated product. Throws DomainError when the caps differ.
TruncPoly trunc_mul(const TruncPoly& p, const TruncPoly& q);

/// e^t - 1 truncated at degree `cap`.
TruncPoly exp_minus_one(std::size_t cap);

/// (e^t - 1)^j truncated at degree `cap`, built by repeated truncated
/// multiplication. Requires j >= 1.
TruncPoly exp_minus_one_pow(int j, std::size_t cap);

}  // namespace spgauge::arith
