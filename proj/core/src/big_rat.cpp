#include <ostream>
#include <string>

#include "spgauge/arith.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::arith {

BigInt parse_bigint(std::string_view text) {
  std::string digits(text);
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    start = 1;
  }
  if (start == digits.size()) {
    throw DomainError("expected an integer, got '" + digits + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw DomainError("expected an integer, got '" + digits + "'");
    }
  }
  if (digits[0] == '+') {
    digits.erase(0, 1);
  }
  return BigInt(digits, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigRat::BigRat(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigInt BigRat::to_integer(std::string_view context) const {
  if (!is_integer()) {
    std::string msg = "expected an integer, got " + str();
    if (!context.empty()) {
      msg += " (";
      msg += context;
      msg += ")";
    }
    throw ConsistencyError(msg);
  }
  return value_.get_num();
}

BigRat BigRat::abs() const {
  BigRat out;
  out.value_ = ::abs(value_);
  return out;
}

std::string BigRat::str() const {
  if (is_integer()) {
    return value_.get_num().get_str(10);
  }
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRat BigRat::operator-() const {
  BigRat out;
  out.value_ = -value_;
  return out;
}

std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRat& value) { return os << value.str(); }

}  // namespace spgauge::arith
