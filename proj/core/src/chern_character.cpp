#include <functional>
#include <string>

#include "spgauge/chern.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::chern {

using arith::factorial;

std::string_view to_string(ChMode mode) {
  switch (mode) {
    case ChMode::ClosedForm:
      return "closed";
    case ChMode::Convolution:
      return "convolution";
    case ChMode::PaperLiteral:
      return "paper";
  }
  return "closed";
}

ChMode parse_mode(std::string_view name) {
  for (ChMode mode : kAllModes) {
    if (to_string(mode) == name) {
      return mode;
    }
  }
  throw DomainError("unknown mode '" + std::string(name) + "' (expected closed|convolution|paper)");
}

namespace {

BigRat inverse_factorial(int n) { return BigRat(BigInt(1), factorial(n)); }

BigRat closed_form(int d, int j) {
  return BigRat(BigInt(factorial(j) * arith::stirling2(d, j)), factorial(d));
}

int half_degree(int d) {
  if (d < 3 || d % 2 == 0) {
    throw DomainError("published restricted sums are only written for odd d >= 3, got d = " +
                      std::to_string(d));
  }
  return (d - 1) / 2;
}

// Sum over nondecreasing sequences (i_1 <= ... <= i_len), each >= lo, with
// i_1 + ... + i_len = total, of prod ch_{i_l}(x^{i_l}).
BigRat diagonal_product_sum(int total, int len, int lo) {
  BigRat sum;
  std::function<void(int, int, int, const BigRat&)> walk = [&](int remaining, int slots, int floor,
                                                               const BigRat& acc) {
    if (slots == 0) {
      if (remaining == 0) {
        sum += acc;
      }
      return;
    }
    for (int part = floor; part * slots <= remaining; ++part) {
      walk(remaining - part, slots - 1, part, acc * closed_form(part, part));
    }
  };
  walk(total, len, lo, BigRat(1));
  return sum;
}

}  // namespace

namespace printed {

BigRat x_squared_sum(int d) {
  const int h = half_degree(d);
  BigRat sum;
  for (int k = 1; k <= h; ++k) {
    sum += inverse_factorial(k) * inverse_factorial(d - k);
  }
  return sum;
}

BigRat x_cubed_sum(int d) {
  const int h = half_degree(d);
  BigRat sum;
  for (int s = 1; s <= h - 1; ++s) {
    BigRat inner;
    const int rest = d - s;
    for (int i1 = s; 2 * i1 <= rest; ++i1) {
      inner += inverse_factorial(i1) * inverse_factorial(rest - i1);
    }
    sum += inverse_factorial(s) * inner;
  }
  for (int i1 = 1; i1 <= d - 1; ++i1) {
    sum += inverse_factorial(i1) * ch_coeff(d - i1, 2, ChMode::ClosedForm);
  }
  return sum;
}

BigRat top_power_sum(int d) {
  const int h = half_degree(d);
  BigRat sum = closed_form(1, 1) * diagonal_product_sum(2 * h, 2 * h, 1);
  for (int s = 2; s <= h - 1; ++s) {
    sum += closed_form(s, s) * diagonal_product_sum(d - s, h - s + 1, s);
  }
  // The closing term is written separately even when h = 1.
  sum += closed_form(h, h) * closed_form(h + 1, h + 1);
  return sum;
}

}  // namespace printed

BigRat ch_coeff(int d, int j, ChMode mode) {
  if (d < 1 || j < 1) {
    throw DomainError("ch_coeff requires d >= 1 and j >= 1, got d = " + std::to_string(d) +
                      ", j = " + std::to_string(j));
  }
  if (j > d) {
    return BigRat(0);
  }
  switch (mode) {
    case ChMode::ClosedForm:
      return closed_form(d, j);
    case ChMode::Convolution:
      return arith::exp_minus_one_pow(j, static_cast<std::size_t>(d)).coeff(static_cast<std::size_t>(d));
    case ChMode::PaperLiteral:
      if (j == 1) {
        return inverse_factorial(d);
      }
      if (j == d) {
        return printed::top_power_sum(d);
      }
      if (j == 2) {
        return printed::x_squared_sum(d);
      }
      if (j == 3) {
        return printed::x_cubed_sum(d);
      }
      throw DomainError("no published sum for the coefficient of t^" + std::to_string(d) +
                        " in ch(x^" + std::to_string(j) + ")");
  }
  throw DomainError("invalid ChMode");
}

int complexification_multiplier(int q) {
  if (q < 1) {
    throw DomainError("complexification multiplier needs q >= 1, got " + std::to_string(q));
  }
  return q % 2 == 1 ? 1 : 2;
}

}  // namespace spgauge::chern
