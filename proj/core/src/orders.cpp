#include <string>

#include "spgauge/errors.hpp"
#include "spgauge/orders.hpp"

namespace spgauge::orders {

using arith::factorial;

void require_gauge_range(int m, int n) {
  if (m < 1 || m >= n) {
    throw DomainError("requires 1 <= m < n, got m = " + std::to_string(m) +
                      ", n = " + std::to_string(n));
  }
}

CyclicGroup DerivedOrder::group() const {
  if (!integral()) {
    throw ConsistencyError("order " + value.str() + " is not a positive integer");
  }
  return CyclicGroup(value.numerator());
}

CyclicGroup samelson_order(int m, int n, ChMode mode) {
  const ZSubgroup image = chern::im_subgroup(chern::psi_generators(m, n, mode));
  if (image.is_zero()) {
    throw ConsistencyError("Im psi is zero for m = " + std::to_string(m) +
                           ", n = " + std::to_string(n));
  }
  return image.cokernel();
}

CyclicGroup samelson_order_formula(int m, int n) {
  require_gauge_range(m, n);
  BigInt order = factorial(2 * n + 1) / factorial(2 * n - 2 * m + 1);
  if (m % 2 == 1) {
    order *= 2;
  }
  return CyclicGroup(order);
}

CyclicGroup mapping_group_order(int m, int n, ChMode mode) { return samelson_order(m, n, mode); }

CyclicGroup q2_group_order(int n, ChMode mode) {
  if (n < 2) {
    throw DomainError("requires n >= 2, got n = " + std::to_string(n));
  }
  const ZSubgroup image = chern::im_subgroup(chern::theta_generators(0, n, mode));
  if (image.is_zero()) {
    throw ConsistencyError("Im psi' is zero for n = " + std::to_string(n));
  }
  return image.cokernel();
}

CyclicGroup q2_group_order_formula(int n) {
  if (n < 2) {
    throw DomainError("requires n >= 2, got n = " + std::to_string(n));
  }
  const BigRat factor = (n % 2 == 0) ? BigRat(BigInt(2), BigInt(6)) : BigRat(BigInt(1), BigInt(6));
  return CyclicGroup((factor * BigRat(factorial(2 * n + 1))).to_integer("Q_2 group order"));
}

DerivedOrder im_alpha_k(int m, int n, const BigInt& k, ChMode mode) {
  require_gauge_range(m, n);
  if (mode == ChMode::PaperLiteral) {
    const BigInt invariant = gauge_invariant(m, n, k);
    const BigInt denom = BigInt(n % 2 == 0 ? 3 : 6) * invariant;
    return {BigRat(factorial(2 * n + 1), denom)};
  }
  const BigInt total = q2_group_order(n, mode).order();
  const BigInt g = chern::im_subgroup(chern::beta_k_generators(m, n, 1, mode)).generator();
  const BigInt image = g * abs(k);
  return {BigRat(total, gcd(total, image))};
}

std::optional<BigInt> im_alpha_k_quotient(int m, int n, const BigInt& k, ChMode mode) {
  require_gauge_range(m, n);
  const BigInt total = q2_group_order(n, mode).order();
  const BigInt beta = chern::im_subgroup(chern::beta_k_generators(m, n, k, mode)).generator();
  if (!ZSubgroup(total).is_subgroup_of(ZSubgroup(beta))) {
    return std::nullopt;
  }
  return BigInt(total / beta);
}

DerivedOrder gauge_coker_order(int m, int n, const BigInt& k, ChMode mode) {
  const DerivedOrder image = im_alpha_k(m, n, k, mode);
  const BigInt total = q2_group_order(n, mode).order();
  return {BigRat(total) / image.value};
}

BigRat stated_beta_generator(int m, int n) {
  require_gauge_range(m, n);
  const int r = n - m + 1;
  return BigRat(factorial(2 * r - 1), BigInt(r % 2 == 0 ? 6 : 12));
}

}  // namespace spgauge::orders
