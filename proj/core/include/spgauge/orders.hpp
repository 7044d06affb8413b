#pragma once

// Group orders and gauge-group classification invariants derived from the
// generator images in chern.hpp.
//
// Index conventions: 1 <= m < n throughout; k is any integer and only |k|
// matters. t = (2n+1)(2n)...(2n-2m+2) and the modulus D is 4t (m, n even),
// t (m even, n odd) or 2t (m odd).

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "spgauge/arith.hpp"
#include "spgauge/chern.hpp"
#include "spgauge/groups.hpp"

namespace spgauge::orders {

using arith::BigInt;
using arith::BigRat;
using chern::ChMode;

/// Throws DomainError unless 1 <= m < n.
void require_gauge_range(int m, int n);

/// Parameters of the gauge group G_{k,m}(Sp(n)) together with the derived
/// t and modulus D.
struct GaugeParams {
  int m;
  int n;
  BigInt k;
  BigInt t;
  BigInt modulus;

  /// Throws DomainError unless 1 <= m < n.
  static GaugeParams make(int m, int n, BigInt k = 0);
};

/// (2n+1)(2n)...(2n-2m+2), computed as a product.
BigInt falling_product_t(int m, int n);

/// "m odd", "m even, n odd" or "m even, n even".
std::string_view parity_branch(int m, int n);

/// Order of coker psi, via the gcd of psi_generators.
CyclicGroup samelson_order(int m, int n, ChMode mode = ChMode::ClosedForm);

/// (2n+1)!/(2n-2m+1)!, doubled when m is odd. No gcd involved.
CyclicGroup samelson_order_formula(int m, int n);

/// [S^(4m-1) ^ Q_(n-m+1), Sp(n)] = Z / Im psi. Same value as samelson_order.
CyclicGroup mapping_group_order(int m, int n, ChMode mode = ChMode::ClosedForm);

/// [Sigma^(4n-5) Q_2, Sp(n)] as the cokernel of psi'. Requires n >= 2.
CyclicGroup q2_group_order(int n, ChMode mode = ChMode::ClosedForm);

/// (2/3!)(2n+1)! for n even, (1/3!)(2n+1)! for n odd.
CyclicGroup q2_group_order_formula(int n);

BigInt gauge_modulus(int m, int n);

/// gcd(|k|, D); equals D for k = 0.
BigInt gauge_invariant(int m, int n, const BigInt& k);

/// Necessary condition for G_{k,m} ~ G_{k',m}. False certifies the two gauge
/// groups are not homotopy equivalent; true certifies nothing.
bool gauge_necessary_equiv(int m, int n, const BigInt& k, const BigInt& k_prime);

/// Prime factorization with small (64-bit) primes.
class Factorization {
 public:
  /// Multiplies `value` (>= 1) into the factorization by trial division.
  void multiply_in(std::uint64_t value);

  [[nodiscard]] const std::map<std::uint64_t, unsigned>& exponents() const { return exponents_; }
  [[nodiscard]] BigInt value() const;
  [[nodiscard]] std::uint64_t divisor_count() const;
  /// Ascending list of every positive divisor.
  [[nodiscard]] std::vector<BigInt> divisors() const;

 private:
  std::map<std::uint64_t, unsigned> exponents_;
};

/// Factorization of D from its consecutive factors and the parity factor.
Factorization factor_modulus(int m, int n);

/// tau(D): the number of distinct values of (k, D) as k ranges over Z.
std::uint64_t count_invariant_classes(int m, int n);

/// An order computed as a quotient that is not guaranteed to be integral.
struct DerivedOrder {
  BigRat value;

  [[nodiscard]] bool integral() const { return value.is_integer() && value.sign() > 0; }
  /// Throws ConsistencyError when the value is not a positive integer.
  [[nodiscard]] CyclicGroup group() const;
};

/// |Im (alpha_k)_*| inside [Sigma^(4n-5) Q_2, Sp(n)] = Z/M.
///  - PaperLiteral: the published branch formula (2n+1)!/(3 (k,4t)) etc.
///  - otherwise:    M / gcd(M, g|k|), g the generator of Im beta_1.
DerivedOrder im_alpha_k(int m, int n, const BigInt& k, ChMode mode = ChMode::ClosedForm);

/// M / (g|k|), the quotient Im beta_k / Im psi' taken literally. Empty when
/// Im psi' is not contained in Im beta_k (the quotient is then undefined).
std::optional<BigInt> im_alpha_k_quotient(int m, int n, const BigInt& k,
                                          ChMode mode = ChMode::ClosedForm);

/// M / |Im (alpha_k)_*|. In PaperLiteral mode this reproduces (k, D).
DerivedOrder gauge_coker_order(int m, int n, const BigInt& k, ChMode mode = ChMode::ClosedForm);

/// The generator of Im beta_1 as published: F/6 when n-m+1 is even, F/12
/// when odd, F = (2(n-m)+1)!.
BigRat stated_beta_generator(int m, int n);

}  // namespace spgauge::orders
