#pragma once

// Chern character coefficients of powers of the reduced Hopf class on CP^N,
// the complexification multiplier on symplectic K-theory of spheres, and
// the integer images of K-group bases under the maps into top cohomology.

#include <array>
#include <string_view>
#include <vector>

#include "spgauge/arith.hpp"
#include "spgauge/groups.hpp"

namespace spgauge::chern {

using arith::BigInt;
using arith::BigRat;

/// How coefficients of ch(x^j) are obtained.
///  - ClosedForm:   j! S(d, j) / d!
///  - Convolution:  j-fold Cauchy product of e^t - 1
///  - PaperLiteral: the restricted-index sums as published (audit only)
enum class ChMode { ClosedForm, Convolution, PaperLiteral };

inline constexpr std::array<ChMode, 3> kAllModes = {ChMode::ClosedForm, ChMode::Convolution,
                                                    ChMode::PaperLiteral};

/// "closed", "convolution" or "paper".
std::string_view to_string(ChMode mode);
/// Inverse of to_string. Throws DomainError on unknown names.
ChMode parse_mode(std::string_view name);

/// Coefficient of t^d in ch(x^j), x = L - 1. Zero for j > d in every mode.
///
/// PaperLiteral is defined for j = 1 (the printed 1/d!), j = 2 (restricted
/// sum A), j = 3 (sum B) and j = d (sum C, which takes precedence over B at
/// d = 3). A, B and C need odd d >= 3. Any other j throws DomainError.
BigRat ch_coeff(int d, int j, ChMode mode = ChMode::ClosedForm);

namespace printed {

// The restricted-index sums for d = 2h + 1, written out term by term.
// Factors ch_i(x) and ch_i(x^k) inside them are the true Chern character
// components.

/// sum_{k=1..h} 1 / (k! (d-k)!)
BigRat x_squared_sum(int d);
/// sum_{s=1..h-1} ch_s(x) sum_{i1+i2=d-s, s<=i1<=i2} ch_i1(x) ch_i2(x)
///   + sum_{i1+i2=d, i1,i2>=1} ch_i1(x) ch_i2(x^2)
BigRat x_cubed_sum(int d);
/// Leading term ch_1(x) times the all-ones sequence of length 2h, the
/// middle terms s = 2..h-1 over nondecreasing sequences of h-s+1 parts
/// >= s summing to d-s, and the closing term ch_h(x^h) ch_(h+1)(x^(h+1)).
BigRat top_power_sum(int d);

}  // namespace printed

/// Multiplier of complexification KSp~(S^4q) -> K~(S^4q): 1 for q odd,
/// 2 for q even. Requires q >= 1.
int complexification_multiplier(int q);

/// Basis element zeta (x) x^power of a reduced K-group, living over
/// S^sphere_dim in degree -2.
struct KspGenerator {
  int index;
  int sphere_dim;
  int power;

  /// q with KSp^-2(S^sphere_dim) = KSp~(S^4q).
  [[nodiscard]] int ksp_quarter() const { return (sphere_dim + 2) / 4; }

  friend bool operator==(const KspGenerator&, const KspGenerator&) = default;
};

/// xi_1..xi_(n-m+1) for X = S^(4m-1) ^ Q_(n-m+1): xi_i over S^(4(m+i)-2)
/// paired with x^(2i-1). Requires 1 <= m < n.
std::vector<KspGenerator> psi_basis(int m, int n);

/// alpha over S^(4(n-m)-2) with x, beta over S^(4(n-m)+2) with x^3.
/// Requires 0 <= m < n.
std::array<KspGenerator, 2> theta_basis(int m, int n);

enum class MapLabel { Psi, Theta, PsiPrime, BetaK };

std::string_view to_string(MapLabel label);

/// Integer coefficients of the top cohomology class hit by each basis
/// element. Entries are absolute values.
struct GeneratorImage {
  MapLabel label;
  std::vector<BigInt> entries;
};

/// entries[i-1] = mult(m+i) (2n+1)! ch_coeff(2n-2m+1, 2i-1), i = 1..n-m+1.
/// Requires 1 <= m < n. Throws ConsistencyError on a non-integral entry.
GeneratorImage psi_generators(int m, int n, ChMode mode = ChMode::ClosedForm);

/// [mult(n-m) F ch_coeff(3,1), mult(n-m+1) F ch_coeff(3,3)], F = (2(n-m)+1)!.
/// m = 0 gives the psi' images of the Q_2 computation (label PsiPrime).
GeneratorImage theta_generators(int m, int n, ChMode mode = ChMode::ClosedForm);

/// Chern-class magnitudes of c'(theta_1), c'(theta_2) in degree 4r,
/// r = n-m+1, scaled by |k|. Requires 1 <= m < n.
GeneratorImage beta_k_generators(int m, int n, const BigInt& k, ChMode mode = ChMode::ClosedForm);

/// The subgroup of Z generated by the entries.
ZSubgroup im_subgroup(const GeneratorImage& image);

}  // namespace spgauge::chern
