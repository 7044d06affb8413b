#include <string>

#include "spgauge/chern.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::chern {

using arith::factorial;

namespace {

void require_range(int m, int n, int min_m) {
  if (m < min_m || m >= n) {
    throw DomainError("requires " + std::to_string(min_m) + " <= m < n, got m = " +
                      std::to_string(m) + ", n = " + std::to_string(n));
  }
}

BigInt integral_entry(const BigRat& value, MapLabel label, int index) {
  return value.abs().to_integer(std::string(to_string(label)) + " entry " + std::to_string(index));
}

}  // namespace

std::string_view to_string(MapLabel label) {
  switch (label) {
    case MapLabel::Psi:
      return "psi";
    case MapLabel::Theta:
      return "theta";
    case MapLabel::PsiPrime:
      return "psi-prime";
    case MapLabel::BetaK:
      return "beta-k";
  }
  return "psi";
}

std::vector<KspGenerator> psi_basis(int m, int n) {
  require_range(m, n, 1);
  std::vector<KspGenerator> basis;
  for (int i = 1; i <= n - m + 1; ++i) {
    basis.push_back({i, 4 * (m + i) - 2, 2 * i - 1});
  }
  return basis;
}

std::array<KspGenerator, 2> theta_basis(int m, int n) {
  require_range(m, n, 0);
  return {KspGenerator{1, 4 * (n - m) - 2, 1}, KspGenerator{2, 4 * (n - m) + 2, 3}};
}

GeneratorImage psi_generators(int m, int n, ChMode mode) {
  const auto basis = psi_basis(m, n);
  const int d = 2 * n - 2 * m + 1;
  const BigRat top = factorial(2 * n + 1);
  GeneratorImage image{MapLabel::Psi, {}};
  for (const auto& gen : basis) {
    const BigRat value =
        BigRat(complexification_multiplier(gen.ksp_quarter())) * top * ch_coeff(d, gen.power, mode);
    image.entries.push_back(integral_entry(value, image.label, gen.index));
  }
  return image;
}

GeneratorImage theta_generators(int m, int n, ChMode mode) {
  const auto basis = theta_basis(m, n);
  const BigRat top = factorial(2 * (n - m) + 1);
  GeneratorImage image{m == 0 ? MapLabel::PsiPrime : MapLabel::Theta, {}};
  for (const auto& gen : basis) {
    const BigRat value =
        BigRat(complexification_multiplier(gen.ksp_quarter())) * top * ch_coeff(3, gen.power, mode);
    image.entries.push_back(integral_entry(value, image.label, gen.index));
  }
  return image;
}

GeneratorImage beta_k_generators(int m, int n, const BigInt& k, ChMode mode) {
  require_range(m, n, 1);
  const int r = n - m + 1;
  // c_q = (q-1)! ch_q on a suspension, with q = 2r.
  const BigRat chern_factor = factorial(2 * r - 1);
  const BigRat scale = BigRat(BigInt(abs(k)));

  BigRat first;
  BigRat second;
  if (mode == ChMode::PaperLiteral) {
    if (r % 2 == 0) {
      first = chern_factor / BigRat(6);
      second = BigRat(2) * chern_factor;
    } else {
      first = chern_factor / BigRat(3);
      second = chern_factor;
    }
  } else {
    // theta_1 = q(zeta c'(a)): the y_7 coefficient of ch(c'(a)) is ch_3(x),
    // doubled by quaternionization when r is odd. theta_2 is the top-cell
    // class of KSp~(S^4r), complexified with the sphere multiplier.
    first = BigRat(complexification_multiplier(r + 1)) * chern_factor * ch_coeff(3, 1, mode).abs();
    second = BigRat(complexification_multiplier(r)) * chern_factor * ch_coeff(3, 3, mode);
  }
  GeneratorImage image{MapLabel::BetaK, {}};
  image.entries.push_back(integral_entry(first * scale, image.label, 1));
  image.entries.push_back(integral_entry(second * scale, image.label, 2));
  return image;
}

ZSubgroup im_subgroup(const GeneratorImage& image) {
  if (image.entries.empty()) {
    throw DomainError("generator image has no entries");
  }
  return ZSubgroup(arith::gcd_list(image.entries));
}

}  // namespace spgauge::chern
