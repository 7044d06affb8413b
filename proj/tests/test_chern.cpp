#include <functional>

#include <gtest/gtest.h>

#include "spgauge/chern.hpp"
#include "spgauge/errors.hpp"

using namespace spgauge;
using namespace spgauge::chern;
using arith::factorial;

namespace {

BigRat frac(long p, long q) { return BigRat(BigInt(p), BigInt(q)); }

// Coefficient of t^d in (e^t - 1)^j: sum over compositions of d into j
// positive parts of the product of 1/part!.
BigRat composition_oracle(int d, int j) {
  BigRat total;
  std::function<void(int, int, BigRat)> walk = [&](int remaining, int parts, BigRat acc) {
    if (parts == 0) {
      if (remaining == 0) total += acc;
      return;
    }
    for (int i = 1; i <= remaining - (parts - 1); ++i) {
      walk(remaining - i, parts - 1, acc * BigRat(BigInt(1), factorial(i)));
    }
  };
  walk(d, j, BigRat(1));
  return total;
}

}  // namespace

TEST(ChCoeff, Examples) {
  for (int d = 1; d <= 12; ++d) {
    EXPECT_EQ(ch_coeff(d, 1, ChMode::ClosedForm), BigRat(BigInt(1), factorial(d)));
  }
  EXPECT_EQ(ch_coeff(3, 3, ChMode::ClosedForm), BigRat(1));
  EXPECT_EQ(ch_coeff(3, 3, ChMode::Convolution), BigRat(1));
  EXPECT_EQ(ch_coeff(3, 2, ChMode::Convolution), BigRat(1));
  EXPECT_EQ(ch_coeff(3, 2, ChMode::PaperLiteral), frac(1, 2));
  EXPECT_EQ(ch_coeff(5, 3), frac(5, 4));
  EXPECT_EQ(ch_coeff(6, 3), frac(3, 4));
}

TEST(ChCoeff, PaperLiteralTopPowerAtThree) {
  EXPECT_EQ(ch_coeff(3, 3, ChMode::PaperLiteral), BigRat(2));
}

TEST(ChCoeff, ZeroAboveDiagonal) {
  for (auto mode : kAllModes) {
    EXPECT_TRUE(ch_coeff(3, 5, mode).is_zero());
  }
}

TEST(ChCoeff, PaperLiteralDomain) {
  EXPECT_THROW(ch_coeff(4, 2, ChMode::PaperLiteral), DomainError);
  EXPECT_THROW(ch_coeff(9, 5, ChMode::PaperLiteral), DomainError);
  EXPECT_EQ(ch_coeff(9, 1, ChMode::PaperLiteral), BigRat(BigInt(1), factorial(9)));
}

TEST(ChCoeff, ModesAgreeWithCompositionOracle) {
  for (int d = 1; d <= 12; ++d) {
    for (int j = 1; j <= d; ++j) {
      const BigRat expected = composition_oracle(d, j);
      EXPECT_EQ(ch_coeff(d, j, ChMode::ClosedForm), expected) << d << "," << j;
      EXPECT_EQ(ch_coeff(d, j, ChMode::Convolution), expected) << d << "," << j;
    }
  }
}

TEST(ChCoeff, ModeNames) {
  for (auto mode : kAllModes) {
    EXPECT_EQ(parse_mode(to_string(mode)), mode);
  }
  EXPECT_THROW(parse_mode("exact"), DomainError);
}

struct PrintedRow {
  int d;
  BigRat a;
  BigRat b;
  BigRat c;
};

TEST(PrintedSums, TabulatedValues) {
  const std::vector<PrintedRow> rows = {
      {3, frac(1, 2), BigRat(1), BigRat(2)},
      {5, frac(1, 8), frac(5, 3), BigRat(2)},
      {7, frac(1, 80), frac(329, 720), BigRat(3)},
      {9, frac(17, 24192), frac(971, 15120), BigRat(4)},
      {11, frac(31, 1209600), frac(19303, 3628800), BigRat(3)},
  };
  for (const auto& row : rows) {
    EXPECT_EQ(printed::x_squared_sum(row.d), row.a) << row.d;
    EXPECT_EQ(printed::x_cubed_sum(row.d), row.b) << row.d;
    EXPECT_EQ(printed::top_power_sum(row.d), row.c) << row.d;
  }
  for (int d : {13, 15, 17}) {
    EXPECT_EQ(printed::top_power_sum(d), BigRat(3)) << d;
  }
}

TEST(PrintedSums, SquaredSumIsHalfTheTrueCoefficient) {
  for (int d = 3; d <= 31; d += 2) {
    EXPECT_EQ(printed::x_squared_sum(d) * 2, ch_coeff(d, 2)) << d;
  }
}

TEST(ComplexificationMultiplier, ParityRule) {
  // m even, i = 1: q = m + 1 odd
  EXPECT_EQ(complexification_multiplier(2 + 1), 1);
  EXPECT_EQ(complexification_multiplier(4 + 1), 1);
  // m odd, i = 1: q = m + 1 even
  EXPECT_EQ(complexification_multiplier(1 + 1), 2);
  EXPECT_EQ(complexification_multiplier(3 + 1), 2);
  // q = n - m with m, n even
  EXPECT_EQ(complexification_multiplier(6 - 2), 2);
  EXPECT_EQ(complexification_multiplier(8 - 4), 2);
  // q = n - m with m even, n odd
  EXPECT_EQ(complexification_multiplier(5 - 2), 1);
  EXPECT_EQ(complexification_multiplier(7 - 4), 1);
  EXPECT_THROW(complexification_multiplier(0), DomainError);
}

TEST(Bases, Shapes) {
  const auto psi = psi_basis(2, 5);
  ASSERT_EQ(psi.size(), 4U);
  EXPECT_EQ(psi[0].sphere_dim, 10);
  EXPECT_EQ(psi[0].power, 1);
  EXPECT_EQ(psi[3].ksp_quarter(), 6);
  EXPECT_EQ(psi[3].power, 7);
  const auto theta = theta_basis(1, 4);
  EXPECT_EQ(theta[0].ksp_quarter(), 3);
  EXPECT_EQ(theta[1].ksp_quarter(), 4);
  EXPECT_EQ(theta[1].power, 3);
  EXPECT_THROW(psi_basis(3, 3), DomainError);
  EXPECT_THROW(theta_basis(-1, 3), DomainError);
}

TEST(PsiGenerators, Examples) {
  EXPECT_EQ(psi_generators(1, 2).entries, (std::vector<BigInt>{40, 120}));
  EXPECT_EQ(psi_generators(2, 3).entries, (std::vector<BigInt>{840, 10080}));
  for (int n = 3; n <= 12; ++n) {
    const int m = 2;
    EXPECT_EQ(psi_generators(m, n).entries[0], factorial(2 * n + 1) / factorial(2 * n - 2 * m + 1));
  }
  EXPECT_EQ(psi_generators(1, 2).label, MapLabel::Psi);
}

TEST(PsiGenerators, FirstEntryGeneratesTheImage) {
  for (int n = 2; n <= 25; ++n) {
    for (int m = 1; m < n; ++m) {
      const auto image = psi_generators(m, n);
      const BigInt first = image.entries.front();
      for (const auto& e : image.entries) {
        EXPECT_EQ(e % first, 0) << m << "," << n;
      }
      EXPECT_EQ(im_subgroup(image).generator(), first);
    }
  }
}

TEST(PsiGenerators, ModesAgree) {
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m < n; ++m) {
      EXPECT_EQ(psi_generators(m, n, ChMode::ClosedForm).entries,
                psi_generators(m, n, ChMode::Convolution).entries);
    }
  }
}

TEST(ThetaGenerators, Examples) {
  const auto prime = theta_generators(0, 3);
  EXPECT_EQ(prime.label, MapLabel::PsiPrime);
  EXPECT_EQ(prime.entries, (std::vector<BigInt>{840, 10080}));
  for (int n = 3; n <= 14; ++n) {
    for (int m = 2; m < n; m += 2) {
      const BigInt f = factorial(2 * (n - m) + 1);
      const BigInt g = im_subgroup(theta_generators(m, n)).generator();
      EXPECT_EQ(g, n % 2 == 0 ? f / 3 : f / 6) << m << "," << n;
    }
  }
}

TEST(ThetaGenerators, PaperLiteralUsesPrintedTopCoefficient) {
  const BigInt f = factorial(5);
  EXPECT_EQ(theta_generators(2, 4, ChMode::PaperLiteral).entries,
            (std::vector<BigInt>{f / 3, 2 * f}));
  const BigInt g = factorial(7);
  EXPECT_EQ(theta_generators(2, 5, ChMode::PaperLiteral).entries,
            (std::vector<BigInt>{g / 6, 4 * g}));
}

TEST(BetaKGenerators, Examples) {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m < n; ++m) {
      const int r = n - m + 1;
      const BigInt f = factorial(2 * r - 1);
      const auto published = beta_k_generators(m, n, 1, ChMode::PaperLiteral).entries;
      if (r % 2 == 0) {
        EXPECT_EQ(published, (std::vector<BigInt>{f / 6, 2 * f}));
      } else {
        EXPECT_EQ(published, (std::vector<BigInt>{f / 3, f}));
      }
      EXPECT_EQ(beta_k_generators(m, n, 1, ChMode::ClosedForm).entries, published);
      EXPECT_EQ(beta_k_generators(m, n, 0).entries, (std::vector<BigInt>{0, 0}));
    }
  }
}

TEST(BetaKGenerators, LinearInAbsK) {
  const auto one = beta_k_generators(2, 5, 1).entries;
  const auto neg = beta_k_generators(2, 5, -7).entries;
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(neg[i], 7 * one[i]);
  }
}

TEST(ImSubgroup, Examples) {
  EXPECT_EQ(im_subgroup({MapLabel::Psi, {40, 120}}).generator(), 40);
  EXPECT_TRUE(im_subgroup({MapLabel::BetaK, {0}}).is_zero());
  EXPECT_EQ(im_subgroup({MapLabel::Psi, {840, 10080}}).generator(), 840);
}

TEST(Groups, SubgroupLattice) {
  ZSubgroup a(40);
  ZSubgroup b(-120);
  EXPECT_EQ(b.generator(), 120);
  EXPECT_TRUE(b.is_subgroup_of(a));
  EXPECT_FALSE(a.is_subgroup_of(b));
  EXPECT_TRUE(a.contains(-80));
  EXPECT_EQ(a.cokernel().order(), 40);
  EXPECT_THROW((void)ZSubgroup(0).cokernel(), ConsistencyError);
  EXPECT_THROW(CyclicGroup(0), DomainError);
}
