#include <algorithm>
#include <array>
#include <string>
#include <tuple>
#include <utility>

#include "spgauge/errors.hpp"
#include "spgauge/orders.hpp"
#include "spgauge/verify.hpp"

namespace spgauge::verify {

namespace {

// k values probed by the cokernel comparison in every cell.
constexpr std::array<long, 4> kCokerSamples = {0, 1, 7, 40};

std::string cell_params(int m, int n) {
  return "m=" + std::to_string(m) + ",n=" + std::to_string(n);
}

std::string location_for(const Check& check) {
  switch (check.kind) {
    case CheckClass::SamelsonOrder:
      return "Samelson product order closed form, " + check.params;
    case CheckClass::Q2Order:
      return "order of [Sigma^(4n-5) Q_2, Sp(n)] closed form, " + check.params;
    case CheckClass::ChCoefficient:
      return "published sum for ch coefficient, " + check.params;
    case CheckClass::GaugeCoker:
      return "cokernel of (alpha_k)_* from the published Im formula, " + check.params;
    case CheckClass::BetaGenerator:
      return "published generator of Im beta_k (k=1), " + check.params;
  }
  return check.params;
}

void add_cell_checks(int m, int n, std::vector<Check>& out) {
  const std::string params = cell_params(m, n);

  out.push_back(make_check(CheckClass::SamelsonOrder, "a:samelson", m, n, params,
                           BigRat(orders::samelson_order_formula(m, n).order()),
                           BigRat(orders::samelson_order(m, n, ChMode::ClosedForm).order()),
                           ChMode::ClosedForm));

  if (m == 1) {
    // Q_2 orders depend on n only, and the m = 1 cells hit each d = 2n-1
    // exactly once, which covers every d = 2(n-m)+1 in the sweep.
    const std::string n_only = "n=" + std::to_string(n);
    out.push_back(make_check(CheckClass::Q2Order, "b:q2-group", m, n, n_only,
                             BigRat(orders::q2_group_order_formula(n).order()),
                             BigRat(orders::q2_group_order(n, ChMode::ClosedForm).order()),
                             ChMode::ClosedForm));

    const int d = 2 * n - 1;
    std::vector<int> powers = {2, 3, d};
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    for (int j : powers) {
      const std::string coeff = "ch(" + std::to_string(d) + "," + std::to_string(j) + ")";
      out.push_back(make_check(CheckClass::ChCoefficient, "c:" + coeff, m, n,
                               "d=" + std::to_string(d) + ",j=" + std::to_string(j),
                               chern::ch_coeff(d, j, ChMode::PaperLiteral),
                               chern::ch_coeff(d, j, ChMode::ClosedForm), ChMode::PaperLiteral));
    }
  }

  for (long k : kCokerSamples) {
    const arith::BigInt kk(k);
    out.push_back(make_check(CheckClass::GaugeCoker, "d:coker k=" + std::to_string(k), m, n,
                             params + ",k=" + std::to_string(k),
                             orders::gauge_coker_order(m, n, kk, ChMode::PaperLiteral).value,
                             orders::gauge_coker_order(m, n, kk, ChMode::ClosedForm).value,
                             ChMode::PaperLiteral));
  }

  out.push_back(make_check(
      CheckClass::BetaGenerator, "e:beta-generator", m, n, params,
      orders::stated_beta_generator(m, n),
      BigRat(chern::im_subgroup(chern::beta_k_generators(m, n, 1, ChMode::ClosedForm)).generator()),
      ChMode::PaperLiteral));
}

}  // namespace

std::string_view tag(CheckClass kind) {
  switch (kind) {
    case CheckClass::SamelsonOrder:
      return "a";
    case CheckClass::Q2Order:
      return "b";
    case CheckClass::ChCoefficient:
      return "c";
    case CheckClass::GaugeCoker:
      return "d";
    case CheckClass::BetaGenerator:
      return "e";
  }
  return "?";
}

bool is_theorem_level(CheckClass kind) {
  return kind == CheckClass::SamelsonOrder || kind == CheckClass::Q2Order;
}

ClassSummary VerifyReport::summary(CheckClass kind) const {
  ClassSummary s;
  for (const auto& check : checks) {
    if (check.kind == kind) {
      ++s.total;
      if (check.pass) {
        ++s.passed;
      }
    }
  }
  return s;
}

bool VerifyReport::theorem_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) {
    return !is_theorem_level(c.kind) || c.pass;
  });
}

Check make_check(CheckClass kind, std::string name, int m, int n, std::string params,
                 const BigRat& expected, const BigRat& actual, ChMode mode) {
  return Check{kind,         std::move(name), m,    n, std::move(params), expected.str(),
               actual.str(), mode,            expected == actual};
}

VerifyReport discrepancy_report(int max_n) {
  if (max_n < 2) {
    throw DomainError("verify requires max-n >= 2, got " + std::to_string(max_n));
  }
  VerifyReport report;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m < n; ++m) {
      add_cell_checks(m, n, report.checks);
    }
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.m, a.n, a.name) < std::tie(b.m, b.n, b.name);
  });
  for (const auto& check : report.checks) {
    if (!check.pass) {
      report.discrepancies.push_back({location_for(check), check.expected, check.actual});
    }
  }
  return report;
}

}  // namespace spgauge::verify
