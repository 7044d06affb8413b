#pragma once

// Cross-check harness: recomputes every published order over a parameter
// sweep and records each comparison, plus the places where published
// intermediate values disagree with recomputation.

#include <string>
#include <string_view>
#include <vector>

#include "spgauge/arith.hpp"
#include "spgauge/chern.hpp"

namespace spgauge::verify {

using arith::BigRat;
using chern::ChMode;

enum class CheckClass {
  SamelsonOrder,  // (a) gcd of psi images vs closed form
  Q2Order,        // (b) gcd of psi' images vs closed form
  ChCoefficient,  // (c) published restricted sums vs closed form
  GaugeCoker,     // (d) published cokernel formula vs recomputed cokernel
  BetaGenerator,  // (e) published Im beta generator vs gcd of its images
};

/// "a".."e".
std::string_view tag(CheckClass kind);
/// Theorem-level classes (a) and (b) decide the verification outcome; the
/// others only document intermediate disagreements.
bool is_theorem_level(CheckClass kind);

struct Check {
  CheckClass kind;
  std::string name;
  int m;
  int n;
  std::string params;
  std::string expected;  // published value
  std::string actual;    // recomputed value
  ChMode mode;
  bool pass;
};

struct Discrepancy {
  std::string location;
  std::string paper_value;
  std::string recomputed_value;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct ClassSummary {
  int passed = 0;
  int total = 0;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;

  [[nodiscard]] ClassSummary summary(CheckClass kind) const;
  [[nodiscard]] bool theorem_checks_pass() const;
};

/// pass is set to (expected == actual); the values are stored as exact
/// decimal or p/q strings.
Check make_check(CheckClass kind, std::string name, int m, int n, std::string params,
                 const BigRat& expected, const BigRat& actual, ChMode mode);

/// Runs every check for 1 <= m < n <= max_n. Requires max_n >= 2.
/// Checks are sorted by (m, n, name); each failing check contributes one
/// discrepancy.
VerifyReport discrepancy_report(int max_n);

}  // namespace spgauge::verify
