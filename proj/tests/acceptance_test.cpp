#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "spgauge/chern.hpp"
#include "spgauge/errors.hpp"
#include "spgauge/orders.hpp"

using namespace spgauge;
using arith::BigInt;
using arith::BigRat;
using arith::factorial;
using chern::ChMode;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct ProcessResult {
  int code = -1;
  std::string out;
};

ProcessResult run_binary(const std::string& args) {
  const std::string command = std::string(SPGAUGE_BINARY) + " " + args + " 2>/dev/null";
  ProcessResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Outcome anchors() {
  Outcome o;
  if (orders::samelson_order(1, 2).order() != 40) o.fail("samelson_order(1,2) != 40");
  if (orders::gauge_modulus(1, 2) != 40) o.fail("gauge_modulus(1,2) != 40");
  if (orders::samelson_order(1, 3).order() != 84) o.fail("samelson_order(1,3) != 84");
  for (int n = 2; n <= 25; ++n) {
    if (orders::gauge_modulus(1, n) != 4 * n * (2 * n + 1)) {
      o.fail("gauge_modulus(1," + std::to_string(n) + ") != 4n(2n+1)");
    }
  }
  return o;
}

Outcome samelson_closed_form() {
  Outcome o;
  for (int n = 2; n <= 25; ++n) {
    for (int m = 1; m < n; ++m) {
      BigInt expected = factorial(2 * n + 1) / factorial(2 * n - 2 * m + 1);
      if (m % 2 == 1) expected *= 2;
      if (orders::samelson_order(m, n).order() != expected) {
        o.fail("mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome q2_orders() {
  Outcome o;
  for (int n = 2; n <= 25; ++n) {
    const BigRat f(factorial(2 * n + 1));
    const BigRat expected = n % 2 == 0 ? f * BigRat(BigInt(2), BigInt(6)) : f / 6;
    if (BigRat(orders::q2_group_order(n).order()) != expected) {
      o.fail("mismatch at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome ch_modes() {
  Outcome o;
  for (int d = 1; d <= 40; ++d) {
    for (int j = 1; j <= d; ++j) {
      if (chern::ch_coeff(d, j, ChMode::ClosedForm) != chern::ch_coeff(d, j, ChMode::Convolution)) {
        o.fail("ch mismatch at d=" + std::to_string(d) + " j=" + std::to_string(j));
      }
      if (arith::stirling2(d, j) != arith::stirling2_oracle(d, j)) {
        o.fail("stirling mismatch at d=" + std::to_string(d) + " j=" + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome generator_integrality() {
  Outcome o;
  auto check = [&](const std::string& what, const BigRat& value) {
    if (!value.is_integer()) o.fail(what + " = " + value.str());
  };
  for (int n = 2; n <= 25; ++n) {
    for (int m = 1; m < n; ++m) {
      const std::string cell = " at m=" + std::to_string(m) + " n=" + std::to_string(n);
      try {
        (void)chern::psi_generators(m, n);
        (void)chern::theta_generators(m, n);
        for (long k : {0L, 1L, 7L, 40L}) {
          (void)chern::beta_k_generators(m, n, k);
        }
      } catch (const ConsistencyError& e) {
        o.fail(std::string(e.what()) + cell);
      }
      const int d = 2 * n - 2 * m + 1;
      for (int i = 1; i <= n - m + 1; ++i) {
        const int mult = chern::complexification_multiplier(m + i);
        check("psi entry " + std::to_string(i) + cell,
              BigRat(mult) * BigRat(factorial(2 * n + 1)) * chern::ch_coeff(d, 2 * i - 1));
      }
      const BigRat f(factorial(2 * (n - m) + 1));
      check("theta alpha" + cell,
            BigRat(chern::complexification_multiplier(n - m)) * f * chern::ch_coeff(3, 1));
      check("theta beta" + cell,
            BigRat(chern::complexification_multiplier(n - m + 1)) * f * chern::ch_coeff(3, 3));
    }
  }
  return o;
}

Outcome published_coker_consistency() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const BigInt total = orders::q2_group_order(n).order();
    for (int m = 1; m < n; ++m) {
      const BigInt d = orders::gauge_modulus(m, n);
      std::set<BigInt> ks;
      if (2 * d + 1 <= 500) {
        for (BigInt k = 0; k <= 2 * d; ++k) ks.insert(k);
      } else {
        for (long k = 0; k < 250; ++k) ks.insert(BigInt(k));
        for (long i = 1; i <= 250; ++i) ks.insert(BigInt(2 * d * i / 250));
      }
      for (const auto& k : ks) {
        const std::string cell =
            " at m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + arith::to_string(k);
        const auto coker = orders::gauge_coker_order(m, n, k, ChMode::PaperLiteral);
        const auto im = orders::im_alpha_k(m, n, k, ChMode::PaperLiteral);
        if (coker.value != BigRat(orders::gauge_invariant(m, n, k))) {
          o.fail("coker " + coker.value.str() + " != (k,D)" + cell);
        }
        if (im.integral() && coker.integral() && im.value * coker.value != BigRat(total)) {
          o.fail("Lagrange identity fails" + cell);
        }
      }
    }
  }
  return o;
}

Outcome divisor_classes() {
  Outcome o;
  const std::uint64_t limit = 1000000;
  int cells = 0;
  for (int m = 1;; ++m) {
    if (orders::gauge_modulus(m, m + 1) > limit) break;
    for (int n = m + 1;; ++n) {
      const BigInt d_big = orders::gauge_modulus(m, n);
      if (d_big > limit) break;
      const std::uint64_t d = d_big.get_ui();
      std::vector<bool> seen(d + 1, false);
      std::uint64_t distinct = 0;
      for (std::uint64_t k = 1; k <= d; ++k) {
        const std::uint64_t g = std::gcd(k, d);
        if (!seen[g]) {
          seen[g] = true;
          ++distinct;
        }
      }
      if (distinct != orders::count_invariant_classes(m, n)) {
        o.fail("class count mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
      ++cells;
    }
  }
  o.detail = o.ok ? std::to_string(cells) + " cells" : o.detail;
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const auto verify = run_binary("verify --max-n 10");
  if (verify.code != 0) o.fail("verify --max-n 10 exited " + std::to_string(verify.code));
  const auto first = run_binary("verify --max-n 10 --format json");
  const auto second = run_binary("verify --max-n 10 --format json");
  if (first.code != 0 || first.out.empty() || first.out != second.out) {
    o.fail("JSON output not byte-identical across runs");
  }
  const auto bad = run_binary("order samelson --m 2 --n 2");
  if (bad.code != 2) o.fail("order samelson --m 2 --n 2 exited " + std::to_string(bad.code));
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "anchor values", 1.0, anchors},
      {2, "samelson order equals closed form, 1<=m<n<=25", 10.0, samelson_closed_form},
      {3, "Q2 group order formula, n=2..25", 5.0, q2_orders},
      {4, "ch closed form equals convolution and Stirling oracle, d<=40", 30.0, ch_modes},
      {5, "generator entries are integers", 0.0, generator_integrality},
      {6, "published cokernel formula equals (k,D), 1<=m<n<=12", 0.0, published_coker_consistency},
      {7, "distinct gcd(k,D) count equals tau(D) for D<=10^6", 0.0, divisor_classes},
      {8, "CLI exit codes and deterministic JSON", 0.0, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.fail("took " + std::to_string(seconds) + " s, budget " +
                   std::to_string(c.budget_seconds) + " s");
    }
    std::ostringstream line;
    line << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
         << static_cast<long>(seconds * 1000) << " ms)";
    if (!outcome.detail.empty()) line << " - " << outcome.detail;
    std::cout << line.str() << std::endl;
    if (!outcome.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
