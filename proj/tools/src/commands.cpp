#include <algorithm>
#include <string>

#include "spgauge/cli/commands.hpp"
#include "spgauge/errors.hpp"
#include "spgauge/orders.hpp"

namespace spgauge::cli {

namespace {

// Divisor lists are printed only up to this modulus.
const BigInt kDivisorListLimit = 1000000;

const std::vector<std::string> kTableColumns = {"samelson", "modulus", "classes", "branch"};

void require_m_less_than_n(int m, int n) {
  if (m >= n) {
    throw DomainError("requires m < n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                      ")");
  }
  if (m < 1) {
    throw DomainError("requires m >= 1 (got m=" + std::to_string(m) + ")");
  }
}

void require_n_at_least_two(int n) {
  if (n < 2) {
    throw DomainError("requires n >= 2 (got n=" + std::to_string(n) + ")");
  }
}

std::string str(const BigInt& v) { return arith::to_string(v); }

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) {
      out += ' ';
    }
    out += str(v);
  }
  return out;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return "text";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Tsv:
      return "tsv";
  }
  return "text";
}

OutputFormat parse_format(std::string_view name) {
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Tsv}) {
    if (to_string(f) == name) {
      return f;
    }
  }
  throw DomainError("unknown format '" + std::string(name) + "' (expected text|json|tsv)");
}

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  auto parse_int = [&](std::string_view part) {
    const BigInt v = arith::parse_bigint(part);
    if (!v.fits_sint_p()) {
      throw DomainError("value out of range: " + std::string(part));
    }
    return static_cast<int>(v.get_si());
  };
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

CommandResult cmd_order(std::string_view kind, std::optional<int> m, int n, ChMode mode) {
  CommandResult out;
  out.command = "order " + std::string(kind);
  out.mode = mode;

  CyclicGroup computed(1);
  CyclicGroup closed(1);
  if (kind == "samelson" || kind == "mapping-group") {
    if (!m) {
      throw DomainError("order " + std::string(kind) + " requires --m");
    }
    require_m_less_than_n(*m, n);
    require_n_at_least_two(n);
    out.params = {{"m", std::to_string(*m)}, {"n", std::to_string(n)}};
    computed = kind == "samelson" ? orders::samelson_order(*m, n, mode)
                                  : orders::mapping_group_order(*m, n, mode);
    closed = orders::samelson_order_formula(*m, n);
  } else if (kind == "q2-group") {
    require_n_at_least_two(n);
    out.params = {{"n", std::to_string(n)}};
    computed = orders::q2_group_order(n, mode);
    closed = orders::q2_group_order_formula(n);
  } else {
    throw DomainError("unknown order kind '" + std::string(kind) +
                      "' (expected samelson|mapping-group|q2-group)");
  }

  const bool agree = computed == closed;
  out.result = computed.order();
  out.details = {{"closed_form", str(closed.order())}, {"agree", agree ? "true" : "false"}};
  if (!agree) {
    out.warnings.push_back("computed order " + str(computed.order()) +
                           " differs from the closed form " + str(closed.order()));
  }
  return out;
}

CommandResult cmd_gauge(std::string_view sub, int m, int n, const std::optional<BigInt>& k,
                        const std::optional<BigInt>& k_prime, ChMode mode) {
  require_m_less_than_n(m, n);
  CommandResult out;
  out.command = "gauge " + std::string(sub);
  out.mode = mode;
  out.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  const auto params = orders::GaugeParams::make(m, n);

  if (sub == "modulus") {
    out.result = params.modulus;
    out.details = {{"t", str(params.t)}, {"branch", std::string(orders::parity_branch(m, n))}};
  } else if (sub == "invariant") {
    if (!k) {
      throw DomainError("gauge invariant requires --k");
    }
    out.params.emplace_back("k", str(*k));
    out.result = orders::gauge_invariant(m, n, *k);
    out.details = {{"modulus", str(params.modulus)}};
  } else if (sub == "compare") {
    if (!k || !k_prime) {
      throw DomainError("gauge compare requires --k and --kprime");
    }
    out.params.emplace_back("k", str(*k));
    out.params.emplace_back("kprime", str(*k_prime));
    const BigInt inv = orders::gauge_invariant(m, n, *k);
    const BigInt inv_prime = orders::gauge_invariant(m, n, *k_prime);
    out.result = orders::gauge_necessary_equiv(m, n, *k, *k_prime);
    out.details = {{"invariant_k", str(inv)},
                   {"invariant_kprime", str(inv_prime)},
                   {"modulus", str(params.modulus)}};
    out.warnings.push_back(
        "true only means the necessary condition holds; false rules out a homotopy equivalence");
  } else if (sub == "classes") {
    const auto factors = orders::factor_modulus(m, n);
    out.result = BigInt(std::to_string(factors.divisor_count()));
    out.details = {{"modulus", str(params.modulus)}};
    if (params.modulus <= kDivisorListLimit) {
      out.details.emplace_back("divisors", join(factors.divisors()));
    } else {
      out.warnings.push_back("divisor list omitted for D > 1000000");
    }
  } else {
    throw DomainError("unknown gauge subcommand '" + std::string(sub) +
                      "' (expected invariant|compare|classes|modulus)");
  }
  return out;
}

CommandResult cmd_table(Range m_range, Range n_range, const std::vector<std::string>& columns,
                        ChMode mode) {
  std::vector<std::string> selected = columns.empty() ? kTableColumns : columns;
  for (const auto& c : selected) {
    if (std::find(kTableColumns.begin(), kTableColumns.end(), c) == kTableColumns.end()) {
      throw DomainError("unknown table column '" + c + "'");
    }
  }

  Table table;
  table.columns = {"m", "n"};
  table.columns.insert(table.columns.end(), selected.begin(), selected.end());

  for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
    for (int n = std::max(m + 1, n_range.lo); n <= n_range.hi; ++n) {
      std::vector<std::string> row = {std::to_string(m), std::to_string(n)};
      for (const auto& c : selected) {
        if (c == "samelson") {
          row.push_back(str(orders::samelson_order(m, n, mode).order()));
        } else if (c == "modulus") {
          row.push_back(str(orders::gauge_modulus(m, n)));
        } else if (c == "classes") {
          row.push_back(std::to_string(orders::count_invariant_classes(m, n)));
        } else {
          row.emplace_back(orders::parity_branch(m, n));
        }
      }
      table.rows.push_back(std::move(row));
    }
  }
  if (table.rows.empty()) {
    throw DomainError("table ranges contain no cell with 1 <= m < n");
  }

  CommandResult out;
  out.command = "table";
  out.mode = mode;
  out.params = {{"m", std::to_string(m_range.lo) + ".." + std::to_string(m_range.hi)},
                {"n", std::to_string(n_range.lo) + ".." + std::to_string(n_range.hi)}};
  out.result = std::move(table);
  return out;
}

CommandResult cmd_verify(int max_n) {
  CommandResult out;
  out.command = "verify";
  out.mode = ChMode::ClosedForm;
  out.params = {{"max_n", std::to_string(max_n)}};
  auto report = verify::discrepancy_report(max_n);
  out.result = report.theorem_checks_pass();
  for (auto kind : {verify::CheckClass::SamelsonOrder, verify::CheckClass::Q2Order,
                    verify::CheckClass::ChCoefficient, verify::CheckClass::GaugeCoker,
                    verify::CheckClass::BetaGenerator}) {
    const auto s = report.summary(kind);
    out.details.emplace_back(std::string(verify::tag(kind)),
                             std::to_string(s.passed) + "/" + std::to_string(s.total));
  }
  if (!report.discrepancies.empty()) {
    out.warnings.push_back(std::to_string(report.discrepancies.size()) +
                           " published intermediate values differ from recomputation");
  }
  out.checks = std::move(report);
  return out;
}

int exit_code(const CommandResult& result) {
  if (result.command == "verify") {
    const bool* ok = std::get_if<bool>(&result.result);
    return ok != nullptr && *ok ? 0 : 1;
  }
  return 0;
}

}  // namespace spgauge::cli
