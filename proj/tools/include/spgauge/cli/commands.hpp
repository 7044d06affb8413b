#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spgauge/arith.hpp"
#include "spgauge/chern.hpp"
#include "spgauge/verify.hpp"

namespace spgauge::cli {

using arith::BigInt;
using chern::ChMode;

enum class OutputFormat { Text, Json, Tsv };

std::string_view to_string(OutputFormat format);
/// "text", "json" or "tsv"; throws DomainError otherwise.
OutputFormat parse_format(std::string_view name);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

using ResultValue = std::variant<BigInt, bool, Table>;
using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct CommandResult {
  std::string command;
  KeyValues params;
  ChMode mode = ChMode::ClosedForm;
  ResultValue result;
  std::vector<std::string> warnings;
  // Supporting values shown next to the result (closed form, modulus, ...).
  KeyValues details;
  std::optional<verify::VerifyReport> checks;
};

/// Inclusive integer range parsed from "A" or "A..B".
struct Range {
  int lo;
  int hi;
};
Range parse_range(std::string_view text);

// Each command throws DomainError on invalid parameters.

/// kind: samelson | mapping-group | q2-group. q2-group ignores m.
CommandResult cmd_order(std::string_view kind, std::optional<int> m, int n, ChMode mode);

/// sub: invariant | compare | classes | modulus.
CommandResult cmd_gauge(std::string_view sub, int m, int n, const std::optional<BigInt>& k,
                        const std::optional<BigInt>& k_prime, ChMode mode);

/// One row per (m, n) with 1 <= m < n inside both ranges. `columns` picks
/// from samelson, modulus, classes, branch; empty means all four.
CommandResult cmd_table(Range m_range, Range n_range, const std::vector<std::string>& columns,
                        ChMode mode);

CommandResult cmd_verify(int max_n);

/// 1 when a verification result is false, otherwise 0.
int exit_code(const CommandResult& result);

nlohmann::ordered_json to_json(const CommandResult& result);
/// Inverse of to_json. Throws DomainError on malformed documents.
CommandResult from_json(const nlohmann::ordered_json& doc);

/// Full rendering, ending with a newline.
std::string render(const CommandResult& result, OutputFormat format);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns 0 (success), 1 (verification failure) or 2 (usage).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spgauge::cli
