#include <algorithm>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "spgauge/cli/commands.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::cli {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 1;

struct Options {
  std::string kind;
  std::string m;
  std::string n;
  std::string k;
  std::string k_prime;
  std::string mode = "closed";
  std::string format = "text";
  std::string columns;
  int max_n = 0;
};

int to_int(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw DomainError(std::string("missing required option ") + flag);
  }
  const Range r = parse_range(text);
  if (r.lo != r.hi) {
    throw DomainError(std::string(flag) + " expects a single integer, got '" + text + "'");
  }
  return r.lo;
}

std::optional<BigInt> to_bigint(const std::string& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  return arith::parse_bigint(text);
}

std::vector<std::string> split_columns(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--mode", opt.mode, "closed|convolution|paper")
      ->check(CLI::IsMember({"closed", "convolution", "paper"}));
  cmd->add_option("--format", opt.format, "text|json|tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orders of Samelson products and Sp(n)-gauge group invariants over S^4m", "spgauge"};
  app.require_subcommand(1);
  Options opt;

  auto* order = app.add_subcommand("order", "order of a mapping group or Samelson product");
  order->add_option("kind", opt.kind, "samelson|mapping-group|q2-group")
      ->required()
      ->check(CLI::IsMember({"samelson", "mapping-group", "q2-group"}));
  order->add_option("--m", opt.m, "sphere index m");
  order->add_option("--n", opt.n, "rank n of Sp(n)");
  add_common(order, opt);

  auto* gauge = app.add_subcommand("gauge", "homotopy-type invariants of gauge groups");
  gauge->add_option("sub", opt.kind, "invariant|compare|classes|modulus")
      ->required()
      ->check(CLI::IsMember({"invariant", "compare", "classes", "modulus"}));
  gauge->add_option("--m", opt.m, "sphere index m");
  gauge->add_option("--n", opt.n, "rank n of Sp(n)");
  gauge->add_option("--k", opt.k, "bundle class k");
  gauge->add_option("--kprime", opt.k_prime, "second bundle class k'");
  add_common(gauge, opt);

  auto* table = app.add_subcommand("table", "one row per (m, n) cell");
  table->add_option("--m", opt.m, "m or m range A..B")->required();
  table->add_option("--n", opt.n, "n or n range A..B")->required();
  table->add_option("--columns", opt.columns, "comma list of samelson,modulus,classes,branch");
  add_common(table, opt);

  auto* verify = app.add_subcommand("verify", "recompute every published order up to max-n");
  verify->add_option("--max-n", opt.max_n, "largest n in the sweep")->required();
  add_common(verify, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "spgauge: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const ChMode mode = chern::parse_mode(opt.mode);
    const OutputFormat format = parse_format(opt.format);
    CommandResult result;
    if (order->parsed()) {
      std::optional<int> m;
      if (!opt.m.empty()) {
        m = to_int(opt.m, "--m");
      }
      result = cmd_order(opt.kind, m, to_int(opt.n, "--n"), mode);
    } else if (gauge->parsed()) {
      result = cmd_gauge(opt.kind, to_int(opt.m, "--m"), to_int(opt.n, "--n"), to_bigint(opt.k),
                         to_bigint(opt.k_prime), mode);
    } else if (table->parsed()) {
      result = cmd_table(parse_range(opt.m), parse_range(opt.n), split_columns(opt.columns), mode);
    } else {
      result = cmd_verify(opt.max_n);
    }
    out << render(result, format);
    return exit_code(result);
  } catch (const DomainError& e) {
    err << "spgauge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "spgauge: internal consistency failure: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace spgauge::cli
