#include <algorithm>
#include <sstream>
#include <string>

#include "spgauge/cli/commands.hpp"
#include "spgauge/errors.hpp"

namespace spgauge::cli {

using nlohmann::ordered_json;

namespace {

ordered_json to_object(const KeyValues& kv) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : kv) {
    obj[key] = value;
  }
  return obj;
}

KeyValues from_object(const ordered_json& obj) {
  KeyValues kv;
  for (const auto& [key, value] : obj.items()) {
    kv.emplace_back(key, value.get<std::string>());
  }
  return kv;
}

ordered_json report_to_json(const verify::VerifyReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"class", std::string(verify::tag(c.kind))},
                      {"name", c.name},
                      {"m", std::to_string(c.m)},
                      {"n", std::to_string(c.n)},
                      {"params", c.params},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"mode", std::string(chern::to_string(c.mode))},
                      {"pass", c.pass}});
  }
  ordered_json discrepancies = ordered_json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back({{"location", d.location},
                             {"paper_value", d.paper_value},
                             {"recomputed_value", d.recomputed_value}});
  }
  return {{"checks", checks}, {"discrepancies", discrepancies}};
}

verify::CheckClass class_from_tag(const std::string& tag) {
  for (auto kind : {verify::CheckClass::SamelsonOrder, verify::CheckClass::Q2Order,
                    verify::CheckClass::ChCoefficient, verify::CheckClass::GaugeCoker,
                    verify::CheckClass::BetaGenerator}) {
    if (verify::tag(kind) == tag) {
      return kind;
    }
  }
  throw DomainError("unknown check class '" + tag + "'");
}

verify::VerifyReport report_from_json(const ordered_json& doc) {
  verify::VerifyReport report;
  for (const auto& c : doc.at("checks")) {
    report.checks.push_back({class_from_tag(c.at("class").get<std::string>()),
                             c.at("name").get<std::string>(),
                             std::stoi(c.at("m").get<std::string>()),
                             std::stoi(c.at("n").get<std::string>()),
                             c.at("params").get<std::string>(),
                             c.at("expected").get<std::string>(),
                             c.at("actual").get<std::string>(),
                             chern::parse_mode(c.at("mode").get<std::string>()),
                             c.at("pass").get<bool>()});
  }
  for (const auto& d : doc.at("discrepancies")) {
    report.discrepancies.push_back({d.at("location").get<std::string>(),
                                    d.at("paper_value").get<std::string>(),
                                    d.at("recomputed_value").get<std::string>()});
  }
  return report;
}

std::string result_text(const ResultValue& value) {
  if (const auto* i = std::get_if<BigInt>(&value)) {
    return arith::to_string(*i);
  }
  if (const auto* b = std::get_if<bool>(&value)) {
    return *b ? "true" : "false";
  }
  return "table";
}

std::string detail(const CommandResult& r, const std::string& key) {
  for (const auto& [k, v] : r.details) {
    if (k == key) {
      return v;
    }
  }
  return {};
}

void write_aligned(std::ostream& os, const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    width[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) {
        line += "  ";
      }
      line += cells[c];
      if (c + 1 < cells.size()) {
        line.append(width[c] - cells[c].size(), ' ');
      }
    }
    os << line << '\n';
  };
  emit(table.columns);
  for (const auto& row : table.rows) {
    emit(row);
  }
}

void write_tsv(std::ostream& os, const Table& table) {
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c > 0 ? "\t" : "") << cells[c];
    }
    os << '\n';
  };
  emit(table.columns);
  for (const auto& row : table.rows) {
    emit(row);
  }
}

// Non-table results become a single TSV row: params, mode, result, details.
Table as_single_row(const CommandResult& r) {
  Table t;
  std::vector<std::string> row;
  t.columns.emplace_back("command");
  row.push_back(r.command);
  for (const auto& [k, v] : r.params) {
    t.columns.push_back(k);
    row.push_back(v);
  }
  t.columns.emplace_back("mode");
  row.emplace_back(chern::to_string(r.mode));
  t.columns.emplace_back("result");
  row.push_back(result_text(r.result));
  for (const auto& [k, v] : r.details) {
    t.columns.push_back(k);
    row.push_back(v);
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table checks_table(const verify::VerifyReport& report) {
  Table t;
  t.columns = {"class", "name", "m", "n", "params", "expected", "actual", "mode", "pass"};
  for (const auto& c : report.checks) {
    t.rows.push_back({std::string(verify::tag(c.kind)), c.name, std::to_string(c.m),
                      std::to_string(c.n), c.params, c.expected, c.actual,
                      std::string(chern::to_string(c.mode)), c.pass ? "true" : "false"});
  }
  return t;
}

void write_text(std::ostream& os, const CommandResult& r) {
  const std::string& cmd = r.command;
  if (cmd.rfind("order ", 0) == 0) {
    os << result_text(r.result) << " (closed form " << detail(r, "closed_form") << ", "
       << (detail(r, "agree") == "true" ? "agree" : "DISAGREE") << ")\n";
  } else if (cmd == "gauge compare") {
    const std::string a = detail(r, "invariant_k");
    const std::string b = detail(r, "invariant_kprime");
    os << result_text(r.result) << " (inv " << a << (a == b ? " = " : " ≠ ") << "inv " << b
       << ", D=" << detail(r, "modulus") << ")\n";
  } else if (cmd == "gauge invariant") {
    os << result_text(r.result) << " (D=" << detail(r, "modulus") << ")\n";
  } else if (cmd == "gauge classes") {
    os << result_text(r.result) << '\n';
    const std::string divisors = detail(r, "divisors");
    if (!divisors.empty()) {
      os << "divisors: " << divisors << '\n';
    }
  } else if (cmd == "table") {
    write_aligned(os, std::get<Table>(r.result));
  } else if (cmd == "verify" && r.checks) {
    const auto& report = *r.checks;
    auto line = [&](verify::CheckClass kind) {
      const auto s = report.summary(kind);
      return "(" + std::string(verify::tag(kind)) + ") " + std::to_string(s.passed) + "/" +
             std::to_string(s.total);
    };
    os << line(verify::CheckClass::SamelsonOrder) << " pass, " << line(verify::CheckClass::Q2Order)
       << " pass\n";
    os << "notes: " << line(verify::CheckClass::ChCoefficient) << " agree, "
       << line(verify::CheckClass::GaugeCoker) << " agree, "
       << line(verify::CheckClass::BetaGenerator) << " agree\n";
    if (!report.discrepancies.empty()) {
      os << "discrepancies:\n";
      for (const auto& d : report.discrepancies) {
        os << "  " << d.location << ": published " << d.paper_value << ", recomputed "
           << d.recomputed_value << '\n';
      }
    }
    os << "result: " << (report.theorem_checks_pass() ? "pass" : "FAIL") << '\n';
  } else {
    os << result_text(r.result) << '\n';
  }
  for (const auto& w : r.warnings) {
    os << "warning: " << w << '\n';
  }
}

}  // namespace

ordered_json to_json(const CommandResult& r) {
  ordered_json doc;
  doc["command"] = r.command;
  doc["params"] = to_object(r.params);
  doc["mode"] = std::string(chern::to_string(r.mode));
  if (const auto* i = std::get_if<BigInt>(&r.result)) {
    doc["result"] = arith::to_string(*i);
  } else if (const auto* b = std::get_if<bool>(&r.result)) {
    doc["result"] = *b;
  } else {
    const auto& table = std::get<Table>(r.result);
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        obj[table.columns[c]] = row[c];
      }
      rows.push_back(std::move(obj));
    }
    doc["result"] = std::move(rows);
  }
  doc["warnings"] = r.warnings;
  if (!r.details.empty()) {
    doc["details"] = to_object(r.details);
  }
  if (r.checks) {
    doc["checks"] = report_to_json(*r.checks);
  }
  return doc;
}

CommandResult from_json(const ordered_json& doc) {
  try {
    CommandResult r;
    r.command = doc.at("command").get<std::string>();
    r.params = from_object(doc.at("params"));
    r.mode = chern::parse_mode(doc.at("mode").get<std::string>());
    const auto& result = doc.at("result");
    if (result.is_boolean()) {
      r.result = result.get<bool>();
    } else if (result.is_string()) {
      r.result = arith::parse_bigint(result.get<std::string>());
    } else if (result.is_array()) {
      Table table;
      for (const auto& row : result) {
        if (table.columns.empty()) {
          for (const auto& [key, value] : row.items()) {
            table.columns.push_back(key);
          }
        }
        std::vector<std::string> cells;
        for (const auto& column : table.columns) {
          cells.push_back(row.at(column).get<std::string>());
        }
        table.rows.push_back(std::move(cells));
      }
      r.result = std::move(table);
    } else {
      throw DomainError("unsupported result type");
    }
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    if (doc.contains("details")) {
      r.details = from_object(doc.at("details"));
    }
    if (doc.contains("checks")) {
      r.checks = report_from_json(doc.at("checks"));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed command result: ") + e.what());
  }
}

std::string render(const CommandResult& r, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Text:
      write_text(os, r);
      break;
    case OutputFormat::Json:
      os << to_json(r).dump(2) << '\n';
      break;
    case OutputFormat::Tsv:
      if (r.checks) {
        write_tsv(os, checks_table(*r.checks));
      } else if (const auto* table = std::get_if<Table>(&r.result)) {
        write_tsv(os, *table);
      } else {
        write_tsv(os, as_single_row(r));
      }
      break;
  }
  return os.str();
}

}  // namespace spgauge::cli
