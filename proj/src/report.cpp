#include "monocst/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace monocst {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::Absolute:
      return "abs";
    case Metric::Relative:
      return "rel";
    case Metric::Order:
      return "order";
  }
  return "abs";
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out = "# ";
  out += kSchemaTag;
  out += '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              out += csv_field(v);
            } else if constexpr (std::is_same_v<T, double>) {
              out += format_double(v);
            } else {
              out += std::to_string(v);
            }
          },
          row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, const std::string& kind) {
  // Numbers go through the same %.17g text as CSV.
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["kind"] = kind;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[table.columns[i]] = v;
              } else {
                obj[table.columns[i]] = format_double(v);
              }
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

Table report_table(const std::vector<VerificationReport>& reports) {
  Table t;
  t.columns = {"suite", "check", "claimed", "computed",       "abs_err",    "rel_err",    "tol",
               "pass",  "seconds", "metric", "expect_mismatch", "claimed_im", "computed_im"};
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      t.rows.push_back({c.suite, c.id, c.claimed.real(), c.computed.real(), c.abs_err, c.rel_err, c.tol,
                        std::int64_t{c.pass ? 1 : 0}, c.seconds, std::string(metric_name(c.metric)),
                        std::int64_t{c.expect_mismatch ? 1 : 0}, c.claimed.imag(), c.computed.imag()});
    }
  }
  return t;
}

}  // namespace monocst
