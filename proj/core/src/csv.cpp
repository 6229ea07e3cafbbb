#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ipaac/errors.hpp"
#include "ipaac/study.hpp"

namespace ipaac {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

void write_csv(std::ostream& out, const StudyTable& table) {
  out << kCsvHeader << '\n';
  for (const StudyRow& r : table.rows) {
    out << format_number(r.h) << ',' << format_number(r.delta) << ',' << format_number(r.m) << ','
        << format_number(r.error) << ',';
    if (r.order) out << format_number(*r.order);
    out << '\n';
  }
}

namespace {

double parse_field(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("CSV line " + std::to_string(line) + ": cannot parse number '" + s + "'");
  }
}

}  // namespace

StudyTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ConfigError("CSV must start with header '" + std::string(kCsvHeader) + "'");
  StudyTable table;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 5) throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
    StudyRow row;
    row.h = parse_field(fields[0], lineno);
    row.delta = parse_field(fields[1], lineno);
    row.m = parse_field(fields[2], lineno);
    row.error = parse_field(fields[3], lineno);
    if (!fields[4].empty()) row.order = parse_field(fields[4], lineno);
    table.rows.push_back(row);
  }
  return table;
}

void write_plot_data(std::ostream& out, const StudyTable& table) {
  out << "# " << (table.swept == SweptParameter::H ? "h" : "delta") << " error_inf\n";
  for (const StudyRow& r : table.rows) out << format_number(table.parameter(r)) << ' ' << format_number(r.error) << '\n';
}

}  // namespace ipaac
