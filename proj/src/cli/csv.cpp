#include "degpow/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "degpow/core/numeric.hpp"

namespace degpow::cli {

std::string format_real(double value) {
  if (value == 0.0) return "0"; // also folds -0
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                           NumericPolicy::print_digits);
  return std::string(buf, res.ptr);
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << quote(fields[i]);
  }
  out << '\n';
}

} // namespace

void emit_csv(std::ostream& out, const CsvSchema& schema, const std::vector<CsvRow>& rows) {
  for (const auto& row : rows)
    if (row.size() != schema.columns.size())
      throw std::invalid_argument("csv row arity " + std::to_string(row.size()) +
                                  " does not match schema arity " +
                                  std::to_string(schema.columns.size()));
  emit_line(out, schema.columns);
  for (const auto& row : rows) emit_line(out, row);
}

} // namespace degpow::cli
