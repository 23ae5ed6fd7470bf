#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degpow::cli {

/// Locale-independent shortest rendering with 12 significant digits.
std::string format_real(double value);

struct CsvSchema {
  std::vector<std::string> columns;
};

using CsvRow = std::vector<std::string>;

/// Header then rows, comma separated, LF terminated. Fields containing
/// commas, quotes or newlines are quoted with doubled inner quotes.
void emit_csv(std::ostream& out, const CsvSchema& schema, const std::vector<CsvRow>& rows);

} // namespace degpow::cli
