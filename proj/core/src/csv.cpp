#include "ncopt/csv.hpp"

#include <charconv>
#include <cmath>

namespace ncopt {

std::string format_sig10(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[48];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::scientific, 9);
  return std::string(buffer, end);
}

std::string format_index(std::size_t value) {
  char buffer[24];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

void CsvWriter::header(std::span<const std::string> names) { line(names); }

void CsvWriter::row(std::span<const std::string> fields) { line(fields); }

void CsvWriter::line(std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << fields[i];
  }
  out_ << '\n';
}

}  // namespace ncopt
