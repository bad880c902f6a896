#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ncopt {

// Locale-independent scientific formatting with exactly 10 significant
// digits ("6.294817809e+00"); the regression surface for all CSV output.
// Non-finite values render as "inf", "-inf", "nan".
std::string format_sig10(double value);

std::string format_index(std::size_t value);

// Minimal CSV emitter: header once, then rows; LF line endings, no
// quoting (fields never contain commas).
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::span<const std::string> names);
  void row(std::span<const std::string> fields);

 private:
  void line(std::span<const std::string> fields);
  std::ostream& out_;
};

}  // namespace ncopt
