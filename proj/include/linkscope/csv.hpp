#pragma once

// Minimal RFC-4180 CSV reading: quoted fields may contain commas, doubled
// quotes, and embedded line breaks.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linkscope {

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(&in) {}

  // Next record, or nullopt at end of stream. Throws IngestError on a quoted
  // field left open at EOF.
  std::optional<std::vector<std::string>> next();

  // 1-based line number where the last record started (for diagnostics).
  std::size_t record_line() const { return record_line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

}  // namespace linkscope
