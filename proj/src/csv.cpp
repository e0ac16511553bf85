#include "linkscope/csv.hpp"

#include <istream>

#include "linkscope/error.hpp"

namespace linkscope {

std::optional<std::vector<std::string>> CsvReader::next() {
  std::string line;
  if (!std::getline(*in_, line)) {
    if (in_->bad()) throw IngestError("I/O failure while reading CSV stream");
    return std::nullopt;
  }
  ++line_;
  record_line_ = line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (!quoted) break;
      // Quoted field continues across a line break.
      cur.push_back('\n');
      if (!std::getline(*in_, line)) {
        throw IngestError("unterminated quoted CSV field at line " +
                          std::to_string(record_line_));
      }
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      i = 0;
      continue;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        cur.push_back(c);
        ++i;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      ++i;
    } else {
      cur.push_back(c);
      ++i;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace linkscope
