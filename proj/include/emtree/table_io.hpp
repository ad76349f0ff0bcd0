#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace emtree {

/// Minimal RFC-style CSV: fields holding comma, quote, or newline are
/// quoted, embedded quotes doubled. csv_split inverts csv_join exactly.

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(fields[i]);
  }
  return out;
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      cur += c;
      ++i;
      continue;
    }
    if (c == '"' && cur.empty()) {
      quoted = true;
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
      ++i;
      continue;
    }
    cur += c;
    ++i;
  }
  if (quoted) throw std::runtime_error("csv_split: unterminated quote");
  out.push_back(cur);
  return out;
}

}  // namespace emtree
