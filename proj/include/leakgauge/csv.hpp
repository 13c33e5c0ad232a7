#pragma once

// Minimal CSV support: comma separator, optional double-quote quoting with
// "" escapes, mandatory header row, UTF-8 passed through verbatim.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leakgauge/error.hpp"

namespace leakgauge {

struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

// Strict full-match parse; rejects NaN/inf and surrounding whitespace.
inline std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

namespace detail {

// Splits the entire stream into records, honoring quoted fields (which may
// contain commas, quotes, and newlines).
inline std::vector<std::vector<std::string>> parse_csv_records(
    std::istream& in, const std::string& source) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);  // UTF-8 BOM

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw DataError(source + ":" + std::to_string(line) +
                          ": quote inside unquoted field");
        }
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;  // a separator implies a following field
        break;
      case '\r':
        break;  // CRLF tolerated
      case '\n':
        if (field_started || !field.empty() || !fields.empty()) end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        break;
    }
  }
  if (quoted) {
    throw DataError(source + ": unterminated quoted field");
  }
  if (field_started || !field.empty() || !fields.empty()) end_record();
  return records;
}

}  // namespace detail

inline CsvData read_csv(std::istream& in, const std::string& source = "<stream>") {
  auto records = detail::parse_csv_records(in, source);
  if (records.empty()) {
    throw DataError(source + ": empty file (missing header row)");
  }
  CsvData data;
  data.header = std::move(records.front());
  const std::size_t width = data.header.size();
  data.rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw DataError(source + ": row " + std::to_string(r) + " has " +
                      std::to_string(records[r].size()) + " fields, expected " +
                      std::to_string(width));
    }
    data.rows.push_back(std::move(records[r]));
  }
  return data;
}

inline CsvData read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open file: " + path.string());
  }
  return read_csv(in, path.string());
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << csv_escape(fields[i]);
  }
  out.put('\n');
}

}  // namespace leakgauge
