#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leakgauge/csv.hpp"
#include "leakgauge/error.hpp"
#include "leakgauge/series.hpp"

namespace leakgauge {

enum class ColumnKind { numeric, ordinal, categorical };

inline std::string_view to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::numeric: return "numeric";
    case ColumnKind::ordinal: return "ordinal";
    case ColumnKind::categorical: return "categorical";
  }
  return "?";
}

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::categorical;
  std::vector<std::string> cells;
};

// Rectangular named columns sharing one row count.
class Table {
public:
  explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) {
      throw DataError("table has no columns");
    }
    std::set<std::string> names;
    for (const Column& col : columns_) {
      if (col.cells.size() != columns_.front().cells.size()) {
        throw DataError("column '" + col.name + "' has " +
                        std::to_string(col.cells.size()) + " rows, expected " +
                        std::to_string(columns_.front().cells.size()));
      }
      if (!names.insert(col.name).second) {
        throw DataError("duplicate column name '" + col.name + "'");
      }
    }
  }

  std::size_t row_count() const noexcept { return columns_.front().cells.size(); }
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  const Column& column(std::size_t i) const { return columns_.at(i); }

  const Column* find(std::string_view name) const noexcept {
    for (const Column& col : columns_) {
      if (col.name == name) return &col;
    }
    return nullptr;
  }

private:
  std::vector<Column> columns_;
};

using ColumnKindOverrides = std::map<std::string, ColumnKind, std::less<>>;

// Builds a Table from parsed CSV records: kinds are inferred (numeric when
// every cell parses as a finite number, categorical otherwise) and may be
// overridden per column. Empty cells are rejected; there is no imputation.
inline Table table_from_csv(const CsvData& data, const std::string& source,
                            const ColumnKindOverrides& overrides = {}) {
  if (data.rows.empty()) {
    throw DataError(source + ": empty data (header only)");
  }
  std::vector<Column> columns;
  columns.reserve(data.header.size());
  for (std::size_t c = 0; c < data.header.size(); ++c) {
    Column col;
    col.name = data.header[c];
    if (col.name.empty()) {
      throw DataError(source + ": column " + std::to_string(c + 1) +
                      " has an empty header name");
    }
    col.cells.reserve(data.rows.size());
    bool all_numeric = true;
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
      const std::string& cell = data.rows[r][c];
      if (cell.empty()) {
        throw DataError(source + ": missing value at row " +
                        std::to_string(r + 1) + ", column '" + col.name + "'");
      }
      if (all_numeric && !parse_double(cell)) all_numeric = false;
      col.cells.push_back(cell);
    }
    col.kind = all_numeric ? ColumnKind::numeric : ColumnKind::categorical;
    if (auto it = overrides.find(col.name); it != overrides.end()) {
      if (it->second == ColumnKind::numeric && !all_numeric) {
        throw DataError(source + ": column '" + col.name +
                        "' declared numeric but contains non-numeric cells");
      }
      col.kind = it->second;
    }
    columns.push_back(std::move(col));
  }
  for (const auto& [name, kind] : overrides) {
    (void)kind;
    bool known = false;
    for (const Column& col : columns) known |= col.name == name;
    if (!known) {
      throw DataError(source + ": schema override names unknown column '" +
                      name + "'");
    }
  }
  return Table(std::move(columns));
}

inline Table load_csv(const std::filesystem::path& path,
                      const ColumnKindOverrides& overrides = {}) {
  return table_from_csv(read_csv_file(path), path.string(), overrides);
}

// Encodes a column as a comparable series. Numeric cells pass through;
// categorical and ordinal cells map to the rank of the token in the
// lexicographically sorted distinct-token set, so token a < token b implies
// rank(a) < rank(b). Row order is preserved.
inline SymbolicSeries encode_ordinal(const Column& column) {
  if (column.cells.empty()) {
    throw DataError("column '" + column.name + "' is empty");
  }
  std::vector<double> values;
  values.reserve(column.cells.size());
  if (column.kind == ColumnKind::numeric) {
    for (std::size_t r = 0; r < column.cells.size(); ++r) {
      auto parsed = parse_double(column.cells[r]);
      if (!parsed) {
        throw DataError("column '" + column.name +
                        "': non-comparable mixed content at row " +
                        std::to_string(r + 1) + " ('" + column.cells[r] + "')");
      }
      values.push_back(*parsed);
    }
  } else {
    std::set<std::string> distinct(column.cells.begin(), column.cells.end());
    std::map<std::string_view, double> rank;
    double next = 0.0;
    for (const std::string& token : distinct) rank[token] = next++;
    for (const std::string& cell : column.cells) values.push_back(rank[cell]);
  }
  return SymbolicSeries(std::move(values));
}

// Re-serializes a table; numeric cells are re-rendered at full precision so
// a load/write/load round trip preserves their values bit-exact.
inline void write_csv(const Table& table, std::ostream& out) {
  std::vector<std::string> fields;
  for (const Column& col : table.columns()) fields.push_back(col.name);
  write_csv_row(out, fields);
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    fields.clear();
    for (const Column& col : table.columns()) {
      if (col.kind == ColumnKind::numeric) {
        fields.push_back(format_double(*parse_double(col.cells[r])));
      } else {
        fields.push_back(col.cells[r]);
      }
    }
    write_csv_row(out, fields);
  }
}

}  // namespace leakgauge
