#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leakgauge/csv.hpp"

namespace leakgauge {

// Ordered sequence of comparable numeric symbols. Iteration order equals
// ingestion order and is significant: every downstream metric assumes the
// original and randomized series are index-aligned. Categorical data is
// encoded to ranks before it gets here (see table.hpp).
class SymbolicSeries {
public:
  explicit SymbolicSeries(std::vector<double> values)
      : values_(std::move(values)) {
    if (values_.empty()) {
      throw std::invalid_argument("SymbolicSeries: series must be nonempty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i])) {
        throw std::invalid_argument(
            "SymbolicSeries: non-finite value at index " + std::to_string(i));
      }
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const SymbolicSeries&, const SymbolicSeries&) = default;

private:
  std::vector<double> values_;
};

// One-column CSV with header "value"; full-precision round-trip rendering.
inline void write_series_csv(const SymbolicSeries& series, std::ostream& out) {
  out << "value\n";
  for (double v : series) out << format_double(v) << '\n';
}

}  // namespace leakgauge
