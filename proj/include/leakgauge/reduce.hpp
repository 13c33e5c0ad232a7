#pragma once

// Deterministic 1-D reduction. Multi-column tables are projected on the
// dominant eigenvector of their covariance matrix, found by power iteration;
// the sign convention (largest-magnitude loading positive) and the fixed
// start vector make the projection reproducible bit-for-bit, unlike
// stochastic embeddings. A passthrough mode accepts externally reduced data.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leakgauge/error.hpp"
#include "leakgauge/series.hpp"
#include "leakgauge/table.hpp"

namespace leakgauge {

struct PrincipalComponent {};
struct PassthroughColumn {
  std::string name;
};
using ReduceMethod = std::variant<PrincipalComponent, PassthroughColumn>;

inline constexpr double kPowerIterationTolerance = 1e-10;
inline constexpr int kPowerIterationMaxSteps = 10'000;

namespace detail {

inline std::vector<double> dominant_eigenvector(
    const std::vector<std::vector<double>>& cov) {
  const std::size_t d = cov.size();
  double trace = 0.0;
  for (std::size_t i = 0; i < d; ++i) trace += cov[i][i];
  if (trace <= 0.0) {
    throw DataError("zero-variance data: 1-D projection is undefined");
  }

  auto normalize = [](std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return false;
    for (double& x : v) x /= norm;
    return true;
  };
  auto multiply = [&](const std::vector<double>& v) {
    std::vector<double> out(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out[i] += cov[i][j] * v[j];
    }
    return out;
  };

  // Start from the all-ones direction; fall back to basis vectors when it
  // lies in the null space (e.g. perfectly anti-correlated columns).
  std::vector<std::vector<double>> starts;
  starts.emplace_back(d, 1.0 / std::sqrt(static_cast<double>(d)));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> e(d, 0.0);
    e[j] = 1.0;
    starts.push_back(std::move(e));
  }

  for (auto& v : starts) {
    auto image = multiply(v);
    if (!normalize(image)) continue;
    v = std::move(image);
    for (int step = 0; step < kPowerIterationMaxSteps; ++step) {
      auto next = multiply(v);
      if (!normalize(next)) break;
      double diff = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        diff += (next[i] - v[i]) * (next[i] - v[i]);
      }
      v = std::move(next);
      if (std::sqrt(diff) < kPowerIterationTolerance) break;
    }
    // Sign convention: largest-magnitude loading positive (first on ties).
    std::size_t lead = 0;
    for (std::size_t i = 1; i < d; ++i) {
      if (std::fabs(v[i]) > std::fabs(v[lead])) lead = i;
    }
    if (v[lead] < 0.0) {
      for (double& x : v) x = -x;
    }
    return v;
  }
  throw DataError("zero-variance data: 1-D projection is undefined");
}

}  // namespace detail

// Projects every row on the dominant covariance eigenvector of the encoded
// columns. Deterministic; requires at least two rows and nonzero variance.
inline SymbolicSeries reduce_principal_component(const Table& table) {
  const std::size_t m = table.row_count();
  const std::size_t d = table.column_count();
  if (m < 2) {
    throw DataError("1-D reduction requires at least 2 rows, got " +
                    std::to_string(m));
  }

  std::vector<std::vector<double>> cols;
  cols.reserve(d);
  for (const Column& col : table.columns()) {
    const SymbolicSeries encoded = encode_ordinal(col);
    cols.emplace_back(encoded.begin(), encoded.end());
  }
  std::vector<double> mean(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    for (double x : cols[j]) mean[j] += x;
    mean[j] /= static_cast<double>(m);
  }
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double sum = 0.0;
      for (std::size_t t = 0; t < m; ++t) {
        sum += (cols[a][t] - mean[a]) * (cols[b][t] - mean[b]);
      }
      cov[a][b] = cov[b][a] = sum / static_cast<double>(m - 1);
    }
  }

  const std::vector<double> axis = detail::dominant_eigenvector(cov);
  std::vector<double> projected(m, 0.0);
  for (std::size_t t = 0; t < m; ++t) {
    double dot = 0.0;
    for (std::size_t j = 0; j < d; ++j) dot += (cols[j][t] - mean[j]) * axis[j];
    projected[t] = dot;
  }
  return SymbolicSeries(std::move(projected));
}

inline SymbolicSeries reduce_to_1d(const Table& table,
                                   const ReduceMethod& method = PrincipalComponent{}) {
  if (table.row_count() < 2) {
    throw DataError("1-D reduction requires at least 2 rows, got " +
                    std::to_string(table.row_count()));
  }
  if (const auto* passthrough = std::get_if<PassthroughColumn>(&method)) {
    const Column* col = table.find(passthrough->name);
    if (!col) {
      throw DataError("no column named '" + passthrough->name + "'");
    }
    return encode_ordinal(*col);
  }
  return reduce_principal_component(table);
}

// Convenience used by the CLI and pipeline: a named column passes through,
// a single-column table encodes directly, anything wider is projected.
inline SymbolicSeries table_to_series(const Table& table,
                                      const std::optional<std::string>& column = {}) {
  if (column) {
    const Column* col = table.find(*column);
    if (!col) {
      throw DataError("no column named '" + *column + "'");
    }
    return encode_ordinal(*col);
  }
  if (table.column_count() == 1) {
    return encode_ordinal(table.column(0));
  }
  return reduce_principal_component(table);
}

}  // namespace leakgauge
