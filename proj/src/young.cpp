#include "progcost/young.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace progcost {

double log2_big(const BigInt& value) {
  if (value <= 0) throw PreconditionError("log2_big: value must be positive");
  const auto msb = static_cast<long long>(boost::multiprecision::msb(value));
  if (msb < 62) return std::log2(value.convert_to<double>());
  const long long shift = msb - 60;
  const BigInt top = value >> static_cast<unsigned>(shift);
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

YoungDiagram::YoungDiagram(std::vector<Row> rows, int d) : rows_(std::move(rows)) {
  if (d < 1) throw PreconditionError("YoungDiagram: row budget d must be >= 1");
  if (rows_.size() > static_cast<std::size_t>(d))
    throw PreconditionError("YoungDiagram: more rows than the row budget d = " +
                            std::to_string(d));
  rows_.resize(static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw PreconditionError("YoungDiagram: negative row length");
    if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
      throw PreconditionError("YoungDiagram: rows must be non-increasing");
  }
}

YoungDiagram::YoungDiagram(std::initializer_list<Row> rows)
    : YoungDiagram(std::vector<Row>(rows), static_cast<int>(rows.size())) {}

YoungDiagram::Row YoungDiagram::boxes() const {
  return std::accumulate(rows_.begin(), rows_.end(), Row{0});
}

bool YoungDiagram::strictly_decreasing() const {
  for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
    if (rows_[i] <= rows_[i + 1]) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const YoungDiagram& diagram) {
  os << '(';
  for (int i = 0; i < diagram.d(); ++i) os << (i ? "," : "") << diagram[i];
  return os << ')';
}

std::vector<YoungDiagram> enumerate_diagrams(int m, int d) {
  if (m < 0 || d < 1) throw PreconditionError("enumerate_diagrams: need m >= 0, d >= 1");
  std::vector<YoungDiagram> out;
  std::vector<YoungDiagram::Row> rows(static_cast<std::size_t>(d), 0);
  // Fill row i with every admissible length, largest first.
  std::function<void(int, YoungDiagram::Row, YoungDiagram::Row)> fill =
      [&](int i, YoungDiagram::Row remaining, YoungDiagram::Row cap) {
        if (i == d - 1) {
          if (remaining > cap) return;
          rows[static_cast<std::size_t>(i)] = remaining;
          out.emplace_back(rows, d);
          return;
        }
        for (YoungDiagram::Row r = std::min(remaining, cap); r >= 0; --r) {
          // Remaining rows can hold at most r each.
          if (r * (d - 1 - i) < remaining - r) break;
          rows[static_cast<std::size_t>(i)] = r;
          fill(i + 1, remaining - r, r);
        }
      };
  fill(0, m, m);
  return out;
}

BigInt irrep_dimension(const YoungDiagram& diagram) {
  const int d = diagram.d();
  BigInt numerator = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) numerator *= diagram[i] - diagram[j] - i + j;
  BigInt denominator = 1;
  BigInt factorial = 1;
  for (int k = 1; k < d; ++k) {
    factorial *= k;
    denominator *= factorial;
  }
  if (numerator % denominator != 0)
    throw VerificationError("irrep_dimension: Weyl product is not integral");
  return numerator / denominator;
}

YoungDiagram::Row young_distance(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.d() != b.d())
    throw PreconditionError("young_distance: diagrams have different row budgets");
  YoungDiagram::Row total = 0;
  for (int i = 0; i < a.d(); ++i) total += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return total;
}

BigInt sum_squared_dimensions(int m, int d) {
  BigInt total = 0;
  for (const auto& diagram : enumerate_diagrams(m, d)) {
    const BigInt dim = irrep_dimension(diagram);
    total += dim * dim;
  }
  return total;
}

double dm_lower_bound(int m, int d) {
  if (m < 1 || d < 2) throw PreconditionError("dm_lower_bound: need m >= 1, d >= 2");
  const double nu = static_cast<double>(d) * d - 1.0;
  return std::pow(static_cast<double>(m) / nu, nu);
}

}  // namespace progcost
