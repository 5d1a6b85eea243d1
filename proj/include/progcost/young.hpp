// Young-diagram combinatorics for SU(d) irreps.
#pragma once

#include "progcost/common.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace progcost {

/// A partition with an explicit row budget d. Rows are stored longest first
/// and padded with trailing zeros to length d.
class YoungDiagram {
 public:
  using Row = std::int64_t;

  YoungDiagram() = default;
  /// Pads `rows` with zeros up to `d`; throws PreconditionError if the rows
  /// are increasing, negative, or longer than d.
  YoungDiagram(std::vector<Row> rows, int d);
  YoungDiagram(std::initializer_list<Row> rows);

  int d() const { return static_cast<int>(rows_.size()); }
  Row boxes() const;
  Row operator[](int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<Row>& rows() const { return rows_; }

  /// True when every row is strictly longer than the next one.
  bool strictly_decreasing() const;

  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<Row> rows_;
};

std::ostream& operator<<(std::ostream& os, const YoungDiagram& diagram);

/// All partitions of m into at most d parts, lexicographically decreasing.
std::vector<YoungDiagram> enumerate_diagrams(int m, int d);

/// Dimension of the SU(d) irrep labelled by the diagram (Weyl product formula).
BigInt irrep_dimension(const YoungDiagram& diagram);

/// Sum of |rows_i - rows'_i|. Throws PreconditionError on mismatched d.
YoungDiagram::Row young_distance(const YoungDiagram& a, const YoungDiagram& b);

/// Sum of squared irrep dimensions over all m-box diagrams with at most d rows.
BigInt sum_squared_dimensions(int m, int d);

/// Polynomial lower bound (m/(d^2-1))^(d^2-1) on sum_squared_dimensions.
double dm_lower_bound(int m, int d);

}  // namespace progcost
