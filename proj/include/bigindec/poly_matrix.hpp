#pragma once

#include <vector>

#include "bigindec/ring.hpp"

namespace bigindec {

/// Matrix of polynomials describing a graded map between free modules:
/// columns are images of source basis vectors. Entry (i, j) is homogeneous of
/// degree col_degrees[j] - row_degrees[i] (or zero).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::vector<std::int32_t> row_degrees, std::vector<std::int32_t> col_degrees);

  static PolyMatrix from_columns(const std::vector<ModVec>& columns, std::vector<std::int32_t> row_degrees,
                                 std::vector<std::int32_t> col_degrees);
  static PolyMatrix identity(const std::vector<std::int32_t>& degrees);

  std::size_t rows() const noexcept { return row_degrees_.size(); }
  std::size_t cols() const noexcept { return col_degrees_.size(); }
  const std::vector<std::int32_t>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<std::int32_t>& col_degrees() const noexcept { return col_degrees_; }

  const Polynomial& at(std::size_t i, std::size_t j) const noexcept { return entries_[j * rows() + i]; }
  Polynomial& at(std::size_t i, std::size_t j) noexcept { return entries_[j * rows() + i]; }

  ModVec column(std::size_t j) const;
  std::vector<ModVec> columns() const;
  bool is_zero() const noexcept;
  /// Validates homogeneity of every entry; returns false on the first violation.
  bool is_homogeneous() const noexcept;

  PolyMatrix select_columns(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  /// Shifts all row and column degrees by d (a twist of both free modules).
  PolyMatrix shifted(std::int32_t d) const;

  bool operator==(const PolyMatrix& o) const = default;

 private:
  std::vector<std::int32_t> row_degrees_;
  std::vector<std::int32_t> col_degrees_;
  std::vector<Polynomial> entries_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const GradedRing& ring);
PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b, const GradedRing& ring);
PolyMatrix scale(const PolyMatrix& a, Coeff c, const GradedRing& ring);
PolyMatrix reduce_entries(const PolyMatrix& a, const GradedRing& ring);
/// [a | b]; requires equal row degrees.
PolyMatrix concat_columns(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diagonal(const std::vector<PolyMatrix>& blocks);
/// Transpose as a map of dual free modules: row degrees become -col degrees.
PolyMatrix transpose(const PolyMatrix& a);
/// Applies a to a column vector.
ModVec apply(const PolyMatrix& a, const ModVec& v, const GradedRing& ring);

}  // namespace bigindec
