#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bigindec/field.hpp"

namespace bigindec {

/// Dense row-major matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coeff& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Coeff> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Coeff> values);
  static DenseMatrix identity(std::size_t n);

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

enum class Kernel { Serial, Parallel };

/// Reduced row echelon form. `pivots[i]` is the pivot column of row i.
struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination. The serial routine is the reference; the OpenMP
/// routine performs the same row operations in the same order per row and is
/// bit-identical to it.
Echelon rref_serial(DenseMatrix m, const PrimeField& f);
Echelon rref_parallel(DenseMatrix m, const PrimeField& f);
Echelon rref(DenseMatrix m, const PrimeField& f, Kernel k = Kernel::Parallel);

std::size_t rank(const DenseMatrix& m, const PrimeField& f);

/// Basis of {x : m x = 0}, one vector per free column, in increasing order of
/// the free column.
std::vector<std::vector<Coeff>> kernel(const DenseMatrix& m, const PrimeField& f);

/// Some x with m x = b, or nullopt.
std::optional<std::vector<Coeff>> solve(const DenseMatrix& m, std::span<const Coeff> b,
                                        const PrimeField& f);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f);
std::vector<Coeff> apply(const DenseMatrix& a, std::span<const Coeff> x, const PrimeField& f);
DenseMatrix transpose(const DenseMatrix& a);

/// Incrementally maintained row-reduced basis of a subspace of F_p^n.
/// Supports membership tests, coordinates in the reduced basis, and
/// insertion with a report of whether the vector was new.
class SubspaceBasis {
 public:
  SubspaceBasis(std::size_t dim, const PrimeField& f) : dim_(dim), field_(f) {}

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Reduces v against the basis in place; returns true if v reduces to zero.
  bool reduce(std::vector<Coeff>& v) const;
  bool contains(std::vector<Coeff> v) const { return reduce(v); }
  /// Inserts v if independent; returns true if the span grew.
  bool insert(std::vector<Coeff> v);

  const std::vector<std::vector<Coeff>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t dim_;
  PrimeField field_;
  std::vector<std::vector<Coeff>> rows_;  // each row monic at its pivot, fully reduced
  std::vector<std::size_t> pivots_;
};

}  // namespace bigindec
