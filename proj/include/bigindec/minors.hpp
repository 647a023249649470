#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigindec/poly_matrix.hpp"

namespace bigindec {

/// Minors of a polynomial matrix by Laplace expansion along the top row,
/// memoized on (row set, column set). Matrices up to 64 x 64.
class MinorEngine {
 public:
  using Index = std::vector<std::size_t>;

  MinorEngine(const PolyMatrix& a, const GradedRing& ring);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// Number of k x k minors (saturating).
  std::size_t count(std::size_t k) const noexcept;

  Polynomial minor(const Index& rows, const Index& cols);
  /// Visits all k-minors, rows outer, both in lexicographic order; stops when fn returns false.
  void for_each(std::size_t k, const std::function<bool(const Polynomial&)>& fn);
  /// n distinct (rows, cols) index pairs in a seeded pseudo-random order.
  std::vector<std::pair<Index, Index>> sample_order(std::size_t k, std::size_t n, std::uint32_t seed) const;

 private:
  Polynomial det(std::uint64_t rmask, std::uint64_t cmask);

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  const PolyMatrix& a_;
  const GradedRing& ring_;
  std::size_t rows_, cols_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Polynomial, KeyHash> memo_;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace bigindec
