#include "bigindec/linalg.hpp"

#include <algorithm>

namespace bigindec {

void DenseMatrix::append_row(std::span<const Coeff> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  require(values.size() == cols_, ErrorKind::Internal, "append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// Finds the pivot for column c among rows [r, rows); swaps it into row r and
// normalizes it. Returns false if the column is zero below r.
bool prepare_pivot(DenseMatrix& m, std::size_t r, std::size_t c, const PrimeField& f) {
  std::size_t pr = r;
  while (pr < m.rows() && m(pr, c) == 0) ++pr;
  if (pr == m.rows()) return false;
  if (pr != r) {
    auto a = m.row(pr);
    auto b = m.row(r);
    std::swap_ranges(a.begin(), a.end(), b.begin());
  }
  Coeff inv = f.inv(m(r, c));
  for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
  return true;
}

inline void eliminate_row(DenseMatrix& m, std::size_t target, std::size_t r, std::size_t c,
                          const PrimeField& f) {
  Coeff factor = m(target, c);
  if (factor == 0) return;
  auto src = m.row(r);
  auto dst = m.row(target);
  for (std::size_t j = c; j < m.cols(); ++j)
    if (src[j] != 0) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
}

}  // namespace

Echelon rref_serial(DenseMatrix m, const PrimeField& f) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!prepare_pivot(m, r, c, f)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r) eliminate_row(m, i, r, c, f);
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

Echelon rref_parallel(DenseMatrix m, const PrimeField& f) {
  Echelon e;
  std::size_t r = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!prepare_pivot(m, r, c, f)) continue;
#pragma omp parallel for schedule(static) if (rows > 64)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c, f);
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

Echelon rref(DenseMatrix m, const PrimeField& f, Kernel k) {
  return k == Kernel::Serial ? rref_serial(std::move(m), f) : rref_parallel(std::move(m), f);
}

std::size_t rank(const DenseMatrix& m, const PrimeField& f) { return rref(m, f).rank(); }

std::vector<std::vector<Coeff>> kernel(const DenseMatrix& m, const PrimeField& f) {
  Echelon e = rref(m, f);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Coeff>> solve(const DenseMatrix& m, std::span<const Coeff> b,
                                        const PrimeField& f) {
  require(b.size() == m.rows(), ErrorKind::Internal, "solve: dimension mismatch");
  DenseMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug), f);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Coeff> x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f) {
  require(a.cols() == b.rows(), ErrorKind::Internal, "multiply: dimension mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Coeff x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

std::vector<Coeff> apply(const DenseMatrix& a, std::span<const Coeff> x, const PrimeField& f) {
  require(a.cols() == x.size(), ErrorKind::Internal, "apply: dimension mismatch");
  std::vector<Coeff> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Coeff acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) acc = f.add(acc, f.mul(a(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

bool SubspaceBasis::reduce(std::vector<Coeff>& v) const {
  require(v.size() == dim_, ErrorKind::Internal, "SubspaceBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Coeff factor = v[pivots_[i]];
    if (factor == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
  }
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

bool SubspaceBasis::insert(std::vector<Coeff> v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (v[p] == 0) ++p;
  Coeff inv = field_.inv(v[p]);
  for (auto& c : v) c = field_.mul(c, inv);
  // keep the basis fully reduced
  for (auto& row : rows_) {
    Coeff factor = row[p];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) row[j] = field_.sub(row[j], field_.mul(factor, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace bigindec
