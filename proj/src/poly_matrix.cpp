#include "bigindec/poly_matrix.hpp"

namespace bigindec {

PolyMatrix::PolyMatrix(std::vector<std::int32_t> row_degrees, std::vector<std::int32_t> col_degrees)
    : row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size()) {}

PolyMatrix PolyMatrix::from_columns(const std::vector<ModVec>& columns,
                                    std::vector<std::int32_t> row_degrees,
                                    std::vector<std::int32_t> col_degrees) {
  require(columns.size() == col_degrees.size(), ErrorKind::Internal, "from_columns: size mismatch");
  PolyMatrix m(std::move(row_degrees), std::move(col_degrees));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<std::vector<PolyTerm>> per_row(m.rows());
    for (const auto& t : columns[j].terms()) {
      require(t.comp < m.rows(), ErrorKind::Internal, "from_columns: component out of range");
      per_row[t.comp].push_back({t.mon, t.coeff});
    }
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = Polynomial(std::move(per_row[i]));
  }
  return m;
}

PolyMatrix PolyMatrix::identity(const std::vector<std::int32_t>& degrees) {
  PolyMatrix m(degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) m.at(i, i) = Polynomial::constant(1);
  return m;
}

ModVec PolyMatrix::column(std::size_t j) const {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& t : at(i, j).terms())
      terms.push_back({t.mon, static_cast<std::uint32_t>(i), t.mon.degree + row_degrees_[i], t.coeff});
  std::sort(terms.begin(), terms.end(),
            [](const VecTerm& a, const VecTerm& b) { return compare_terms(a, b) > 0; });
  return ModVec(std::move(terms));
}

std::vector<ModVec> PolyMatrix::columns() const {
  std::vector<ModVec> out;
  out.reserve(cols());
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

bool PolyMatrix::is_zero() const noexcept {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_homogeneous() const noexcept {
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows(); ++i) {
      const auto& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != col_degrees_[j] - row_degrees_[i]) return false;
    }
  return true;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  std::vector<std::int32_t> cd;
  for (auto j : idx) cd.push_back(col_degrees_[j]);
  PolyMatrix m(row_degrees_, cd);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows(); ++i) m.at(i, k) = at(i, idx[k]);
  return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<std::int32_t> rd;
  for (auto i : idx) rd.push_back(row_degrees_[i]);
  PolyMatrix m(rd, col_degrees_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t k = 0; k < idx.size(); ++k) m.at(k, j) = at(idx[k], j);
  return m;
}

PolyMatrix PolyMatrix::shifted(std::int32_t d) const {
  PolyMatrix m = *this;
  for (auto& x : m.row_degrees_) x += d;
  for (auto& x : m.col_degrees_) x += d;
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const GradedRing& ring) {
  require(a.cols() == b.rows(), ErrorKind::Internal, "matrix product: dimension mismatch");
  PolyMatrix c(a.row_degrees(), b.col_degrees());
  const auto& f = ring.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<PolyTerm> acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        for (const auto& s : x.terms())
          for (const auto& t : y.terms()) acc.push_back({s.mon * t.mon, f.mul(s.coeff, t.coeff)});
      }
      c.at(i, j) = ring.reduce(Polynomial::from_terms(std::move(acc), f));
    }
  return c;
}

PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b, const GradedRing& ring) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Internal, "matrix sum: shape mismatch");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return c;
}

PolyMatrix scale(const PolyMatrix& a, Coeff s, const GradedRing& ring) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.scale(a.at(i, j), s);
  return c;
}

PolyMatrix reduce_entries(const PolyMatrix& a, const GradedRing& ring) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.reduce(a.at(i, j));
  return c;
}

PolyMatrix concat_columns(const PolyMatrix& a, const PolyMatrix& b) {
  require(a.row_degrees() == b.row_degrees(), ErrorKind::Internal, "concat_columns: row degree mismatch");
  std::vector<std::int32_t> cd = a.col_degrees();
  cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  PolyMatrix c(a.row_degrees(), cd);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) c.at(i, a.cols() + j) = b.at(i, j);
  return c;
}

PolyMatrix block_diagonal(const std::vector<PolyMatrix>& blocks) {
  std::vector<std::int32_t> rd, cd;
  for (const auto& b : blocks) {
    rd.insert(rd.end(), b.row_degrees().begin(), b.row_degrees().end());
    cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  }
  PolyMatrix m(rd, cd);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

PolyMatrix transpose(const PolyMatrix& a) {
  std::vector<std::int32_t> rd, cd;
  for (auto d : a.col_degrees()) rd.push_back(-d);
  for (auto d : a.row_degrees()) cd.push_back(-d);
  PolyMatrix t(rd, cd);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

ModVec apply(const PolyMatrix& a, const ModVec& v, const GradedRing& ring) {
  const auto& f = ring.field();
  std::vector<VecTerm> acc;
  for (const auto& t : v.terms()) {
    require(t.comp < a.cols(), ErrorKind::Internal, "apply: component out of range");
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& s : a.at(i, t.comp).terms()) {
        Monomial m = s.mon * t.mon;
        acc.push_back({m, static_cast<std::uint32_t>(i), m.degree + a.row_degrees()[i], f.mul(s.coeff, t.coeff)});
      }
  }
  ModVec raw = vec_from_terms(std::move(acc), f);
  // reduce each component modulo the defining ideal
  if (ring.groebner_basis().empty()) return raw;
  std::vector<VecTerm> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial p = ring.reduce(component(raw, static_cast<std::uint32_t>(i)));
    for (const auto& t : p.terms())
      out.push_back({t.mon, static_cast<std::uint32_t>(i), t.mon.degree + a.row_degrees()[i], t.coeff});
  }
  return vec_from_terms(std::move(out), f);
}

}  // namespace bigindec
