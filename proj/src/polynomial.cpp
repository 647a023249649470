#include "bigindec/polynomial.hpp"

#include <algorithm>

namespace bigindec {

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mon.degree != terms_.front().mon.degree) return false;
  return true;
}

Coeff Polynomial::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return compare_monomials(a.mon, b.mon) > 0;
  });
  std::vector<PolyTerm> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return Polynomial(std::move(out));
}

namespace {

template <typename Term, typename Cmp>
std::vector<Term> merge_sub(const std::vector<Term>& a, const std::vector<Term>& b_scaled, Cmp cmp,
                            const PrimeField& f) {
  std::vector<Term> out;
  out.reserve(a.size() + b_scaled.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b_scaled.size()) {
    int c = cmp(a[i], b_scaled[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b_scaled[j++]);
    } else {
      Coeff s = f.add(a[i].coeff, b_scaled[j].coeff);
      if (s != 0) {
        out.push_back(a[i]);
        out.back().coeff = s;
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b_scaled.size(); ++j) out.push_back(b_scaled[j]);
  return out;
}

int cmp_poly(const PolyTerm& a, const PolyTerm& b) { return compare_monomials(a.mon, b.mon); }

}  // namespace

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  return Polynomial(merge_sub(a.terms(), b.terms(), cmp_poly, f));
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  return add(a, scale(b, f.neg(1), f), f);
}

Polynomial scale(const Polynomial& a, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  std::vector<PolyTerm> t = a.terms();
  for (auto& x : t) x.coeff = f.mul(x.coeff, c);
  return Polynomial(std::move(t));
}

Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  std::vector<PolyTerm> t = a.terms();
  for (auto& x : t) {
    x.mon = x.mon * m;
    x.coeff = f.mul(x.coeff, c);
  }
  return Polynomial(std::move(t));
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyTerm> all;
  all.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) all.push_back({x.mon * y.mon, f.mul(x.coeff, y.coeff)});
  return Polynomial::from_terms(std::move(all), f);
}

ModVec embed(const Polynomial& p, std::uint32_t comp, std::int32_t shift) {
  std::vector<VecTerm> t;
  t.reserve(p.size());
  for (const auto& x : p.terms()) t.push_back({x.mon, comp, x.mon.degree + shift, x.coeff});
  return ModVec(std::move(t));
}

ModVec vec_from_terms(std::vector<VecTerm> terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(),
            [](const VecTerm& a, const VecTerm& b) { return compare_terms(a, b) > 0; });
  std::vector<VecTerm> out;
  for (const auto& t : terms) {
    if (!out.empty() && compare_terms(out.back(), t) == 0) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return ModVec(std::move(out));
}

ModVec add(const ModVec& a, const ModVec& b, const PrimeField& f) {
  return ModVec(merge_sub(a.terms(), b.terms(), compare_terms, f));
}

ModVec scale(const ModVec& a, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  std::vector<VecTerm> t = a.terms();
  for (auto& x : t) x.coeff = f.mul(x.coeff, c);
  return ModVec(std::move(t));
}

ModVec mul_term(const ModVec& a, const Monomial& m, Coeff c, const PrimeField& f) {
  if (c == 0) return {};
  std::vector<VecTerm> t = a.terms();
  for (auto& x : t) {
    x.mon = x.mon * m;
    x.tdeg += m.degree;
    x.coeff = f.mul(x.coeff, c);
  }
  return ModVec(std::move(t));
}

ModVec sub_mul(const ModVec& a, Coeff c, const Monomial& m, const ModVec& b, const PrimeField& f) {
  if (c == 0 || b.is_zero()) return a;
  Coeff nc = f.neg(c);
  std::vector<VecTerm> bs = b.terms();
  for (auto& x : bs) {
    x.mon = x.mon * m;
    x.tdeg += m.degree;
    x.coeff = f.mul(x.coeff, nc);
  }
  return ModVec(merge_sub(a.terms(), bs, compare_terms, f));
}

Polynomial component(const ModVec& v, std::uint32_t comp) {
  std::vector<PolyTerm> t;
  for (const auto& x : v.terms())
    if (x.comp == comp) t.push_back({x.mon, x.coeff});
  return Polynomial(std::move(t));  // order of monomials within one component is inherited
}

}  // namespace bigindec
