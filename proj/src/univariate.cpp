#include "bigindec/univariate.hpp"

#include <algorithm>

namespace bigindec {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly upoly_mul(const UPoly& a, const UPoly& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(c);
  return c;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b, const PrimeField& f) {
  UPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  trim(c);
  return c;
}

UPoly upoly_mod(UPoly a, const UPoly& m, const PrimeField& f) {
  require(!m.empty(), ErrorKind::Internal, "upoly_mod: division by zero");
  trim(a);
  Coeff lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    Coeff c = f.mul(a.back(), lead_inv);
    std::size_t off = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[off + i] = f.sub(a[off + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

UPoly upoly_monic(UPoly a, const PrimeField& f) {
  trim(a);
  if (a.empty()) return a;
  Coeff inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a, f);
}

UPoly upoly_powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const PrimeField& f) {
  UPoly result = upoly_mod({1}, m, f);
  UPoly b = upoly_mod(base, m, f);
  while (e > 0) {
    if (e & 1) result = upoly_mod(upoly_mul(result, b, f), m, f);
    b = upoly_mod(upoly_mul(b, b, f), m, f);
    e >>= 1;
  }
  return result;
}

Coeff upoly_eval(const UPoly& a, Coeff x, const PrimeField& f) {
  Coeff r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

namespace {

void split_into(const UPoly& a, const PrimeField& f, std::mt19937_64& rng, std::vector<Coeff>& out) {
  int d = degree(a);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.mul(a[0], f.inv(a[1]))));
    return;
  }
  std::uint32_t p = f.characteristic();
  if (p <= 1024) {
    for (Coeff x = 0; x < p; ++x)
      if (upoly_eval(a, x, f) == 0) out.push_back(x);
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    Coeff shift = static_cast<Coeff>(rng() % p);
    UPoly w = upoly_powmod({shift, 1}, (p - 1) / 2, a, f);
    w = upoly_sub(w, {1}, f);
    UPoly g = upoly_gcd(a, w, f);
    if (degree(g) > 0 && degree(g) < d) {
      // a = g * h with both factors split and squarefree
      UPoly h = upoly_mod(a, g, f);
      require(h.empty(), ErrorKind::Internal, "split_roots: gcd is not a factor");
      UPoly q;
      {
        UPoly num = upoly_monic(a, f);
        q.assign(num.size() - g.size() + 1, 0);
        UPoly rem = num;
        while (rem.size() >= g.size()) {
          Coeff c = rem.back();
          std::size_t off = rem.size() - g.size();
          q[off] = c;
          for (std::size_t i = 0; i < g.size(); ++i) rem[off + i] = f.sub(rem[off + i], f.mul(c, g[i]));
          trim(rem);
        }
      }
      split_into(g, f, rng, out);
      split_into(q, f, rng, out);
      return;
    }
  }
  fail(ErrorKind::Internal, "split_roots: polynomial does not split into distinct linear factors");
}

}  // namespace

std::vector<Coeff> split_roots(const UPoly& a, const PrimeField& f, std::mt19937_64& rng) {
  std::vector<Coeff> out;
  split_into(upoly_monic(a, f), f, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bigindec
