#include "bigindec/minors.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace bigindec {

namespace {
constexpr std::size_t kMemoLimit = 1u << 18;
constexpr std::size_t kSaturate = static_cast<std::size_t>(1) << 62;
}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (r > kSaturate / (n - k + i)) return kSaturate;
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

MinorEngine::MinorEngine(const PolyMatrix& a, const GradedRing& ring)
    : a_(a), ring_(ring), rows_(a.rows()), cols_(a.cols()) {
  require(rows_ <= 64 && cols_ <= 64, ErrorKind::Precondition, "minors: matrix larger than 64 x 64");
}

std::size_t MinorEngine::count(std::size_t k) const noexcept {
  std::size_t r = binomial(rows_, k), c = binomial(cols_, k);
  if (r == 0 || c == 0) return 0;
  if (r > kSaturate / c) return kSaturate;
  return r * c;
}

Polynomial MinorEngine::det(std::uint64_t rmask, std::uint64_t cmask) {
  if (std::popcount(rmask) == 1)
    return a_.at(static_cast<std::size_t>(std::countr_zero(rmask)), static_cast<std::size_t>(std::countr_zero(cmask)));
  auto key = std::make_pair(rmask, cmask);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const auto& f = ring_.field();
  auto r0 = static_cast<std::size_t>(std::countr_zero(rmask));
  std::uint64_t rest = rmask & (rmask - 1);
  Polynomial acc;
  int pos = 0;
  for (std::uint64_t cm = cmask; cm != 0; cm &= cm - 1, ++pos) {
    auto c = static_cast<std::size_t>(std::countr_zero(cm));
    const Polynomial& e = a_.at(r0, c);
    if (e.is_zero()) continue;
    Polynomial cof = det(rest, cmask & ~(std::uint64_t{1} << c));
    if (cof.is_zero()) continue;
    Polynomial term = ring_.multiply(e, cof);
    acc = (pos % 2 == 0) ? add(acc, term, f) : bigindec::sub(acc, term, f);
  }
  if (memo_.size() > kMemoLimit) memo_.clear();
  memo_.emplace(key, acc);
  return acc;
}

Polynomial MinorEngine::minor(const Index& rows, const Index& cols) {
  require(rows.size() == cols.size() && !rows.empty(), ErrorKind::Internal, "minor: bad index sets");
  std::uint64_t rm = 0, cm = 0;
  for (auto r : rows) rm |= std::uint64_t{1} << r;
  for (auto c : cols) cm |= std::uint64_t{1} << c;
  return det(rm, cm);
}

void MinorEngine::for_each(std::size_t k, const std::function<bool(const Polynomial&)>& fn) {
  if (k == 0 || k > rows_ || k > cols_) return;
  auto rs = subsets(rows_, k);
  auto cs = subsets(cols_, k);
  for (const auto& r : rs)
    for (const auto& c : cs)
      if (!fn(minor(r, c))) return;
}

std::vector<std::pair<MinorEngine::Index, MinorEngine::Index>> MinorEngine::sample_order(std::size_t k, std::size_t n,
                                                                                         std::uint32_t seed) const {
  std::vector<std::pair<Index, Index>> out;
  if (k == 0 || k > rows_ || k > cols_) return out;
  std::mt19937 gen(seed);
  std::size_t total = count(k);
  if (total <= n || total <= 4 * n) {
    auto rs = subsets(rows_, k);
    auto cs = subsets(cols_, k);
    for (const auto& r : rs)
      for (const auto& c : cs) out.emplace_back(r, c);
    std::shuffle(out.begin(), out.end(), gen);
    if (out.size() > n) out.resize(n);
    return out;
  }
  auto pick = [&](std::size_t size) {
    Index all(size);
    for (std::size_t i = 0; i < size; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), gen);
    Index s(all.begin(), all.begin() + static_cast<long>(k));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<std::pair<Index, Index>> seen;
  while (out.size() < n) {
    auto p = std::make_pair(pick(rows_), pick(cols_));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace bigindec
