#include "bigindec/yoneda.hpp"

namespace bigindec {

namespace {

PolyMatrix degrees_as(const PolyMatrix& m, const std::vector<std::int32_t>& rows, const std::vector<std::int32_t>& cols) {
  PolyMatrix out(rows, cols);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::vector<std::int32_t> image_degrees(const ModuleMap& f) {
  std::vector<std::int32_t> d = f.source.degrees();
  for (auto& x : d) x += f.shift;
  return d;
}

// Stacks blocks vertically: rows of a on top of rows of b (same column count).
PolyMatrix stack(const PolyMatrix& a, const PolyMatrix& b, const std::vector<std::int32_t>& cols) {
  std::vector<std::int32_t> rows = a.row_degrees();
  rows.insert(rows.end(), b.row_degrees().begin(), b.row_degrees().end());
  PolyMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

PolyMatrix negate(const PolyMatrix& m, const GradedRing& r) { return scale(m, r.field().neg(1), r); }

}  // namespace

ExactnessReport verify_exact(const ModuleMap& iota, const ModuleMap& pi) {
  ExactnessReport rep;
  const auto& ring = iota.target.r();
  if (iota.target.num_generators() != pi.source.num_generators() || iota.shift != 0 || pi.shift != 0) {
    rep.failing = "composition";
    return rep;
  }
  if (!compose(pi, iota).is_zero()) {
    rep.failing = "composition";
    return rep;
  }
  if (!map_kernel(iota).module.is_zero()) {
    rep.failing = "injective";
    return rep;
  }
  if (!map_kernel_cokernel(pi).cokernel.is_zero()) {
    rep.failing = "surjective";
    return rep;
  }
  const auto& x = iota.target;
  PolyMatrix im = degrees_as(iota.matrix, x.degrees(), image_degrees(iota));
  ModuleGB gb = submodule_gb(ring, x.degrees(), concat_columns(x.relations(), im));
  PolyMatrix k = kernel_generators(pi);
  for (std::size_t j = 0; j < k.cols(); ++j)
    if (!gb.contains(k.column(j))) {
      rep.failing = "middle";
      return rep;
    }
  rep.exact = true;
  return rep;
}

ShortExactSequence make_sequence(ModuleMap iota, ModuleMap pi) {
  ShortExactSequence s{std::move(iota), std::move(pi), false};
  s.verified = verify_exact(s.iota, s.pi).exact;
  return s;
}

std::optional<ModuleMap> find_splitting(const ShortExactSequence& s) {
  const auto& m = s.right();
  const auto& f = m.r().field();
  HomDegree0 sections(m, s.middle());
  HomDegree0 endo(m, m);
  DenseMatrix sys(endo.raw_size(), sections.dim());
  for (std::size_t b = 0; b < sections.dim(); ++b) {
    auto v = endo.raw_vector(compose(s.pi, sections.basis()[b]));
    for (std::size_t r = 0; r < v.size(); ++r) sys(r, b) = v[r];
  }
  auto rhs = endo.raw_vector(ModuleMap::identity(m));
  if (sections.dim() == 0) {
    for (auto c : rhs)
      if (c != 0) return std::nullopt;
    return ModuleMap::zero(m, s.middle());
  }
  auto sol = solve(sys, rhs, f);
  if (!sol) return std::nullopt;
  return sections.combination(*sol);
}

bool is_split(const ShortExactSequence& s) { return find_splitting(s).has_value(); }

ExtClass class_of(const ShortExactSequence& s) {
  const auto& x = s.middle();
  const auto& m = s.right();
  const auto& n = s.left();
  const auto& ring = m.r();
  ModuleGB through_pi = tracked_gb(ring, degrees_as(s.pi.matrix, m.degrees(), x.degrees()), m.relations());
  std::vector<ModVec> lifts;
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    auto c = through_pi.lift(m.generator(i));
    require(c.has_value(), ErrorKind::Input, "class_of: pi is not surjective");
    lifts.push_back(*c);
  }
  PolyMatrix section = PolyMatrix::from_columns(lifts, x.degrees(), m.degrees());
  PolyMatrix images = multiply(section, m.relations(), ring);
  ModuleGB through_iota = tracked_gb(ring, degrees_as(s.iota.matrix, x.degrees(), n.degrees()), x.relations());
  std::vector<ModVec> cols;
  for (std::size_t j = 0; j < images.cols(); ++j) {
    auto c = through_iota.lift(images.column(j));
    require(c.has_value(), ErrorKind::Input, "class_of: sequence is not exact in the middle");
    cols.push_back(*c);
  }
  PolyMatrix cocycle = PolyMatrix::from_columns(cols, n.degrees(), m.relations().col_degrees());
  return ExtClass::make(m, n, reduce_entries(cocycle, ring), 0, false);
}

ShortExactSequence pushout_extension(const ExtClass& c) {
  require(c.degree == 0, ErrorKind::Precondition, "pushout_extension: class must have internal degree 0");
  const auto& n = c.target;
  const auto& m = c.source;
  const auto& ring = m.ring();
  std::vector<std::int32_t> degs = n.degrees();
  degs.insert(degs.end(), m.degrees().begin(), m.degrees().end());
  PolyMatrix top = concat_columns(n.relations(), degrees_as(c.cocycle, n.degrees(), m.relations().col_degrees()));
  PolyMatrix zero_n(m.degrees(), n.relations().col_degrees());
  PolyMatrix bottom = concat_columns(zero_n, negate(m.relations(), *ring));
  std::vector<std::int32_t> cols = top.col_degrees();
  GradedModule x(ring, degs, stack(top, bottom, cols));
  PolyMatrix iota(degs, n.degrees());
  for (std::size_t i = 0; i < n.num_generators(); ++i) iota.at(i, i) = Polynomial::constant(1);
  PolyMatrix pi(m.degrees(), degs);
  for (std::size_t i = 0; i < m.num_generators(); ++i) pi.at(i, n.num_generators() + i) = Polynomial::constant(1);
  return make_sequence(ModuleMap::make(n, x, iota, 0, false), ModuleMap::make(x, m, pi, 0, false));
}

ShortExactSequence pushout_along(const ShortExactSequence& s, const ModuleMap& g) {
  require(g.shift == 0, ErrorKind::Precondition, "pushout_along: map must have degree 0");
  require(g.source.num_generators() == s.left().num_generators(), ErrorKind::Input,
          "pushout_along: map source is not the left module");
  const auto& np = g.target;
  const auto& x = s.middle();
  const auto& ring = x.ring();
  std::vector<std::int32_t> degs = np.degrees();
  degs.insert(degs.end(), x.degrees().begin(), x.degrees().end());
  const auto& gen_degs = s.left().degrees();
  PolyMatrix top = concat_columns(concat_columns(np.relations(), PolyMatrix(np.degrees(), x.relations().col_degrees())),
                                  degrees_as(g.matrix, np.degrees(), gen_degs));
  PolyMatrix bottom = concat_columns(concat_columns(PolyMatrix(x.degrees(), np.relations().col_degrees()), x.relations()),
                                     negate(degrees_as(s.iota.matrix, x.degrees(), gen_degs), *ring));
  GradedModule xp(ring, degs, stack(top, bottom, top.col_degrees()));
  PolyMatrix iota(degs, np.degrees());
  for (std::size_t i = 0; i < np.num_generators(); ++i) iota.at(i, i) = Polynomial::constant(1);
  PolyMatrix pi(s.right().degrees(), degs);
  for (std::size_t i = 0; i < s.right().num_generators(); ++i)
    for (std::size_t k = 0; k < x.num_generators(); ++k) pi.at(i, np.num_generators() + k) = s.pi.matrix.at(i, k);
  return make_sequence(ModuleMap::make(np, xp, iota, 0, false), ModuleMap::make(xp, s.right(), pi, 0, false));
}

ShortExactSequence pullback(const ShortExactSequence& s, const ModuleMap& f) {
  require(f.target.num_generators() == s.right().num_generators(), ErrorKind::Input,
          "pullback: map target is not the right module");
  GradedModule mp = f.shift == 0 ? f.source : f.source.shifted(f.shift);
  const auto& x = s.middle();
  const auto& ring = x.ring();
  DirectSum sum = direct_sum({x, mp});
  PolyMatrix h = concat_columns(s.pi.matrix, degrees_as(negate(f.matrix, *ring), s.right().degrees(), mp.degrees()));
  ModuleMap hm = ModuleMap::make(sum.module, s.right(), h, 0, false);
  KernelData k = map_kernel(hm);
  std::size_t nx = x.num_generators();
  // iota_Q(n) = (iota(n), 0) in kernel coordinates
  std::vector<ModVec> cols;
  for (std::size_t i = 0; i < s.left().num_generators(); ++i) {
    ModVec v = apply(sum.iota[0].matrix, s.iota.matrix.column(i), *ring);
    auto c = k.sub.lift(v);
    require(c.has_value(), ErrorKind::Internal, "pullback: left module does not land in the kernel");
    cols.push_back(*c);
  }
  PolyMatrix iq = PolyMatrix::from_columns(cols, k.module.degrees(), s.left().degrees());
  PolyMatrix pq(mp.degrees(), k.module.degrees());
  for (std::size_t i = 0; i < mp.num_generators(); ++i)
    for (std::size_t j = 0; j < k.module.num_generators(); ++j) pq.at(i, j) = k.inclusion.matrix.at(nx + i, j);
  return make_sequence(ModuleMap::make(s.left(), k.module, iq, 0, false), ModuleMap::make(k.module, mp, pq, 0, false));
}

std::vector<ExtClass> phi_split(const ExtClass& alpha, const DirectSum& ds) {
  require(alpha.source.num_generators() == ds.module.num_generators(), ErrorKind::Input,
          "phi_split: class is not over the recorded direct sum");
  std::vector<ExtClass> out;
  for (const auto& i : ds.iota) out.push_back(ext_action(alpha, i));
  return out;
}

ExtClass phi_inverse(const std::vector<ExtClass>& parts, const DirectSum& ds) {
  require(parts.size() == ds.summands.size() && !parts.empty(), ErrorKind::Input, "phi_inverse: wrong number of classes");
  const auto& n = parts[0].target;
  PolyMatrix c(n.degrees(), {});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i].degree == parts[0].degree, ErrorKind::Input, "phi_inverse: classes of different degrees");
    c = concat_columns(c, degrees_as(parts[i].cocycle, n.degrees(), parts[i].cocycle.col_degrees()));
  }
  return ExtClass::make(ds.module, n, c, parts[0].degree, false);
}

ShortExactSequence phi_inverse_sequence(const std::vector<ExtClass>& parts, const DirectSum& ds) {
  require(parts.size() == ds.summands.size() && !parts.empty(), ErrorKind::Input, "phi_inverse: wrong number of classes");
  const auto& n = parts[0].target;
  std::vector<GradedModule> lefts, mids;
  std::vector<ShortExactSequence> seqs;
  for (const auto& p : parts) {
    seqs.push_back(pushout_extension(p));
    lefts.push_back(n);
    mids.push_back(seqs.back().middle());
  }
  DirectSum nsum = direct_sum(lefts), xsum = direct_sum(mids);
  std::vector<PolyMatrix> ib, pb;
  for (const auto& s : seqs) {
    ib.push_back(s.iota.matrix);
    pb.push_back(s.pi.matrix);
  }
  ModuleMap iota = ModuleMap::make(nsum.module, xsum.module, block_diagonal(ib), 0, false);
  ModuleMap pi = ModuleMap::make(xsum.module, ds.module, block_diagonal(pb), 0, false);
  ShortExactSequence total = make_sequence(iota, pi);
  PolyMatrix nabla(n.degrees(), nsum.module.degrees());
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (std::size_t i = 0; i < n.num_generators(); ++i) nabla.at(i, b * n.num_generators() + i) = Polynomial::constant(1);
  return pushout_along(total, ModuleMap::make(nsum.module, n, nabla, 0, false));
}

std::vector<std::vector<ModuleMap>> psi_matrix(const ModuleMap& b, const DirectSum& ds) {
  std::size_t k = ds.summands.size();
  std::vector<std::vector<ModuleMap>> c(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i].push_back(compose(ds.pi[i], compose(b, ds.iota[j])));
  return c;
}

std::vector<ExtClass> row_times_matrix(const std::vector<ExtClass>& t, const std::vector<std::vector<ModuleMap>>& c) {
  std::vector<ExtClass> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    ExtClass acc = ext_action(t[0], c[0][j]);
    for (std::size_t i = 1; i < t.size(); ++i) acc = add(acc, ext_action(t[i], c[i][j]));
    out.push_back(acc);
  }
  return out;
}

ExtClass syzygy_class(const GradedModule& m) {
  GradedModule omega(m.ring(), m.relations().col_degrees(), m.relation_syzygies());
  return ExtClass::make(m, omega, PolyMatrix::identity(m.relations().col_degrees()), 0, false);
}

}  // namespace bigindec
