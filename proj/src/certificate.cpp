#include "bigindec/certificate.hpp"

#include "bigindec/oracle.hpp"
#include "bigindec/workspace.hpp"

namespace bigindec {

namespace {

constexpr int kVersion = 1;
constexpr const char* kTruncation = "R/m^n with m the ideal of the variables and n a standard-degree power";

Json class_json(const GradedRing& ring, const ExtClass& c) {
  return Json{{"degree", c.degree}, {"cocycle", matrix_json(ring, c.cocycle)}};
}

Json map_json(const ModuleMap& f) { return Json{{"shift", f.shift}, {"matrix", matrix_json(f.target.r(), f.matrix)}}; }

}  // namespace

Json matrix_json(const GradedRing& ring, const PolyMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring.to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.row_degrees()}, {"cols", m.col_degrees()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const GradedRing& ring, const Json& j) {
  auto rows = j.at("rows").get<std::vector<std::int32_t>>();
  auto cols = j.at("cols").get<std::vector<std::int32_t>>();
  const Json& entries = j.at("entries");
  require(entries.size() == rows.size(), ErrorKind::Input, "matrix: row count does not match the degrees");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(entries[i].size() == cols.size(), ErrorKind::Input, "matrix: column count does not match the degrees");
    for (std::size_t k = 0; k < cols.size(); ++k) m.at(i, k) = parse_polynomial(ring, entries[i][k].get<std::string>());
  }
  require(m.is_homogeneous(), ErrorKind::Input, "matrix: entries do not match the stated degrees");
  return m;
}

Json module_json(const GradedModule& m) {
  return Json{{"degrees", m.degrees()}, {"relations", matrix_json(m.r(), m.relations())}};
}

GradedModule module_from_json(const RingPtr& ring, const Json& j) {
  auto degrees = j.at("degrees").get<std::vector<std::int32_t>>();
  PolyMatrix rel = matrix_from_json(*ring, j.at("relations"));
  require(rel.row_degrees() == degrees, ErrorKind::Input, "module: relation rows do not match the generator degrees");
  return GradedModule(ring, degrees, rel);
}

Json ring_json(const GradedRing& ring) {
  Json ideal = Json::array();
  for (const auto& g : ring.defining_ideal()) ideal.push_back(ring.to_string(g));
  return Json{{"name", ring.name()},
              {"char", ring.field().characteristic()},
              {"vars", ring.variables()},
              {"weights", ring.weights()},
              {"ideal", std::move(ideal)}};
}

RingPtr ring_from_json(const Json& j) {
  auto ch = j.at("char").get<std::uint64_t>();
  require(ch >= 2 && ch < (1ULL << 31) && is_prime(ch), ErrorKind::Input, "ring: characteristic is not a prime below 2^31");
  auto name = j.at("name").get<std::string>();
  auto vars = j.at("vars").get<std::vector<std::string>>();
  auto weights = j.at("weights").get<std::vector<int>>();
  auto bare = GradedRing::create(name, static_cast<std::uint32_t>(ch), vars, weights, {});
  std::vector<Polynomial> ideal;
  for (const auto& g : j.at("ideal")) ideal.push_back(parse_polynomial(*bare, g.get<std::string>()));
  return GradedRing::create(name, static_cast<std::uint32_t>(ch), vars, weights, ideal);
}

Json certificate_json(const ConstructionCertificate& c, bool timings) {
  const GradedRing& ring = *c.ring;
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(class_json(ring, g));
  Json out{
      {"version", kVersion},
      {"valid", c.valid},
      {"failing", c.failing},
      {"config",
       {{"p", ring.field().characteristic()},
        {"nMax", c.n_max},
        {"truncation", kTruncation},
        {"seed", c.seed}}},
      {"ring", ring_json(ring)},
      {"modules",
       {{"M", module_json(c.m)},
        {"T", module_json(c.sequence.left())},
        {"M_sum", module_json(c.m_sum)},
        {"X", module_json(c.sequence.middle())}}},
      {"maps", {{"iota", map_json(c.sequence.iota)}, {"pi", map_json(c.sequence.pi)}}},
      {"choice",
       {{"r", c.r},
        {"n", c.n},
        {"s", c.s},
        {"nu", c.nu},
        {"rank_M", c.rank_m},
        {"basis_indices", c.chosen},
        {"generators", std::move(gens)}}},
      {"alpha", class_json(ring, c.alpha)},
      {"verdicts",
       {{"exact", c.verdicts.exact},
        {"nonsplit", c.verdicts.nonsplit},
        {"ann_in_radical", c.verdicts.ann_in_radical},
        {"end0_local", c.verdicts.end0_local},
        {"end0_dim", c.end0_dim},
        {"premise", c.premise},
        {"rank",
         {{"t", c.verdicts.rank.t},
          {"pass", c.verdicts.rank.pass},
          {"fitt_low_zero", c.verdicts.rank.fitt_low_zero},
          {"fitt_t_m_primary", c.verdicts.rank.fitt_t_m_primary}}},
        {"depth", {{"M", c.depth_m}, {"M_sum", c.depth_sum}, {"X", c.depth_x}}}}},
      {"oracle",
       {{"ext_dim", c.oracle.ext_dim},
        {"ext_dim_agreement", c.oracle.ext_dim_agreement},
        {"split_search", c.oracle.split_found ? "found" : "none"},
        {"idempotent_trials", c.oracle.idempotent_trials},
        {"idempotent", c.oracle.idempotent_found ? "found" : "none"}}},
  };
  if (timings) out["timings"] = c.timings;
  return out;
}

std::string certificate_text(const ConstructionCertificate& c, bool timings) {
  return certificate_json(c, timings).dump(2) + "\n";
}

namespace {

// Runs the checks in order and stops at the first failure.
class Checker {
 public:
  explicit Checker(VerifyReport& r) : r_(r) {}

  template <class F>
  bool run(const std::string& name, F&& body) {
    if (!r_.failing.empty()) return false;
    bool ok = false;
    std::string detail;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    r_.checks.emplace_back(name, ok);
    if (!ok) {
      r_.failing = name;
      r_.detail = detail;
    }
    return ok;
  }

 private:
  VerifyReport& r_;
};

bool matches(const Json& stored, const Json& recomputed, std::string& detail) {
  if (stored == recomputed) return true;
  detail = "stored data differs from the recomputed value";
  return false;
}

// The stored verdict must agree with the recomputation and hold.
bool verdict(const Json& stored, bool recomputed, std::string& detail) {
  if (stored.get<bool>() != recomputed) {
    detail = "stored verdict differs from the recomputed one";
    return false;
  }
  if (!recomputed) detail = "check does not hold";
  return recomputed;
}

}  // namespace

VerifyReport verify_certificate(const Json& cert) {
  VerifyReport rep;
  Checker ck(rep);
  RingPtr ring;
  GradedModule m, t, m_sum, x;
  int r = 0, n = 0, n_max = 0, rank_m = 0;
  std::uint64_t seed = 0;
  std::vector<ExtClass> gens;
  Selection sel;
  DirectSum ds;
  ExtClass alpha;
  ModuleMap iota, pi;

  ck.run("format", [&](std::string& d) {
    if (cert.at("version").get<int>() != kVersion) {
      d = "unsupported certificate version";
      return false;
    }
    for (const char* key : {"config", "ring", "modules", "maps", "choice", "alpha", "verdicts", "oracle", "valid"})
      if (!cert.contains(key)) {
        d = std::string("missing field ") + key;
        return false;
      }
    return true;
  });
  ck.run("ring", [&](std::string&) {
    ring = ring_from_json(cert.at("ring"));
    return true;
  });
  ck.run("config", [&](std::string& d) {
    const Json& cfg = cert.at("config");
    const Json& ch = cert.at("choice");
    r = ch.at("r").get<int>();
    n = ch.at("n").get<int>();
    n_max = cfg.at("nMax").get<int>();
    seed = cfg.at("seed").get<std::uint64_t>();
    rank_m = ch.at("rank_M").get<int>();
    if (cfg.at("p").get<std::uint64_t>() != ring->field().characteristic()) d = "p differs from the ring";
    else if (r < 1 || n < 1 || n > n_max) d = "r or n out of range";
    else if (cfg.at("truncation").get<std::string>() != kTruncation) d = "unknown truncation policy";
    return d.empty();
  });
  ck.run("modules.M", [&](std::string&) {
    m = module_from_json(ring, cert.at("modules").at("M"));
    return true;
  });
  ck.run("modules.T", [&](std::string& d) {
    t = truncation_module(ring, n);
    return matches(cert.at("modules").at("T"), module_json(t), d);
  });
  ck.run("choice.generators", [&](std::string& d) {
    const Json& js = cert.at("choice").at("generators");
    if (js.size() != static_cast<std::size_t>(r)) {
      d = "expected r generators";
      return false;
    }
    for (const auto& g : js)
      gens.push_back(ExtClass::make(m, t, matrix_from_json(*ring, g.at("cocycle")), g.at("degree").get<std::int32_t>()));
    return true;
  });
  ck.run("choice", [&](std::string& d) {
    sel = select_generators(m, r, n_max);
    const Json& ch = cert.at("choice");
    if (sel.n != n || sel.s != ch.at("s").get<int>() || sel.nu != ch.at("nu").get<std::size_t>() ||
        sel.chosen != ch.at("basis_indices").get<std::vector<std::size_t>>()) {
      d = "generator selection does not reproduce";
      return false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (class_json(*ring, sel.generators[i]) != class_json(*ring, gens[i])) {
        d = "generator " + std::to_string(i + 1) + " differs from the selected basis class";
        return false;
      }
    return true;
  });
  ck.run("modules.M_sum", [&](std::string& d) {
    std::vector<GradedModule> summands;
    for (const auto& g : gens) summands.push_back(g.regraded(g.degree).source);
    ds = direct_sum(summands);
    m_sum = ds.module;
    return matches(cert.at("modules").at("M_sum"), module_json(m_sum), d);
  });
  ck.run("alpha", [&](std::string& d) {
    std::vector<ExtClass> parts;
    for (const auto& g : gens) parts.push_back(g.regraded(g.degree));
    alpha = phi_inverse(parts, ds);
    return matches(cert.at("alpha"), class_json(*ring, alpha), d);
  });
  ShortExactSequence seq;
  ck.run("modules.X", [&](std::string& d) {
    seq = pushout_extension(alpha);
    if (!matches(cert.at("modules").at("X"), module_json(seq.middle()), d)) return false;
    x = module_from_json(ring, cert.at("modules").at("X"));
    return true;
  });
  ck.run("maps.iota", [&](std::string& d) {
    const Json& j = cert.at("maps").at("iota");
    if (!matches(j, map_json(seq.iota), d)) return false;
    iota = ModuleMap::make(t, x, matrix_from_json(*ring, j.at("matrix")), j.at("shift").get<std::int32_t>());
    return true;
  });
  ck.run("maps.pi", [&](std::string& d) {
    const Json& j = cert.at("maps").at("pi");
    if (!matches(j, map_json(seq.pi), d)) return false;
    pi = ModuleMap::make(x, m_sum, matrix_from_json(*ring, j.at("matrix")), j.at("shift").get<std::int32_t>());
    return true;
  });
  const Json* v = cert.contains("verdicts") ? &cert.at("verdicts") : nullptr;
  ShortExactSequence stored;
  ck.run("verdicts.exact", [&](std::string& d) {
    stored = make_sequence(iota, pi);
    return verdict(v->at("exact"), stored.verified, d);
  });
  ck.run("verdicts.nonsplit", [&](std::string& d) { return verdict(v->at("nonsplit"), !is_split(stored), d); });
  ck.run("verdicts.ann_in_radical", [&](std::string& d) {
    ReducedEnd red = reduce_mod_m(end_algebra(m), sel.s);
    return verdict(v->at("ann_in_radical"), class_annihilator(alpha, ds, red).contained, d);
  });
  ck.run("verdicts.end0_local", [&](std::string& d) {
    End0 e0 = degree_zero_endomorphisms(x);
    if (e0.hom.dim() != v->at("end0_dim").get<std::size_t>()) {
      d = "End_0(X) dimension differs";
      return false;
    }
    return verdict(v->at("end0_local"), locality_and_idempotents(e0.algebra, seed).local, d);
  });
  ck.run("verdicts.premise", [&](std::string& d) { return verdict(v->at("premise"), sel.premise, d); });
  ck.run("verdicts.rank", [&](std::string& d) {
    auto rm = punctured_rank(m);
    if (!rm || *rm != rank_m) {
      d = "punctured rank of M differs";
      return false;
    }
    const Json& jr = v->at("rank");
    RankCertificate rc = rank_punctured_certificate(x, r * rank_m);
    if (jr.at("t").get<int>() != r * rank_m || jr.at("fitt_low_zero").get<bool>() != rc.fitt_low_zero ||
        jr.at("fitt_t_m_primary").get<bool>() != rc.fitt_t_m_primary) {
      d = "rank certificate fields differ";
      return false;
    }
    return verdict(jr.at("pass"), rc.pass, d);
  });
  ck.run("verdicts.depth", [&](std::string& d) {
    const Json& jd = v->at("depth");
    int dm = depth(m), ds_ = depth(m_sum), dx = depth(x);
    if (jd.at("M").get<int>() != dm || jd.at("M_sum").get<int>() != ds_ || jd.at("X").get<int>() != dx) {
      d = "stored depths differ";
      return false;
    }
    if (!(dx == 0 && ds_ == dm && dm > 0)) d = "depth pattern does not hold";
    return d.empty();
  });
  const Json* o = cert.contains("oracle") ? &cert.at("oracle") : nullptr;
  ck.run("oracle.ext_dim_agreement", [&](std::string& d) {
    long od = oracle_ext_dim(m, n);
    if (o->at("ext_dim").get<long>() != od) {
      d = "stored oracle dimension differs";
      return false;
    }
    return verdict(o->at("ext_dim_agreement"), od == static_cast<long>(ExtSpace(m, t).dim()), d);
  });
  ck.run("oracle.split_search", [&](std::string& d) {
    bool found = oracle_split_search(stored).found;
    if (o->at("split_search").get<std::string>() != (found ? "found" : "none")) {
      d = "stored verdict differs from the recomputed one";
      return false;
    }
    if (found) d = "a splitting exists";
    return !found;
  });
  ck.run("oracle.idempotent", [&](std::string& d) {
    int trials = o->at("idempotent_trials").get<int>();
    bool found = oracle_random_idempotent(x, trials, seed).found;
    if (o->at("idempotent").get<std::string>() != (found ? "found" : "none")) {
      d = "stored verdict differs from the recomputed one";
      return false;
    }
    if (found) d = "a nontrivial idempotent exists";
    return !found;
  });
  ck.run("valid", [&](std::string& d) {
    if (!cert.at("valid").get<bool>() || !cert.at("failing").get<std::string>().empty()) d = "certificate is marked invalid";
    return d.empty();
  });
  rep.ok = rep.failing.empty();
  return rep;
}

}  // namespace bigindec
