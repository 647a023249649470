// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bigindec/certificate.hpp"
#include "bigindec/cli.hpp"
#include "bigindec/oracle.hpp"
#include "fixtures.hpp"
#include "random_helpers.hpp"

using namespace bigindec;
using namespace fx;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

std::uint64_t base_seed() {
  const char* s = std::getenv("BIGINDEC_SEED");
  return s != nullptr && *s != '\0' ? std::strtoull(s, nullptr, 10) : 20240611ULL;
}

Outcome koszul_suite() {
  Outcome o;
  auto r = plane();
  auto m = max_ideal(r);
  for (int n = 1; n <= 8; ++n) {
    auto t = truncation_module(r, n);
    o.expect(ExtSpace(m, t).dim() == 1, "dim Ext^1(m, R/m^" + std::to_string(n) + ") != 1");
    o.expect(oracle_ext_dim(m, n) == 1, "oracle disagrees at n = " + std::to_string(n));
    o.expect(length_and_hilbert(t).length == n * (n + 1) / 2, "length of R/m^" + std::to_string(n));
  }
  o.expect(depth(free_module(r, {0})) == 2, "depth R");
  o.expect(depth(m) == 1, "depth m");
  o.expect(depth(residue_field(r)) == 0, "depth k");
  auto omega = syzygy(residue_field(r), 2);
  o.expect(omega.degrees() == std::vector<std::int32_t>{2} && omega.relations().cols() == 0, "Omega^2(k) != R(-2)");
  return o;
}

Outcome cone_suite() {
  Outcome o;
  auto a = cone();
  auto m = cone_module(a);
  auto b = free_resolution(m, 4).betti();
  o.expect(b.size() == 5, "resolution length");
  for (auto x : b) o.expect(x == 2, "Betti number != 2");
  o.expect(ExtSpace(m, residue_field(a)).dim() == 2, "dim Ext^1(M, k) != 2");
  o.expect(depth(free_module(a, {0})) == 2, "depth R != 2");
  o.expect(rank_punctured_certificate(m, 1).pass, "rank certificate for t = 1 fails");
  return o;
}

std::vector<ConstructionCertificate> g_certs;

Outcome main_construction() {
  Outcome o;
  auto a = cone();
  auto m = cone_module(a);
  ConstructionOptions opt;
  opt.idempotent_trials = 200;
  opt.seed = base_seed();
  for (int r = 2; r <= 4; ++r) {
    auto tag = "r = " + std::to_string(r) + ": ";
    auto c = construct_big_indecomposable(m, r, opt);
    o.expect(c.valid, tag + "certificate invalid at " + c.failing);
    o.expect(c.n <= 12, tag + "n > 12");
    auto text = certificate_text(c);
    auto rep = verify_certificate(Json::parse(text));
    o.expect(rep.ok, tag + "verify fails at " + rep.failing);
    o.expect(certificate_text(construct_big_indecomposable(m, r, opt)) == text, tag + "output not byte-stable");
    o.expect(!oracle_split_search(c.sequence).found, tag + "oracle found a splitting");
    o.expect(c.oracle.idempotent_trials >= 200 && !c.oracle.idempotent_found, tag + "oracle found an idempotent");
    o.expect(c.verdicts.rank.pass && c.verdicts.rank.t == r, tag + "punctured rank is not r");
    if (!o.pass) return o;
    g_certs.push_back(std::move(c));
  }
  o.note = "n = " + std::to_string(g_certs[0].n) + "/" + std::to_string(g_certs[1].n) + "/" + std::to_string(g_certs[2].n);
  return o;
}

Outcome appendix_suite() {
  Outcome o;
  auto a = cone();
  const auto& f = a->field();
  std::mt19937_64 rng(base_seed());
  auto m = cone_module(a);
  auto t = truncation_module(a, 2);
  std::vector<GradedModule> pool{m, m.shifted(1), max_ideal(a), m.shifted(-1)};
  struct Setup {
    DirectSum ds;
    ExtSpace space;
    HomDegree0 hom;
  };
  std::vector<Setup> setups;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      auto two = direct_sum({pool[i], pool[j]});
      setups.push_back(Setup{two, ExtSpace(two.module, t), HomDegree0(two.module, two.module)});
      auto three = direct_sum({pool[i], pool[j], m});
      setups.push_back(Setup{three, ExtSpace(three.module, t), HomDegree0(three.module, three.module)});
    }
  auto random_degree = [&](const ExtSpace& s) {
    return s.min_degree() + static_cast<std::int32_t>(rng() % (s.max_degree() - s.min_degree() + 1));
  };
  int prop = 0, inverse = 0, psi = 0, functorial = 0, nonzero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Setup& s = setups[rng() % setups.size()];
    auto alpha = random_class(s.space, random_degree(s.space), rng);
    auto b = random_endo(s.hom, rng, f);
    // phi(alpha b) = phi(alpha) psi(b)
    auto lhs = phi_split(ext_action(alpha, b), s.ds);
    auto rhs = row_times_matrix(phi_split(alpha, s.ds), psi_matrix(b, s.ds));
    bool ok = lhs.size() == rhs.size();
    for (std::size_t j = 0; ok && j < lhs.size(); ++j) ok = ext_class_equal(lhs[j], rhs[j]);
    o.expect(ok, "phi(alpha b) != phi(alpha) psi(b) on trial " + std::to_string(trial));
    bool live = false;
    for (const auto& x : lhs) live = live || !ExtSpace(x.source, t).is_zero(x);
    nonzero += live;
    prop += ok;
    // phi and phi^-1
    auto parts = phi_split(alpha, s.ds);
    bool inv = ext_class_equal(phi_inverse(parts, s.ds), alpha);
    auto back = phi_split(phi_inverse(parts, s.ds), s.ds);
    for (std::size_t j = 0; j < parts.size(); ++j) inv = inv && ext_class_equal(back[j], parts[j]);
    o.expect(inv, "phi and phi^-1 are not inverse");
    inverse += inv;
    // psi multiplicative and unital
    auto c = random_endo(s.hom, rng, f);
    auto pb = psi_matrix(b, s.ds), pc = psi_matrix(c, s.ds), pbc = psi_matrix(compose(b, c), s.ds);
    auto pid = psi_matrix(ModuleMap::identity(s.ds.module), s.ds);
    std::size_t r = s.ds.summands.size();
    bool mult = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        ModuleMap acc = ModuleMap::zero(s.ds.summands[j], s.ds.summands[i]);
        for (std::size_t k = 0; k < r; ++k) acc = add(acc, compose(pb[i][k], pc[k][j]));
        mult = mult && maps_equal(acc, pbc[i][j]);
        mult = mult && (i == j ? maps_equal(pid[i][j], ModuleMap::identity(s.ds.summands[i])) : pid[i][j].is_zero());
      }
    o.expect(mult, "psi is not multiplicative or unital");
    psi += mult;
    // (alpha f) g = alpha (f g), with f of degree 0 or 1
    ModuleMap fm = trial % 2 == 0 ? b : compose(mult_by(s.ds.module, "z"), b);
    bool fun = ext_class_equal(ext_action(ext_action(alpha, fm), c), ext_action(alpha, compose(fm, c)));
    o.expect(fun, "pullback functoriality fails");
    functorial += fun;
  }
  o.expect(nonzero >= 100, "fewer than 100 instances with alpha b != 0");
  if (o.pass)
    o.note = std::to_string(prop) + " phi(alpha b) = phi(alpha) psi(b), " + std::to_string(inverse) + " inverse, " + std::to_string(psi) +
             " psi, " + std::to_string(functorial) + " functoriality instances; " + std::to_string(nonzero) +
             " with alpha b != 0";
  return o;
}

Outcome row_annihilator_suite() {
  Outcome o;
  o.expect(!g_certs.empty(), "no certificates from the main construction");
  auto a = cone();
  auto m = cone_module(a);
  ReducedEnd red = reduce_mod_m(end_algebra(m), annihilator_exponent(m));
  for (const auto& c : g_certs) {
    auto tag = "r = " + std::to_string(c.r) + ": ";
    auto sel = select_generators(m, c.r, 12);
    o.expect(sel.premise, tag + "row annihilator not in the radical");
    ExtSpace space(m, truncation_module(a, c.n));
    FinDimModule v = ext_as_module(space, red);
    std::vector<Vec> gens;
    for (auto idx : sel.chosen) {
      Vec g(space.dim(), 0);
      g[idx] = 1;
      gens.push_back(g);
    }
    o.expect(row_annihilator(red.algebra, v, gens).contained, tag + "recheck of the annihilator fails");
    o.expect(c.verdicts.ann_in_radical, tag + "class annihilator not in the radical");
  }
  return o;
}

Outcome growth() {
  Outcome o;
  auto a = cone();
  auto m = cone_module(a);
  auto fit = ghp_fit(m, 10);
  o.expect(fit.degree == 1 && fit.degree_is_dim_minus_one, "fitted degree is not dim R - 1");
  for (int n = fit.stable_from; n <= 10; ++n) o.expect(fit.evaluate(n) == fit.lengths[n - 1], "fit is not exact");
  auto wide = ghp_fit(m, 12);
  std::ostringstream crossings;
  for (long h = 0; h <= 6; ++h) {
    int first = 0;
    for (int n = 1; n <= 12 && first == 0; ++n)
      if (wide.nu[n - 1] > h) first = n;
    o.expect(first > 0, "nu never exceeds h = " + std::to_string(h));
    int bound = janet_bound(fit.s, fit.slope, fit.intercept, fit.t, h);
    o.expect(bound >= first, "janet bound below the first crossing at h = " + std::to_string(h));
    crossings << (h ? "," : "") << first;
  }
  if (o.pass) o.note = "first crossings " + crossings.str();
  return o;
}

Outcome depth_lemma() {
  Outcome o;
  auto a = cone();
  auto p = plane();
  auto m = cone_module(a);
  std::vector<std::pair<GradedModule, GradedModule>> split{
      {m, m.shifted(2)}, {max_ideal(p), max_ideal(p).shifted(1)}, {residue_field(a), residue_field(a)}};
  for (const auto& [x, y] : split) {
    int d = depth(x);
    o.expect(depth(y) == d && depth(direct_sum({x, y}).module) == d, "split instance depths differ");
  }
  o.expect(!g_certs.empty(), "no certificates from the main construction");
  for (const auto& c : g_certs)
    o.expect(c.depth_x == 0 && c.depth_sum == c.depth_m && c.depth_m >= 1, "certificate depths inconsistent");
  return o;
}

int run_quiet(std::vector<std::string> args, std::string& err) {
  args.insert(args.begin(), "bigindec");
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  std::ostringstream out, e;
  auto* o = std::cout.rdbuf(out.rdbuf());
  auto* ee = std::cerr.rdbuf(e.rdbuf());
  int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(o);
  std::cerr.rdbuf(ee);
  err = e.str();
  return code;
}

Outcome negative_controls() {
  Outcome o;
  o.expect(!g_certs.empty(), "no certificates from the main construction");
  if (!o.pass) return o;
  Json base = certificate_json(g_certs.front());
  struct Tamper {
    std::string expect;
    std::function<void(Json&)> edit;
  };
  std::vector<Tamper> tampers{
      {"modules.X", [](Json& j) { j["modules"]["X"]["relations"]["entries"][0][0] = "x + y"; }},
      {"modules.M", [](Json& j) { j["modules"]["M"]["relations"]["entries"][0][0] = "x + y^2"; }},
      {"choice", [](Json& j) { j["modules"]["M"]["relations"]["entries"][0][0] = "x + y"; }},
      {"alpha", [](Json& j) { j["alpha"]["cocycle"]["entries"][0][0] = "2*x"; }},
      {"maps.iota", [](Json& j) { j["maps"]["iota"]["matrix"]["entries"][0][0] = "2"; }},
      {"maps.pi", [](Json& j) { j["maps"]["pi"]["matrix"]["entries"][0][1] = "2"; }},
      {"choice", [](Json& j) { j["choice"]["basis_indices"][0] = 3; }},
      {"choice.generators", [](Json& j) { j["choice"]["generators"][0]["cocycle"]["entries"][0][0] = "x^2"; }},
      {"verdicts.nonsplit", [](Json& j) { j["verdicts"]["nonsplit"] = false; }},
      {"verdicts.end0_local", [](Json& j) { j["verdicts"]["end0_dim"] = 2; }},
      {"verdicts.rank", [](Json& j) { j["verdicts"]["rank"]["t"] = 3; }},
      {"verdicts.depth", [](Json& j) { j["verdicts"]["depth"]["X"] = 1; }},
      {"oracle.split_search", [](Json& j) { j["oracle"]["split_search"] = "found"; }},
      {"valid", [](Json& j) { j["valid"] = false; }},
      {"ring", [](Json& j) { j["ring"]["char"] = 32004; }},
      {"format", [](Json& j) { j.erase("verdicts"); }},
  };
  for (const auto& t : tampers) {
    Json j = base;
    t.edit(j);
    auto rep = verify_certificate(j);
    o.expect(!rep.ok && rep.failing == t.expect, "tamper of " + t.expect + " reported as '" + rep.failing + "'");
  }
  std::string data = BIGINDEC_TEST_DATA, err;
  o.expect(run_quiet({"construct", data + "/a1_cone.bi", "-m", "FreeModule", "-r", "2", "-o", "/dev/null"}, err) == 3,
           "free seed does not exit 3");
  o.expect(run_quiet({"seed", data + "/plane.bi"}, err) == 0 && err.find("degenerates") != std::string::npos,
           "free canonical seed is not reported");
  int code = run_quiet({"check", data + "/bad_homogeneity.bi"}, err);
  o.expect(code == 2 && err.find("line 11, column 12") != std::string::npos, "non-homogeneous input: " + err);
  if (o.pass) o.note = std::to_string(tampers.size()) + " tampered certificates, 3 CLI fixtures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"polynomial ring in two variables", 10, koszul_suite},
      {"A1 cone module", 60, cone_suite},
      {"main construction r = 2, 3, 4", 1800, main_construction},
      {"phi, psi and pullback functoriality", 600, appendix_suite},
      {"row annihilator in the radical", 600, row_annihilator_suite},
      {"Ext growth, polynomial fit and search bound", 300, growth},
      {"depth lemma consistency", 600, depth_lemma},
      {"negative controls", 600, negative_controls},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.expect(false, "over the time budget");
    failures += !o.pass;
    std::printf("[%s] %d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  return failures;
}
