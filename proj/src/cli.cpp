#include "bigindec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bigindec/certificate.hpp"
#include "bigindec/workspace.hpp"

namespace bigindec {

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInput = 2, kExhausted = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SearchExhausted:
    case ErrorKind::CharacteristicGuard:
      return kExhausted;
    case ErrorKind::Internal:
      return kInvalid;
    default:
      return kInput;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::Input, "cannot write " + path);
  out << text;
}

std::optional<std::uint64_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  require(end != nullptr && *end == '\0', ErrorKind::Input, std::string(name) + " is not a non-negative integer");
  return x;
}

WorkspaceSpec load(const std::string& path) {
  std::optional<std::uint32_t> prime;
  if (auto p = env_number("BIGINDEC_PRIME")) {
    require(*p >= 2 && *p < (1ULL << 31) && is_prime(*p), ErrorKind::Input, "BIGINDEC_PRIME is not a prime below 2^31");
    prime = static_cast<std::uint32_t>(*p);
  }
  return parse_spec(read_file(path), prime);
}

// Flag, then environment, then the workspace config block.
std::uint64_t resolve_seed(const WorkspaceSpec& spec, std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (auto e = env_number("BIGINDEC_SEED")) return *e;
  return spec.config.seed;
}

std::string module_text(const std::string& name, const std::string& ring, const GradedModule& m) {
  WorkspaceSpec one;
  one.modules.push_back(ModuleDecl{name, ring, m});
  return print_spec(one);
}

std::string join(const std::vector<std::int32_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

struct Options {
  std::string file, module, out, csv, ring;
  int length = 3, n = 1, i = 1, n_max = 0, r = 2, t = -1, trials = 200;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

int cmd_check(const Options& o) {
  auto spec = load(o.file);
  for (const auto& r : spec.rings)
    std::cout << "ring " << r->name() << ": " << r->num_vars() << " variables, p = " << r->field().characteristic()
              << ", dimension " << r->krull_dim() << "\n";
  for (const auto& m : spec.modules)
    std::cout << "module " << m.name << " over " << m.ring << ": " << m.module.num_generators() << " generators, "
              << m.module.relations().cols() << " relations\n";
  for (const auto& p : spec.primes) std::cout << "prime " << p.name << " in " << p.ring << "\n";
  return kOk;
}

int cmd_resolve(const Options& o) {
  auto spec = load(o.file);
  require(o.length >= 1, ErrorKind::Input, "length must be positive");
  Resolution res = free_resolution(spec.module(o.module).module, static_cast<std::size_t>(o.length));
  auto b = res.betti();
  for (std::size_t i = 0; i < b.size(); ++i)
    std::cout << "F" << i << ": rank " << b[i] << "  degrees [" << join(res.free_degrees[i]) << "]\n";
  return kOk;
}

int cmd_ext(const Options& o) {
  auto spec = load(o.file);
  const auto& m = spec.module(o.module).module;
  require(o.n >= 1 && o.i >= 0, ErrorKind::Input, "need n >= 1 and i >= 0");
  GradedModule t = truncation_module(m.ring(), o.n);
  long dim = o.i == 1 ? static_cast<long>(ExtSpace(m, t).dim()) : length_and_hilbert(ext_module(m, t, o.i).module).length;
  std::cout << "dim Ext^" << o.i << "(" << o.module << ", R/m^" << o.n << ") = " << dim << "\n";
  return kOk;
}

int cmd_hilbert_ext(const Options& o) {
  auto spec = load(o.file);
  int n_max = o.n_max > 0 ? o.n_max : spec.config.n_max;
  GHPFit fit = ghp_fit(spec.module(o.module).module, n_max);
  std::ostringstream csv;
  csv << "n,length,nu_R\n";
  for (int n = 1; n <= n_max; ++n) csv << n << "," << fit.lengths[n - 1] << "," << fit.nu[n - 1] << "\n";
  if (!o.csv.empty()) write_file(o.csv, csv.str());
  else std::cout << csv.str();
  std::cout << "s = " << fit.s << ", t = " << fit.t << "\n";
  if (fit.degree < 0) {
    std::cout << "no stable polynomial tail within n <= " << n_max << "\n";
  } else {
    std::cout << "degree " << fit.degree << " from n = " << fit.stable_from << " (dim R - 1 = "
              << spec.module(o.module).module.r().krull_dim() - 1 << ")\n";
    std::cout << "tail bound: length(n) >= " << fit.slope << " n + " << fit.intercept << "\n";
  }
  return kOk;
}

int cmd_depth(const Options& o) {
  auto spec = load(o.file);
  int d = depth(spec.module(o.module).module);
  std::cout << "depth " << o.module << " = " << d << "\n";
  return kOk;
}

int cmd_rank(const Options& o) {
  auto spec = load(o.file);
  const auto& decl = spec.module(o.module);
  auto witnesses = spec.primes_over(spec.ring(decl.ring));
  if (o.t < 0) {
    auto t = punctured_rank(decl.module, witnesses);
    if (!t) {
      std::cout << o.module << " has no certified constant rank on the punctured spectrum\n";
      return kInvalid;
    }
    std::cout << "punctured rank " << *t << "\n";
    return kOk;
  }
  RankCertificate c = rank_punctured_certificate(decl.module, o.t, witnesses);
  std::cout << "t = " << o.t << ": " << (c.pass ? "pass" : "fail") << " (Fitt_{t-1} zero: " << c.fitt_low_zero
            << " via " << c.method_low << ", Fitt_t m-primary: " << c.fitt_t_m_primary << ")\n";
  for (const auto& w : c.witnesses) std::cout << "  witness " << w.name << ": local rank " << w.local_rank << "\n";
  if (!c.pass && !c.reason.empty()) std::cout << "  " << c.reason << "\n";
  return c.pass ? kOk : kInvalid;
}

int cmd_seed(const Options& o) {
  auto spec = load(o.file);
  require(!spec.rings.empty(), ErrorKind::Input, "no ring declared");
  RingPtr ring = o.ring.empty() ? spec.rings.front() : spec.ring(o.ring);
  SeedReport rep = canonical_seed(ring, resolve_seed(spec, o.seed));
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "# " << rep.summands << " summand(s); depth " << rep.depth << ", punctured rank " << rep.rank << "\n";
  std::cout << module_text("Seed", ring->name(), rep.module);
  return kOk;
}

int cmd_decompose(const Options& o) {
  auto spec = load(o.file);
  const auto& decl = spec.module(o.module);
  auto parts = decompose(decl.module, resolve_seed(spec, o.seed));
  std::cout << "# " << parts.size() << " indecomposable summand(s)\n";
  for (std::size_t i = 0; i < parts.size(); ++i)
    std::cout << module_text(decl.name + "_" + std::to_string(i + 1), decl.ring, parts[i].module);
  return kOk;
}

int cmd_construct(const Options& o) {
  auto spec = load(o.file);
  const auto& decl = spec.module(o.module);
  ConstructionOptions opt;
  opt.n_max = o.n_max > 0 ? o.n_max : spec.config.n_max;
  opt.seed = resolve_seed(spec, o.seed);
  opt.idempotent_trials = o.trials;
  require(o.r >= 1, ErrorKind::Input, "r must be positive");
  require(o.trials >= 1, ErrorKind::Input, "trials must be positive");
  ConstructionCertificate c = construct_big_indecomposable(decl.module, o.r, opt);
  write_file(o.out, certificate_text(c, o.timings));
  std::cout << (c.valid ? "VALID" : "INVALID") << ": r = " << c.r << ", n = " << c.n << ", X has "
            << c.sequence.middle().num_generators() << " generators";
  if (!c.valid) std::cout << "; failed check " << c.failing;
  std::cout << "\n";
  return c.valid ? kOk : kInvalid;
}

int cmd_verify(const Options& o) {
  Json cert;
  try {
    cert = Json::parse(read_file(o.file));
  } catch (const Json::exception& e) {
    fail(ErrorKind::Input, std::string("certificate is not valid JSON: ") + e.what());
  }
  VerifyReport rep = verify_certificate(cert);
  if (rep.ok) {
    std::cout << "VALID: all " << rep.checks.size() << " checks pass\n";
    return kOk;
  }
  std::cout << "INVALID: check " << rep.failing << " failed";
  if (!rep.detail.empty()) std::cout << " (" << rep.detail << ")";
  std::cout << "\n";
  return kInvalid;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Big indecomposable modules over graded rings: construction and certificates"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed_value = 0;

  auto file = [&](CLI::App* c, const char* what) { c->add_option("FILE", o.file, what)->required(); };
  auto module = [&](CLI::App* c) { c->add_option("-m,--module", o.module, "module name")->required(); };
  auto seed = [&](CLI::App* c) {
    c->add_option("--seed", seed_value, "random seed (overrides BIGINDEC_SEED and the config block)");
  };

  auto* check = app.add_subcommand("check", "parse and validate a workspace");
  file(check, "workspace file");
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
  file(resolve, "workspace file");
  module(resolve);
  resolve->add_option("-l,--length", o.length, "number of steps")->required();
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, R/m^n)");
  file(ext, "workspace file");
  module(ext);
  ext->add_option("-n", o.n, "truncation power")->required();
  ext->add_option("-i", o.i, "cohomological degree (default 1)");
  auto* hilbert = app.add_subcommand("hilbert-ext", "lengths of Ext^1(M, R/m^n) and their polynomial fit");
  file(hilbert, "workspace file");
  module(hilbert);
  hilbert->add_option("--n-max", o.n_max, "largest n")->required();
  hilbert->add_option("--csv", o.csv, "write the table as CSV");
  auto* dep = app.add_subcommand("depth", "depth of a module");
  file(dep, "workspace file");
  module(dep);
  auto* rank = app.add_subcommand("rank", "rank on the punctured spectrum");
  file(rank, "workspace file");
  module(rank);
  rank->add_option("-t", o.t, "rank to certify (default: search)");
  auto* sd = app.add_subcommand("seed", "canonical seed module of a ring");
  file(sd, "workspace file");
  sd->add_option("--ring", o.ring, "ring name (default: the first ring)");
  seed(sd);
  auto* dec = app.add_subcommand("decompose", "indecomposable summands");
  file(dec, "workspace file");
  module(dec);
  seed(dec);
  auto* con = app.add_subcommand("construct", "build an indecomposable extension and certify it");
  file(con, "workspace file");
  module(con);
  con->add_option("-r", o.r, "number of copies of M")->required();
  con->add_option("--n-max", o.n_max, "largest truncation power searched (default from config, else 12)");
  con->add_option("-o,--output", o.out, "certificate path")->required();
  con->add_option("--trials", o.trials, "random idempotent trials for the oracle (default 200)");
  con->add_flag("--timings", o.timings, "include wall-clock timings in the certificate");
  seed(con);
  auto* ver = app.add_subcommand("verify", "re-check a certificate from its own data");
  ver->add_option("CERT", o.file, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  for (auto* c : {sd, dec, con})
    if (c->parsed() && c->count("--seed") > 0) o.seed = seed_value;

  try {
    if (check->parsed()) return cmd_check(o);
    if (resolve->parsed()) return cmd_resolve(o);
    if (ext->parsed()) return cmd_ext(o);
    if (hilbert->parsed()) return cmd_hilbert_ext(o);
    if (dep->parsed()) return cmd_depth(o);
    if (rank->parsed()) return cmd_rank(o);
    if (sd->parsed()) return cmd_seed(o);
    if (dec->parsed()) return cmd_decompose(o);
    if (con->parsed()) return cmd_construct(o);
    if (ver->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInput;
}

}  // namespace bigindec
