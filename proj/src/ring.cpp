#include "bigindec/ring.hpp"

#include <sstream>

namespace bigindec {

std::shared_ptr<const GradedRing> GradedRing::create(std::string name, std::uint32_t characteristic,
                                                     std::vector<std::string> variables,
                                                     std::vector<int> weights,
                                                     std::vector<Polynomial> ideal) {
  require(!variables.empty(), ErrorKind::Input, "ring needs at least one variable");
  require(static_cast<int>(variables.size()) <= kMaxVars, ErrorKind::Input,
          "at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights.empty()) weights.assign(variables.size(), 1);
  require(weights.size() == variables.size(), ErrorKind::Input, "weights/variables length mismatch");
  for (int w : weights) require(w > 0, ErrorKind::Input, "weights must be positive");

  std::shared_ptr<GradedRing> r(new GradedRing());
  r->name_ = std::move(name);
  r->variables_ = std::move(variables);
  r->ctx_.field = PrimeField(characteristic);
  r->ctx_.weights = std::move(weights);

  std::vector<ModVec> gens;
  std::vector<std::int32_t> degs;
  for (auto& g : ideal) {
    require(g.is_homogeneous(), ErrorKind::Input, "defining ideal generator is not homogeneous");
    if (g.is_zero()) continue;
    gens.push_back(embed(g, 0, 0));
    degs.push_back(g.degree());
    r->ideal_.push_back(g);
  }
  ModuleGBInput in;
  in.component_degrees = {0};
  in.counted = std::move(gens);
  in.counted_degrees = std::move(degs);
  in.ring_relations = false;
  ModuleGB gb(r->ctx_, std::move(in));
  for (const auto& v : gb.basis()) r->ctx_.ring_gb.push_back(component(v, 0));

  std::vector<Monomial> leads;
  for (const auto& g : r->ctx_.ring_gb) leads.push_back(g.lead().mon);
  r->krull_dim_ = monomial_ideal_dimension(leads, r->num_vars());
  return r;
}

Monomial GradedRing::make_monomial(std::span<const int> exponents) const {
  require(static_cast<int>(exponents.size()) <= num_vars(), ErrorKind::Internal,
          "make_monomial: too many exponents");
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    require(exponents[i] >= 0 && exponents[i] <= kMaxExponent, ErrorKind::Input,
            "exponent out of range (0.." + std::to_string(kMaxExponent) + ")");
    e |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
  return {e, weighted_degree(e, weights())};
}

Monomial GradedRing::variable(int i) const {
  std::uint64_t e = std::uint64_t{1} << (8 * i);
  return {e, weights()[i]};
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
  return reduce_polynomial(f, ctx_.ring_gb, field());
}

Polynomial GradedRing::multiply(const Polynomial& a, const Polynomial& b) const {
  return reduce(mul(a, b, field()));
}

std::vector<Monomial> GradedRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(num_vars(), 0);
  // enumerate exponent vectors with weighted degree d, last variable fastest
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars() - 1) {
      if (remaining % weights()[var] == 0) {
        e[var] = remaining / weights()[var];
        if (e[var] <= kMaxExponent) out.push_back(make_monomial(e));
      }
      return;
    }
    for (int k = 0; k * weights()[var] <= remaining && k <= kMaxExponent; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k * weights()[var]);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b) > 0; });
  return out;
}

std::vector<Monomial> GradedRing::monomials_of_standard_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(num_vars(), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars() - 1) {
      e[var] = remaining;
      out.push_back(make_monomial(e));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b) > 0; });
  return out;
}

std::vector<Monomial> GradedRing::standard_monomials(int degree) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(degree)) {
    bool in_lead = false;
    for (const auto& g : ctx_.ring_gb)
      if (g.lead().mon.divides(m)) {
        in_lead = true;
        break;
      }
    if (!in_lead) out.push_back(m);
  }
  return out;
}

std::string GradedRing::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < num_vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    os << variables_[i];
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string GradedRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = field().to_signed(t.coeff);
    bool negative = c < 0;
    std::int64_t a = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (t.mon.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << to_string(t.mon);
    }
    first = false;
  }
  return os.str();
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, int num_vars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;  // unit ideal: empty spectrum
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << num_vars); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gens) {
      bool supported = true;
      for (int i = 0; i < num_vars; ++i)
        if (g.exponent(i) > 0 && !(subset & (1u << i))) {
          supported = false;
          break;
        }
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace bigindec
