#include "bigindec/groebner.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bigindec {

namespace {

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::int32_t deg;
};

struct Pending {
  ModVec v;
  ModVec rep;
  std::int32_t deg;
  int counted_index;  // -1 for uncounted
  bool ring = false;
};

void check_homogeneous(const ModVec& v, std::int32_t deg, const char* what) {
  for (const auto& t : v.terms())
    require(t.tdeg == deg, ErrorKind::Input,
            std::string(what) + ": non-homogeneous module element (term degree " +
                std::to_string(t.tdeg) + ", expected " + std::to_string(deg) + ")");
}

bool single_term(const ModVec& v) { return v.size() == 1; }

}  // namespace

int ModuleGB::find_divisor(const VecTerm& t) const noexcept {
  if (t.comp >= by_comp_.size()) return -1;
  for (auto k : by_comp_[t.comp])
    if (leads_[k].mon.divides(t.mon)) return static_cast<int>(k);
  return -1;
}

bool ModuleGB::is_leading(const Monomial& mon, std::uint32_t comp) const noexcept {
  VecTerm t{mon, comp, 0, 1};
  return find_divisor(t) >= 0;
}

ModVec ModuleGB::reduce(ModVec v, ModVec* rep) const {
  std::vector<VecTerm> done;
  while (!v.is_zero()) {
    const VecTerm t = v.lead();
    int k = find_divisor(t);
    if (k < 0) {
      done.push_back(t);
      auto& terms = v.mutable_terms();
      terms.erase(terms.begin());
      continue;
    }
    Monomial q = t.mon / leads_[k].mon;
    Coeff c = field_.mul(t.coeff, field_.inv(leads_[k].coeff));
    v = sub_mul(v, c, q, basis_[k], field_);
    if (rep != nullptr && track_ && !reps_[k].is_zero()) *rep = sub_mul(*rep, c, q, reps_[k], field_);
  }
  return ModVec(std::move(done));
}

ModuleGB::ModuleGB(const GBContext& ctx, ModuleGBInput input)
    : field_(ctx.field),
      component_degrees_(std::move(input.component_degrees)),
      counted_degrees_(std::move(input.counted_degrees)),
      track_(input.track || input.syzygies) {
  const auto& f = field_;
  require(counted_degrees_.size() == input.counted.size(), ErrorKind::Internal,
          "ModuleGB: counted degree list mismatch");
  by_comp_.assign(component_degrees_.size(), {});
  minimal_.assign(input.counted.size(), 0);

  std::vector<Pending> pending;
  if (input.ring_relations) {
    for (std::uint32_t c = 0; c < component_degrees_.size(); ++c)
      for (const auto& g : ctx.ring_gb) {
        ModVec v = embed(g, c, component_degrees_[c]);
        pending.push_back({v, {}, v.degree(), -1, true});
      }
  }
  for (auto& u : input.uncounted) {
    if (u.is_zero()) continue;
    std::int32_t d = u.degree();
    check_homogeneous(u, d, "Gröbner input");
    pending.push_back({std::move(u), {}, d, -1, false});
  }
  for (std::size_t j = 0; j < input.counted.size(); ++j) {
    ModVec rep;
    if (track_)
      rep = ModVec({VecTerm{Monomial{}, static_cast<std::uint32_t>(j), counted_degrees_[j], 1}});
    check_homogeneous(input.counted[j], counted_degrees_[j], "Gröbner input");
    pending.push_back({std::move(input.counted[j]), std::move(rep), counted_degrees_[j],
                       static_cast<int>(j), false});
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return (a.counted_index < 0) > (b.counted_index < 0);  // uncounted first
  });

  std::vector<char> is_ring;
  std::map<std::int32_t, std::vector<Pair>> pairs;

  auto add_element = [&](ModVec v, ModVec rep, bool ring) {
    Coeff inv = f.inv(v.lead().coeff);
    if (inv != 1) {
      v = scale(v, inv, f);
      if (!rep.is_zero()) rep = scale(rep, inv, f);
    }
    auto idx = static_cast<std::uint32_t>(basis_.size());
    const VecTerm lead = v.lead();
    for (auto k : by_comp_[lead.comp]) {
      if (is_ring[k] && ring) continue;
      Monomial l = lcm(leads_[k].mon, lead.mon, ctx.weights);
      std::int32_t d = l.degree + component_degrees_[lead.comp];
      pairs[d].push_back({k, idx, l, d});
    }
    leads_.push_back(lead);
    basis_.push_back(std::move(v));
    reps_.push_back(std::move(rep));
    is_ring.push_back(ring ? 1 : 0);
    by_comp_[lead.comp].push_back(idx);
  };

  std::size_t next_input = 0;
  while (next_input < pending.size() || !pairs.empty()) {
    std::int32_t d = next_input < pending.size() ? pending[next_input].deg : 0;
    if (!pairs.empty() && (next_input >= pending.size() || pairs.begin()->first < d))
      d = pairs.begin()->first;

    if (!pairs.empty() && pairs.begin()->first == d) {
      std::vector<Pair> batch = std::move(pairs.begin()->second);
      pairs.erase(pairs.begin());
      std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
        return a.j != b.j ? a.j < b.j : a.i < b.i;
      });
      for (const auto& p : batch) {
        const ModVec& gi = basis_[p.i];
        const ModVec& gj = basis_[p.j];
        bool rep_free = reps_[p.i].is_zero() && reps_[p.j].is_zero();
        if (single_term(gi) && single_term(gj) && (rep_free || !input.syzygies)) continue;
        Monomial mi = p.lcm / leads_[p.i].mon;
        Monomial mj = p.lcm / leads_[p.j].mon;
        ModVec s = sub_mul(mul_term(gi, mi, 1, f), 1, mj, gj, f);
        ModVec rep;
        if (track_) rep = sub_mul(mul_term(reps_[p.i], mi, 1, f), 1, mj, reps_[p.j], f);
        ModVec r = reduce(std::move(s), track_ ? &rep : nullptr);
        if (!r.is_zero())
          add_element(std::move(r), std::move(rep), false);
        else if (input.syzygies && !rep.is_zero())
          syzygies_.push_back(std::move(rep));
      }
      continue;
    }

    while (next_input < pending.size() && pending[next_input].deg == d) {
      Pending& in = pending[next_input++];
      ModVec rep = std::move(in.rep);
      ModVec r = reduce(std::move(in.v), track_ ? &rep : nullptr);
      if (!r.is_zero()) {
        if (in.counted_index >= 0) minimal_[in.counted_index] = 1;
        add_element(std::move(r), std::move(rep), in.ring);
      } else if (input.syzygies && !rep.is_zero()) {
        syzygies_.push_back(std::move(rep));
      }
    }
  }

  // tail reduction; leading terms are already pairwise non-divisible
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    ModVec tail(std::vector<VecTerm>(basis_[k].terms().begin() + 1, basis_[k].terms().end()));
    if (tail.is_zero()) continue;
    ModVec rep = reps_[k];
    std::vector<VecTerm> head{basis_[k].lead()};
    // the element must not reduce by itself: its lead is strictly larger than the tail
    ModVec r = reduce(std::move(tail), track_ ? &rep : nullptr);
    for (const auto& t : r.terms()) head.push_back(t);
    basis_[k] = ModVec(std::move(head));
    if (track_) reps_[k] = std::move(rep);
  }
}

ModVec ModuleGB::normal_form(const ModVec& v) const { return reduce(v, nullptr); }

std::optional<ModVec> ModuleGB::lift(const ModVec& v) const {
  require(track_, ErrorKind::Internal, "ModuleGB::lift requires tracked representations");
  ModVec rep;
  ModVec r = reduce(v, &rep);
  if (!r.is_zero()) return std::nullopt;
  return scale(rep, field_.neg(1), field_);
}

Polynomial reduce_polynomial(const Polynomial& p, const std::vector<Polynomial>& gb,
                             const PrimeField& field) {
  if (gb.empty() || p.is_zero()) return p;
  std::vector<PolyTerm> done;
  Polynomial v = p;
  while (!v.is_zero()) {
    const PolyTerm t = v.lead();
    const Polynomial* div = nullptr;
    for (const auto& g : gb)
      if (g.lead().mon.divides(t.mon)) {
        div = &g;
        break;
      }
    if (div == nullptr) {
      done.push_back(t);
      v = Polynomial(std::vector<PolyTerm>(v.terms().begin() + 1, v.terms().end()));
      continue;
    }
    Coeff c = field.mul(t.coeff, field.inv(div->lead().coeff));
    v = sub(v, mul_term(*div, t.mon / div->lead().mon, c, field), field);
  }
  return Polynomial(std::move(done));
}

}  // namespace bigindec
