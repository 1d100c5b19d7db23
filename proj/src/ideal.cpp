#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "jetscheme/ideal.hpp"

namespace jetscheme {

namespace {

std::vector<Var> merge_vars(std::vector<Var> a, std::span<const Var> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string var_list(std::span<const Var> vars) {
  std::string s;
  for (const auto& v : vars) {
    if (!s.empty()) s += ",";
    s += v.name();
  }
  return s;
}

VerificationReport exhausted_report(std::string claim, const BudgetExhausted& e, double seconds) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.outcome = Outcome::BudgetExhausted;
  r.certificate = e.what();
  r.spairs = e.spairs();
  r.seconds = seconds;
  return r;
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> generators, std::vector<Var> ambient) {
  for (auto& g : generators) {
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  for (const auto& g : gens_) {
    auto v = g.variables();
    ambient.insert(ambient.end(), v.begin(), v.end());
  }
  ambient_ = merge_vars(std::move(ambient), {});
}

Ideal Ideal::of_variables(std::span<const Var> vars) {
  std::vector<Polynomial> g(vars.begin(), vars.end());
  return Ideal(std::move(g));
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.size() == 1; });
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(std::move(g), merge_vars(ambient_, other.ambient_));
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(std::move(g), ambient_);
}

Ideal Ideal::with_ambient(std::span<const Var> vars) const {
  return Ideal(gens_, merge_vars(ambient_, vars));
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& order,
                                                     const Budget& budget) const {
  std::lock_guard lock(cache_->mu);
  for (const auto& b : cache_->bases) {
    if (b->order == order) return b;
  }
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(*this, order, budget));
  cache_->bases.push_back(basis);
  return basis;
}

Var fresh_aux(std::span<const Polynomial> polys) {
  std::uint32_t next = 0;
  for (const auto& p : polys) {
    for (const auto& v : p.variables()) {
      if (v.family == Family::Aux) next = std::max(next, v.index + 1);
    }
  }
  return wv(next);
}

PresolveResult linear_presolve(const Ideal& ideal) {
  std::vector<Polynomial> gens = ideal.generators();
  std::vector<Var> eliminated;
  for (;;) {
    std::vector<Var> round;
    for (const auto& g : gens) {
      if (g.is_constant()) {
        return {Ideal::unit(), eliminated, true};
      }
      if (g.size() == 1 && g.total_degree() == 1) {
        const Var v = g.leading().mono.factors()[0].first;
        if (std::find(round.begin(), round.end(), v) == round.end()) round.push_back(v);
      }
    }
    if (round.empty()) break;
    eliminated.insert(eliminated.end(), round.begin(), round.end());
    std::vector<Polynomial> next;
    for (const auto& g : gens) {
      Polynomial r = set_zero(g, round);
      if (!r.is_zero()) next.push_back(std::move(r));
    }
    gens = std::move(next);
  }
  std::vector<Var> ambient;
  for (const auto& v : ideal.ambient()) {
    if (std::find(eliminated.begin(), eliminated.end(), v) == eliminated.end()) ambient.push_back(v);
  }
  return {Ideal(std::move(gens), std::move(ambient)), std::move(eliminated), false};
}

VerificationReport member(const Polynomial& p, const Ideal& ideal, const Budget& budget,
                          std::string claim) {
  if (claim.empty()) claim = p.to_string() + " in I";
  const auto t0 = std::chrono::steady_clock::now();
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return VerificationReport::verified_with(claim, "ideal is the unit ideal");
  const Polynomial q = pre.reduce(p);
  if (q.is_zero()) {
    auto r = VerificationReport::verified_with(
        claim, "vanishes modulo the coordinate generators " + var_list(pre.eliminated));
    r.seconds = since(t0);
    return r;
  }
  std::shared_ptr<const GroebnerBasis> gb;
  try {
    gb = pre.residual.groebner(MonomialOrder::grevlex(), budget);
  } catch (const BudgetExhausted& e) {
    return exhausted_report(claim, e, since(t0));
  }
  const Polynomial nf = normal_form(q, *gb);
  VerificationReport r =
      nf.is_zero()
          ? VerificationReport::verified_with(
                claim, "normal form 0 modulo a " + std::to_string(gb->elements.size()) +
                           "-element grevlex basis after eliminating " +
                           std::to_string(pre.eliminated.size()) + " coordinates")
          : VerificationReport::refuted_with(claim, "nonzero normal form " + nf.to_string());
  r.spairs = gb->spairs;
  r.seconds = since(t0);
  return r;
}

VerificationReport radical_member(const Polynomial& p, const Ideal& ideal, const Budget& budget,
                                  std::string claim) {
  if (claim.empty()) claim = p.to_string() + " in sqrt(I)";
  const auto t0 = std::chrono::steady_clock::now();
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return VerificationReport::verified_with(claim, "ideal is the unit ideal");
  const Polynomial q = pre.reduce(p);
  if (q.is_zero()) {
    auto r = VerificationReport::verified_with(
        claim, "vanishes modulo the coordinate generators " + var_list(pre.eliminated));
    r.seconds = since(t0);
    return r;
  }
  std::vector<Polynomial> gens = pre.residual.generators();
  gens.push_back(q);
  const Var w = fresh_aux(gens);
  gens.back() = Polynomial(1L) - Polynomial(w) * q;
  GroebnerBasis gb;
  try {
    gb = buchberger(Ideal(std::move(gens)), MonomialOrder::grevlex(), budget);
  } catch (const BudgetExhausted& e) {
    return exhausted_report(claim, e, since(t0));
  }
  VerificationReport r =
      gb.is_unit()
          ? VerificationReport::verified_with(claim, "1 in I + <1 - " + w.name() + "*p>")
          : VerificationReport::refuted_with(
                claim, "1 not in I + <1 - " + w.name() + "*p>; reduced basis has " +
                           std::to_string(gb.elements.size()) + " elements, first " +
                           gb.elements.front().to_string());
  r.spairs = gb.spairs;
  r.seconds = since(t0);
  return r;
}

Ideal monomial_ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) return Ideal::unit();
  std::vector<Var> ambient;
  for (const auto& I : ideals) {
    if (!I.is_monomial()) throw std::invalid_argument("monomial_ideal_intersect: non-monomial generator");
    ambient = merge_vars(std::move(ambient), I.ambient());
  }
  auto minimalize = [](std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) < 0; });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms) {
      // ascending grevlex is degree-compatible, so divisors come first
      if (std::none_of(out.begin(), out.end(), [&](const Monomial& d) { return d.divides(m); })) {
        out.push_back(m);
      }
    }
    return out;
  };
  auto monos_of = [](const Ideal& I) {
    std::vector<Monomial> ms;
    for (const auto& g : I.generators()) ms.push_back(g.leading().mono);
    return ms;
  };
  std::vector<Monomial> acc = minimalize(monos_of(ideals[0]));
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    const auto other = minimalize(monos_of(ideals[k]));
    std::vector<Monomial> next;
    for (const auto& a : acc) {
      for (const auto& b : other) next.push_back(a.lcm(b));
    }
    acc = minimalize(std::move(next));
  }
  std::vector<Polynomial> gens;
  for (auto& m : acc) gens.push_back(Polynomial::term(std::move(m), Rational(1)));
  return Ideal(std::move(gens), std::move(ambient));
}

Ideal ideal_intersect_elim(const Ideal& a, const Ideal& b, const Budget& budget) {
  const auto ambient = merge_vars(a.ambient(), b.ambient());
  const PresolveResult pa = linear_presolve(a);
  const PresolveResult pb = linear_presolve(b);
  if (pa.unit) return b.with_ambient(ambient);
  if (pb.unit) return a.with_ambient(ambient);
  std::vector<Var> common;
  for (const auto& v : pa.eliminated) {
    if (std::find(pb.eliminated.begin(), pb.eliminated.end(), v) != pb.eliminated.end()) {
      common.push_back(v);
    }
  }
  auto strip = [&](const Ideal& I) {
    std::vector<Polynomial> g;
    for (const auto& p : I.generators()) g.push_back(set_zero(p, common));
    return Ideal(std::move(g));
  };
  const Ideal ra = strip(a);
  const Ideal rb = strip(b);

  std::vector<Polynomial> all = ra.generators();
  all.insert(all.end(), rb.generators().begin(), rb.generators().end());
  const Var w = fresh_aux(all);
  const Polynomial pw(w);
  std::vector<Polynomial> gens;
  for (const auto& g : ra.generators()) gens.push_back(pw * g);
  for (const auto& g : rb.generators()) gens.push_back((Polynomial(1L) - pw) * g);

  std::vector<Polynomial> out(common.begin(), common.end());
  if (!ra.generators().empty() && !rb.generators().empty()) {
    const GroebnerBasis gb = buchberger(Ideal(std::move(gens)), MonomialOrder::block({w}), budget);
    for (const auto& e : gb.elements) {
      if (!e.uses(w)) out.push_back(e);
    }
  }
  return Ideal(std::move(out), ambient);
}

Ideal saturate(const Ideal& ideal, const Polynomial& p, const Budget& budget) {
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return Ideal::unit().with_ambient(ideal.ambient());
  const Polynomial q = pre.reduce(p);
  std::vector<Polynomial> gens = pre.residual.generators();
  gens.push_back(q);
  const Var w = fresh_aux(gens);
  gens.back() = Polynomial(1L) - Polynomial(w) * q;
  const GroebnerBasis gb = buchberger(Ideal(std::move(gens)), MonomialOrder::block({w}), budget);
  std::vector<Polynomial> out(pre.eliminated.begin(), pre.eliminated.end());
  for (const auto& e : gb.elements) {
    if (!e.uses(w)) out.push_back(e);
  }
  return Ideal(std::move(out), ideal.ambient());
}

int krull_dimension(const Ideal& ideal, const Budget& budget) {
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return -1;
  const auto gb = pre.residual.groebner(MonomialOrder::grevlex(), budget);
  if (gb->is_unit()) return -1;
  const auto& vars = pre.residual.ambient();
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& e : gb->elements) {
    std::vector<std::size_t> s;
    for (const auto& [v, d] : e.leading().mono.factors()) {
      s.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
    }
    supports.push_back(std::move(s));
  }
  // Minimum set of variables meeting every leading-monomial support.
  std::size_t best = vars.size();
  std::vector<bool> chosen(vars.size(), false);
  std::function<void(std::size_t)> search = [&](std::size_t used) {
    if (used >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      if (std::none_of(s.begin(), s.end(), [&](std::size_t k) { return chosen[k]; })) {
        if (open == nullptr || s.size() < open->size()) open = &s;
      }
    }
    if (open == nullptr) {
      best = used;
      return;
    }
    if (used + 1 >= best) return;
    for (std::size_t k : *open) {
      chosen[k] = true;
      search(used + 1);
      chosen[k] = false;
    }
  };
  search(0);
  return static_cast<int>(vars.size() - best);
}

}  // namespace jetscheme

namespace jetscheme {

VerificationReport contained(std::span<const Polynomial> polys, const Ideal& ideal,
                             const Budget& budget, std::string claim) {
  if (claim.empty()) claim = "containment";
  const auto t0 = std::chrono::steady_clock::now();
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return VerificationReport::verified_with(claim, "ideal is the unit ideal");
  std::vector<Polynomial> rest;
  for (const auto& p : polys) {
    Polynomial q = pre.reduce(p);
    if (!q.is_zero()) rest.push_back(std::move(q));
  }
  const std::string counts = std::to_string(polys.size()) + " polynomials, " +
                             std::to_string(polys.size() - rest.size()) +
                             " vanish modulo coordinate generators";
  if (rest.empty()) {
    auto r = VerificationReport::verified_with(claim, counts);
    r.seconds = since(t0);
    return r;
  }
  std::shared_ptr<const GroebnerBasis> gb;
  try {
    gb = pre.residual.groebner(MonomialOrder::grevlex(), budget);
  } catch (const BudgetExhausted& e) {
    return exhausted_report(claim, e, since(t0));
  }
  VerificationReport r = VerificationReport::verified_with(
      claim, counts + ", the rest have normal form 0 modulo a " +
                 std::to_string(gb->elements.size()) + "-element grevlex basis");
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const Polynomial nf = normal_form(pre.reduce(polys[k]), *gb);
    if (!nf.is_zero()) {
      r = VerificationReport::refuted_with(
          claim, polys[k].to_string() + " not in ideal, normal form " + nf.to_string());
      break;
    }
  }
  r.spairs = gb->spairs;
  r.seconds = since(t0);
  return r;
}

VerificationReport radically_contained(std::span<const Polynomial> polys, const Ideal& ideal,
                                       const Budget& budget, std::string claim,
                                       unsigned max_power) {
  if (claim.empty()) claim = "radical containment";
  const auto t0 = std::chrono::steady_clock::now();
  const PresolveResult pre = linear_presolve(ideal);
  if (pre.unit) return VerificationReport::verified_with(claim, "ideal is the unit ideal");
  std::vector<Polynomial> rest;
  for (const auto& p : polys) {
    Polynomial q = pre.reduce(p);
    if (!q.is_zero()) rest.push_back(std::move(q));
  }
  std::size_t by_coordinates = polys.size() - rest.size();
  std::size_t by_power = 0;
  std::size_t by_aux = 0;
  std::uint64_t spairs = 0;
  std::shared_ptr<const GroebnerBasis> gb;
  if (!rest.empty() && max_power > 0) {
    try {
      gb = pre.residual.groebner(MonomialOrder::grevlex(), budget);
      spairs += gb->spairs;
    } catch (const BudgetExhausted&) {
      gb.reset();  // fall back to the auxiliary-variable test
    }
  }
  for (const auto& q : rest) {
    bool done = false;
    if (gb) {
      Polynomial power = normal_form(q, *gb);
      for (unsigned k = 1; k <= max_power && !done; ++k) {
        if (k > 1) power = normal_form(power * q, *gb);
        done = power.is_zero();
      }
    }
    if (done) {
      ++by_power;
      continue;
    }
    VerificationReport sub = radical_member(q, pre.residual, budget, q.to_string() + " in sqrt(I)");
    spairs += sub.spairs;
    if (!sub.verified()) {
      sub.claim = claim;
      sub.certificate = q.to_string() + ": " + sub.certificate;
      sub.spairs = spairs;
      sub.seconds = since(t0);
      return sub;
    }
    ++by_aux;
  }
  VerificationReport r = VerificationReport::verified_with(
      claim, std::to_string(polys.size()) + " polynomials: " + std::to_string(by_coordinates) +
                 " vanish modulo coordinate generators, " + std::to_string(by_power) +
                 " have a power of degree <= " + std::to_string(max_power) + " in I, " +
                 std::to_string(by_aux) + " certified by 1 in I + <1 - w*p>");
  r.spairs = spairs;
  r.seconds = since(t0);
  return r;
}

}  // namespace jetscheme
