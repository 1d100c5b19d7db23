#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <sstream>

#include "jetscheme/ideal.hpp"

namespace jetscheme {

MonomialOrder MonomialOrder::block(std::vector<Var> eliminated) {
  std::sort(eliminated.begin(), eliminated.end(), std::greater<>());
  eliminated.erase(std::unique(eliminated.begin(), eliminated.end()), eliminated.end());
  return {Kind::Block, std::move(eliminated)};
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::GrevLex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: {
      std::string s = "block(";
      for (std::size_t i = 0; i < eliminate.size(); ++i) {
        if (i > 0) s += ',';
        s += eliminate[i].name();
      }
      return s + ";grevlex)";
    }
  }
  return "?";
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

namespace {

constexpr std::size_t kMaxVars = 96;

struct Mon {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;
  std::uint16_t bdeg = 0;  // degree inside the eliminated block
  std::uint64_t mask = 0;  // bit (i mod 64) set when e[i] > 0
};

struct DTerm {
  Mon m;
  Rational c;
};

using DPoly = std::vector<DTerm>;

class Ring {
 public:
  Ring(std::vector<Var> vars, const MonomialOrder& order) : order_(order) {
    std::sort(vars.begin(), vars.end(), std::greater<>());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (order.kind == MonomialOrder::Kind::Block) {
      for (const auto& v : order.eliminate) {
        if (std::binary_search(vars.begin(), vars.end(), v, std::greater<>())) vars_.push_back(v);
      }
      nblock_ = vars_.size();
      for (const auto& v : vars) {
        if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
      }
    } else {
      vars_ = std::move(vars);
    }
    if (vars_.size() > kMaxVars) {
      throw std::length_error("groebner: ring has " + std::to_string(vars_.size()) +
                              " variables, limit is " + std::to_string(kMaxVars));
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) pos_.emplace(vars_[i], i);
  }

  std::size_t size() const { return vars_.size(); }

  // <0, 0, >0 like strcmp
  int cmp(const Mon& a, const Mon& b) const {
    const std::size_t n = vars_.size();
    switch (order_.kind) {
      case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < n; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case MonomialOrder::Kind::Block: {
        if (a.bdeg != b.bdeg) return a.bdeg > b.bdeg ? 1 : -1;
        for (std::size_t i = nblock_; i-- > 0;) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        const int ra = a.deg - a.bdeg;
        const int rb = b.deg - b.bdeg;
        if (ra != rb) return ra > rb ? 1 : -1;
        for (std::size_t i = n; i-- > nblock_;) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
      }
      case MonomialOrder::Kind::GrevLex:
        break;
    }
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
  }

  void finish(Mon& m) const {
    m.deg = 0;
    m.bdeg = 0;
    m.mask = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      m.deg = static_cast<std::uint16_t>(m.deg + m.e[i]);
      if (i < nblock_) m.bdeg = static_cast<std::uint16_t>(m.bdeg + m.e[i]);
      if (m.e[i] != 0) m.mask |= std::uint64_t{1} << (i % 64);
    }
  }

  Mon encode(const Monomial& mono) const {
    Mon m;
    for (const auto& [v, e] : mono.factors()) {
      if (e > 255) throw std::overflow_error("groebner: exponent exceeds 255");
      m.e[pos_.at(v)] = static_cast<std::uint8_t>(e);
    }
    finish(m);
    return m;
  }

  Monomial decode(const Mon& m) const {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m.e[i] != 0) f.emplace_back(vars_[i], m.e[i]);
    }
    return Monomial(std::move(f));
  }

  DPoly encode(const Polynomial& p) const {
    DPoly d;
    d.reserve(p.size());
    for (const auto& t : p.terms()) d.push_back({encode(t.mono), t.coeff});
    std::sort(d.begin(), d.end(), [&](const DTerm& a, const DTerm& b) { return cmp(a.m, b.m) > 0; });
    return d;
  }

  Polynomial decode(const DPoly& d) const {
    std::vector<Term> terms;
    terms.reserve(d.size());
    for (const auto& t : d) terms.push_back({decode(t.m), t.c});
    return Polynomial::from_terms(std::move(terms));
  }

  Mon mul(const Mon& a, const Mon& b) const {
    Mon m;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const unsigned s = unsigned{a.e[i]} + b.e[i];
      if (s > 255) throw std::overflow_error("groebner: exponent exceeds 255");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    m.bdeg = static_cast<std::uint16_t>(a.bdeg + b.bdeg);
    m.mask = a.mask | b.mask;
    return m;
  }

  bool divides(const Mon& a, const Mon& b) const {
    if (a.deg > b.deg || (a.mask & ~b.mask) != 0) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (a.e[i] > b.e[i]) return false;
    }
    return true;
  }

  Mon quotient(const Mon& a, const Mon& b) const {
    Mon m;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    finish(m);
    return m;
  }

  Mon lcm(const Mon& a, const Mon& b) const {
    Mon m;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    finish(m);
    return m;
  }

  bool coprime(const Mon& a, const Mon& b) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    }
    return true;
  }

  bool equal(const Mon& a, const Mon& b) const {
    if (a.deg != b.deg || a.mask != b.mask) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (a.e[i] != b.e[i]) return false;
    }
    return true;
  }

  // f[from..] - c * q * g[gfrom..], all inputs sorted descending.
  DPoly sub_mul(const DPoly& f, std::size_t from, const Rational& c, const Mon& q, const DPoly& g,
                std::size_t gfrom) const {
    DPoly out;
    out.reserve(f.size() - from + g.size() - gfrom);
    std::size_t i = from;
    std::size_t j = gfrom;
    Mon gm;
    bool have_gm = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_gm) {
        gm = mul(q, g[j].m);
        have_gm = true;
      }
      int s = 0;
      if (i == f.size()) {
        s = -1;
      } else if (j == g.size()) {
        s = 1;
      } else {
        s = cmp(f[i].m, gm);
      }
      if (s > 0) {
        out.push_back(f[i++]);
      } else if (s < 0) {
        out.push_back({gm, -(c * g[j].c)});
        ++j;
        have_gm = false;
      } else {
        Rational v = f[i].c - c * g[j].c;
        if (v != 0) out.push_back({f[i].m, std::move(v)});
        ++i;
        ++j;
        have_gm = false;
      }
    }
    return out;
  }

 private:
  MonomialOrder order_;
  std::vector<Var> vars_;
  std::size_t nblock_ = 0;
  std::map<Var, std::size_t> pos_;
};

void make_monic(DPoly& p) {
  if (p.empty() || p[0].c == 1) return;
  const Rational inv = 1 / p[0].c;
  for (auto& t : p) t.c *= inv;
}

class Clock {
 public:
  explicit Clock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void tick_pair() {
    ++spairs_;
    if (spairs_ > budget_.max_spairs) {
      throw BudgetExhausted("budget exhausted: more than " + std::to_string(budget_.max_spairs) +
                                " S-pairs",
                            spairs_ - 1);
    }
    check_time();
  }

  void tick_step() {
    if ((++steps_ & 1023U) == 0) check_time();
  }

  std::uint64_t spairs() const { return spairs_; }

 private:
  void check_time() const {
    if (elapsed() > budget_.max_seconds) {
      throw BudgetExhausted("budget exhausted: more than " + std::to_string(budget_.max_seconds) +
                                " seconds",
                            spairs_);
    }
  }

  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t spairs_ = 0;
  std::uint64_t steps_ = 0;
};

// Full reduction of f by the (monic) divisors. When sugar is given it is
// raised to cover every multiple q*g used.
DPoly reduce(DPoly f, const Ring& ring, const std::vector<const DPoly*>& divisors, Clock* clock,
             const std::vector<unsigned>* div_sugar = nullptr, unsigned* sugar = nullptr) {
  // Live terms keyed descending, so begin() is always the current leader.
  struct Desc {
    const Ring* ring;
    bool operator()(const Mon& a, const Mon& b) const { return ring->cmp(a, b) > 0; }
  };
  std::map<Mon, Rational, Desc> live(Desc{&ring});
  for (auto& t : f) live.emplace_hint(live.end(), t.m, std::move(t.c));
  DPoly rem;
  Rational prod;
  while (!live.empty()) {
    if (clock != nullptr) clock->tick_step();
    auto lead = live.begin();
    const Mon& lm = lead->first;
    const DPoly* hit = nullptr;
    std::size_t hit_k = 0;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (ring.divides((*divisors[k])[0].m, lm)) {
        hit = divisors[k];
        hit_k = k;
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back({lm, std::move(lead->second)});
      live.erase(lead);
      continue;
    }
    const Mon q = ring.quotient(lm, (*hit)[0].m);
    if (sugar != nullptr) *sugar = std::max(*sugar, q.deg + (*div_sugar)[hit_k]);
    const Rational c = std::move(lead->second);
    live.erase(lead);
    for (std::size_t k = 1; k < hit->size(); ++k) {
      const DTerm& t = (*hit)[k];
      prod = c * t.c;
      auto [it, fresh] = live.try_emplace(ring.mul(q, t.m));
      if (fresh) {
        it->second = -prod;
      } else {
        it->second -= prod;
        if (it->second == 0) live.erase(it);
      }
    }
  }
  return rem;
}

DPoly spoly(const Ring& ring, const DPoly& a, const DPoly& b) {
  const Mon l = ring.lcm(a[0].m, b[0].m);
  const Mon qa = ring.quotient(l, a[0].m);
  const Mon qb = ring.quotient(l, b[0].m);
  DPoly sa;
  sa.reserve(a.size());
  for (const auto& t : a) sa.push_back({ring.mul(qa, t.m), t.c});
  return ring.sub_mul(sa, 1, Rational(1), qb, b, 1);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Mon lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const Budget& budget) : ring_(ring), clock_(budget) {}

  // Returns false if the unit ideal was detected.
  bool run(std::vector<DPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(),
              [&](const DPoly& a, const DPoly& b) { return ring_.cmp(a[0].m, b[0].m) < 0; });
    for (auto& f : inputs) {
      unsigned sugar = 0;
      for (const auto& t : f) sugar = std::max<unsigned>(sugar, t.m.deg);
      const auto divs = active_divisors();
      const auto sug = active_sugar();
      DPoly h = reduce(std::move(f), ring_, divs, &clock_, &sug, &sugar);
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.deg == 0) return false;
      add(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
      const Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      clock_.tick_pair();
      unsigned sugar = p.sugar;
      const auto divs = active_divisors();
      const auto sug = active_sugar();
      DPoly h = reduce(spoly(ring_, polys_[p.i], polys_[p.j]), ring_, divs, &clock_, &sug, &sugar);
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.deg == 0) return false;
      add(std::move(h), sugar);
    }
    return true;
  }

  // Minimal, fully interreduced, monic, sorted ascending.
  std::vector<DPoly> reduced_basis() const {
    std::vector<std::size_t> g = active_;
    std::sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      const int c = ring_.cmp(polys_[a][0].m, polys_[b][0].m);
      return c != 0 ? c < 0 : a < b;
    });
    std::vector<std::size_t> minimal;
    for (std::size_t k = 0; k < g.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < g.size() && !redundant; ++l) {
        if (l == k) continue;
        const Mon& a = polys_[g[l]][0].m;
        const Mon& b = polys_[g[k]][0].m;
        if (ring_.divides(a, b) && (!ring_.equal(a, b) || l < k)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[k]);
    }
    std::vector<DPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const DPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&polys_[minimal[l]]);
      }
      const DPoly& f = polys_[minimal[k]];
      DPoly tail(f.begin() + 1, f.end());
      DPoly red = reduce(std::move(tail), ring_, others, nullptr);
      DPoly full;
      full.reserve(red.size() + 1);
      full.push_back(f[0]);
      for (auto& t : red) full.push_back(std::move(t));
      make_monic(full);
      out.push_back(std::move(full));
    }
    return out;
  }

  std::uint64_t spairs() const { return clock_.spairs(); }
  double elapsed() const { return clock_.elapsed(); }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    const int c = ring_.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::vector<const DPoly*> active_divisors() const {
    std::vector<const DPoly*> out;
    out.reserve(active_.size());
    for (auto k : active_) out.push_back(&polys_[k]);
    return out;
  }

  std::vector<unsigned> active_sugar() const {
    std::vector<unsigned> out;
    out.reserve(active_.size());
    for (auto k : active_) out.push_back(sugar_[k]);
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void add(DPoly h, unsigned sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Mon& lh = polys_[hi][0].m;

    std::vector<Pair> c;
    for (auto g : active_) {
      const Mon l = ring_.lcm(polys_[g][0].m, lh);
      const unsigned s = std::max<unsigned>(sugar_[g] + l.deg - polys_[g][0].m.deg,
                                            sugar + l.deg - lh.deg);
      c.push_back({g, hi, l, s});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = ring_.coprime(polys_[p.i][0].m, lh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (ring_.divides(c[l].lcm, p.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (ring_.divides(d[l].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool drop = ring_.divides(lh, p.lcm) &&
                        !ring_.equal(ring_.lcm(polys_[p.i][0].m, lh), p.lcm) &&
                        !ring_.equal(ring_.lcm(lh, polys_[p.j][0].m), p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : d) {
      if (!ring_.coprime(polys_[p.i][0].m, lh)) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (auto g : active_) {
      if (!ring_.divides(lh, polys_[g][0].m)) still.push_back(g);
    }
    still.push_back(hi);
    active_ = std::move(still);
  }

  const Ring& ring_;
  Clock clock_;
  std::vector<DPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::vector<Var> variables_of(std::span<const Polynomial> polys) {
  std::vector<Var> vars;
  for (const auto& p : polys) {
    auto v = p.variables();
    vars.insert(vars.end(), v.begin(), v.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::vector<Var> vars;
  for (const auto& f : a.factors()) vars.push_back(f.first);
  for (const auto& f : b.factors()) vars.push_back(f.first);
  const Ring ring(vars, *this);
  const int c = ring.cmp(ring.encode(a), ring.encode(b));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget) {
  const auto& gens = ideal.generators();
  const Ring ring(variables_of(gens), order);
  std::vector<DPoly> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(ring.encode(g));
  }
  Buchberger engine(ring, budget);
  GroebnerBasis out;
  out.order = order;
  if (!engine.run(std::move(inputs))) {
    out.elements = {Polynomial(1L)};
  } else {
    for (const auto& d : engine.reduced_basis()) out.elements.push_back(ring.decode(d));
  }
  out.spairs = engine.spairs();
  out.seconds = engine.elapsed();
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return p;
  std::vector<Polynomial> all = basis.elements;
  all.push_back(p);
  const Ring ring(variables_of(all), basis.order);
  std::vector<DPoly> divs;
  divs.reserve(basis.elements.size());
  for (const auto& g : basis.elements) {
    divs.push_back(ring.encode(g));
    make_monic(divs.back());
  }
  std::vector<const DPoly*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  return ring.decode(reduce(ring.encode(p), ring, ptrs, nullptr));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const Ring ring(variables_of(basis.elements), basis.order);
  std::vector<DPoly> divs;
  for (const auto& g : basis.elements) {
    divs.push_back(ring.encode(g));
    make_monic(divs.back());
  }
  std::vector<const DPoly*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = i + 1; j < divs.size(); ++j) {
      if (!reduce(spoly(ring, divs[i], divs[j]), ring, ptrs, nullptr).empty()) return false;
    }
  }
  return true;
}

}  // namespace jetscheme
