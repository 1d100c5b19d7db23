#include "jetscheme/d4.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

#include "jetscheme/an.hpp"
#include "jetscheme/jet.hpp"

namespace jetscheme {

namespace {

void check_order(unsigned m) {
  if (m < 5) throw std::invalid_argument("D4: m >= 5 required, got m = " + std::to_string(m));
}

void check_index(unsigned i) {
  if (i < 1 || i > 3) throw std::invalid_argument("D4: component index must be 1, 2 or 3");
}

// Image of (y, z) as a 2x2 matrix: y -> a y + b z, z -> c y + d z.
std::array<Rational, 4> matrix_of(D4Automorphism a) {
  const Rational h(1, 2);
  const Rational t(3, 2);
  switch (a) {
    case D4Automorphism::Phi1: return {Rational(-1), Rational(0), Rational(0), Rational(1)};
    case D4Automorphism::Phi2: return {-h, t, -h, -h};
    case D4Automorphism::Phi2Inverse: return {-h, -t, h, -h};
  }
  throw std::logic_error("unknown automorphism");
}

Polynomial p_of(const std::string& text) { return parse_polynomial(text); }

VerificationReport exact_equal(std::string claim, const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs == rhs) return VerificationReport::verified_with(std::move(claim), "exact polynomial equality");
  return VerificationReport::refuted_with(std::move(claim), "difference " + (lhs - rhs).to_string());
}

// p reduces to zero once the listed coordinates are set to zero.
VerificationReport zero_modulo(std::string claim, const Polynomial& p, const Ideal& coords) {
  std::vector<Var> vars;
  for (const auto& g : coords.generators()) {
    if (g.size() != 1 || g.total_degree() != 1) throw std::logic_error("zero_modulo: coordinate ideal expected");
    vars.push_back(g.leading().mono.factors()[0].first);
  }
  const Polynomial r = set_zero(p, vars);
  if (r.is_zero()) {
    return VerificationReport::verified_with(std::move(claim), "every term contains a coordinate generator");
  }
  return VerificationReport::refuted_with(std::move(claim), "remainder " + r.to_string());
}

VerificationReport vanish_at(std::string claim, const std::vector<Polynomial>& gens, const JetPoint& pt) {
  for (const auto& g : gens) {
    const Rational v = evaluate(g, pt);
    if (v != 0) {
      return VerificationReport::refuted_with(std::move(claim),
                                              g.to_string() + " takes the value " + to_string(v));
    }
  }
  return VerificationReport::verified_with(std::move(claim),
                                           std::to_string(gens.size()) + " generators vanish");
}

VerificationReport vanish_symbolic(std::string claim, const std::vector<Polynomial>& gens,
                                   const SeriesTriple& pt) {
  for (const auto& g : gens) {
    const Polynomial v = evaluate(g, pt);
    if (!v.is_zero()) {
      return VerificationReport::refuted_with(std::move(claim), g.to_string() + " becomes " + v.to_string());
    }
  }
  return VerificationReport::verified_with(
      std::move(claim), std::to_string(gens.size()) + " generators vanish identically in the parameter");
}

JetPoint point_of(unsigned m, const std::vector<std::pair<unsigned, Rational>>& x,
                  const std::vector<std::pair<unsigned, Rational>>& y,
                  const std::vector<std::pair<unsigned, Rational>>& z) {
  auto fill = [m](const std::vector<std::pair<unsigned, Rational>>& c) {
    std::vector<Rational> v(m + 1, Rational(0));
    for (const auto& [k, a] : c) {
      if (k <= m) v[k] += a;
    }
    return v;
  };
  return {fill(x), fill(y), fill(z)};
}

Series series_of(unsigned m, const std::vector<std::pair<unsigned, Polynomial>>& c) {
  Series s(m + 1);
  for (const auto& [k, p] : c) {
    if (k <= m) s[k] += p;
  }
  return s;
}

const std::vector<Rational>& sample_parameters() {
  static const std::vector<Rational> s{Rational(1), Rational(2), Rational(-1)};
  return s;
}

struct Transport {
  // perm[s][i] = component that psi_s sends Z^i to; 0 when undetermined
  std::array<std::array<unsigned, 4>, 2> perm{};
  VerificationReport report;
};

Transport transport_facts(unsigned m, const Budget& budget) {
  const D4Ideals fam(m);
  Transport t;
  std::vector<VerificationReport> checks;
  const D4Automorphism autos[2] = {D4Automorphism::Phi1, D4Automorphism::Phi2};
  for (int s = 0; s < 2; ++s) {
    const std::string name = automorphism_name(autos[s]);
    checks.push_back(contained(apply_automorphism(autos[s], fam.l322()).generators(), fam.l322(), budget,
                               name + "(L(3,2,2)) inside L(3,2,2)"));
    for (unsigned j = 1; j <= 3; ++j) {
      const Ideal image = apply_automorphism(autos[s], fam.ladder(j));
      for (unsigned i = 1; i <= 3; ++i) {
        // phi_s(L^j) inside L^i sends V(J^i) into V(J^j)
        VerificationReport r = contained(image.generators(), fam.ladder(i), budget, "probe");
        if (r.verified()) {
          r.claim = name + "(L^" + std::to_string(j) + ") inside L^" + std::to_string(i);
          t.perm[s][i] = j;
          checks.push_back(std::move(r));
        }
      }
    }
    for (unsigned i = 1; i <= 3; ++i) {
      if (t.perm[s][i] == 0) {
        checks.push_back(VerificationReport::refuted_with(
            name + " image of component " + std::to_string(i),
            "no ladder L^j with " + name + "(L^j) inside L^" + std::to_string(i)));
      }
    }
  }
  checks.push_back(verify_jet_invariance(m));
  t.report = VerificationReport::combine("automorphisms permute the components", std::move(checks));
  return t;
}

}  // namespace

std::string automorphism_name(D4Automorphism a) {
  switch (a) {
    case D4Automorphism::Phi1: return "phi1";
    case D4Automorphism::Phi2: return "phi2";
    case D4Automorphism::Phi2Inverse: return "phi2_inverse";
  }
  return "?";
}

Polynomial apply_automorphism(D4Automorphism a, const Polynomial& p) {
  const auto mat = matrix_of(a);
  Substitution map;
  for (const auto& v : p.variables()) {
    if (v.family != Family::Y && v.family != Family::Z) continue;
    const Polynomial y(yv(v.index));
    const Polynomial z(zv(v.index));
    map[yv(v.index)] = y.scaled(mat[0]) + z.scaled(mat[1]);
    map[zv(v.index)] = y.scaled(mat[2]) + z.scaled(mat[3]);
  }
  return linear_substitute(p, map);
}

Ideal apply_automorphism(D4Automorphism a, const Ideal& ideal) {
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators()) g.push_back(apply_automorphism(a, p));
  return Ideal(std::move(g), ideal.ambient());
}

JetPoint apply_automorphism(D4Automorphism a, const JetPoint& point) {
  const auto mat = matrix_of(a);
  std::vector<Rational> y(point.y().size());
  std::vector<Rational> z(point.z().size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    y[k] = mat[0] * point.y()[k] + mat[1] * point.z()[k];
    z[k] = mat[2] * point.y()[k] + mat[3] * point.z()[k];
  }
  return {point.x(), std::move(y), std::move(z)};
}

D4Ideals::D4Ideals(unsigned m) : m_(m) {
  check_order(m);
  jet_ = jet_coeffs(Surface::d4(), m).coeffs;
  l322_ = jetscheme::ladder(3, 2, 2);
  const std::vector<Polynomial> common{xv(0), xv(1), yv(0), zv(0)};
  const Polynomial y1(yv(1));
  const Polynomial z1(zv(1));
  const Polynomial last[3] = {z1, y1 - z1, y1 + z1};
  for (int k = 0; k < 3; ++k) {
    auto g = common;
    g.push_back(last[k]);
    ladders_[k] = Ideal(std::move(g));
    j_[k] = ladders_[k].with(jet_);
  }
  i0_ = l322_.with(jet_);
}

const Ideal& D4Ideals::ladder(unsigned i) const {
  check_index(i);
  return ladders_[i - 1];
}

const Ideal& D4Ideals::j(unsigned i) const {
  check_index(i);
  return j_[i - 1];
}

const Ideal& D4Ideals::component(unsigned i, const Budget& budget) const {
  check_index(i);
  std::lock_guard lock(memo_->mu);
  auto it = memo_->components.find(i);
  if (it == memo_->components.end()) {
    it = memo_->components.emplace(i, saturate(j(i), Polynomial(yv(1)), budget)).first;
  }
  return it->second;
}

D4Ideals d4_ideals(unsigned m) { return D4Ideals(m); }

Ideal d4_component_ideal(unsigned m, unsigned i, const Budget& budget) {
  return D4Ideals(m).component(i, budget);
}

Polynomial d4_g1() { return p_of("-4*y2^2*z2^2 + y1^2*z3^2 + 4*x3^2*z2 - 4*x2*x3*z3"); }

Polynomial d4_g2() {
  return p_of(
      "-y2^4 - 4*y2^3*z2 + 2*y2^2*z2^2 + 12*y2*z2^3 - 9*z2^4 + 4*y3^2*z1^2 - 8*y3*z1^2*z3"
      " + 4*z1^2*z3^2 + 8*x3^2*y2 - 8*x3^2*z2 - 8*x2*x3*y3 + 8*x2*x3*z3");
}

Polynomial d4_h() {
  return p_of("-y2^4 - 4*y2^3*z2 + 2*y2^2*z2^2 + 12*y2*z2^3 - 9*z2^4 + 8*x3^2*y2 - 8*x3^2*z2");
}

VerificationReport verify_g1_identity(unsigned m, const Budget& budget) {
  check_order(m);
  const D4Ideals fam(m);
  const auto F = jet_coeffs_shifted(Surface::d4(), 5, 2, 1, 2);
  const Polynomial& f4 = F[4];
  const Polynomial& f5 = F[5];
  const Polynomial x3(xv(3)), y1(yv(1)), y2(yv(2)), z2(zv(2));
  const Polynomial g1 = d4_g1();
  std::vector<VerificationReport> checks;
  checks.push_back(exact_equal("F4 = x2^2 - y1^2*z2", f4, p_of("x2^2 - y1^2*z2")));
  checks.push_back(exact_equal("F5 = 2*x2*x3 - 2*y1*y2*z2 - y1^2*z3", f5,
                               p_of("2*x2*x3 - 2*y1*y2*z2 - y1^2*z3")));
  checks.push_back(zero_modulo("f4 - F4 in L^1", fam.jet()[4] - f4, fam.ladder(1)));
  checks.push_back(zero_modulo("f5 - F5 in L^1", fam.jet()[5] - f5, fam.ladder(1)));
  checks.push_back(exact_equal("y1^2*g1 = F5^2 - 4*x3^2*F4 + 4*y1*y2*z2*F5", y1 * y1 * g1,
                               f5 * f5 - Polynomial(4L) * x3 * x3 * f4 +
                                   Polynomial(4L) * y1 * y2 * z2 * f5));
  // L^1 + <f4, f5> lies inside J^1 for every m >= 5.
  checks.push_back(member(y1 * y1 * g1, fam.ladder(1).with({fam.jet()[4], fam.jet()[5]}), budget,
                          "y1^2*g1 in L^1 + <f4, f5> inside J^1 (m=" + std::to_string(m) + ")"));
  return VerificationReport::combine("g1 in I^1", std::move(checks),
                                     "y1^2*g1 = F5^2 - 4*x3^2*F4 + 4*y1*y2*z2*F5 with F4, F5 in J^1");
}

VerificationReport verify_g2_identity() {
  const Polynomial g1 = d4_g1();
  const Polynomial inv = apply_automorphism(D4Automorphism::Phi2Inverse, g1);
  std::vector<VerificationReport> checks;
  checks.push_back(exact_equal("phi2(phi2_inverse(g1)) = g1",
                               apply_automorphism(D4Automorphism::Phi2, inv), g1));
  const Polynomial swapped = substitute(inv, {{yv(1), Polynomial(zv(1))}});
  checks.push_back(exact_equal("phi2_inverse(g1) with y1 -> z1 equals g2/4", swapped,
                               d4_g2().scaled(Rational(1, 4))));
  return VerificationReport::combine("g2 in I^2", std::move(checks),
                                     "g2 = 4*phi2_inverse(g1) modulo y1 - z1");
}

VerificationReport verify_jet_invariance(unsigned m) {
  const auto jet = jet_coeffs(Surface::d4(), m).coeffs;
  for (auto a : {D4Automorphism::Phi1, D4Automorphism::Phi2}) {
    for (unsigned k = 0; k <= m; ++k) {
      if (apply_automorphism(a, jet[k]) != jet[k]) {
        return VerificationReport::refuted_with(
            "phi1, phi2 fix f^(0.." + std::to_string(m) + ")",
            automorphism_name(a) + " moves f^(" + std::to_string(k) + ")");
      }
    }
  }
  return VerificationReport::verified_with("phi1, phi2 fix f^(0.." + std::to_string(m) + ")",
                                           "exact polynomial equality");
}

VerificationReport verify_coordinate_lemma(unsigned m, unsigned i, unsigned j, const Budget& budget) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("verify_coordinate_lemma: i != j required");
  if (i > j) std::swap(i, j);
  const D4Ideals fam(m);
  const Ideal sum = fam.j(i) + fam.j(j);
  const std::string tag = "J^" + std::to_string(i) + " + J^" + std::to_string(j);
  std::vector<VerificationReport> checks;
  checks.push_back(member(Polynomial(yv(1)), sum, budget, "y1 in " + tag));
  checks.push_back(member(Polynomial(zv(1)), sum, budget, "z1 in " + tag));
  checks.push_back(zero_modulo("x2^2 - f4 in L(2,2,2)", Polynomial(xv(2)).pow(2) - fam.jet()[4],
                               ladder(2, 2, 2)));
  checks.push_back(radical_member(Polynomial(xv(2)), sum, budget, "x2 in sqrt(" + tag + ")"));
  checks.push_back(radically_contained(fam.i0().generators(), sum, budget, "I^0 inside sqrt(" + tag + ")"));
  return VerificationReport::combine(
      "Z^" + std::to_string(i) + " cap Z^" + std::to_string(j) + " inside Z^0 (m=" + std::to_string(m) + ")",
      std::move(checks), "L(3,2,2) inside sqrt(" + tag + ")");
}

JetPoint D4WitnessPoints::p(unsigned m) { return point_of(m, {}, {{2, Rational(1)}}, {}); }

JetPoint D4WitnessPoints::p_prime(unsigned m, const Rational& s) {
  return point_of(m, {}, {{1, s}, {2, Rational(1)}}, {});
}

JetPoint D4WitnessPoints::q(unsigned m) {
  return point_of(m, {{3, Rational(-1)}}, {{2, Rational(-1)}}, {{2, Rational(1)}});
}

JetPoint D4WitnessPoints::q_prime(unsigned m, const Rational& s) {
  return point_of(m, {{2, s}, {3, Rational(-1)}}, {{1, s}, {2, Rational(-1)}}, {{2, Rational(1)}});
}

SeriesTriple D4WitnessPoints::p_prime_symbolic(unsigned m, Var s) {
  return {series_of(m, {}), series_of(m, {{1, Polynomial(s)}, {2, Polynomial(1L)}}), series_of(m, {})};
}

SeriesTriple D4WitnessPoints::q_prime_symbolic(unsigned m, Var s) {
  return {series_of(m, {{2, Polynomial(s)}, {3, Polynomial(-1L)}}),
          series_of(m, {{1, Polynomial(s)}, {2, Polynomial(-1L)}}), series_of(m, {{2, Polynomial(1L)}})};
}

VerificationReport witness_checks(unsigned m, const Budget& budget) {
  const D4Ideals fam(m);
  const Var s = wv(0);
  std::vector<VerificationReport> checks;
  const std::string ms = " (m=" + std::to_string(m) + ")";
  if (m == 5) {
    const JetPoint q = D4WitnessPoints::q(m);
    checks.push_back(vanish_at("Q in V(I^0)" + ms, fam.i0().generators(), q));
    {
      const auto ord = ord_t(D4WitnessPoints::q(7), Surface::d4().equation());
      const std::string claim = "ord_Q(f) = 6";
      checks.push_back(ord && *ord == 6
                           ? VerificationReport::verified_with(claim, "first nonzero coefficient at t^6")
                           : VerificationReport::refuted_with(
                                 claim, ord ? "order " + std::to_string(*ord) : "vanishes to order 7"));
    }
    checks.push_back(vanish_symbolic("Q'(s) in V(J^1) for symbolic s" + ms, fam.j(1).generators(),
                                     D4WitnessPoints::q_prime_symbolic(m, s)));
    for (const auto& sv : sample_parameters()) {
      const JetPoint qp = D4WitnessPoints::q_prime(m, sv);
      const std::string tag = "Q'(" + to_string(sv) + ")";
      checks.push_back(vanish_at(tag + " in V(J^1)" + ms, fam.j(1).generators(), qp));
      checks.push_back(qp.coordinate(yv(1)) != 0
                           ? VerificationReport::verified_with(tag + " has y1 != 0", "y1 = " + to_string(sv))
                           : VerificationReport::refuted_with(tag + " has y1 != 0", "y1 = 0"));
    }
    checks.push_back(D4WitnessPoints::q_prime(m, Rational(0)) == q
                         ? VerificationReport::verified_with("Q'(0) = Q", "coefficientwise")
                         : VerificationReport::refuted_with("Q'(0) = Q", "coefficients differ"));
    std::vector<Var> l322_vars;
    for (const auto& g : fam.l322().generators()) l322_vars.push_back(g.leading().mono.factors()[0].first);
    checks.push_back(exact_equal("h = g2 modulo L(3,2,2)", set_zero(d4_g2(), l322_vars), d4_h()));
    {
      const Rational hq = evaluate(d4_h(), q);
      const std::string claim = "h(Q) = -32";
      checks.push_back(hq == -32 ? VerificationReport::verified_with(claim, "x3 = y2 = -1, z2 = 1")
                                 : VerificationReport::refuted_with(claim, "h(Q) = " + to_string(hq)));
    }
    checks.push_back(member(d4_h(), fam.i0().with({d4_g2()}), budget, "h in I^0 + <g2>" + ms));
    return VerificationReport::combine("Z^0 cap Z^1 strictly contains Z^0 cap Z^1 cap Z^2" + ms,
                                       std::move(checks),
                                       "Q lies on Z^0 cap Z^1 and h(Q) = -32 with h in I^0 + I^2");
  }

  check_order(m);
  const JetPoint p = D4WitnessPoints::p(m);
  checks.push_back(vanish_at("P in V(I^0)" + ms, fam.i0().generators(), p));
  checks.push_back(vanish_symbolic("P'(s) in V(J^1) for symbolic s" + ms, fam.j(1).generators(),
                                   D4WitnessPoints::p_prime_symbolic(m, s)));
  for (const auto& sv : sample_parameters()) {
    const JetPoint pp = D4WitnessPoints::p_prime(m, sv);
    const std::string tag = "P'(" + to_string(sv) + ")";
    checks.push_back(vanish_at(tag + " in V(J^1)" + ms, fam.j(1).generators(), pp));
    checks.push_back(pp.coordinate(yv(1)) != 0
                         ? VerificationReport::verified_with(tag + " has y1 != 0", "y1 = " + to_string(sv))
                         : VerificationReport::refuted_with(tag + " has y1 != 0", "y1 = 0"));
  }
  checks.push_back(D4WitnessPoints::p_prime(m, Rational(0)) == p
                       ? VerificationReport::verified_with("P'(0) = P", "coefficientwise")
                       : VerificationReport::refuted_with("P'(0) = P", "coefficients differ"));
  {
    const Rational y2 = p.coordinate(yv(2));
    checks.push_back(y2 == 1 ? VerificationReport::verified_with("y2(P) = 1", "coordinate value")
                             : VerificationReport::refuted_with("y2(P) = 1", "y2(P) = " + to_string(y2)));
  }
  const Polynomial f6 = fam.jet()[6];
  const Polynomial z2(zv(2)), x3(xv(3)), y2(yv(2));
  const Ideal l323 = ladder(3, 2, 3);
  const Ideal l323x3 = l323.with({x3});
  checks.push_back(zero_modulo("4*z2^4 = 4*z2*f6 - g1 modulo L(3,2,2)",
                               Polynomial(4L) * z2.pow(4) - (Polynomial(4L) * z2 * f6 - d4_g1()), fam.l322()));
  checks.push_back(zero_modulo("f6 = x3^2 modulo L(3,2,3)", f6 - x3 * x3, l323));
  checks.push_back(zero_modulo("g2 = -y2^4 modulo L(3,2,3) + <x3>", d4_g2() + y2.pow(4), l323x3));
  const Ideal k1 = fam.i0() + fam.j(1).with({d4_g1()});
  const Ideal k2 = k1 + fam.j(2).with({d4_g2()});
  checks.push_back(radical_member(z2, k1, budget, "z2 in sqrt(I^0 + J^1 + <g1>)" + ms));
  checks.push_back(radical_member(x3, k1, budget, "x3 in sqrt(I^0 + J^1 + <g1>)" + ms));
  checks.push_back(radical_member(y2, k2, budget, "y2 in sqrt(I^0 + J^1 + <g1> + J^2 + <g2>)" + ms));
  return VerificationReport::combine("Z^0 cap Z^1 strictly contains Z^0 cap Z^1 cap Z^2" + ms,
                                     std::move(checks),
                                     "P lies on Z^0 cap Z^1 with y2(P) = 1 while y2 is in sqrt(I^0 + I^1 + I^2)");
}

VerificationReport verify_transport(unsigned m, const Budget& budget) {
  return transport_facts(m, budget).report;
}

D4MaximalResult d4_maximal_intersections(unsigned m, const Budget& budget) {
  check_order(m);
  std::vector<VerificationReport> checks;

  // Z^i cap Z^j inside Z^0, checked for every pair directly.
  bool inside_zero[4][4] = {};
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned j = i + 1; j <= 3; ++j) {
      auto r = verify_coordinate_lemma(m, i, j, budget);
      inside_zero[i][j] = inside_zero[j][i] = r.verified();
      checks.push_back(std::move(r));
    }
  }

  // Z^0 cap Z^i not inside Z^j: (1,2) directly, the rest by symmetry.
  checks.push_back(verify_g1_identity(m, budget));
  checks.push_back(verify_g2_identity());
  const bool g_ok = checks[checks.size() - 1].verified() && checks[checks.size() - 2].verified();
  auto witness = witness_checks(m, budget);
  const bool direct = witness.verified() && g_ok;
  checks.push_back(std::move(witness));
  Transport tr = transport_facts(m, budget);
  const bool transport_ok = tr.report.verified();
  checks.push_back(tr.report);

  bool strict[4][4] = {};
  std::vector<VerificationReport> transported;
  if (direct) {
    strict[1][2] = true;
    std::deque<std::pair<unsigned, unsigned>> queue{{1, 2}};
    while (!queue.empty() && transport_ok) {
      const auto [i, j] = queue.front();
      queue.pop_front();
      for (int s = 0; s < 2; ++s) {
        const unsigned a = tr.perm[s][i];
        const unsigned b = tr.perm[s][j];
        if (a == 0 || b == 0 || strict[a][b]) continue;
        strict[a][b] = true;
        queue.emplace_back(a, b);
        transported.push_back(VerificationReport::verified_with(
            "Z^0 cap Z^" + std::to_string(a) + " not inside Z^" + std::to_string(b),
            "transported from (" + std::to_string(i) + "," + std::to_string(j) + ") by psi" +
                std::to_string(s + 1)));
      }
    }
  }
  checks.push_back(VerificationReport::combine("strictness transported by symmetry", std::move(transported)));

  // Pairs of components as vertex sets; V(a) inside V(b) is known true or
  // known false from the facts above.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = i + 1; j <= 3; ++j) pairs.emplace_back(i, j);
  }
  auto known_in = [&](const std::pair<unsigned, unsigned>& a, const std::pair<unsigned, unsigned>& b) {
    if (a == b) return true;
    if (a.first == 0 || b.first != 0) return false;
    return inside_zero[a.first][a.second] && (b.second == a.first || b.second == a.second);
  };
  auto known_not_in = [&](const std::pair<unsigned, unsigned>& a, const std::pair<unsigned, unsigned>& b) {
    if (a.first != 0) return false;
    const unsigned i = a.second;
    for (unsigned v : {b.first, b.second}) {
      if (v != 0 && v != i && strict[i][v]) return true;
    }
    return false;
  };
  D4MaximalResult out;
  bool determined = true;
  for (const auto& a : pairs) {
    bool maximal = true;
    bool below = false;
    for (const auto& b : pairs) {
      if (b == a) continue;
      if (!known_not_in(a, b)) maximal = false;
      if (known_in(a, b) && known_not_in(b, a)) below = true;
    }
    if (maximal) {
      out.pairs.push_back(a);
    } else if (!below) {
      determined = false;
    }
  }
  bool distinct = true;
  for (const auto& a : out.pairs) {
    for (const auto& b : out.pairs) {
      if (a != b && !known_not_in(a, b)) distinct = false;
    }
  }
  std::string cert = "maximal:";
  for (const auto& [i, j] : out.pairs) cert += " Z" + std::to_string(i) + " cap Z" + std::to_string(j);
  const std::string claim = "maximal pairwise intersections (m=" + std::to_string(m) + ")";
  const bool exhausted = std::any_of(checks.begin(), checks.end(), [](const VerificationReport& r) {
    return r.outcome == Outcome::BudgetExhausted;
  });
  if ((!determined || !distinct) && exhausted) {
    VerificationReport r;
    r.claim = claim + " determined";
    r.outcome = Outcome::BudgetExhausted;
    r.certificate = "facts missing after budget exhaustion";
    checks.push_back(std::move(r));
    out.pairs.clear();
  } else if (!determined || !distinct) {
    checks.push_back(VerificationReport::refuted_with(claim + " determined",
                                                      "facts do not determine every pair"));
    out.pairs.clear();
  } else {
    checks.push_back(VerificationReport::verified_with(claim + " determined", cert + ", pairwise distinct"));
  }
  out.report = VerificationReport::combine(claim, std::move(checks), cert);
  if (!out.report.verified()) out.pairs.clear();
  return out;
}

}  // namespace jetscheme
