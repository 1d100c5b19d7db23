#include <random>

#include "doctest.h"
#include "jetscheme/d4.hpp"
#include "jetscheme/jet.hpp"

using namespace jetscheme;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

bool same_ideal(const Ideal& a, const Ideal& b) {
  return contained(a.generators(), b).verified() && contained(b.generators(), a).verified();
}

Polynomial random_yz(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4), idx(0, 3), fam(0, 2), e(1, 3);
  Polynomial p;
  for (int t = 0; t < 4; ++t) {
    const Var v{static_cast<Family>(fam(rng)), static_cast<std::uint32_t>(idx(rng))};
    const Var w{static_cast<Family>(fam(rng)), static_cast<std::uint32_t>(idx(rng))};
    p += Polynomial(v).pow(e(rng)) * Polynomial(w) * Polynomial(static_cast<long>(c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("automorphisms") {
  CHECK(apply_automorphism(D4Automorphism::Phi1, P("y3")) == P("-y3"));
  CHECK(apply_automorphism(D4Automorphism::Phi2, P("z2")) == P("-1/2*y2 - 1/2*z2"));
  CHECK(apply_automorphism(D4Automorphism::Phi2Inverse, P("y1")) == P("-1/2*y1 - 3/2*z1"));
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_yz(rng);
    const auto phi1 = [](const Polynomial& q) { return apply_automorphism(D4Automorphism::Phi1, q); };
    const auto phi2 = [](const Polynomial& q) { return apply_automorphism(D4Automorphism::Phi2, q); };
    CHECK(phi1(phi1(p)) == p);
    CHECK(phi2(phi2(phi2(p))) == p);
    CHECK(apply_automorphism(D4Automorphism::Phi2Inverse, phi2(p)) == p);
  }
  // on points: g(a(P)) = a(g)(P)
  const JetPoint q({0, 0, 1, -1}, {0, 2, -1, 3}, {1, 0, 1, 5});
  for (auto a : {D4Automorphism::Phi1, D4Automorphism::Phi2, D4Automorphism::Phi2Inverse}) {
    for (const char* g : {"y1", "z2", "y3*z0 - x2^2", "y2^2*z1 + z3"}) {
      CHECK(evaluate(P(g), apply_automorphism(a, q)) == evaluate(apply_automorphism(a, P(g)), q));
    }
  }
  CHECK(verify_jet_invariance(8).verified());
}

TEST_CASE("ideal family") {
  const D4Ideals fam(5);
  CHECK(fam.ladder(2).generators() == Ideal({P("x0"), P("x1"), P("y0"), P("z0"), P("y1 - z1")}).generators());
  CHECK(fam.ladder(1).generators().size() == 5);
  CHECK(fam.i0().generators().size() == 13);
  CHECK(fam.j(3).generators().size() == 11);
  const auto f = fam.jet();
  CHECK(member(f[0], Ideal({P("x0"), P("y0"), P("z0")})).verified());
  CHECK(member(f[1], Ideal({P("x0"), P("y0"), P("z0")})).verified());
  CHECK(krull_dimension(fam.i0()) == 11);
  CHECK_THROWS_AS(D4Ideals(4), std::invalid_argument);
  CHECK_THROWS(fam.j(4));
}

TEST_CASE("special elements") {
  const auto g1 = d4_g1(), g2 = d4_g2();
  CHECK(g1.size() == 4);
  CHECK(g1.total_degree() == 4);
  CHECK(g2.size() == 12);
  CHECK(apply_automorphism(D4Automorphism::Phi1, g1) == g1);
  const std::vector<Var> l322{xv(0), xv(1), xv(2), yv(0), yv(1), zv(0), zv(1)};
  CHECK(set_zero(g2, l322) == d4_h());
}

TEST_CASE("identities for g1 and g2") {
  for (unsigned m = 5; m <= 8; ++m) CHECK(verify_g1_identity(m).verified());
  CHECK(verify_g2_identity().verified());
  // without y1 -> z1 the difference vanishes on y1 = z1 but is not zero
  const auto inv = apply_automorphism(D4Automorphism::Phi2Inverse, d4_g1());
  const auto diff = inv - d4_g2().scaled(Rational(1, 4));
  CHECK_FALSE(diff.is_zero());
  CHECK(substitute(diff, {{yv(1), Polynomial(zv(1))}}).is_zero());
}

TEST_CASE("component ideals") {
  const D4Ideals fam(5);
  CHECK(member(d4_g1(), fam.component(1)).verified());
  CHECK(member(d4_g2(), fam.component(2)).verified());
  for (unsigned i = 1; i <= 3; ++i) {
    CHECK(radical_member(P("y1"), fam.component(i)).outcome == Outcome::Refuted);
  }
  CHECK(same_ideal(apply_automorphism(D4Automorphism::Phi1, fam.component(2)), fam.component(3)));
  CHECK(same_ideal(d4_component_ideal(5, 1), fam.component(1)));
}

TEST_CASE("pairwise intersections lie over Z^0") {
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned j = i + 1; j <= 3; ++j) CHECK(verify_coordinate_lemma(6, i, j).verified());
  }
  CHECK_THROWS(verify_coordinate_lemma(6, 2, 2));
}

TEST_CASE("witness points") {
  const auto q = D4WitnessPoints::q(5);
  CHECK(evaluate(d4_h(), q) == -32);
  CHECK(D4WitnessPoints::p(6).coordinate(yv(2)) == 1);
  const D4Ideals fam(5);
  for (long s : {1L, 2L, -1L}) {
    for (const auto& g : fam.j(1).generators()) CHECK(evaluate(g, D4WitnessPoints::q_prime(5, Rational(s))) == 0);
  }
  CHECK(ord_t(D4WitnessPoints::q(7), Surface::d4().equation()) == 6u);
  CHECK(witness_checks(5).verified());
  CHECK(witness_checks(6).verified());
}

TEST_CASE("transport and maximal intersections") {
  CHECK(verify_transport(5).verified());
  using Pairs = std::vector<std::pair<unsigned, unsigned>>;
  for (unsigned m = 5; m <= 7; ++m) {
    const auto r = d4_maximal_intersections(m);
    CHECK(r.report.verified());
    CHECK(r.pairs == Pairs{{0, 1}, {0, 2}, {0, 3}});
  }
}

TEST_CASE("an exhausted budget leaves the pairs undetermined") {
  const auto r = d4_maximal_intersections(6, Budget{2, 300});
  CHECK_FALSE(r.report.verified());
  CHECK(r.pairs.empty());
}
