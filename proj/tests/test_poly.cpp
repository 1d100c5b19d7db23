#include <random>

#include "doctest.h"
#include "jetscheme/jet.hpp"
#include "jetscheme/poly.hpp"
#include "jetscheme/series.hpp"

using namespace jetscheme;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Polynomial random_poly(std::mt19937& rng, int terms, unsigned max_index = 2) {
  std::uniform_int_distribution<int> coeff(-5, 5), fam(0, 2), idx(0, static_cast<int>(max_index)),
      exp(0, 2), nf(0, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (int k = nf(rng); k > 0; --k) {
      const int e = exp(rng);
      if (e == 0) continue;
      f.push_back({Var{static_cast<Family>(fam(rng)), static_cast<std::uint32_t>(idx(rng))},
                   static_cast<std::uint32_t>(e)});
    }
    p += Polynomial::term(Monomial(f), Rational(coeff(rng), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("variable order: families then lower index first") {
  CHECK(wv(0) > xv(0));
  CHECK(xv(5) > yv(0));
  CHECK(yv(7) > zv(0));
  CHECK(xv(0) > xv(1));
  CHECK(zv(1) > zv(2));
  CHECK(xv(3).name() == "x3");
  CHECK(wv(2).name() == "w2");
}

TEST_CASE("addition examples") {
  CHECK((Polynomial(xv(0)) + (-Polynomial(xv(0)))).is_zero());
  CHECK((P("x0*y0") + P("x0*y0")) == P("2*x0*y0"));
  const auto f = jet_coeffs(Surface::a(1), 1);
  CHECK((f[0] + f[1]).to_string() == "x0*y0 + x1*y0 + x0*y1 - z0^2 - 2*z0*z1");
  CHECK((f[0] + f[1]) == P("x0y0 - z0^2 + x1y0 + x0y1 - 2z0z1"));
}

TEST_CASE("multiplication examples") {
  CHECK((P("x0 + y0") * P("x0 - y0")) == P("x0^2 - y0^2"));
  CHECK((Polynomial() * P("x0 + 3")).is_zero());
  const Polynomial z1(zv(1));
  CHECK((z1 * z1 * z1).to_string() == "z1^3");
  CHECK(z1.pow(3) == z1 * z1 * z1);
  CHECK(P("x0").pow(0) == Polynomial(1L));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial(1L) == a);
    CHECK(a.scaled(Rational(2, 3)) == a * Polynomial(Rational(2, 3)));
  }
}

TEST_CASE("canonical form invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng, 6) * random_poly(rng, 3);
    const auto terms = a.terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      CHECK(terms[k].coeff != 0);
      if (k) CHECK(grevlex(terms[k - 1].mono, terms[k].mono) == std::strong_ordering::greater);
      for (const auto& [v, e] : terms[k].mono.factors()) CHECK(e > 0);
    }
  }
}

TEST_CASE("text grammar round trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 5, 11);
    const auto text = a.to_string();
    CHECK(parse_polynomial(text) == a);
    CHECK(parse_polynomial(text).to_string() == text);
  }
  CHECK(P("x1*y0 + x0*y1 - 2*z0*z1").to_string() == "x1*y0 + x0*y1 - 2*z0*z1");
  CHECK(P("3/4*w0*x2 - 1/2").to_string() == "3/4*w0*x2 - 1/2");
  CHECK(P("0").is_zero());
  CHECK(P("2x0y1").to_string() == "2*x0*y1");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_polynomial("x0 + * y0");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1*y", {.ambient = true}), ParseError);
  CHECK(parse_polynomial("x*y - z^2", {.ambient = true}) == P("x0*y0 - z0^2"));
}

TEST_CASE("linear substitution") {
  const Rational h(1, 2);
  Substitution phi1{{yv(3), -Polynomial(yv(3))}};
  CHECK(linear_substitute(P("y3"), phi1) == P("-y3"));
  Substitution phi2{{zv(2), P("-1/2*y2 - 1/2*z2")}};
  CHECK(linear_substitute(P("z2"), phi2).to_string() == "-1/2*y2 - 1/2*z2");
  const Polynomial g1 = P("-4*y2^2*z2^2 + y1^2*z3^2 + 4*x3^2*z2 - 4*x2*x3*z3");
  CHECK(linear_substitute(g1, {}) == g1);
  CHECK_THROWS(linear_substitute(P("x0"), {{xv(0), P("y0^2")}}));
  CHECK(substitute(P("x0*y0"), {{xv(0), P("y0^2")}}) == P("y0^3"));
}

TEST_CASE("set_zero and evaluate") {
  const std::vector<Var> vars{xv(0), zv(1)};
  CHECK(set_zero(P("x0*y0 + y1 - z1^2"), vars) == P("y1"));
  const auto v = evaluate(P("x0*y0 - 1/2*z0"), [](Var u) { return Rational(u.index + 2); });
  CHECK(v == 3);
}

TEST_CASE("series substitution") {
  const auto f = parse_polynomial("x*y - z^2", {.ambient = true});
  const auto c = poly_substitute_series(f, generic_series(2), 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0].to_string() == "x0*y0 - z0^2");
  CHECK(c[1].to_string() == "x1*y0 + x0*y1 - 2*z0*z1");
  CHECK(c[2].to_string() == "x2*y0 + x1*y1 + x0*y2 - z1^2 - 2*z0*z2");

  SeriesTriple zero{Series(4), Series(4), Series(4)};
  for (const auto& k : poly_substitute_series(f, zero, 3)) CHECK(k.is_zero());

  const auto d4 = Surface::d4().equation();
  const auto shifted = poly_substitute_series(d4, generic_series(5, 2, 1, 2), 5);
  CHECK(shifted[4] == P("x2^2 - y1^2*z2"));
  CHECK_THROWS_AS(poly_substitute_series(P("x1"), generic_series(2), 2), std::invalid_argument);
}

TEST_CASE("series multiplication truncates") {
  const Series a{Polynomial(1L), Polynomial(xv(0)), Polynomial()};
  const auto sq = series_mul(a, a, 2);
  REQUIRE(sq.size() == 3);
  CHECK(sq[1] == P("2*x0"));
  CHECK(sq[2] == P("x0^2"));
}

TEST_CASE("order of a function along a jet") {
  const auto X = parse_polynomial("x", {.ambient = true});
  const JetPoint line({0, 1, 0}, {0, 0, 0}, {0, 0, 0});
  CHECK(ord_t(line, X) == 1u);
  const auto d4 = Surface::d4().equation();
  const JetPoint p({0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(ord_t(p, d4).has_value());
  std::vector<Rational> x(8, 0), y(8, 0), z(8, 0);
  x[3] = -1;
  y[2] = -1;
  z[2] = 1;
  CHECK(ord_t(JetPoint(x, y, z), d4) == 6u);
}

TEST_CASE("truncation") {
  const JetPoint g({0, 1, 1}, {0, 0, 1}, {0, 0, 0});
  CHECK(truncate_jet(g, 1) == JetPoint({0, 1}, {0, 0}, {0, 0}));
  CHECK(truncate_jet(g, 2) == g);
  const JetPoint q({0, 0, 0, -1}, {0, 0, -1, 0}, {0, 0, 1, 0});
  CHECK(truncate_jet(q, 0) == JetPoint({0}, {0}, {0}));
  CHECK_THROWS(truncate_jet(q, 4));
  CHECK(q.coordinate(xv(3)) == -1);
  CHECK(evaluate(P("x3*y2 + z2"), q) == 2);
}
