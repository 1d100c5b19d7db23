#include "jetscheme/series.hpp"

#include <map>
#include <stdexcept>

namespace jetscheme {

const Series& SeriesTriple::of(Family f) const {
  switch (f) {
    case Family::X: return x;
    case Family::Y: return y;
    case Family::Z: return z;
    case Family::Aux: break;
  }
  throw std::invalid_argument("series: no auxiliary coordinate");
}

SeriesTriple generic_series(unsigned m, unsigned p, unsigned q, unsigned r) {
  SeriesTriple s{Series(m + 1), Series(m + 1), Series(m + 1)};
  for (unsigned i = 0; i <= m; ++i) {
    if (i >= p) s.x[i] = Polynomial(xv(i));
    if (i >= q) s.y[i] = Polynomial(yv(i));
    if (i >= r) s.z[i] = Polynomial(zv(i));
  }
  return s;
}

Series series_mul(const Series& a, const Series& b, unsigned m) {
  Series c(m + 1);
  for (unsigned i = 0; i < a.size() && i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j < b.size() && i + j <= m; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<Polynomial> poly_substitute_series(const Polynomial& f, const SeriesTriple& series,
                                               unsigned m) {
  for (const auto& v : f.variables()) {
    if (v.family == Family::Aux || v.index != 0) {
      throw std::invalid_argument("poly_substitute_series: " + v.name() +
                                  " is not an ambient coordinate");
    }
  }
  for (const Series* s : {&series.x, &series.y, &series.z}) {
    if (s->size() < static_cast<std::size_t>(m) + 1) {
      throw std::invalid_argument("poly_substitute_series: series shorter than order");
    }
  }

  // powers[f][e] = series_f^e mod t^{m+1}
  std::map<Family, std::vector<Series>> powers;
  auto power = [&](Family fam, std::uint32_t e) -> const Series& {
    auto& table = powers[fam];
    if (table.empty()) {
      Series one(m + 1);
      one[0] = Polynomial(1L);
      table.push_back(std::move(one));
    }
    const auto& s = series.of(fam);
    const Series base(s.begin(), s.begin() + m + 1);
    while (table.size() <= e) table.push_back(series_mul(table.back(), base, m));
    return table[e];
  };

  std::vector<Polynomial> out(m + 1);
  for (const auto& t : f.terms()) {
    Series prod(m + 1);
    prod[0] = Polynomial(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) prod = series_mul(prod, power(v.family, e), m);
    for (unsigned k = 0; k <= m; ++k) out[k] += prod[k];
  }
  return out;
}

JetPoint::JetPoint(std::vector<Rational> x, std::vector<Rational> y, std::vector<Rational> z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_.empty() || x_.size() != y_.size() || x_.size() != z_.size()) {
    throw std::invalid_argument("JetPoint: coefficient lists must have equal nonzero length");
  }
}

const std::vector<Rational>& JetPoint::of(Family f) const {
  switch (f) {
    case Family::X: return x_;
    case Family::Y: return y_;
    case Family::Z: return z_;
    case Family::Aux: break;
  }
  throw std::invalid_argument("JetPoint: no auxiliary coordinate");
}

Rational JetPoint::coordinate(Var v) const {
  const auto& c = of(v.family);
  if (v.index >= c.size()) {
    throw std::out_of_range("JetPoint: " + v.name() + " beyond order " +
                            std::to_string(order()));
  }
  return c[v.index];
}

SeriesTriple JetPoint::as_series() const {
  SeriesTriple s;
  for (const auto& a : x_) s.x.emplace_back(a);
  for (const auto& a : y_) s.y.emplace_back(a);
  for (const auto& a : z_) s.z.emplace_back(a);
  return s;
}

Rational evaluate(const Polynomial& p, const JetPoint& point) {
  return evaluate(p, [&](Var v) { return point.coordinate(v); });
}

Polynomial evaluate(const Polynomial& p, const SeriesTriple& point) {
  Substitution sub;
  for (const auto& v : p.variables()) {
    if (v.family == Family::Aux) continue;
    const auto& s = point.of(v.family);
    if (v.index >= s.size()) throw std::out_of_range("evaluate: " + v.name() + " beyond order");
    sub.emplace(v, s[v.index]);
  }
  return substitute(p, sub);
}

std::optional<unsigned> ord_t(const JetPoint& point, const Polynomial& g) {
  const auto coeffs = poly_substitute_series(g, point.as_series(), point.order());
  for (unsigned k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) return k;
  }
  return std::nullopt;
}

JetPoint truncate_jet(const JetPoint& point, unsigned m_prime) {
  if (m_prime > point.order()) {
    throw std::invalid_argument("truncate_jet: target order " + std::to_string(m_prime) +
                                " exceeds " + std::to_string(point.order()));
  }
  auto cut = [&](const std::vector<Rational>& c) {
    return std::vector<Rational>(c.begin(), c.begin() + m_prime + 1);
  };
  return {cut(point.x()), cut(point.y()), cut(point.z())};
}

}  // namespace jetscheme
