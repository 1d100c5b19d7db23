#ifndef JETSCHEME_SERIES_HPP
#define JETSCHEME_SERIES_HPP

#include <optional>
#include <vector>

#include "jetscheme/poly.hpp"

namespace jetscheme {

/// Truncated power series in t: coefficient k multiplies t^k.
using Series = std::vector<Polynomial>;

/// One truncated series per ambient coordinate. All three have the same
/// length m + 1.
struct SeriesTriple {
  Series x, y, z;

  std::size_t order() const { return x.empty() ? 0 : x.size() - 1; }
  const Series& of(Family f) const;
};

/// The generic jet (sum_{i>=p} x_i t^i, sum_{i>=q} y_i t^i, sum_{i>=r} z_i t^i)
/// truncated at order m.
SeriesTriple generic_series(unsigned m, unsigned p = 0, unsigned q = 0, unsigned r = 0);

/// Product of two series modulo t^{m+1}.
Series series_mul(const Series& a, const Series& b, unsigned m);

/// Coefficients of t^0..t^m of f(series) modulo t^{m+1}.
///
/// f must be an ambient polynomial: it may only use x0, y0, z0 (read as
/// x, y, z). Throws std::invalid_argument otherwise.
std::vector<Polynomial> poly_substitute_series(const Polynomial& f, const SeriesTriple& series,
                                               unsigned m);

/// A closed point of the ambient jet space: three rational series of order m.
class JetPoint {
 public:
  JetPoint(std::vector<Rational> x, std::vector<Rational> y, std::vector<Rational> z);

  unsigned order() const { return static_cast<unsigned>(x_.size() - 1); }
  const std::vector<Rational>& x() const { return x_; }
  const std::vector<Rational>& y() const { return y_; }
  const std::vector<Rational>& z() const { return z_; }
  const std::vector<Rational>& of(Family f) const;

  /// Value of the coordinate variable x_k / y_k / z_k at this point.
  Rational coordinate(Var v) const;

  SeriesTriple as_series() const;

  friend bool operator==(const JetPoint&, const JetPoint&) = default;

 private:
  std::vector<Rational> x_, y_, z_;
};

/// Evaluates a polynomial in jet coordinates at the point.
Rational evaluate(const Polynomial& p, const JetPoint& point);

/// Evaluates a polynomial in jet coordinates at a symbolic point: x_k is
/// replaced by the k-th coefficient of the x series, and so on.
Polynomial evaluate(const Polynomial& p, const SeriesTriple& point);

/// t-order of g(point) modulo t^{m+1}; nullopt means the expansion vanishes
/// to order m (the true order is at least m + 1).
std::optional<unsigned> ord_t(const JetPoint& point, const Polynomial& g);

/// Drops the coefficients above t^{m'}. Throws if m' exceeds the order.
JetPoint truncate_jet(const JetPoint& point, unsigned m_prime);

}  // namespace jetscheme

#endif  // JETSCHEME_SERIES_HPP
