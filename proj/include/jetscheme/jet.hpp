#ifndef JETSCHEME_JET_HPP
#define JETSCHEME_JET_HPP

#include <utility>
#include <vector>

#include "jetscheme/poly.hpp"
#include "jetscheme/series.hpp"

namespace jetscheme {

/// Surface x*y - z^{n+1} (type A_n) or x^2 - y^2*z + z^3 (type D_4).
struct Surface {
  enum class Kind { An, D4 };
  Kind kind = Kind::An;
  unsigned n = 1;  // only meaningful for A_n

  static Surface a(unsigned n);
  static Surface d4() { return {Kind::D4, 4}; }

  /// The defining polynomial in ambient coordinates (x0, y0, z0 read as x, y, z).
  Polynomial equation() const;
  std::string name() const;

  friend bool operator==(const Surface&, const Surface&) = default;
};

struct JetExpansion {
  Surface surface;
  unsigned m = 0;
  std::vector<Polynomial> coeffs;  // f^(0), ..., f^(m)

  const Polynomial& operator[](std::size_t j) const { return coeffs.at(j); }
};

/// f^(0..m): coefficients of f evaluated at the generic jet of order m.
JetExpansion jet_coeffs(const Surface& s, unsigned m);

/// f_{pqr}^(0..m): as jet_coeffs but with x_i (i < p), y_i (i < q), z_i (i < r)
/// removed from the generic jet.
JetExpansion jet_coeffs_shifted(const Surface& s, unsigned m, unsigned p, unsigned q, unsigned r);

/// Pairs (l1, l2) with l1 >= p, l2 >= q, l1 + l2 = j, ordered by l1.
struct LambdaXY {
  unsigned p = 0, q = 0, j = 0;
  std::vector<std::pair<unsigned, unsigned>> pairs;
};
LambdaXY lambda_xy(unsigned p, unsigned q, unsigned j);

/// One weighted composition: support r <= i_1 < ... < i_l <= j with positive
/// multiplicities d_k, sum d_k = n + 1 and sum i_k d_k = j.
struct ZComposition {
  std::vector<unsigned> support;
  std::vector<unsigned> mult;
  friend bool operator==(const ZComposition&, const ZComposition&) = default;
};

struct LambdaZ {
  unsigned r = 0, j = 0, n = 0;
  std::vector<ZComposition> entries;
};
LambdaZ lambda_z(unsigned r, unsigned j, unsigned n);

/// (n+1)! / (d_1! ... d_l!)
Rational multinomial(unsigned total, const std::vector<unsigned>& parts);

/// Closed formula for f_{pqr}^(j) on the A_n surface, built from the
/// enumerated Lambda sets instead of series substitution.
Polynomial fpqr_closed(unsigned n, unsigned p, unsigned q, unsigned r, unsigned j);

/// f^(j) of A_n re-indexed by x_k -> x_{l+k}, y_k -> y_{e(n+1)-l+k},
/// z_k -> z_{e+k}. Requires 0 <= l <= e(n+1).
Polynomial g_shift(unsigned n, unsigned l, unsigned e, unsigned j);

}  // namespace jetscheme

#endif  // JETSCHEME_JET_HPP
