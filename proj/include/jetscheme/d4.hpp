#ifndef JETSCHEME_D4_HPP
#define JETSCHEME_D4_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "jetscheme/ideal.hpp"
#include "jetscheme/series.hpp"

namespace jetscheme {

/// Linear symmetries of x^2 - y^2 z + z^3 acting on (y_k, z_k) for every k.
enum class D4Automorphism { Phi1, Phi2, Phi2Inverse };

std::string automorphism_name(D4Automorphism a);

/// Images of y_k and z_k for every index k used by p.
Polynomial apply_automorphism(D4Automorphism a, const Polynomial& p);
Ideal apply_automorphism(D4Automorphism a, const Ideal& ideal);
/// The induced map on points, chosen so that g(a(P)) = a(g)(P).
JetPoint apply_automorphism(D4Automorphism a, const JetPoint& point);

/// The ideals of the D4 singular fiber at order m >= 5. The saturated
/// component ideals are computed on request and memoized per family.
class D4Ideals {
 public:
  explicit D4Ideals(unsigned m);

  unsigned m() const { return m_; }
  const std::vector<Polynomial>& jet() const { return jet_; }  // f^(0..m)
  const Ideal& l322() const { return l322_; }
  const Ideal& ladder(unsigned i) const;  // i in 1..3
  const Ideal& i0() const { return i0_; }
  const Ideal& j(unsigned i) const;       // i in 1..3

  /// J^i : y1^infinity. Throws BudgetExhausted.
  const Ideal& component(unsigned i, const Budget& budget = {}) const;

 private:
  struct Memo {
    std::mutex mu;
    std::map<unsigned, Ideal> components;
  };

  unsigned m_;
  std::vector<Polynomial> jet_;
  Ideal l322_;
  Ideal ladders_[3];
  Ideal i0_;
  Ideal j_[3];
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

D4Ideals d4_ideals(unsigned m);

/// J_m^i : y1^infinity, computed after presolve.
Ideal d4_component_ideal(unsigned m, unsigned i, const Budget& budget = {});

Polynomial d4_g1();
Polynomial d4_g2();
/// g2 with the coordinates of L(3,2,2) set to zero.
Polynomial d4_h();

/// y1^2 g1 = F5^2 - 4 x3^2 F4 + 4 y1 y2 z2 F5 with F4, F5 the shifted
/// coefficients for (p,q,r) = (2,1,2), plus the consequence y1^2 g1 in J^1.
VerificationReport verify_g1_identity(unsigned m, const Budget& budget = {});

/// phi2^{-1}(g1) with y1 replaced by z1 equals g2 / 4.
VerificationReport verify_g2_identity();

/// phi_s(f^(j)) = f^(j) for s = 1, 2 and j <= m.
VerificationReport verify_jet_invariance(unsigned m);

/// y1, z1, x2 in sqrt(J^i + J^j), and I^0 inside sqrt(J^i + J^j).
VerificationReport verify_coordinate_lemma(unsigned m, unsigned i, unsigned j,
                                           const Budget& budget = {});

/// Witness points separating Z^0 cap Z^1 from Z^0 cap Z^1 cap Z^2.
struct D4WitnessPoints {
  static JetPoint p(unsigned m);                        // (0, t^2, 0)
  static JetPoint p_prime(unsigned m, const Rational& s);  // (0, s t + t^2, 0)
  static JetPoint q(unsigned m);                        // (-t^3, -t^2, t^2)
  static JetPoint q_prime(unsigned m, const Rational& s);  // (s t^2 - t^3, s t - t^2, t^2)
  static SeriesTriple p_prime_symbolic(unsigned m, Var s);
  static SeriesTriple q_prime_symbolic(unsigned m, Var s);
};

/// m = 5: the point Q and the function h; m >= 6: the point P and the
/// radical chain z2, x3, y2.
VerificationReport witness_checks(unsigned m, const Budget& budget = {});

/// phi_s maps the ladders L^1..L^3 onto each other as the permutation of
/// the components requires, and fixes L(3,2,2).
VerificationReport verify_transport(unsigned m, const Budget& budget = {});

struct D4MaximalResult {
  std::vector<std::pair<unsigned, unsigned>> pairs;  // empty when facts are missing
  VerificationReport report;
};

/// Maximal pairwise intersections of Z^0..Z^3, derived from the verified
/// containment and strictness facts.
D4MaximalResult d4_maximal_intersections(unsigned m, const Budget& budget = {});

}  // namespace jetscheme

#endif  // JETSCHEME_D4_HPP
