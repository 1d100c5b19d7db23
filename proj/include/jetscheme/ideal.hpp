#ifndef JETSCHEME_IDEAL_HPP
#define JETSCHEME_IDEAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetscheme/poly.hpp"
#include "jetscheme/report.hpp"

namespace jetscheme {

/// Computation limits. Exceeding either aborts with BudgetExhausted.
struct Budget {
  std::uint64_t max_spairs = 100000;
  double max_seconds = 300.0;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t spairs)
      : std::runtime_error(what), spairs_(spairs) {}
  std::uint64_t spairs() const { return spairs_; }

 private:
  std::uint64_t spairs_;
};

struct MonomialOrder {
  enum class Kind { GrevLex, Lex, Block };

  Kind kind = Kind::GrevLex;
  // Block only: these variables form the upper block; both blocks are
  // compared by graded reverse lex.
  std::vector<Var> eliminate;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder block(std::vector<Var> eliminated);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Reduced Groebner basis: monic elements, sorted ascending by leading term.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::uint64_t spairs = 0;
  double seconds = 0;

  bool is_unit() const;
  bool is_zero() const { return elements.empty(); }
};

class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped. The ambient variable set is the union of
  /// `ambient` and the variables of the generators.
  explicit Ideal(std::vector<Polynomial> generators, std::vector<Var> ambient = {});

  static Ideal unit() { return Ideal({Polynomial(1L)}); }
  static Ideal of_variables(std::span<const Var> vars);

  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Var>& ambient() const { return ambient_; }  // ascending
  bool is_monomial() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Polynomial>& extra) const;
  Ideal with_ambient(std::span<const Var> vars) const;

  /// Cached reduced basis for `order`; computed on first request.
  std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& order,
                                                const Budget& budget = {}) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::shared_ptr<const GroebnerBasis>> bases;
  };

  std::vector<Polynomial> gens_;
  std::vector<Var> ambient_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Buchberger's algorithm, sugar selection strategy, Gebauer-Moeller
/// criteria. Deterministic for a fixed input and order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget = {});

/// Complete reduction of p by a Groebner basis; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// True when every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// An auxiliary variable not used by any of the given polynomials.
Var fresh_aux(std::span<const Polynomial> polys);

/// Removes generators of the form c*v, setting v to zero everywhere else,
/// until no such generator remains.
struct PresolveResult {
  Ideal residual;
  std::vector<Var> eliminated;  // in elimination order
  bool unit = false;            // a nonzero constant appeared

  Polynomial reduce(const Polynomial& p) const { return set_zero(p, eliminated); }
};
PresolveResult linear_presolve(const Ideal& ideal);

/// p in I, decided by a normal form after presolve.
VerificationReport member(const Polynomial& p, const Ideal& ideal, const Budget& budget = {},
                          std::string claim = {});

/// p in sqrt(I), decided by whether 1 lies in I + <1 - w*p>.
VerificationReport radical_member(const Polynomial& p, const Ideal& ideal,
                                  const Budget& budget = {}, std::string claim = {});

/// Every polynomial of `polys` lies in I. One presolve and one basis serve
/// all queries; a refutation names the first polynomial outside I.
VerificationReport contained(std::span<const Polynomial> polys, const Ideal& ideal,
                             const Budget& budget = {}, std::string claim = {});

/// Every polynomial of `polys` lies in sqrt(I). Small powers p^k are tested
/// against one basis of I first; the rest go through radical_member.
VerificationReport radically_contained(std::span<const Polynomial> polys, const Ideal& ideal,
                                       const Budget& budget = {}, std::string claim = {},
                                       unsigned max_power = 8);

/// Intersection of monomial ideals: pairwise lcms, minimalized. Throws
/// std::invalid_argument on a non-monomial generator.
Ideal monomial_ideal_intersect(std::span<const Ideal> ideals);

/// I cap J = <w*I, (1-w)*J> cap k[retained], by block elimination of w.
/// Coordinate variables eliminated from both ideals are factored out first.
Ideal ideal_intersect_elim(const Ideal& a, const Ideal& b, const Budget& budget = {});

/// I : p^infinity = (I + <1 - w*p>) cap k[retained].
Ideal saturate(const Ideal& ideal, const Polynomial& p, const Budget& budget = {});

/// Krull dimension of k[ambient]/I from the leading terms of a grevlex basis.
/// Returns -1 for the unit ideal.
int krull_dimension(const Ideal& ideal, const Budget& budget = {});

}  // namespace jetscheme

#endif  // JETSCHEME_IDEAL_HPP
