#ifndef JETSCHEME_POLY_HPP
#define JETSCHEME_POLY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jetscheme {

using Rational = mpq_class;

// Declaration order is the global variable order, lowest family first.
enum class Family : std::uint8_t { Z = 0, Y = 1, X = 2, Aux = 3 };

/// A ring variable: a jet coordinate x_k, y_k, z_k or an auxiliary slot w_k.
///
/// Variables are totally ordered: every AUX slot is above every X variable,
/// X above Y, Y above Z. Inside one family a lower index ranks higher, so
/// x0 > x1 > x2 > ... > y0 > ... > z0 > z1 > ...
struct Var {
  Family family = Family::X;
  std::uint32_t index = 0;

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (a.family != b.family) return a.family <=> b.family;
    return b.index <=> a.index;
  }

  std::string name() const;
};

inline Var xv(std::uint32_t k) { return {Family::X, k}; }
inline Var yv(std::uint32_t k) { return {Family::Y, k}; }
inline Var zv(std::uint32_t k) { return {Family::Z, k}; }
inline Var wv(std::uint32_t k) { return {Family::Aux, k}; }

/// Power product with strictly positive exponents, stored highest variable
/// first. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // normalizes
  static Monomial of(Var v, std::uint32_t exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Precondition: divides(other) for this / other quotient.
  Monomial quotient(const Monomial& divisor) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded reverse lexicographic comparison under the global variable order.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over the rationals in canonical form: terms sorted
/// descending in graded reverse lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: integer constants read naturally in formulas
  explicit Polynomial(Rational c);
  Polynomial(Var v);  // NOLINT
  static Polynomial term(Monomial m, Rational c);
  // Sorts and merges arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::vector<Var> variables() const;  // ascending global order
  bool uses(Var v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::uint32_t e) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial scaled(const Rational& c) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

using Substitution = std::map<Var, Polynomial>;

/// Replaces each mapped variable by its image; unmapped variables are fixed.
Polynomial substitute(const Polynomial& p, const Substitution& map);

/// substitute() restricted to images of degree at most one.
Polynomial linear_substitute(const Polynomial& p, const Substitution& map);

/// Sets every listed variable to zero.
Polynomial set_zero(const Polynomial& p, std::span<const Var> vars);

Rational evaluate(const Polynomial& p, const std::function<Rational(Var)>& value);

// ---------------------------------------------------------------------------
// Text grammar

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  // Bare x, y, z denote ambient coordinates (read as x0, y0, z0); indexed
  // names are rejected.
  bool ambient = false;
};

Polynomial parse_polynomial(std::string_view text, ParseOptions opts = {});

std::string to_string(const Rational& q);

}  // namespace jetscheme

#endif  // JETSCHEME_POLY_HPP
