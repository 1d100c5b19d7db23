#include "jetscheme/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jetscheme {

std::string Var::name() const {
  char prefix = 'x';
  switch (family) {
    case Family::X: prefix = 'x'; break;
    case Family::Y: prefix = 'y'; break;
    case Family::Z: prefix = 'z'; break;
    case Family::Aux: prefix = 'w'; break;
  }
  return prefix + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first > b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::of(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

namespace {

// Merge two descending factor lists, combining shared variables with `op`.
// `op` returning 0 drops the factor.
template <class Op>
std::vector<Monomial::Factor> merge_factors(std::span<const Monomial::Factor> a,
                                            std::span<const Monomial::Factor> b,
                                            Op op) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      if (auto e = op(a[i].second, 0u)) out.emplace_back(a[i].first, e);
      ++i;
    } else if (i == a.size() || b[j].first > a[i].first) {
      if (auto e = op(0u, b[j].second)) out.emplace_back(b[j].first, e);
      ++j;
    } else {
      if (auto e = op(a[i].second, b[j].second)) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_ = merge_factors(a.factors_, b.factors_,
                             [](std::uint32_t x, std::uint32_t y) { return x + y; });
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first > v) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != v ||
        other.factors_[j].second < e) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  m.factors_ = merge_factors(factors_, other.factors_,
                             [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  m.factors_ = merge_factors(factors_, divisor.factors_,
                             [](std::uint32_t x, std::uint32_t y) { return x - y; });
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first > v) ++j;
    if (j < other.factors_.size() && other.factors_[j].first == v) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da <=> db;
  auto fa = a.factors();
  auto fb = b.factors();
  // Walk from the lowest variable upward; a larger exponent there means smaller.
  auto i = fa.size();
  auto j = fb.size();
  while (i > 0 && j > 0) {
    const auto& [va, ea] = fa[i - 1];
    const auto& [vb, eb] = fb[j - 1];
    if (va < vb) return std::strong_ordering::less;
    if (vb < va) return std::strong_ordering::greater;
    if (ea != eb) return eb <=> ea;
    --i;
    --j;
  }
  if (i > 0) return std::strong_ordering::less;
  if (j > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Polynomial::Polynomial(Var v) { terms_.push_back({Monomial::of(v), Rational(1)}); }

Polynomial Polynomial::term(Monomial m, Rational c) {
  Polynomial p;
  c.canonicalize();
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.mono.exponent(v) > 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j == b.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = grevlex(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order is preserved.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const { return mul_term(Monomial{}, c); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += jetscheme::to_string(mag);
    } else if (mag == 1) {
      out += t.mono.to_string();
    } else {
      out += jetscheme::to_string(mag) + "*" + t.mono.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  std::map<std::pair<Var, std::uint32_t>, Polynomial> powers;
  auto image_pow = [&](Var v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = map.find(v);
    Polynomial base = img == map.end() ? Polynomial(v) : img->second;
    return powers.emplace(key, base.pow(e)).first->second;
  };
  Polynomial out;
  for (const auto& t : p.terms()) {
    Polynomial prod(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      prod *= image_pow(v, e);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Polynomial linear_substitute(const Polynomial& p, const Substitution& map) {
  for (const auto& [v, img] : map) {
    if (img.total_degree() > 1) {
      throw std::invalid_argument("linear_substitute: image of " + v.name() +
                                  " has degree > 1");
    }
  }
  return substitute(p, map);
}

Polynomial set_zero(const Polynomial& p, std::span<const Var> vars) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    bool hit = false;
    for (const auto& f : t.mono.factors()) {
      if (std::find(vars.begin(), vars.end(), f.first) != vars.end()) {
        hit = true;
        break;
      }
    }
    if (!hit) kept.push_back(t);
  }
  // Dropping terms keeps the canonical order.
  Polynomial out;
  for (auto& t : kept) out += Polynomial::term(std::move(t.mono), std::move(t.coeff));
  return out;
}

Rational evaluate(const Polynomial& p, const std::function<Rational(Var)>& value) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.mono.factors()) {
      Rational a = value(v);
      for (std::uint32_t k = 0; k < e; ++k) prod *= a;
    }
    sum += prod;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, ParseOptions opts) : text_(text), opts_(opts) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  bool starts_factor() {
    skip_ws();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' ||
           c == 'z' || c == 'w';
  }

  Polynomial term() {
    if (!starts_factor()) {
      throw ParseError(at_end() ? "unexpected end of input"
                                : std::string("unexpected '") + peek() + "'",
                       pos_);
    }
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) throw ParseError("expected factor after '*'", pos_);
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const auto start = pos_;
      auto digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_ws();
    const auto start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(read_digits());
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const auto dpos = pos_;
        auto den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", dpos);
        Rational d(den);
        if (d == 0) throw ParseError("zero denominator", dpos);
        q /= d;
      }
      q.canonicalize();
      return Polynomial(q);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    Family fam = Family::X;
    switch (c) {
      case 'x': fam = Family::X; break;
      case 'y': fam = Family::Y; break;
      case 'z': fam = Family::Z; break;
      case 'w': fam = Family::Aux; break;
      default: throw ParseError(std::string("unexpected '") + c + "'", start);
    }
    ++pos_;
    auto digits = read_digits();
    if (opts_.ambient) {
      if (!digits.empty() || fam == Family::Aux) {
        throw ParseError("jet-indexed variable in ambient polynomial", start);
      }
      return Polynomial(Var{fam, 0});
    }
    if (digits.empty()) throw ParseError("variable needs an index", start);
    if (digits.size() > 9) throw ParseError("index too large", start);
    return Polynomial(Var{fam, static_cast<std::uint32_t>(std::stoul(digits))});
  }

  std::string_view text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, ParseOptions opts) {
  return Parser(text, opts).parse();
}

}  // namespace jetscheme
