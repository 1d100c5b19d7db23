#include "jetscheme/jet.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace jetscheme {

Surface Surface::a(unsigned n) {
  if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
  return {Kind::An, n};
}

Polynomial Surface::equation() const {
  const Polynomial x(xv(0));
  const Polynomial y(yv(0));
  const Polynomial z(zv(0));
  if (kind == Kind::An) return x * y - z.pow(n + 1);
  return x * x - y * y * z + z.pow(3);
}

std::string Surface::name() const {
  return kind == Kind::An ? "A" + std::to_string(n) : std::string("D4");
}

JetExpansion jet_coeffs(const Surface& s, unsigned m) { return jet_coeffs_shifted(s, m, 0, 0, 0); }

JetExpansion jet_coeffs_shifted(const Surface& s, unsigned m, unsigned p, unsigned q, unsigned r) {
  if (p > m || q > m || r > m) {
    throw std::out_of_range("jet_coeffs_shifted: shift exceeds order m");
  }
  return {s, m, poly_substitute_series(s.equation(), generic_series(m, p, q, r), m)};
}

LambdaXY lambda_xy(unsigned p, unsigned q, unsigned j) {
  LambdaXY out{p, q, j, {}};
  for (unsigned l1 = p; l1 <= j; ++l1) {
    if (j - l1 >= q) out.pairs.emplace_back(l1, j - l1);
  }
  return out;
}

LambdaZ lambda_z(unsigned r, unsigned j, unsigned n) {
  LambdaZ out{r, j, n, {}};
  const unsigned parts = n + 1;
  // Support size, then increasing supports, then compositions of n+1; the
  // weight sum_k i_k d_k never decreases along a branch, so prune at j.
  for (unsigned size = 1; size <= parts; ++size) {
    std::vector<unsigned> support;
    std::function<void(unsigned)> choose_support = [&](unsigned next) {
      if (support.size() == size) {
        std::vector<unsigned> mult;
        std::function<void(unsigned, unsigned, unsigned)> compose =
            [&](unsigned k, unsigned left, unsigned weight) {
              if (k == size) {
                if (left == 0 && weight == j) out.entries.push_back({support, mult});
                return;
              }
              const unsigned remaining_slots = size - k - 1;
              for (unsigned d = 1; d + remaining_slots <= left; ++d) {
                const unsigned w = weight + support[k] * d;
                if (w > j) break;
                mult.push_back(d);
                compose(k + 1, left - d, w);
                mult.pop_back();
              }
            };
        compose(0, parts, 0);
        return;
      }
      for (unsigned i = next; i <= j; ++i) {
        support.push_back(i);
        choose_support(i + 1);
        support.pop_back();
      }
    };
    choose_support(r);
  }
  return out;
}

Rational multinomial(unsigned total, const std::vector<unsigned>& parts) {
  static std::mutex mu;
  static std::vector<mpz_class> fact{1};
  auto factorial = [&](unsigned k) {
    std::lock_guard lock(mu);
    while (fact.size() <= k) fact.push_back(fact.back() * static_cast<unsigned long>(fact.size()));
    return fact[k];
  };
  mpz_class num = factorial(total);
  mpz_class den = 1;
  for (unsigned d : parts) den *= factorial(d);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial fpqr_closed(unsigned n, unsigned p, unsigned q, unsigned r, unsigned j) {
  if (n < 1) throw std::invalid_argument("fpqr_closed: n >= 1 required");
  std::vector<Term> terms;
  for (const auto& [l1, l2] : lambda_xy(p, q, j).pairs) {
    terms.push_back({Monomial({{xv(l1), 1}, {yv(l2), 1}}), Rational(1)});
  }
  for (const auto& e : lambda_z(r, j, n).entries) {
    std::vector<Monomial::Factor> f;
    for (std::size_t k = 0; k < e.support.size(); ++k) f.emplace_back(zv(e.support[k]), e.mult[k]);
    Rational c = multinomial(n + 1, e.mult);
    terms.push_back({Monomial(std::move(f)), -c});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial g_shift(unsigned n, unsigned l, unsigned e, unsigned j) {
  if (l > e * (n + 1)) throw std::out_of_range("g_shift: l exceeds e(n+1)");
  const Polynomial fj = jet_coeffs(Surface::a(n), j)[j];
  std::vector<Term> terms;
  for (const auto& t : fj.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, d] : t.mono.factors()) {
      std::uint32_t shift = 0;
      switch (v.family) {
        case Family::X: shift = l; break;
        case Family::Y: shift = e * (n + 1) - l; break;
        case Family::Z: shift = e; break;
        case Family::Aux: break;
      }
      f.emplace_back(Var{v.family, v.index + shift}, d);
    }
    terms.push_back({Monomial(std::move(f)), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace jetscheme
