#include "jetscheme/an.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jetscheme/jet.hpp"

namespace jetscheme {

namespace {

void check_pair_args(unsigned n, unsigned m, unsigned i, unsigned j) {
  if (n == 1) {
    throw std::invalid_argument("A_1 has a single component; there are no pairwise intersections");
  }
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  if (m < n) throw std::invalid_argument("m >= n required");
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("1 <= i < j <= n required");
}

std::vector<Polynomial> an_coeffs(unsigned n, unsigned from, unsigned to) {
  const auto e = jet_coeffs(Surface::a(n), to);
  return {e.coeffs.begin() + from, e.coeffs.end()};
}

std::string pair_label(unsigned n, unsigned m, unsigned i, unsigned j) {
  return "A" + std::to_string(n) + " m=" + std::to_string(m) + " Z" + std::to_string(i) + " cap Z" +
         std::to_string(j);
}

// Containment of single polynomial; verified iff the expectation holds.
VerificationReport expect_membership(const Polynomial& p, const ComponentDescriptor& c, unsigned n,
                                     bool expected, const Budget& budget) {
  const std::string claim =
      p.to_string() + (expected ? " in " : " not in ") + c.to_string();
  VerificationReport r = member(p, c.ideal(n), budget, claim);
  if (r.outcome == Outcome::BudgetExhausted) return r;
  if (r.verified() == expected) {
    r.outcome = Outcome::Verified;
    return r;
  }
  r.outcome = Outcome::Refuted;
  if (!expected) r.certificate = p.to_string() + " lies in the ideal: " + r.certificate;
  return r;
}

}  // namespace

std::vector<Var> LadderIdeal::variables() const {
  std::vector<Var> v;
  for (unsigned k = 0; k < p; ++k) v.push_back(xv(k));
  for (unsigned k = 0; k < q; ++k) v.push_back(yv(k));
  for (unsigned k = 0; k < r; ++k) v.push_back(zv(k));
  return v;
}

Ideal LadderIdeal::ideal() const {
  const auto v = variables();
  return Ideal::of_variables(v);
}

std::string LadderIdeal::to_string() const {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

Ideal ladder(unsigned p, unsigned q, unsigned r) { return LadderIdeal{p, q, r}.ideal(); }

AnComponentIdeal component_ideal(unsigned n, unsigned m, unsigned l, const Budget& budget) {
  if (n < 1 || l < 1 || l > n || m < n) {
    throw std::invalid_argument("component_ideal: 1 <= l <= n <= m required");
  }
  const LadderIdeal lad{l, n + 1 - l, 1};
  AnComponentIdeal out;
  out.n = n;
  out.m = m;
  out.l = l;
  out.defining = lad.ideal().with(an_coeffs(n, 0, m));
  std::vector<Polynomial> g;
  for (unsigned k = 0; k + n + 1 <= m; ++k) g.push_back(g_shift(n, l, 1, k));
  out.reduced = lad.ideal().with(g);
  const std::string tag = "A" + std::to_string(n) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
  std::vector<VerificationReport> checks;
  checks.push_back(contained(out.defining.generators(), out.reduced, budget,
                             tag + ": defining generators in reduced presentation"));
  checks.push_back(contained(out.reduced.generators(), out.defining, budget,
                             tag + ": reduced generators in defining presentation"));
  out.agreement = VerificationReport::combine(tag + ": presentations agree", std::move(checks));
  return out;
}

Ideal pair_sum_ideal(unsigned n, unsigned m, unsigned i, unsigned j) {
  check_pair_args(n, m, i, j);
  return ladder(j, n + 1 - i, 1).with(an_coeffs(n, 0, m));
}

char case_letter(AnCase c) {
  switch (c) {
    case AnCase::A: return 'a';
    case AnCase::B: return 'b';
    case AnCase::C: return 'c';
    case AnCase::D: return 'd';
  }
  return '?';
}

Ideal ComponentDescriptor::ideal(unsigned n) const {
  Ideal base = ladder.ideal();
  if (!f_tail) return base;
  return base.with(an_coeffs(n, f_tail->first, f_tail->second));
}

int ComponentDescriptor::dimension(unsigned m) const {
  int d = 3 * static_cast<int>(m + 1) - static_cast<int>(ladder.p + ladder.q + ladder.r);
  if (f_tail) d -= static_cast<int>(f_tail->second - f_tail->first + 1);
  return d;
}

std::string ComponentDescriptor::to_string() const {
  std::string s = ladder.to_string();
  if (f_tail) {
    s += " + <f" + std::to_string(f_tail->first) + ".." + "f" + std::to_string(f_tail->second) + ">";
  }
  return s;
}

IntersectionDecomposition decompose_intersection(unsigned n, unsigned m, unsigned i, unsigned j) {
  check_pair_args(n, m, i, j);
  IntersectionDecomposition d;
  d.n = n;
  d.m = m;
  d.i = i;
  d.j = j;
  const unsigned gap = j - i;
  const unsigned excess = m - n;
  if (excess == 0) {
    d.kase = AnCase::A;
    d.components.push_back({{j, n + 1 - i, 1}, std::nullopt});
  } else if (excess <= gap) {
    // at excess == gap the other guard gives the same single ladder
    d.kase = AnCase::B;
    d.components.push_back({{j, n + 1 - i, 2}, std::nullopt});
  } else if (m < 2 * n + 2) {
    d.kase = AnCase::C;
    for (unsigned u = 0; u <= excess - gap; ++u) {
      d.components.push_back({{j + u, m - j - u + 1, 2}, std::nullopt});
    }
  } else {
    d.kase = AnCase::D;
    for (unsigned u = 0; u <= n + 1 - gap; ++u) {
      d.components.push_back({{j + u, 2 * n + 2 - j - u, 2}, std::make_pair(2 * n + 2, m)});
    }
  }
  d.dimension = intersection_dimension(n, m, i, j);
  return d;
}

std::size_t expected_component_count(unsigned n, unsigned m, unsigned i, unsigned j) {
  check_pair_args(n, m, i, j);
  const unsigned gap = j - i;
  if (m == n || m - n <= gap) return 1;
  if (m < 2 * n + 2) return m - n - gap + 1;
  return n - gap + 2;
}

int intersection_dimension(unsigned n, unsigned m, unsigned i, unsigned j) {
  check_pair_args(n, m, i, j);
  const int N = static_cast<int>(n);
  const int M = static_cast<int>(m);
  const int gap = static_cast<int>(j - i);
  if (m == n) return 2 * N - gap + 1;
  if (M - N < gap) return 3 * M - N - gap;
  return 2 * M;
}

int component_dimension(unsigned n, unsigned m) {
  if (m < n) throw std::invalid_argument("component_dimension: m >= n required");
  return 2 * static_cast<int>(m) + 1;
}

bool containment(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k, unsigned l) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  check_pair_args(n, m, i, j);
  check_pair_args(n, m, k, l);
  return i <= k && l <= j;
}

bool containment_from_components(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k,
                                 unsigned l) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  const auto small = decompose_intersection(n, m, i, j);
  const auto big = decompose_intersection(n, m, k, l);
  // Components are prime and share the same tail, so inclusion of
  // varieties is inclusion of ladders in the opposite direction.
  return std::all_of(small.components.begin(), small.components.end(), [&](const auto& c) {
    return std::any_of(big.components.begin(), big.components.end(), [&](const auto& b) {
      return b.ladder.contained_in(c.ladder) && b.f_tail == c.f_tail;
    });
  });
}

VerificationReport containment_oracle(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k,
                                      unsigned l, const Budget& budget) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  const Ideal small = pair_sum_ideal(n, m, i, j);
  const Ideal big = pair_sum_ideal(n, m, k, l);
  return radically_contained(big.generators(), small, budget,
                             pair_label(n, m, i, j) + " inside Z" + std::to_string(k) + " cap Z" +
                                 std::to_string(l));
}

std::vector<std::pair<unsigned, unsigned>> maximal_pairs(unsigned n, unsigned m) {
  if (n == 1) return {};
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& [i, j] : pairs) {
    const bool dominated = std::any_of(pairs.begin(), pairs.end(), [&](const auto& o) {
      if (o == std::make_pair(i, j)) return false;
      return containment_from_components(n, m, i, j, o.first, o.second) &&
             !containment_from_components(n, m, o.first, o.second, i, j);
    });
    if (!dominated) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> maximal_pairs(unsigned n) {
  if (n < 1) throw std::invalid_argument("maximal_pairs: n >= 1 required");
  return maximal_pairs(n, n);
}

VerificationReport verify_decomposition(unsigned n, unsigned m, unsigned i, unsigned j,
                                        const Budget& budget) {
  const auto dec = decompose_intersection(n, m, i, j);
  const Ideal J = pair_sum_ideal(n, m, i, j);
  const std::string label = pair_label(n, m, i, j);
  std::vector<VerificationReport> checks;

  {
    const bool ok = dec.count() == expected_component_count(n, m, i, j);
    std::string cert = std::to_string(dec.count()) + (dec.count() == 1 ? " component" : " components");
    checks.push_back(ok ? VerificationReport::verified_with("component count", cert)
                        : VerificationReport::refuted_with("component count", cert));
  }
  {
    std::vector<VerificationReport> dims;
    for (const auto& c : dec.components) {
      const int d = c.dimension(m);
      const std::string claim = c.to_string() + " has dimension " + std::to_string(dec.dimension);
      dims.push_back(d == dec.dimension
                         ? VerificationReport::verified_with(claim, "3(m+1) minus generators")
                         : VerificationReport::refuted_with(claim, "dimension " + std::to_string(d)));
    }
    checks.push_back(VerificationReport::combine("pure dimension", std::move(dims)));
  }

  for (const auto& c : dec.components) {
    checks.push_back(contained(J.generators(), c.ideal(n), budget, "J inside " + c.to_string()));
  }

  std::optional<Ideal> meet;
  if (dec.kase != AnCase::D) {
    std::vector<Ideal> ladders;
    for (const auto& c : dec.components) ladders.push_back(c.ladder.ideal());
    meet = monomial_ideal_intersect(ladders);
  } else {
    try {
      Ideal acc = dec.components[0].ideal(n);
      for (std::size_t u = 1; u < dec.count(); ++u) {
        acc = ideal_intersect_elim(acc, dec.components[u].ideal(n), budget);
      }
      meet = acc;
    } catch (const BudgetExhausted& e) {
      VerificationReport r;
      r.claim = "intersection of components";
      r.outcome = Outcome::BudgetExhausted;
      r.certificate = e.what();
      r.spairs = e.spairs();
      checks.push_back(r);
    }
  }
  if (meet) {
    checks.push_back(radically_contained(meet->generators(), J, budget,
                                         "intersection of components (" +
                                             std::to_string(meet->generators().size()) +
                                             " generators) inside sqrt(J)"));
  }

  for (std::size_t u1 = 0; u1 < dec.count(); ++u1) {
    for (std::size_t u2 = u1 + 1; u2 < dec.count(); ++u2) {
      const auto& c1 = dec.components[u1];
      const auto& c2 = dec.components[u2];
      const Polynomial xw(xv(j + static_cast<unsigned>(u2) - 1));
      const unsigned yi = dec.kase == AnCase::D ? 2 * n + 1 - j - static_cast<unsigned>(u1)
                                                : m - j - static_cast<unsigned>(u1);
      const Polynomial yw(yv(yi));
      std::vector<VerificationReport> w;
      w.push_back(expect_membership(xw, c2, n, true, budget));
      w.push_back(expect_membership(xw, c1, n, false, budget));
      w.push_back(expect_membership(yw, c1, n, true, budget));
      w.push_back(expect_membership(yw, c2, n, false, budget));
      checks.push_back(VerificationReport::combine(
          c1.to_string() + " and " + c2.to_string() + " not nested", std::move(w),
          "witnesses " + xw.to_string() + ", " + yw.to_string()));
    }
  }

  if (dec.kase == AnCase::D) {
    for (std::size_t u = 0; u < dec.count(); ++u) {
      const auto& c = dec.components[u];
      const auto pre = linear_presolve(c.ideal(n));
      std::vector<std::string> got;
      for (const auto& g : pre.residual.generators()) got.push_back(g.to_string());
      std::vector<std::string> want;
      bool disjoint = true;
      const auto lad = c.ladder.variables();
      for (unsigned v = 0; v + 2 * n + 2 <= m; ++v) {
        const Polynomial g = g_shift(n, j + static_cast<unsigned>(u), 2, v);
        want.push_back(g.to_string());
        for (const auto& var : g.variables()) {
          if (std::find(lad.begin(), lad.end(), var) != lad.end()) disjoint = false;
        }
      }
      auto eliminated = pre.eliminated;
      std::sort(eliminated.begin(), eliminated.end());
      auto lad_sorted = lad;
      std::sort(lad_sorted.begin(), lad_sorted.end());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      const std::string claim = c.to_string() + " residual is the shifted jet ideal";
      if (got == want && disjoint && eliminated == lad_sorted) {
        checks.push_back(VerificationReport::verified_with(
            claim, std::to_string(want.size()) + " shifted generators in variables disjoint from the ladder"));
      } else {
        std::string w = got.empty() ? std::string("<none>") : got.front();
        checks.push_back(VerificationReport::refuted_with(claim, "residual generator " + w));
      }
    }
  }

  std::string cert = std::string("case ") + case_letter(dec.kase) + ", " +
                     std::to_string(dec.count()) + (dec.count() == 1 ? " component:" : " components:");
  for (const auto& c : dec.components) cert += " " + c.to_string();
  return VerificationReport::combine(label + " decomposition", std::move(checks), cert);
}

AnTable an_table(unsigned n, unsigned m_from, unsigned m_to) {
  if (n < 2) throw std::invalid_argument("an_table: n >= 2 required");
  if (m_from < n || m_to < m_from) throw std::invalid_argument("an_table: n <= m_from <= m_to required");
  AnTable t;
  t.n = n;
  for (unsigned m = m_from; m <= m_to; ++m) {
    AnTableRow row;
    row.m = m;
    const int ambient = 3 * static_cast<int>(m + 1);
    row.dim_component = component_dimension(n, m);
    row.codim_component = ambient - row.dim_component;
    for (unsigned k = 2; k <= n; ++k) {
      const int d = intersection_dimension(n, m, 1, k);
      row.dim_pairs.push_back(d);
      row.codim_pairs.push_back(ambient - d);
      row.counts.push_back(decompose_intersection(n, m, 1, k).count());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::vector<std::string> table_header(unsigned n) {
  std::vector<std::string> h{"m", "dim_Z"};
  for (unsigned k = 2; k <= n; ++k) h.push_back("dim_Z1_Z" + std::to_string(k));
  h.push_back("codim_Z");
  for (unsigned k = 2; k <= n; ++k) h.push_back("codim_Z1_Z" + std::to_string(k));
  for (unsigned k = 2; k <= n; ++k) h.push_back("N1" + std::to_string(k));
  return h;
}

std::vector<std::string> table_cells(const AnTableRow& r) {
  std::vector<std::string> c{std::to_string(r.m), std::to_string(r.dim_component)};
  for (int d : r.dim_pairs) c.push_back(std::to_string(d));
  c.push_back(std::to_string(r.codim_component));
  for (int d : r.codim_pairs) c.push_back(std::to_string(d));
  for (auto k : r.counts) c.push_back(std::to_string(k));
  return c;
}

}  // namespace

std::string AnTable::to_csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
    os << '\n';
  };
  line(table_header(n));
  for (const auto& r : rows) line(table_cells(r));
  return os.str();
}

std::string AnTable::to_text() const {
  std::vector<std::vector<std::string>> all{table_header(n)};
  for (const auto& r : rows) all.push_back(table_cells(r));
  std::vector<std::size_t> width(all[0].size(), 0);
  for (const auto& row : all) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream os;
  for (const auto& row : all) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << "  ";
      os << std::setw(static_cast<int>(width[k])) << row[k];
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json AnTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["columns"] = table_header(n);
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    auto cells = nlohmann::ordered_json::array();
    cells.push_back(r.m);
    cells.push_back(r.dim_component);
    for (int d : r.dim_pairs) cells.push_back(d);
    cells.push_back(r.codim_component);
    for (int d : r.codim_pairs) cells.push_back(d);
    for (auto k : r.counts) cells.push_back(k);
    rows_json.push_back(std::move(cells));
  }
  j["rows"] = std::move(rows_json);
  return j;
}

nlohmann::ordered_json to_json(const IntersectionDecomposition& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["m"] = d.m;
  j["i"] = d.i;
  j["j"] = d.j;
  j["case"] = std::string(1, case_letter(d.kase));
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : d.components) {
    nlohmann::ordered_json cj;
    cj["p"] = c.ladder.p;
    cj["q"] = c.ladder.q;
    cj["r"] = c.ladder.r;
    if (c.f_tail) {
      cj["f_tail_from"] = c.f_tail->first;
      cj["f_tail_to"] = c.f_tail->second;
    } else {
      cj["f_tail_from"] = nullptr;
      cj["f_tail_to"] = nullptr;
    }
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["dimension"] = d.dimension;
  j["count"] = d.count();
  return j;
}

}  // namespace jetscheme
