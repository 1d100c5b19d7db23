// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "jetscheme/an.hpp"
#include "jetscheme/cli.hpp"
#include "jetscheme/d4.hpp"
#include "jetscheme/graph.hpp"
#include "jetscheme/jet.hpp"

using namespace jetscheme;

namespace {

VerificationReport check(std::string claim, bool ok, const std::string& detail) {
  return ok ? VerificationReport::verified_with(std::move(claim), detail)
            : VerificationReport::refuted_with(std::move(claim), detail);
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerificationReport c1_expand() {
  const auto [code, out] = cli({"expand", "x*y - z^2", "--m", "2"});
  const std::string want =
      "f^(0) = x0*y0 - z0^2\n"
      "f^(1) = x1*y0 + x0*y1 - 2*z0*z1\n"
      "f^(2) = x2*y0 + x1*y1 + x0*y2 - z1^2 - 2*z0*z2\n";
  return check("expand x*y - z^2 to order 2", code == 0 && out == want, out);
}

VerificationReport c2_table() {
  const auto [code, out] = cli({"an", "table", "--n", "3", "--m", "3..7", "--format", "csv"});
  // rows as printed for A_3
  const std::string want =
      "m,dim_Z,dim_Z1_Z2,dim_Z1_Z3,codim_Z,codim_Z1_Z2,codim_Z1_Z3,N12,N13\n"
      "3,7,6,5,5,6,7,1,1\n"
      "4,9,8,7,6,7,8,1,1\n"
      "5,11,10,10,7,8,8,2,1\n"
      "6,13,12,12,8,9,9,3,2\n"
      "7,15,14,14,9,10,10,4,3\n";
  return check("A_3 table for m = 3..7", code == 0 && out == want, out);
}

VerificationReport c3_closed_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t compared = 0, mismatches = 0;
  std::string first;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned p = 0; p <= 3; ++p) {
      for (unsigned q = 0; q <= 3; ++q) {
        for (unsigned r = 0; r <= 3; ++r) {
          const auto sub = jet_coeffs_shifted(Surface::a(n), 8, p, q, r);
          for (unsigned j = 0; j <= 8; ++j) {
            ++compared;
            if (fpqr_closed(n, p, q, r, j) != sub[j]) {
              if (!mismatches++) {
                first = "n=" + std::to_string(n) + " pqr=" + std::to_string(p) + std::to_string(q) +
                        std::to_string(r) + " j=" + std::to_string(j);
              }
            }
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  std::vector<VerificationReport> checks;
  checks.push_back(check("closed formula equals substitution", mismatches == 0,
                         std::to_string(compared) + " coefficients, " + std::to_string(mismatches) +
                             " mismatches" + (first.empty() ? "" : ", first at " + first)));
  checks.push_back(check("closed-formula comparison under 60 s", secs < 60, "within the limit"));
  return VerificationReport::combine("closed formula, n <= 4, p,q,r <= 3, j <= 8", std::move(checks));
}

VerificationReport c4_shift_identity() {
  std::size_t compared = 0, mismatches = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned e = 1; e <= 2; ++e) {
      const unsigned base = e * (n + 1);
      for (unsigned l = 0; l <= base; ++l) {
        const auto F = jet_coeffs_shifted(Surface::a(n), base + 4, l, base - l, e);
        for (unsigned j = 0; j <= 4; ++j) {
          ++compared;
          if (F[base + j] != g_shift(n, l, e, j)) ++mismatches;
        }
      }
    }
  }
  return check("shifted coefficients equal the shift polynomials, n <= 3, e in {1,2}, j <= 4",
               mismatches == 0,
               std::to_string(compared) + " identities, " + std::to_string(mismatches) + " mismatches");
}

VerificationReport c5_decompositions() {
  std::vector<VerificationReport> checks;
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned m = n; m <= 2 * n + 1; ++m) {
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) checks.push_back(verify_decomposition(n, m, i, j));
      }
    }
  }
  for (unsigned m : {6u, 7u}) checks.push_back(verify_decomposition(2, m, 1, 2));
  return VerificationReport::combine("A_n decompositions, n in {2,3}, cases a-d", std::move(checks));
}

VerificationReport c6_containment() {
  std::vector<VerificationReport> checks;
  std::size_t cases = 0;
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned m = n; m <= n + 3; ++m) {
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          for (unsigned k = 1; k <= n; ++k) {
            for (unsigned l = k + 1; l <= n; ++l) {
              ++cases;
              const bool index = containment(n, m, i, j, k, l);
              auto r = containment_oracle(n, m, i, j, k, l);
              const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " (" +
                                      std::to_string(i) + "," + std::to_string(j) + ") in (" +
                                      std::to_string(k) + "," + std::to_string(l) + ")";
              if (r.outcome == Outcome::BudgetExhausted) {
                r.claim = tag;
                checks.push_back(std::move(r));
              } else if (r.verified() != index) {
                checks.push_back(VerificationReport::refuted_with(
                    tag, std::string("index criterion says ") + (index ? "true" : "false") +
                             ", engine says " + outcome_name(r.outcome)));
              }
            }
          }
        }
      }
    }
  }
  checks.push_back(check("index criterion agrees with the engine", true, std::to_string(cases) + " cases"));
  return VerificationReport::combine("containment criterion, n <= 3, m <= n+3", std::move(checks));
}

VerificationReport c7_d4_identities() {
  std::vector<VerificationReport> checks;
  checks.push_back(verify_g1_identity(5));
  checks.push_back(verify_g2_identity());
  const std::vector<Var> l222{xv(0), xv(1), yv(0), yv(1), zv(0), zv(1)};
  const auto f4 = jet_coeffs(Surface::d4(), 4)[4];
  const auto rest = set_zero(Polynomial(xv(2)).pow(2) - f4, l222);
  checks.push_back(check("x2^2 = f4 modulo L(2,2,2)", rest.is_zero(), "remainder " + rest.to_string()));
  checks.push_back(verify_jet_invariance(8));
  return VerificationReport::combine("D_4 exact identities", std::move(checks));
}

VerificationReport c8_d4_witnesses() {
  std::vector<VerificationReport> checks;
  const auto hq = evaluate(d4_h(), D4WitnessPoints::q(5));
  checks.push_back(check("h(Q) = -32", hq == -32, "h(Q) = " + to_string(hq)));
  const auto y2 = D4WitnessPoints::p(6).coordinate(yv(2));
  checks.push_back(check("y2(P) = 1", y2 == 1, "y2(P) = " + to_string(y2)));
  const D4Ideals fam(5);
  for (long s : {1L, 2L, -1L}) {
    bool all = true;
    for (const auto& g : fam.j(1).generators()) all = all && evaluate(g, D4WitnessPoints::q_prime(5, Rational(s))) == 0;
    checks.push_back(check("J^1 vanishes at Q'(" + std::to_string(s) + ")", all, "m=5"));
  }
  const auto ord = ord_t(D4WitnessPoints::q(7), Surface::d4().equation());
  checks.push_back(check("ord_Q(f) = 6", ord && *ord == 6, ord ? std::to_string(*ord) : "vanishes to order 7"));
  checks.push_back(witness_checks(5));
  checks.push_back(witness_checks(6));
  return VerificationReport::combine("D_4 witness suite", std::move(checks));
}

VerificationReport c9_graphs() {
  std::vector<VerificationReport> checks;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto path = resolution_graph(ResolutionKind::a(n));
    for (unsigned m = n; m <= 2 * n + 3; ++m) {
      const auto g = an_intersection_graph(n, m);
      if (!isomorphic(g, path)) {
        checks.push_back(check("A_" + std::to_string(n) + " m=" + std::to_string(m), false, to_dot(g)));
      }
    }
  }
  checks.push_back(check("A_n graphs are paths, n = 2..6, m = n..2n+3", true, "all isomorphic"));
  const auto star = resolution_graph(ResolutionKind::d4());
  for (unsigned m = 5; m <= 8; ++m) {
    auto r = d4_intersection_graph(m);
    checks.push_back(std::move(r.report));
    checks.push_back(check("D_4 graph is K_{1,3} at m=" + std::to_string(m), isomorphic(r.graph, star),
                           to_dot(r.graph)));
  }
  return VerificationReport::combine("intersection graphs", std::move(checks));
}

VerificationReport c10_saturation() {
  const std::string claim = "g1 in J_5^1 : y1^infinity";
  try {
    const Ideal sat = d4_component_ideal(5, 1, Budget{100000, 300});
    auto r = member(d4_g1(), sat, {}, claim);
    return r;
  } catch (const BudgetExhausted& e) {
    auto r = verify_g1_identity(5);
    r.claim = claim;
    r.certificate = "downgraded after budget exhaustion (" + std::string(e.what()) +
                    "): y1^2*g1 in J_5^1 only";
    return r;
  }
}

struct Criterion {
  int id;
  std::function<VerificationReport()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, c1_expand},         {2, c2_table},         {3, c3_closed_formula}, {4, c4_shift_identity},
      {5, c5_decompositions}, {6, c6_containment},   {7, c7_d4_identities},  {8, c8_d4_witnesses},
      {9, c9_graphs},         {10, c10_saturation},
  };
  return all;
}

std::vector<VerificationReport> run_suite() {
  std::vector<VerificationReport> out;
  for (const auto& c : criteria()) out.push_back(c.run());
  return out;
}

std::string suite_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(to_json(r, false));
  return j.dump(2) + "\n";
}

void print_failures(const VerificationReport& r, int depth) {
  if (r.verified()) return;
  std::cout << "    " << std::string(2 * depth, ' ') << outcome_name(r.outcome) << ": " << r.claim;
  if (!r.certificate.empty()) std::cout << " (" << r.certificate << ")";
  std::cout << '\n';
  for (const auto& c : r.checks) print_failures(c, depth + 1);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string report_path = argc > 1 ? argv[1] : "acceptance_report.json";
  int failures = 0;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<VerificationReport> first;
  for (const auto& c : criteria()) {
    const auto tc = std::chrono::steady_clock::now();
    auto r = c.run();
    const bool ok = r.verified();
    failures += !ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << r.claim;
    if (c.id == 10 && r.certificate.find("downgraded") != std::string::npos) std::cout << " [downgraded]";
    std::cout << "  (" << seconds_since(tc) << " s)" << std::endl;
    if (!ok) print_failures(r, 0);
    first.push_back(std::move(r));
  }

  const std::string a = suite_json(first);
  const std::string b = suite_json(run_suite());
  const bool same = a == b;
  failures += !same;
  std::cout << "criterion 11: " << (same ? "PASS" : "FAIL")
            << "  two consecutive suite runs give byte-identical JSON reports (" << a.size() << " bytes)"
            << std::endl;
  std::ofstream(report_path, std::ios::binary) << a;

  std::cout << (failures ? "FAILED" : "ALL PASSED") << " in " << seconds_since(t0) << " s" << std::endl;
  return failures ? 1 : 0;
}
