#include "doctest.h"
#include "jetscheme/an.hpp"
#include "jetscheme/jet.hpp"

using namespace jetscheme;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<std::string> labels(const IntersectionDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& c : d.components) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("ladder ideals") {
  CHECK(ladder(0, 0, 0).generators().empty());
  CHECK(ladder(2, 2, 1).generators() == Ideal({P("x0"), P("x1"), P("y0"), P("y1"), P("z0")}).generators());
  const LadderIdeal L{3, 3, 1};
  CHECK(L.to_string() == "L(3,3,1)");
  CHECK(L.ideal().generators().size() == 7);
  CHECK(L.contained_in({3, 4, 1}));
  CHECK_FALSE(L.contained_in({2, 4, 1}));
}

TEST_CASE("component ideals: both presentations agree") {
  const auto c = component_ideal(3, 3, 2);
  CHECK(c.reduced.generators() == ladder(2, 2, 1).generators());
  CHECK(c.agreement.verified());
  const auto d = component_ideal(2, 4, 1);
  const Ideal want = ladder(1, 2, 1).with({g_shift(2, 1, 1, 0), g_shift(2, 1, 1, 1)});
  CHECK(d.reduced.generators() == want.generators());
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = n; m <= n + 3; ++m) {
      for (unsigned l = 1; l <= n; ++l) {
        const auto e = component_ideal(n, m, l);
        CHECK(e.agreement.verified());
        // the presolve of the defining ideal removes exactly the ladder
        CHECK(linear_presolve(e.defining).eliminated.size() == n + 2);
      }
    }
  }
  CHECK_THROWS(component_ideal(3, 2, 1));
}

TEST_CASE("decomposition examples") {
  const auto a = decompose_intersection(3, 3, 1, 3);
  CHECK(a.kase == AnCase::A);
  CHECK(labels(a) == std::vector<std::string>{"L(3,3,1)"});
  const auto c = decompose_intersection(3, 5, 1, 2);
  CHECK(c.kase == AnCase::C);
  CHECK(labels(c) == std::vector<std::string>{"L(2,4,2)", "L(3,3,2)"});
  const auto d = decompose_intersection(3, 8, 1, 2);
  CHECK(d.kase == AnCase::D);
  CHECK(labels(d) == std::vector<std::string>{"L(2,6,2) + <f8..f8>", "L(3,5,2) + <f8..f8>",
                                              "L(4,4,2) + <f8..f8>", "L(5,3,2) + <f8..f8>"});
  const auto j = to_json(d);
  CHECK(j["case"] == "d");
  CHECK(j["count"] == 4);
  CHECK(j["components"][1]["q"] == 5);
  CHECK_THROWS(decompose_intersection(3, 2, 1, 2));
  CHECK_THROWS(decompose_intersection(3, 5, 2, 2));
}

TEST_CASE("component counts follow the case formulas") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned m = n; m <= 2 * n + 4; ++m) {
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          const auto d = decompose_intersection(n, m, i, j);
          CHECK(d.count() == expected_component_count(n, m, i, j));
          std::size_t want = 0;
          switch (d.kase) {
            case AnCase::A:
            case AnCase::B: want = 1; break;
            case AnCase::C: want = m - n - (j - i) + 1; break;
            case AnCase::D: want = n - (j - i) + 2; break;
          }
          CHECK(d.count() == want);
          for (const auto& comp : d.components) CHECK(comp.dimension(m) <= d.dimension);
        }
      }
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(intersection_dimension(3, 3, 1, 3) == 5);
  CHECK(intersection_dimension(3, 4, 1, 3) == 7);
  CHECK(intersection_dimension(3, 6, 1, 2) == 12);
  CHECK(component_dimension(3, 3) == 7);
  CHECK(component_dimension(3, 7) == 15);
  for (unsigned n = 1; n <= 6; ++n) CHECK(component_dimension(n, n) == static_cast<int>(2 * n + 1));
}

TEST_CASE("dimensions against Krull dimension of the sum ideal") {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned m = n; m <= n + 3; ++m) {
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          CHECK(krull_dimension(pair_sum_ideal(n, m, i, j)) == intersection_dimension(n, m, i, j));
        }
      }
      CHECK(krull_dimension(component_ideal(n, m, 1).defining) == component_dimension(n, m));
    }
  }
}

TEST_CASE("containment criterion") {
  CHECK(containment(3, 5, 1, 3, 1, 2));
  CHECK_FALSE(containment(3, 5, 1, 2, 2, 3));
  CHECK(containment(3, 5, 2, 3, 2, 3));
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned m = n; m <= 2 * n + 3; ++m) {
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          for (unsigned k = 1; k <= n; ++k) {
            for (unsigned l = k + 1; l <= n; ++l) {
              CHECK(containment(n, m, i, j, k, l) == containment_from_components(n, m, i, j, k, l));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("containment oracle on a small instance") {
  CHECK(containment_oracle(3, 4, 1, 3, 1, 2).verified());
  const auto r = containment_oracle(3, 4, 1, 2, 2, 3);
  CHECK(r.outcome == Outcome::Refuted);
  CHECK_FALSE(r.certificate.empty());
}

TEST_CASE("maximal pairs") {
  using Pairs = std::vector<std::pair<unsigned, unsigned>>;
  CHECK(maximal_pairs(3) == Pairs{{1, 2}, {2, 3}});
  CHECK(maximal_pairs(1).empty());
  CHECK(maximal_pairs(5) == Pairs{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (unsigned m = 4; m <= 12; ++m) CHECK(maximal_pairs(4, m) == Pairs{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("decomposition verification") {
  const auto a = verify_decomposition(2, 2, 1, 2);
  CHECK(a.verified());
  const auto c = verify_decomposition(3, 5, 1, 2);
  CHECK(c.verified());
  CHECK(verify_decomposition(2, 6, 1, 2).verified());
  CHECK(verify_decomposition(3, 8, 1, 2).verified());
}

TEST_CASE("table rows") {
  const auto t = an_table(3, 3, 7);
  REQUIRE(t.rows.size() == 5);
  const auto row = [&](std::size_t k) {
    const auto& r = t.rows[k];
    return std::vector<long>{r.dim_component,  r.dim_pairs[0],  r.dim_pairs[1],
                             r.codim_component, r.codim_pairs[0], r.codim_pairs[1],
                             static_cast<long>(r.counts[0]), static_cast<long>(r.counts[1])};
  };
  CHECK(row(0) == std::vector<long>{7, 6, 5, 5, 6, 7, 1, 1});
  CHECK(row(2) == std::vector<long>{11, 10, 10, 7, 8, 8, 2, 1});
  CHECK(row(4) == std::vector<long>{15, 14, 14, 9, 10, 10, 4, 3});
  CHECK(t.to_csv().rfind("m,dim_Z,dim_Z1_Z2,dim_Z1_Z3,codim_Z,codim_Z1_Z2,codim_Z1_Z3,N12,N13\n", 0) == 0);
  CHECK(t.to_json()["rows"].size() == 5);
}
