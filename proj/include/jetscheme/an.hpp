#ifndef JETSCHEME_AN_HPP
#define JETSCHEME_AN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "jetscheme/ideal.hpp"

namespace jetscheme {

/// <x_0..x_{p-1}, y_0..y_{q-1}, z_0..z_{r-1}>
struct LadderIdeal {
  unsigned p = 0, q = 0, r = 0;

  std::vector<Var> variables() const;
  Ideal ideal() const;
  std::string to_string() const;  // L(p,q,r)
  /// Ideal inclusion: every generator of *this is a generator of other.
  bool contained_in(const LadderIdeal& other) const {
    return p <= other.p && q <= other.q && r <= other.r;
  }
  friend bool operator==(const LadderIdeal&, const LadderIdeal&) = default;
};

Ideal ladder(unsigned p, unsigned q, unsigned r);

/// The two presentations of the ideal of the component Z_m^l of the A_n
/// singular fiber and the check that they agree.
struct AnComponentIdeal {
  unsigned n = 0, m = 0, l = 0;
  Ideal defining;  // L(l, n+1-l, 1) + <f^(0..m)>
  Ideal reduced;   // L(l, n+1-l, 1) + <g_{l,1}^(0..m-n-1)>
  VerificationReport agreement;
};

AnComponentIdeal component_ideal(unsigned n, unsigned m, unsigned l, const Budget& budget = {});

/// J_m^{i,j} = L(j, n+1-i, 1) + <f^(0..m)>
Ideal pair_sum_ideal(unsigned n, unsigned m, unsigned i, unsigned j);

enum class AnCase { A, B, C, D };
char case_letter(AnCase c);

/// One prime component: a ladder ideal, plus <f^(from..to)> when present.
struct ComponentDescriptor {
  LadderIdeal ladder;
  std::optional<std::pair<unsigned, unsigned>> f_tail;

  Ideal ideal(unsigned n) const;
  int dimension(unsigned m) const;
  std::string to_string() const;
};

struct IntersectionDecomposition {
  unsigned n = 0, m = 0, i = 0, j = 0;
  AnCase kase = AnCase::A;
  std::vector<ComponentDescriptor> components;
  int dimension = 0;

  std::size_t count() const { return components.size(); }
};

/// Components of Z_m^i cap Z_m^j. Requires n >= 2, m >= n, 1 <= i < j <= n.
IntersectionDecomposition decompose_intersection(unsigned n, unsigned m, unsigned i, unsigned j);

/// Number of components predicted by the case formulas.
std::size_t expected_component_count(unsigned n, unsigned m, unsigned i, unsigned j);

int intersection_dimension(unsigned n, unsigned m, unsigned i, unsigned j);
int component_dimension(unsigned n, unsigned m);

/// Z^i cap Z^j inside Z^k cap Z^l, by the index criterion i <= k < l <= j.
/// Pairs are normalized so that i < j and k < l.
bool containment(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k, unsigned l);

/// The same relation read off the decompositions: every component of the
/// first intersection lies in some component of the second.
bool containment_from_components(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k,
                                 unsigned l);

/// Engine check of Z^i cap Z^j inside Z^k cap Z^l: every generator of
/// J^{k,l} in sqrt(J^{i,j}). Refutations name the generator outside.
VerificationReport containment_oracle(unsigned n, unsigned m, unsigned i, unsigned j, unsigned k,
                                      unsigned l, const Budget& budget = {});

/// Maximal elements of the pairwise intersections under inclusion, with
/// containment read from the decompositions at order m (m >= n). Empty
/// for n = 1.
std::vector<std::pair<unsigned, unsigned>> maximal_pairs(unsigned n, unsigned m);
std::vector<std::pair<unsigned, unsigned>> maximal_pairs(unsigned n);

/// Independent check of a decomposition: J inside each component, the
/// intersection of the components inside sqrt(J), pairwise non-containment
/// witnesses, and the structure of the residual generators for tails.
VerificationReport verify_decomposition(unsigned n, unsigned m, unsigned i, unsigned j,
                                        const Budget& budget = {});

/// Dimensions, codimensions and component counts for the pairs (1,k),
/// k = 2..n, one row per m.
struct AnTableRow {
  unsigned m = 0;
  int dim_component = 0;
  std::vector<int> dim_pairs;
  int codim_component = 0;
  std::vector<int> codim_pairs;
  std::vector<std::size_t> counts;
};

struct AnTable {
  unsigned n = 0;
  std::vector<AnTableRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

AnTable an_table(unsigned n, unsigned m_from, unsigned m_to);

nlohmann::ordered_json to_json(const IntersectionDecomposition& d);

}  // namespace jetscheme

#endif  // JETSCHEME_AN_HPP
