#ifndef JETSCHEME_GRAPH_HPP
#define JETSCHEME_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "jetscheme/ideal.hpp"

namespace jetscheme {

/// Vertices are component labels, edges the maximal pairwise intersections.
/// Vertices are kept in natural label order ("Z2" before "Z10") and each
/// edge is stored with its smaller label first, edges sorted.
struct IntersectionGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t degree(const std::string& v) const;
  bool has_edge(const std::string& a, const std::string& b) const;
  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;
};

/// Natural order on labels: a common non-digit prefix, then the numeric suffix.
bool label_less(const std::string& a, const std::string& b);

/// Throws std::invalid_argument on a pair naming an unknown label, a
/// self-loop or a duplicate label. Duplicate edges collapse.
IntersectionGraph build_graph(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

struct ResolutionKind {
  enum class Type { A, D4 };
  Type type = Type::A;
  unsigned n = 1;

  static ResolutionKind a(unsigned n) { return {Type::A, n}; }
  static ResolutionKind d4() { return {Type::D4, 4}; }
  std::string name() const;  // "A_5", "D_4"
};

/// Path E1 - ... - En for A_n; star with center E0 and leaves E1..E3 for D_4.
IntersectionGraph resolution_graph(ResolutionKind kind);

/// Exact isomorphism test: degree multiset filter, then backtracking.
bool isomorphic(const IntersectionGraph& g, const IntersectionGraph& h);

/// graph {\n  "Z1";\n  "Z1" -- "Z2";\n}\n
std::string to_dot(const IntersectionGraph& g);
nlohmann::ordered_json to_json(const IntersectionGraph& g);

/// Labels Z1..Zn and edges from the maximal pairs of the A_n decompositions at order m.
IntersectionGraph an_intersection_graph(unsigned n, unsigned m);

struct D4GraphResult {
  IntersectionGraph graph;
  VerificationReport report;
};

/// Labels Z0..Z3 and edges from the derived maximal pairs. The graph has
/// no edges unless the report is verified.
D4GraphResult d4_intersection_graph(unsigned m, const Budget& budget = {});

}  // namespace jetscheme

#endif  // JETSCHEME_GRAPH_HPP
