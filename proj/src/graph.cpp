#include "jetscheme/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

#include "jetscheme/an.hpp"
#include "jetscheme/d4.hpp"

namespace jetscheme {

namespace {

std::pair<std::string, std::string> split_label(const std::string& s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string z_label(unsigned i) { return "Z" + std::to_string(i); }

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  const auto [pa, na] = split_label(a);
  const auto [pb, nb] = split_label(b);
  if (pa != pb || na.empty() || nb.empty()) return a < b;
  // strip leading zeros, then shorter digit string is smaller
  const auto trim = [](const std::string& d) {
    const auto p = d.find_first_not_of('0');
    return p == std::string::npos ? std::string("0") : d.substr(p);
  };
  const std::string ta = trim(na);
  const std::string tb = trim(nb);
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  if (ta != tb) return ta < tb;
  return a < b;
}

std::size_t IntersectionGraph::degree(const std::string& v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

bool IntersectionGraph::has_edge(const std::string& a, const std::string& b) const {
  auto e = label_less(b, a) ? std::pair{b, a} : std::pair{a, b};
  return std::binary_search(edges.begin(), edges.end(), e, [](const auto& x, const auto& y) {
    if (x.first != y.first) return label_less(x.first, y.first);
    return label_less(x.second, y.second);
  });
}

IntersectionGraph build_graph(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::sort(labels.begin(), labels.end(), label_less);
  for (std::size_t k = 1; k < labels.size(); ++k) {
    if (labels[k] == labels[k - 1]) throw std::invalid_argument("build_graph: duplicate label " + labels[k]);
  }
  const auto known = [&](const std::string& s) {
    return std::binary_search(labels.begin(), labels.end(), s, label_less);
  };
  IntersectionGraph g;
  g.vertices = labels;
  for (const auto& [a, b] : pairs) {
    if (!known(a)) throw std::invalid_argument("build_graph: dangling label " + a);
    if (!known(b)) throw std::invalid_argument("build_graph: dangling label " + b);
    if (a == b) throw std::invalid_argument("build_graph: self-loop at " + a);
    g.edges.push_back(label_less(b, a) ? std::pair{b, a} : std::pair{a, b});
  }
  const auto edge_less = [](const auto& x, const auto& y) {
    if (x.first != y.first) return label_less(x.first, y.first);
    return label_less(x.second, y.second);
  };
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string ResolutionKind::name() const {
  return type == Type::D4 ? "D_4" : "A_" + std::to_string(n);
}

IntersectionGraph resolution_graph(ResolutionKind kind) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  const auto e = [](unsigned k) { return "E" + std::to_string(k); };
  if (kind.type == ResolutionKind::Type::D4) {
    for (unsigned k = 0; k <= 3; ++k) labels.push_back(e(k));
    for (unsigned k = 1; k <= 3; ++k) edges.emplace_back(e(0), e(k));
  } else {
    if (kind.n == 0) throw std::invalid_argument("resolution_graph: A_n needs n >= 1");
    for (unsigned k = 1; k <= kind.n; ++k) labels.push_back(e(k));
    for (unsigned k = 1; k < kind.n; ++k) edges.emplace_back(e(k), e(k + 1));
  }
  return build_graph(std::move(labels), edges);
}

bool isomorphic(const IntersectionGraph& g, const IntersectionGraph& h) {
  const std::size_t n = g.vertices.size();
  if (n != h.vertices.size() || g.edges.size() != h.edges.size()) return false;

  const auto adjacency = [n](const IntersectionGraph& G) {
    std::map<std::string, std::size_t> id;
    for (std::size_t k = 0; k < n; ++k) id[G.vertices[k]] = k;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : G.edges) adj[id[a]][id[b]] = adj[id[b]][id[a]] = 1;
    return adj;
  };
  const auto ga = adjacency(g);
  const auto ha = adjacency(h);
  const auto degrees = [n](const std::vector<std::vector<char>>& adj) {
    std::vector<std::size_t> d(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) d[a] += adj[a][b];
    }
    return d;
  };
  const auto gd = degrees(ga);
  const auto hd = degrees(ha);
  auto gs = gd;
  auto hs = hd;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return false;

  std::vector<std::size_t> image(n, n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || gd[v] != hd[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = ga[u][v] == ha[image[u]][w];
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

std::string to_dot(const IntersectionGraph& g) {
  std::string out = "graph {\n";
  for (const auto& v : g.vertices) out += "  " + quoted(v) + ";\n";
  for (const auto& [a, b] : g.edges) out += "  " + quoted(a) + " -- " + quoted(b) + ";\n";
  return out + "}\n";
}

nlohmann::ordered_json to_json(const IntersectionGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

IntersectionGraph an_intersection_graph(unsigned n, unsigned m) {
  std::vector<std::string> labels;
  for (unsigned k = 1; k <= n; ++k) labels.push_back(z_label(k));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [i, j] : maximal_pairs(n, m)) pairs.emplace_back(z_label(i), z_label(j));
  return build_graph(std::move(labels), pairs);
}

D4GraphResult d4_intersection_graph(unsigned m, const Budget& budget) {
  auto res = d4_maximal_intersections(m, budget);
  std::vector<std::string> labels;
  for (unsigned k = 0; k <= 3; ++k) labels.push_back(z_label(k));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [i, j] : res.pairs) pairs.emplace_back(z_label(i), z_label(j));
  return {build_graph(std::move(labels), pairs), std::move(res.report)};
}

}  // namespace jetscheme
