#include "jetscheme/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "jetscheme/an.hpp"
#include "jetscheme/d4.hpp"
#include "jetscheme/graph.hpp"
#include "jetscheme/jet.hpp"

namespace jetscheme {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string f;
  std::optional<unsigned> n, i, j;
  std::string m;
  std::string format = "text";
  std::uint64_t budget_spairs = Budget{}.max_spairs;
  double budget_seconds = Budget{}.max_seconds;
  std::string out;
  bool timings = false;

  Budget budget() const { return {budget_spairs, budget_seconds}; }

  Json to_json() const {
    Json c;
    c["command"] = command;
    c["subcommand"] = subcommand.empty() ? Json(nullptr) : Json(subcommand);
    if (command == "expand") c["f"] = f;
    c["n"] = n ? Json(*n) : Json(nullptr);
    c["m"] = m.empty() ? Json(nullptr) : Json(m);
    c["i"] = i ? Json(*i) : Json(nullptr);
    c["j"] = j ? Json(*j) : Json(nullptr);
    c["format"] = format;
    c["budget_spairs"] = budget_spairs;
    c["budget_seconds"] = budget_seconds;
    c["out"] = out.empty() ? Json(nullptr) : Json(out);
    c["timings"] = timings;
    return c;
  }
};

struct Output {
  std::string text;
  int code = kVerified;
};

int code_of(Outcome o) {
  switch (o) {
    case Outcome::Verified: return kVerified;
    case Outcome::Refuted: return kRefuted;
    case Outcome::BudgetExhausted: return kBudgetExhausted;
  }
  return kUsage;
}

void report_text(const VerificationReport& r, std::ostringstream& os, int depth, bool timings) {
  os << std::string(2 * depth, ' ') << '[' << outcome_name(r.outcome) << "] " << r.claim;
  if (!r.certificate.empty()) os << ": " << r.certificate;
  if (timings) os << " (" << r.spairs << " S-pairs, " << r.seconds << " s)";
  os << '\n';
  for (const auto& c : r.checks) report_text(c, os, depth + 1, timings);
}

Json envelope(const RunConfig& cfg, Json result) {
  Json j;
  j["schema"] = 1;
  j["config"] = cfg.to_json();
  j["result"] = std::move(result);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (cfg.format == a) return;
  }
  throw UsageError("format " + cfg.format + " is not available for " + cfg.command +
                   (cfg.subcommand.empty() ? "" : " " + cfg.subcommand));
}

unsigned need(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

std::vector<unsigned> orders(const RunConfig& cfg, std::optional<unsigned> fallback = std::nullopt) {
  if (cfg.m.empty()) {
    if (fallback) return {*fallback};
    throw UsageError("missing --m");
  }
  return parse_order_range(cfg.m);
}

Output reports_output(const RunConfig& cfg, const std::vector<VerificationReport>& reports,
                      const std::string& claim) {
  require_format(cfg, {"text", "json"});
  VerificationReport all = VerificationReport::combine(claim, reports);
  Output o;
  o.code = code_of(all.outcome);
  if (cfg.format == "json") {
    o.text = dump(envelope(cfg, to_json(all, cfg.timings)));
  } else {
    std::ostringstream os;
    report_text(all, os, 0, cfg.timings);
    o.text = os.str();
  }
  return o;
}

Output cmd_expand(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const Polynomial f = parse_polynomial(cfg.f, {.ambient = true});
  const auto ms = parse_order_range(cfg.m);
  if (ms.size() != 1) throw UsageError("expand takes a single order --m");
  const unsigned m = ms[0];
  const auto coeffs = poly_substitute_series(f, generic_series(m), m);
  Output o;
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& c : coeffs) list.push_back(c.to_string());
    o.text = dump(envelope(cfg, Json{{"f", f.to_string()}, {"coefficients", std::move(list)}}));
  } else {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      o.text += "f^(" + std::to_string(k) + ") = " + coeffs[k].to_string() + "\n";
    }
  }
  return o;
}

std::vector<std::pair<unsigned, unsigned>> selected_pairs(const RunConfig& cfg, unsigned n) {
  if (cfg.i || cfg.j) return {{need(cfg.i, "--i"), need(cfg.j, "--j")}};
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

Output cmd_an_decompose(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const unsigned n = need(cfg.n, "--n");
  Json list = Json::array();
  std::ostringstream os;
  for (unsigned m : orders(cfg)) {
    for (const auto& [i, j] : selected_pairs(cfg, n)) {
      const auto d = decompose_intersection(n, m, i, j);
      list.push_back(to_json(d));
      os << "A_" << n << " m=" << m << " Z" << i << " cap Z" << j << ": case " << case_letter(d.kase) << ", "
         << d.count() << (d.count() == 1 ? " component" : " components") << ", dimension " << d.dimension
         << '\n';
      for (const auto& c : d.components) os << "  " << c.to_string() << '\n';
    }
  }
  Output o;
  o.text = cfg.format == "json" ? dump(envelope(cfg, Json{{"decompositions", std::move(list)}})) : os.str();
  return o;
}

Output cmd_an_table(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const unsigned n = need(cfg.n, "--n");
  const auto ms = orders(cfg);
  const AnTable t = an_table(n, ms.front(), ms.back());
  Output o;
  if (cfg.format == "csv") o.text = t.to_csv();
  else if (cfg.format == "json") o.text = dump(envelope(cfg, t.to_json()));
  else o.text = t.to_text();
  return o;
}

Output graph_output(const RunConfig& cfg, const std::vector<std::pair<unsigned, IntersectionGraph>>& graphs,
                    const IntersectionGraph& reference, const std::string& kind,
                    const std::vector<VerificationReport>& reports) {
  require_format(cfg, {"text", "json", "dot"});
  Output o;
  bool all_iso = true;
  for (const auto& [m, g] : graphs) all_iso = all_iso && isomorphic(g, reference);
  if (!all_iso) o.code = kRefuted;
  for (const auto& r : reports) o.code = std::max(o.code, code_of(r.outcome));
  if (cfg.format == "dot") {
    // one graph per order; consecutive blocks when a range is given
    for (const auto& [m, g] : graphs) o.text += to_dot(g);
  } else if (cfg.format == "json") {
    Json list = Json::array();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      Json e;
      e["m"] = graphs[k].first;
      e["graph"] = to_json(graphs[k].second);
      e["isomorphic_to_resolution_graph"] = isomorphic(graphs[k].second, reference);
      if (k < reports.size()) e["report"] = to_json(reports[k], cfg.timings);
      list.push_back(std::move(e));
    }
    o.text = dump(envelope(cfg, Json{{"resolution_graph", kind}, {"graphs", std::move(list)}}));
  } else {
    std::ostringstream os;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const auto& [m, g] = graphs[k];
      os << "m=" << m << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges, "
         << (isomorphic(g, reference) ? "isomorphic to " : "not isomorphic to ") << kind << '\n';
      for (const auto& [a, b] : g.edges) os << "  " << a << " -- " << b << '\n';
      if (k < reports.size() && !reports[k].verified()) report_text(reports[k], os, 1, cfg.timings);
    }
    o.text = os.str();
  }
  return o;
}

Output cmd_an_graph(const RunConfig& cfg) {
  const unsigned n = need(cfg.n, "--n");
  if (n == 0) throw UsageError("--n must be at least 1");
  std::vector<std::pair<unsigned, IntersectionGraph>> graphs;
  for (unsigned m : orders(cfg, n)) {
    if (m < n) throw UsageError("an graph needs m >= n");
    graphs.emplace_back(m, an_intersection_graph(n, m));
  }
  const auto kind = ResolutionKind::a(n);
  return graph_output(cfg, graphs, resolution_graph(kind), kind.name(), {});
}

Output cmd_an_verify(const RunConfig& cfg) {
  const unsigned n = need(cfg.n, "--n");
  std::vector<VerificationReport> reports;
  for (unsigned m : orders(cfg)) {
    for (const auto& [i, j] : selected_pairs(cfg, n)) {
      reports.push_back(verify_decomposition(n, m, i, j, cfg.budget()));
    }
  }
  return reports_output(cfg, reports, "A_" + std::to_string(n) + " decompositions");
}

std::vector<unsigned> d4_orders(const RunConfig& cfg) {
  auto ms = orders(cfg);
  for (unsigned m : ms) {
    if (m < 5) throw UsageError("D_4 commands assume m >= 5");
  }
  return ms;
}

Json ideal_json(const Ideal& I) {
  Json list = Json::array();
  for (const auto& g : I.generators()) list.push_back(g.to_string());
  return list;
}

Output cmd_d4_ideals(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Json all = Json::array();
  std::ostringstream os;
  for (unsigned m : d4_orders(cfg)) {
    const D4Ideals fam(m);
    std::vector<std::pair<std::string, const Ideal*>> named{{"L322", &fam.l322()}};
    for (unsigned k = 1; k <= 3; ++k) named.emplace_back("L" + std::to_string(k), &fam.ladder(k));
    named.emplace_back("I0", &fam.i0());
    for (unsigned k = 1; k <= 3; ++k) named.emplace_back("J" + std::to_string(k), &fam.j(k));
    Json e;
    e["m"] = m;
    os << "m=" << m << '\n';
    for (const auto& [name, I] : named) {
      e[name] = ideal_json(*I);
      os << "  " << name << " = <";
      bool first = true;
      for (const auto& g : I->generators()) {
        os << (first ? "" : ", ") << g.to_string();
        first = false;
      }
      os << ">\n";
    }
    all.push_back(std::move(e));
  }
  Output o;
  o.text = cfg.format == "json" ? dump(envelope(cfg, Json{{"families", std::move(all)}})) : os.str();
  return o;
}

Output cmd_d4_verify(const RunConfig& cfg) {
  std::vector<VerificationReport> reports;
  for (unsigned m : d4_orders(cfg)) {
    reports.push_back(d4_maximal_intersections(m, cfg.budget()).report);
  }
  return reports_output(cfg, reports, "D_4 verification suite");
}

Output cmd_d4_graph(const RunConfig& cfg) {
  std::vector<std::pair<unsigned, IntersectionGraph>> graphs;
  std::vector<VerificationReport> reports;
  for (unsigned m : d4_orders(cfg)) {
    auto r = d4_intersection_graph(m, cfg.budget());
    graphs.emplace_back(m, std::move(r.graph));
    reports.push_back(std::move(r.report));
  }
  const auto kind = ResolutionKind::d4();
  return graph_output(cfg, graphs, resolution_graph(kind), kind.name(), reports);
}

}  // namespace

std::vector<unsigned> parse_order_range(const std::string& text) {
  const auto number = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad order '" + text + "': expected m or a..b");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {number(text)};
  const unsigned a = number(text.substr(0, dots));
  const unsigned b = number(text.substr(dots + 2));
  if (a > b) throw std::invalid_argument("bad order range '" + text + "': empty");
  std::vector<unsigned> out;
  for (unsigned m = a; m <= b; ++m) out.push_back(m);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Jet schemes of rational double points: expansion, components, graphs", "jetscheme"};
  app.require_subcommand(1);

  const auto common = [&cfg](CLI::App* c, bool pairs) {
    c->add_option("--m", cfg.m, "jet order, or a range a..b");
    c->add_option("--format", cfg.format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    c->add_option("--out", cfg.out, "write the output to this file");
    c->add_option("--budget-spairs", cfg.budget_spairs, "S-pair budget per Groebner computation");
    c->add_option("--budget-seconds", cfg.budget_seconds, "time budget per Groebner computation");
    c->add_flag("--timings", cfg.timings, "include wall-clock seconds in reports");
    if (pairs) {
      c->add_option("--n", cfg.n, "A_n surface index");
      c->add_option("--i", cfg.i, "first component index");
      c->add_option("--j", cfg.j, "second component index");
    }
  };

  std::function<Output(const RunConfig&)> action;

  auto* expand = app.add_subcommand("expand", "print the jet coefficients f^(0..m) of a polynomial in x, y, z");
  expand->add_option("f", cfg.f, "polynomial in x, y, z")->required();
  common(expand, false);
  expand->get_option("--m")->required();
  expand->callback([&] { action = cmd_expand; });

  auto* an = app.add_subcommand("an", "A_n surfaces x*y - z^(n+1)");
  an->require_subcommand(1);
  const std::pair<const char*, Output (*)(const RunConfig&)> an_cmds[] = {
      {"decompose", cmd_an_decompose}, {"table", cmd_an_table}, {"graph", cmd_an_graph}, {"verify", cmd_an_verify}};
  for (const auto& [name, fn] : an_cmds) {
    auto* s = an->add_subcommand(name);
    common(s, true);
    s->callback([&action, fn = fn] { action = fn; });
  }

  auto* d4 = app.add_subcommand("d4", "the D_4 surface x^2 - y^2*z + z^3");
  d4->require_subcommand(1);
  const std::pair<const char*, Output (*)(const RunConfig&)> d4_cmds[] = {
      {"ideals", cmd_d4_ideals}, {"verify", cmd_d4_verify}, {"graph", cmd_d4_graph}};
  for (const auto& [name, fn] : d4_cmds) {
    auto* s = d4->add_subcommand(name);
    common(s, false);
    s->callback([&action, fn = fn] { action = fn; });
  }

  std::vector<std::string> argv_store{"jetscheme"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* leaf : sub->get_subcommands()) cfg.subcommand = leaf->get_name();
  }

  Output result;
  try {
    result = action(cfg);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace jetscheme
