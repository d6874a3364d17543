#include "sepder/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sepder/genset.hpp"
#include "sepder/oracle.hpp"
#include "sepder/poset.hpp"

namespace sepder {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::string pick_format(const RunConfig& cfg, const std::string& path) {
  if (cfg.format != "auto") return cfg.format;
  if (ends_with(path, ".g6") || ends_with(path, ".graph6")) return "graph6";
  return "edge_list";
}

// -1 signals a bad cutoff; the message lands in err.
int resolve_cutoff(const RunConfig& cfg, const Graph& g, std::string& msg) {
  int P;
  if (cfg.cutoff) {
    P = *cfg.cutoff;
  } else if (const char* env = std::getenv("SEPDER_CUTOFF")) {
    try {
      size_t used = 0;
      P = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      msg = "SEPDER_CUTOFF is not an integer";
      return -1;
    }
  } else {
    P = default_cutoff(g);
  }
  if (P < g.max_degree()) {
    msg = "cutoff " + std::to_string(P) + " is below the max degree " +
          std::to_string(g.max_degree());
    return -1;
  }
  return P;
}

std::string paren_seq(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

const char* origin_name(NodeOrigin o) {
  switch (o) {
    case NodeOrigin::minimal:
      return "minimal";
    case NodeOrigin::augmented:
      return "augmented";
    default:
      return "generated";
  }
}

ordered_json node_json(const SeparatorNode& nd) {
  return ordered_json{{"t", nd.t_set}, {"c", nd.c_set}, {"origin", origin_name(nd.origin)}};
}

ordered_json bounds_json(const DegreeBounds& b) {
  return ordered_json{{"d", b.d},           {"c_minus_1", b.c_minus_1},
                      {"t_max", b.t_max},   {"delta", b.delta},
                      {"c_ok", b.c_ok},     {"t_ok", b.t_ok},
                      {"delta_ok", b.delta_ok}, {"ok", b.all_ok()}};
}

const char* cert_name(CertLevel c) {
  switch (c) {
    case CertLevel::uncertified:
      return "uncertified";
    case CertLevel::generates_up_to_P:
      return "generates_up_to_P";
    default:
      return "minimal_up_to_P";
  }
}

ordered_json report_json(const GenSetReport& rep) {
  ordered_json gens = ordered_json::array();
  for (const auto& d : rep.generators) {
    ordered_json row = ordered_json::array();
    for (const auto& c : d.coeffs) row.push_back(c.str());
    gens.push_back(ordered_json{{"label", d.label.str()}, {"degree", d.pdeg()}, {"row", row}});
  }
  ordered_json poset = ordered_json::array();
  for (const auto& nd : rep.poset.nodes()) poset.push_back(node_json(nd));
  ordered_json j{{"generators", gens},
                 {"degree_sequence", rep.degree_sequence},
                 {"bounds", bounds_json(rep.bounds)},
                 {"certified", cert_name(rep.certified)},
                 {"poset", poset}};
  if (rep.cutoff >= 0) j["cutoff"] = rep.cutoff;
  return j;
}

GenSetReport assemble_for(const Graph& g) {
  if (g.is_complete()) return assemble_generators(g, SeparatorPoset(g, {}));
  return assemble_generators(g, heuristic_minimal_poset(g));
}

int cmd_separators(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  auto seps = minimal_separators(g);
  if (cfg.output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& s : seps) {
      ordered_json comps = ordered_json::array();
      for (const auto& c : s.components) comps.push_back(c);
      arr.push_back(ordered_json{{"t", s.t_set}, {"components", comps}});
    }
    out << ordered_json{{"count", seps.size()}, {"separators", arr}}.dump() << "\n";
  } else {
    for (const auto& s : seps) {
      out << set_str(s.t_set) << ":";
      for (const auto& c : s.components) out << " " << set_str(c);
      out << "\n";
    }
  }
  return exit_ok;
}

int cmd_connectivity(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  int c = g.n == 1 ? 0 : connectivity(g);
  if (cfg.output == "json")
    out << ordered_json{{"connectivity", c}}.dump() << "\n";
  else
    out << c << "\n";
  return exit_ok;
}

int chain_command(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> c_set = cfg.ordering;
  std::sort(c_set.begin(), c_set.end());
  c_set.erase(std::unique(c_set.begin(), c_set.end()), c_set.end());
  if (c_set.size() != cfg.ordering.size()) {
    err << "error: ordering repeats a vertex\n";
    return exit_parse;
  }
  if (c_set.front() < 1 || c_set.back() > g.n) {
    err << "error: ordering vertex out of range\n";
    return exit_parse;
  }
  Mask cmask = vec_to_mask(c_set, g.n);
  std::vector<int> t_set = mask_to_vec(nbr_of_set(g, cmask));
  std::vector<SeparatorNode> chain;
  try {
    chain = descending_chain(g, t_set, c_set, cfg.ordering);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  if (cfg.output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& nd : chain) arr.push_back(node_json(nd));
    out << ordered_json{{"chain", arr}}.dump() << "\n";
  } else if (cfg.output == "dot") {
    out << "digraph chain {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < chain.size(); ++i) {
      const char* style = chain[i].origin == NodeOrigin::minimal ? "solid" : "bold";
      out << "  n" << i << " [label=\"" << chain[i].label() << "\", style=" << style << "];\n";
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i) out << "  n" << i << " -> n" << i + 1 << ";\n";
    out << "}\n";
  } else {
    for (const auto& nd : chain) out << nd.label() << " " << origin_name(nd.origin) << "\n";
  }
  return exit_ok;
}

int cmd_poset(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.ordering.empty()) return chain_command(g, cfg, out, err);
  auto q = build_poset(g);
  if (cfg.output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& nd : q.nodes()) arr.push_back(node_json(nd));
    out << ordered_json{{"count", q.nodes().size()}, {"nodes", arr}}.dump() << "\n";
  } else if (cfg.output == "dot") {
    out << q.dot();
  } else {
    for (const auto& nd : q.nodes()) out << nd.label() << " " << origin_name(nd.origin) << "\n";
  }
  return exit_ok;
}

int cmd_generators(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  auto rep = assemble_for(g);
  if (cfg.output == "json") {
    out << report_json(rep).dump() << "\n";
  } else {
    for (const auto& d : rep.generators) out << d.label.str() << ": " << d.row_str() << "\n";
    out << "degrees: " << paren_seq(rep.degree_sequence) << "\n";
  }
  return exit_ok;
}

int cmd_verify(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string msg;
  int P = resolve_cutoff(cfg, g, msg);
  if (P < 0) {
    err << "error: " << msg << "\n";
    return exit_parse;
  }
  auto rep = assemble_for(g);
  auto res = verify_generation(g, rep.generators, P);
  if (res.generates) {
    rep.certified = CertLevel::generates_up_to_P;
    rep.cutoff = P;
  }
  if (cfg.output == "json") {
    ordered_json table = ordered_json::array();
    for (const auto& row : res.table)
      table.push_back(ordered_json{{"p", row[0]}, {"module_dim", row[1]}, {"span_dim", row[2]}});
    ordered_json j{{"cutoff", P},
                   {"generates", res.generates},
                   {"first_failure",
                    res.first_failure < 0 ? ordered_json(nullptr) : ordered_json(res.first_failure)},
                   {"table", table},
                   {"certified", cert_name(rep.certified)}};
    out << j.dump() << "\n";
  } else {
    for (const auto& row : res.table)
      out << "p=" << row[0] << " module=" << row[1] << " span=" << row[2] << "\n";
    if (res.generates)
      out << "generates: true (up to " << P << ")\n";
    else
      out << "generates: false (first failure at p=" << res.first_failure << ")\n";
  }
  return res.generates ? exit_ok : exit_failed;
}

int cmd_degrees(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string msg;
  int P = resolve_cutoff(cfg, g, msg);
  if (P < 0) {
    err << "error: " << msg << "\n";
    return exit_parse;
  }
  auto res = minimal_degree_sequence(g, P);
  if (cfg.output == "json")
    out << ordered_json{{"cutoff", P}, {"degrees", res.degrees}}.dump() << "\n";
  else
    out << paren_seq(res.degrees) << "\n";
  return exit_ok;
}

int cmd_bounds(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string msg;
  int P = resolve_cutoff(cfg, g, msg);
  if (P < 0) {
    err << "error: " << msg << "\n";
    return exit_parse;
  }
  auto res = minimal_degree_sequence(g, P);
  auto b = bounds_report(g, res.degrees.empty() ? 0 : res.degrees.back());
  bool sub = subsequence_check(g, res.degrees);
  if (cfg.output == "json") {
    ordered_json j = bounds_json(b);
    j["subsequence_ok"] = sub;
    j["degrees"] = res.degrees;
    out << j.dump() << "\n";
  } else {
    out << "d = " << b.d << ", c-1 = " << b.c_minus_1 << ", t_max = " << b.t_max
        << ", delta = " << b.delta << ", ok = " << (b.all_ok() && sub ? "true" : "false") << "\n";
  }
  return b.all_ok() && sub ? exit_ok : exit_failed;
}

int cmd_saito(const Graph& g, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Derivation> basis;
  if (g.is_complete()) {
    for (int k = 0; k < g.n; ++k) basis.push_back(theta_power(k, g.n));
  } else if (g.is_tree()) {
    basis = tree_basis(g);
  } else {
    std::string msg;
    int P = resolve_cutoff(cfg, g, msg);
    if (P < 0) {
      err << "error: " << msg << "\n";
      return exit_parse;
    }
    basis = minimal_degree_sequence(g, P).generators;
  }
  if (static_cast<int>(basis.size()) != g.n) {
    if (cfg.output == "json")
      out << ordered_json{{"basis", false}, {"count", basis.size()}}.dump() << "\n";
    else
      out << "basis: false (" << basis.size() << " generators for " << g.n << " vertices)\n";
    return exit_failed;
  }
  auto res = saito_check(g, basis);
  if (cfg.output == "json") {
    ordered_json j{{"basis", res.is_basis}, {"count", basis.size()}};
    if (res.is_basis) j["scalar"] = to_string(res.scalar);
    out << j.dump() << "\n";
  } else if (res.is_basis) {
    out << "basis: true, c = " << to_string(res.scalar) << "\n";
  } else {
    out << "basis: false\n";
  }
  return res.is_basis ? exit_ok : exit_failed;
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(cfg.input_path)) {
    err << "error: census expects a directory\n";
    return exit_parse;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.input_path)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".edges" || ext == ".g6" || ext == ".graph6") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  bool any_parse = false, any_disc = false, any_fail = false;
  for (const auto& path : files) {
    ordered_json rec{{"file", path.filename().string()}};
    try {
      Graph g = parse_graph(read_file(path.string()), pick_format(cfg, path.string()));
      if (!g.is_connected()) {
        rec["error"] = "disconnected";
        any_disc = true;
        out << rec.dump() << "\n";
        continue;
      }
      std::string msg;
      int P = resolve_cutoff(cfg, g, msg);
      if (P < 0) {
        rec["error"] = msg;
        any_parse = true;
        out << rec.dump() << "\n";
        continue;
      }
      auto seps = minimal_separators(g);
      auto full = g.is_complete() ? SeparatorPoset(g, {}) : build_poset(g);
      auto rep = assemble_for(g);
      Oracle oracle(g);
      auto minimal = oracle.minimal_degree_sequence(P);
      auto vr = oracle.verify_generation(rep.generators, P);
      int d = minimal.degrees.empty() ? 0 : minimal.degrees.back();
      auto b = bounds_report(g, d);
      bool sub = subsequence_check(g, minimal.degrees);
      rec["error"] = nullptr;
      rec["l"] = g.n;
      rec["m"] = g.edges.size();
      rec["connectivity"] = g.n == 1 ? 0 : connectivity(g);
      rec["delta"] = g.max_degree();
      rec["clique"] = clique_number(g);
      rec["chordal"] = is_chordal(g).chordal;
      rec["separators"] = seps.size();
      rec["poset_nodes"] = full.nodes().size();
      rec["heuristic_nodes"] = rep.poset.nodes().size();
      rec["cutoff"] = P;
      rec["degrees"] = minimal.degrees;
      rec["d"] = d;
      rec["bounds_ok"] = b.all_ok();
      rec["subsequence_ok"] = sub;
      rec["generates"] = vr.generates;
      if (!b.all_ok() || !sub || !vr.generates) any_fail = true;
    } catch (const GraphParseError& e) {
      rec["error"] = std::string("parse: ") + e.what();
      any_parse = true;
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      any_fail = true;
    }
    out << rec.dump() << "\n";
  }
  if (any_parse) return exit_parse;
  if (any_disc) return exit_disconnected;
  if (any_fail) return exit_failed;
  return exit_ok;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& cmd = cfg.command;
  static const std::vector<std::string> known{"separators", "connectivity", "poset",
                                             "generators", "verify",       "degrees",
                                             "bounds",     "saito",        "census"};
  if (std::find(known.begin(), known.end(), cmd) == known.end()) {
    err << "error: unknown command '" << cmd << "'\n";
    return exit_parse;
  }
  if (cfg.output != "text" && cfg.output != "json" && cfg.output != "dot") {
    err << "error: unknown output mode '" << cfg.output << "'\n";
    return exit_parse;
  }
  if (cfg.output == "dot" && cmd != "poset") {
    err << "error: dot output is only available for poset\n";
    return exit_parse;
  }
  if (!cfg.ordering.empty() && cmd != "poset") {
    err << "error: --ordering only applies to poset\n";
    return exit_parse;
  }
  if (cmd == "census") return cmd_census(cfg, out, err);

  Graph g;
  try {
    g = parse_graph(read_file(cfg.input_path), pick_format(cfg, cfg.input_path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  if (!g.is_connected()) {
    err << "error: graph is not connected\n";
    return exit_disconnected;
  }
  try {
    if (cmd == "separators") return cmd_separators(g, cfg, out);
    if (cmd == "connectivity") return cmd_connectivity(g, cfg, out);
    if (cmd == "poset") return cmd_poset(g, cfg, out, err);
    if (cmd == "generators") return cmd_generators(g, cfg, out);
    if (cmd == "verify") return cmd_verify(g, cfg, out, err);
    if (cmd == "degrees") return cmd_degrees(g, cfg, out, err);
    if (cmd == "bounds") return cmd_bounds(g, cfg, out, err);
    return cmd_saito(g, cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
}

}  // namespace sepder
