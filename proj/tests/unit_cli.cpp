#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sepder/cli.hpp"

using namespace sepder;
using nlohmann::json;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run_cli(const RunConfig& cfg) {
  std::ostringstream out, err;
  CliResult res;
  res.rc = run(cfg, out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

RunConfig config(const std::string& cmd, const std::string& file) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.input_path = std::string(TEST_DATA_DIR) + "/" + file;
  return cfg;
}

}  // namespace

TEST_CASE("text outputs are stable for the worked examples") {
  auto deg = run_cli(config("degrees", "ex37.edges"));
  CHECK(deg.rc == exit_ok);
  CHECK(deg.out == "(0,1,1,2)\n");
  CHECK(deg.err.empty());

  auto con = run_cli(config("connectivity", "c4.edges"));
  CHECK(con.rc == exit_ok);
  CHECK(con.out == "2\n");

  auto sep = run_cli(config("separators", "fig1.edges"));
  CHECK(sep.rc == exit_ok);
  CHECK(sep.out ==
        "{2}: {1} {3,4,5}\n"
        "{2,5}: {1} {3} {4}\n"
        "{3,4}: {1,2} {5}\n");

  auto gen = run_cli(config("generators", "ex37.edges"));
  CHECK(gen.rc == exit_ok);
  CHECK(gen.out ==
        "theta_0: [1, 1, 1, 1]\n"
        "theta[{4},{1}]: [x1 - x4, 0, 0, 0]\n"
        "theta[{4},{2,3}]: [0, x2 - x4, x3 - x4, 0]\n"
        "theta[{3,4},{2}]: [0, x2^2 - x2*x3 - x2*x4 + x3*x4, 0, 0]\n"
        "degrees: (0,1,1,2)\n");

  auto ver = run_cli(config("verify", "ex37.edges"));
  CHECK(ver.rc == exit_ok);
  CHECK(ver.out ==
        "p=0 module=1 span=1\n"
        "p=1 module=6 span=6\n"
        "p=2 module=19 span=19\n"
        "p=3 module=44 span=44\n"
        "p=4 module=85 span=85\n"
        "p=5 module=146 span=146\n"
        "generates: true (up to 5)\n");

  auto bnd = run_cli(config("bounds", "ex37.edges"));
  CHECK(bnd.rc == exit_ok);
  CHECK(bnd.out == "d = 2, c-1 = 2, t_max = 1, delta = 3, ok = true\n");
}

TEST_CASE("saito reports the determinant scalar or the failure") {
  auto tri = run_cli(config("saito", "ex37.edges"));
  CHECK(tri.rc == exit_ok);
  CHECK(tri.out == "basis: true, c = 1\n");

  // Complete graphs and trees use closed-form bases, no cutoff involved.
  CHECK(run_cli(config("saito", "k4.edges")).out == "basis: true, c = 1\n");
  CHECK(run_cli(config("saito", "star5.edges")).out == "basis: true, c = 1\n");

  // The four-cycle needs five generators, so no square matrix exists.
  auto cyc = run_cli(config("saito", "c4.edges"));
  CHECK(cyc.rc == exit_failed);
  CHECK(cyc.out == "basis: false (5 generators for 4 vertices)\n");

  auto cyc_json = run_cli([] {
    auto cfg = config("saito", "c4.edges");
    cfg.output = "json";
    return cfg;
  }());
  CHECK(cyc_json.rc == exit_failed);
  json j = json::parse(cyc_json.out);
  CHECK(j["basis"] == false);
  CHECK(j["count"] == 5);
  CHECK(!j.contains("scalar"));

  auto k4_json = run_cli([] {
    auto cfg = config("saito", "k4.edges");
    cfg.output = "json";
    return cfg;
  }());
  json k = json::parse(k4_json.out);
  CHECK(k["basis"] == true);
  CHECK(k["scalar"] == "1");
}

TEST_CASE("poset renderings agree across output modes") {
  auto txt = run_cli(config("poset", "ex37.edges"));
  CHECK(txt.rc == exit_ok);
  CHECK(txt.out ==
        "[4],{1} minimal\n"
        "[4],{2,3} minimal\n");

  auto dot = run_cli([] {
    auto cfg = config("poset", "ex37.edges");
    cfg.output = "dot";
    return cfg;
  }());
  CHECK(dot.rc == exit_ok);
  CHECK(dot.out ==
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"[4],{1}\", style=solid];\n"
        "  n1 [label=\"[4],{2,3}\", style=solid];\n"
        "}\n");

  auto js = run_cli([] {
    auto cfg = config("poset", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  json j = json::parse(js.out);
  CHECK(j["count"] == 2);
  CHECK(j["nodes"][0]["t"] == json::array({4}));
  CHECK(j["nodes"][0]["c"] == json::array({1}));
  CHECK(j["nodes"][1]["c"] == json::array({2, 3}));
  CHECK(j["nodes"][0]["origin"] == "minimal");
}

TEST_CASE("poset with an ordering prints the descending chain") {
  auto chain = run_cli([] {
    auto cfg = config("poset", "c4.edges");
    cfg.ordering = {1, 3};
    return cfg;
  }());
  CHECK(chain.rc == exit_ok);
  CHECK(chain.out ==
        "[2,4],{1} minimal\n"
        "[2,4],{1,3} augmented\n");

  auto dup = run_cli([] {
    auto cfg = config("poset", "c4.edges");
    cfg.ordering = {1, 1};
    return cfg;
  }());
  CHECK(dup.rc == exit_parse);
  CHECK(dup.err == "error: ordering repeats a vertex\n");

  auto range = run_cli([] {
    auto cfg = config("poset", "c4.edges");
    cfg.ordering = {1, 9};
    return cfg;
  }());
  CHECK(range.rc == exit_parse);
  CHECK(range.err == "error: ordering vertex out of range\n");
}

TEST_CASE("json outputs carry the same values as the text forms") {
  auto deg = run_cli([] {
    auto cfg = config("degrees", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  json d = json::parse(deg.out);
  CHECK(d["cutoff"] == 5);
  CHECK(d["degrees"] == json::array({0, 1, 1, 2}));

  auto ver = run_cli([] {
    auto cfg = config("verify", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  json v = json::parse(ver.out);
  CHECK(v["generates"] == true);
  CHECK(v["first_failure"].is_null());
  CHECK(v["table"].size() == 6);
  CHECK(v["table"][2]["module_dim"] == 19);
  CHECK(v["table"][2]["span_dim"] == 19);
  CHECK(v["certified"] == "generates_up_to_P");

  auto bnd = run_cli([] {
    auto cfg = config("bounds", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  json b = json::parse(bnd.out);
  CHECK(b["d"] == 2);
  CHECK(b["c_minus_1"] == 2);
  CHECK(b["t_max"] == 1);
  CHECK(b["delta"] == 3);
  CHECK(b["ok"] == true);
  CHECK(b["subsequence_ok"] == true);

  auto gen = run_cli([] {
    auto cfg = config("generators", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  json g = json::parse(gen.out);
  CHECK(g["degree_sequence"] == json::array({0, 1, 1, 2}));
  CHECK(g["certified"] == "uncertified");
  CHECK(g["generators"].size() == 4);
  CHECK(g["generators"][0]["label"] == "theta_0");
  CHECK(g["generators"][0]["row"] == json::array({"1", "1", "1", "1"}));
  CHECK(g["poset"].size() == 3);
  CHECK(g["poset"][2]["origin"] == "augmented");

  auto con = run_cli([] {
    auto cfg = config("connectivity", "c5.edges");
    cfg.output = "json";
    return cfg;
  }());
  CHECK(json::parse(con.out)["connectivity"] == 2);
}

TEST_CASE("exit codes separate config, input, and check failures") {
  auto unknown = run_cli(config("frobnicate", "c4.edges"));
  CHECK(unknown.rc == exit_parse);
  CHECK(unknown.err == "error: unknown command 'frobnicate'\n");

  auto mode = run_cli([] {
    auto cfg = config("degrees", "c4.edges");
    cfg.output = "yaml";
    return cfg;
  }());
  CHECK(mode.rc == exit_parse);
  CHECK(mode.err == "error: unknown output mode 'yaml'\n");

  auto dot = run_cli([] {
    auto cfg = config("degrees", "c4.edges");
    cfg.output = "dot";
    return cfg;
  }());
  CHECK(dot.rc == exit_parse);
  CHECK(dot.err == "error: dot output is only available for poset\n");

  auto ord = run_cli([] {
    auto cfg = config("degrees", "c4.edges");
    cfg.ordering = {1};
    return cfg;
  }());
  CHECK(ord.rc == exit_parse);
  CHECK(ord.err == "error: --ordering only applies to poset\n");

  auto missing = run_cli(config("degrees", "no_such_file.edges"));
  CHECK(missing.rc == exit_parse);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  auto bad = run_cli(config("degrees", "bad.edges"));
  CHECK(bad.rc == exit_parse);
  CHECK(bad.err == "error: expected header line 'n <count>'\n");

  auto disc = run_cli(config("connectivity", "disc.edges"));
  CHECK(disc.rc == exit_disconnected);
  CHECK(disc.err == "error: graph is not connected\n");

  auto low = run_cli([] {
    auto cfg = config("verify", "fig1.edges");
    cfg.cutoff = 2;
    return cfg;
  }());
  CHECK(low.rc == exit_parse);
  CHECK(low.err == "error: cutoff 2 is below the max degree 3\n");
}

TEST_CASE("cutoff resolution prefers the flag, then the environment") {
  unsetenv("SEPDER_CUTOFF");
  auto base = run_cli([] {
    auto cfg = config("degrees", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  CHECK(json::parse(base.out)["cutoff"] == 5);

  setenv("SEPDER_CUTOFF", "6", 1);
  auto env = run_cli([] {
    auto cfg = config("degrees", "ex37.edges");
    cfg.output = "json";
    return cfg;
  }());
  CHECK(json::parse(env.out)["cutoff"] == 6);

  auto flag = run_cli([] {
    auto cfg = config("degrees", "ex37.edges");
    cfg.output = "json";
    cfg.cutoff = 7;
    return cfg;
  }());
  CHECK(json::parse(flag.out)["cutoff"] == 7);

  setenv("SEPDER_CUTOFF", "abc", 1);
  auto junk = run_cli(config("degrees", "ex37.edges"));
  CHECK(junk.rc == exit_parse);
  CHECK(junk.err == "error: SEPDER_CUTOFF is not an integer\n");
  unsetenv("SEPDER_CUTOFF");
}

TEST_CASE("graph formats are detected by extension and overridable") {
  auto autodetect = run_cli(config("connectivity", "k4.g6"));
  CHECK(autodetect.rc == exit_ok);
  CHECK(autodetect.out == "3\n");

  auto forced = run_cli([] {
    auto cfg = config("connectivity", "k4.g6");
    cfg.format = "graph6";
    return cfg;
  }());
  CHECK(forced.out == "3\n");

  auto explicit_edges = run_cli([] {
    auto cfg = config("connectivity", "k4.edges");
    cfg.format = "edge_list";
    return cfg;
  }());
  CHECK(explicit_edges.out == "3\n");

  auto mismatch = run_cli([] {
    auto cfg = config("connectivity", "k4.g6");
    cfg.format = "edge_list";
    return cfg;
  }());
  CHECK(mismatch.rc == exit_parse);
}

TEST_CASE("identical runs produce byte-identical output") {
  auto cfg = config("generators", "fig1.edges");
  auto a = run_cli(cfg);
  auto b = run_cli(cfg);
  CHECK(a.rc == b.rc);
  CHECK(a.out == b.out);

  auto dot_cfg = config("poset", "fig1.edges");
  dot_cfg.output = "dot";
  CHECK(run_cli(dot_cfg).out == run_cli(dot_cfg).out);

  auto ver_cfg = config("verify", "c4.edges");
  ver_cfg.output = "json";
  CHECK(run_cli(ver_cfg).out == run_cli(ver_cfg).out);
}

TEST_CASE("census summarizes a directory of graphs") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sepder_cli_census";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char* name : {"c4.edges", "disc.edges", "ex37.edges"})
    std::ofstream(dir / name) << slurp(name);

  RunConfig cfg;
  cfg.command = "census";
  cfg.input_path = dir.string();
  auto res = run_cli(cfg);
  CHECK(res.rc == exit_disconnected);

  std::istringstream lines(res.out);
  std::string line;
  std::vector<json> recs;
  while (std::getline(lines, line)) recs.push_back(json::parse(line));
  REQUIRE(recs.size() == 3);

  // Records come out sorted by file name.
  CHECK(recs[0]["file"] == "c4.edges");
  CHECK(recs[1]["file"] == "disc.edges");
  CHECK(recs[2]["file"] == "ex37.edges");

  CHECK(recs[1]["error"] == "disconnected");

  CHECK(recs[0]["error"].is_null());
  CHECK(recs[0]["l"] == 4);
  CHECK(recs[0]["connectivity"] == 2);
  CHECK(recs[0]["chordal"] == false);
  CHECK(recs[0]["degrees"] == json::array({0, 1, 2, 2, 2}));
  CHECK(recs[0]["generates"] == true);

  CHECK(recs[2]["clique"] == 3);
  CHECK(recs[2]["chordal"] == true);
  CHECK(recs[2]["separators"] == 1);
  CHECK(recs[2]["poset_nodes"] == 2);
  CHECK(recs[2]["heuristic_nodes"] == 3);
  CHECK(recs[2]["degrees"] == json::array({0, 1, 1, 2}));
  CHECK(recs[2]["bounds_ok"] == true);
  CHECK(recs[2]["subsequence_ok"] == true);
  CHECK(recs[2]["generates"] == true);

  // Pointing census at a file rather than a directory is a usage error.
  auto not_dir = run_cli(config("census", "c4.edges"));
  CHECK(not_dir.rc == exit_parse);
  CHECK(not_dir.err == "error: census expects a directory\n");

  fs::remove_all(dir);
}
