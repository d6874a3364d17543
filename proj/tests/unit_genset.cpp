#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sepder/genset.hpp"
#include "sepder/oracle.hpp"
#include "testutil.hpp"

using namespace sepder;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load(const std::string& name) { return parse_graph(slurp(name), "edge_list"); }

Graph complete(int l) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(l, std::move(edges));
}

Graph path(int l) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(l, std::move(edges));
}

}  // namespace

TEST_CASE("assembled generators of the worked four-vertex graph") {
  Graph ex = load("ex37.edges");
  GenSetReport rep = assemble_generators(ex, heuristic_minimal_poset(ex));
  REQUIRE(rep.generators.size() == 4);
  CHECK(rep.generators[0].row_str() == "[1, 1, 1, 1]");
  CHECK(rep.generators[1].row_str() == "[x1 - x4, 0, 0, 0]");
  CHECK(rep.generators[2].row_str() == "[0, x2 - x4, x3 - x4, 0]");
  CHECK(rep.generators[3].row_str() == "[0, x2^2 - x2*x3 - x2*x4 + x3*x4, 0, 0]");
  CHECK(rep.degree_sequence == std::vector<int>{0, 1, 1, 2});
  CHECK(rep.certified == CertLevel::uncertified);
  CHECK(rep.bounds.d == 2);
  CHECK(rep.bounds.all_ok());
  for (const auto& d : rep.generators) CHECK(is_member(ex, d));
}

TEST_CASE("complete graphs bypass the poset") {
  for (int l : {2, 3, 4, 5}) {
    Graph kl = complete(l);
    GenSetReport rep = assemble_generators(kl, SeparatorPoset{});
    REQUIRE(static_cast<int>(rep.generators.size()) == l);
    std::vector<int> expect;
    for (int k = 0; k < l; ++k) expect.push_back(k);
    CHECK(rep.degree_sequence == expect);
    CHECK(rep.generators[l - 1].label.str() == "theta_" + std::to_string(l - 1));
    CHECK(rep.poset.empty());
  }
}

TEST_CASE("assembly requires a complete poset") {
  Graph ex = load("ex37.edges");
  CHECK_THROWS(assemble_generators(ex, build_poset(ex)));  // misses ({4},{2,3})
}

TEST_CASE("top theta power is dropped exactly when a smallest separator is covered") {
  // antihole 6: kappa = 3, separator {1,2,3} has both components present
  // in the heuristic poset, so theta_3 is redundant and omitted
  Graph anti = load("antihole6.edges");
  GenSetReport rep = assemble_generators(anti, heuristic_minimal_poset(anti));
  REQUIRE(rep.generators.size() == 10);
  CHECK(rep.degree_sequence == std::vector<int>{0, 1, 2, 3, 3, 3, 3, 3, 3, 3});
  int theta_count = 0;
  for (const auto& d : rep.generators) {
    if (d.label.kind == DerivationLabel::theta_k) ++theta_count;
  }
  CHECK(theta_count == 3);  // theta_0, theta_1, theta_2 but not theta_3

  // square, heuristic poset: the pivot separator {1,3} keeps both its
  // components, so theta_2 goes
  Graph c4 = load("c4.edges");
  GenSetReport rc4 = assemble_generators(c4, heuristic_minimal_poset(c4));
  CHECK(rc4.degree_sequence == std::vector<int>{0, 1, 2, 2, 2});
  int c4_thetas = 0;
  for (const auto& d : rc4.generators) {
    if (d.label.kind == DerivationLabel::theta_k) ++c4_thetas;
  }
  CHECK(c4_thetas == 2);  // theta_0, theta_1 only

  // hand-built complete poset with one component per separator: neither
  // separator is fully covered and theta_2 must stay
  SeparatorPoset half(c4, {SeparatorNode{{1, 3}, {2}, NodeOrigin::minimal},
                           SeparatorNode{{2, 4}, {1}, NodeOrigin::minimal}});
  REQUIRE(is_complete(c4, half).complete);
  GenSetReport rhalf = assemble_generators(c4, half);
  CHECK(rhalf.degree_sequence == std::vector<int>{0, 1, 2, 2, 2});
  int half_thetas = 0;
  for (const auto& d : rhalf.generators) {
    if (d.label.kind == DerivationLabel::theta_k) ++half_thetas;
  }
  CHECK(half_thetas == 3);  // theta_0, theta_1, theta_2

  // full poset of the square covers both components of {1,3}: drop
  GenSetReport rfull = assemble_generators(c4, build_poset(c4));
  CHECK(rfull.degree_sequence == std::vector<int>{0, 1, 2, 2, 2, 2});
  for (const auto& d : rfull.generators) {
    if (d.label.kind == DerivationLabel::theta_k) CHECK(d.label.index < 2);
  }
}

TEST_CASE("assembled generators always verify against the module oracle") {
  for (const Graph& g : testutil::connected_graphs_upto(5)) {
    if (g.is_complete()) continue;
    GenSetReport rep = assemble_generators(g, heuristic_minimal_poset(g));
    Oracle oracle(g);
    auto res = oracle.verify_generation(rep.generators, default_cutoff(g));
    CHECK(res.generates);
  }
}

TEST_CASE("tree bases") {
  Graph p3 = path(3);
  auto basis = tree_basis(p3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].row_str() == "[1, 1, 1]");
  CHECK(basis[1].row_str() == "[x1 - x2, 0, 0]");
  CHECK(basis[2].row_str() == "[0, 0, -x2 + x3]");
  auto res = saito_check(p3, basis);
  CHECK(res.is_basis);

  Graph star = load("star5.edges");
  auto sb = tree_basis(star);
  REQUIRE(sb.size() == 5);
  CHECK(degree_sequence(sb) == std::vector<int>{0, 1, 1, 1, 1});
  CHECK(saito_check(star, sb).is_basis);

  for (int l = 1; l <= 8; ++l) {
    for (const Graph& t : testutil::trees_exactly(l)) {
      auto b = tree_basis(t);
      REQUIRE(static_cast<int>(b.size()) == l);
      if (l >= 2) {
        auto r = saito_check(t, b);
        CHECK(r.is_basis);
      }
    }
  }

  CHECK(tree_basis(Graph::from_edges(1, {})).size() == 1);
  Graph p2 = path(2);
  auto b2 = tree_basis(p2);
  CHECK(b2[0].row_str() == "[1, 1]");
  CHECK(b2[1].pdeg() == 1);
  CHECK_THROWS(tree_basis(load("c4.edges")));
  CHECK_THROWS(tree_basis(Graph::from_edges(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("degree sequence extraction") {
  std::vector<Derivation> ds{theta_power(2, 3), theta_power(0, 3), theta_power(1, 3)};
  CHECK(degree_sequence(ds) == std::vector<int>{0, 1, 2});
  Derivation mixed;
  mixed.coeffs = {MultiPoly::variable(1, 3) + MultiPoly::constant(3, 1), MultiPoly::zero(3),
                  MultiPoly::zero(3)};
  try {
    degree_sequence({theta_power(0, 3), mixed});
    FAIL("expected throw");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("degree bounds on known graphs") {
  // complete graph: top degree l-1 meets the clique bound exactly
  DegreeBounds k5 = bounds_report(complete(5), 4);
  CHECK(k5.c_minus_1 == 4);
  CHECK(k5.t_max == 0);
  CHECK(k5.delta == 4);
  CHECK(k5.d == 4);
  CHECK(k5.all_ok());

  DegreeBounds ex = bounds_report(load("ex37.edges"), 2);
  CHECK(ex.c_minus_1 == 2);
  CHECK(ex.t_max == 1);
  CHECK(ex.delta == 3);
  CHECK(ex.all_ok());

  // claimed top degree below the clique bound fails
  DegreeBounds low = bounds_report(complete(5), 3);
  CHECK_FALSE(low.c_ok);
  CHECK_FALSE(low.all_ok());
  // claimed top degree above the max degree fails
  DegreeBounds high = bounds_report(load("ex37.edges"), 4);
  CHECK(high.c_ok);
  CHECK(high.t_ok);
  CHECK_FALSE(high.delta_ok);

  DegreeBounds anti = bounds_report(load("antihole6.edges"), 3);
  CHECK(anti.c_minus_1 == 2);
  CHECK(anti.t_max == 3);
  CHECK(anti.delta == 3);
  CHECK(anti.all_ok());
}

TEST_CASE("forced degrees of small graphs") {
  CHECK(predicted_subsequence(load("ex37.edges")) == std::vector<int>{0, 1, 1});
  CHECK(predicted_subsequence(load("c4.edges")) == std::vector<int>{0, 1, 2, 2, 2});
  CHECK(predicted_subsequence(complete(5)) == std::vector<int>{0, 1, 2, 3, 4});
  // theta powers force 0..3, then each of the six separators forces
  // one more degree-3 entry beyond its first component
  CHECK(predicted_subsequence(load("antihole6.edges")) ==
        std::vector<int>{0, 1, 2, 3, 3, 3, 3, 3, 3, 3});
  CHECK(predicted_subsequence(Graph::from_edges(1, {})) == std::vector<int>{0});
  CHECK(predicted_subsequence(path(2)) == std::vector<int>{0, 1});
  // Removing {1,2} isolates 3, 4, 5 and 6, but the pendants 5 and 6 see
  // only vertex 1, so they force nothing for this separator: the cut
  // {1,2} contributes a single 2 for its two full components, and the
  // cut {1} contributes two 1s for its three.
  Graph pend = Graph::from_edges(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}});
  CHECK(predicted_subsequence(pend) == std::vector<int>{0, 1, 1, 1, 2, 2});
  // Same graph plus the edge 1-2 is chordal with exponents 0,1,1,1,2,2;
  // counting the non-full components would overshoot that sequence.
  Graph pendc = Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}});
  CHECK(predicted_subsequence(pendc) == std::vector<int>{0, 1, 1, 1, 2});
  Oracle oracle(pendc);
  CHECK(oracle.minimal_degree_sequence(default_cutoff(pendc)).degrees ==
        std::vector<int>{0, 1, 1, 1, 2, 2});
  CHECK(subsequence_check(pendc, {0, 1, 1, 1, 2, 2}));
}

TEST_CASE("subsequence check is multiset containment") {
  Graph c4 = load("c4.edges");
  CHECK(subsequence_check(c4, {0, 1, 2, 2, 2}));
  CHECK(subsequence_check(c4, {0, 1, 2, 2, 2, 5}));
  CHECK_FALSE(subsequence_check(c4, {0, 1, 2, 2}));    // one 2 short
  CHECK_FALSE(subsequence_check(c4, {0, 2, 2, 2, 2})); // the 1 is missing
  CHECK(subsequence_check(c4, {0, 1, 1, 2, 2, 2}));    // extra entries do not hurt
  CHECK(subsequence_check(c4, {2, 2, 0, 2, 1}));       // order independent
}

TEST_CASE("forced degrees sit inside oracle-minimal sequences") {
  for (const Graph& g : testutil::connected_graphs_upto(5)) {
    Oracle oracle(g);
    auto minimal = oracle.minimal_degree_sequence(default_cutoff(g));
    CHECK(subsequence_check(g, minimal.degrees));
  }
}
