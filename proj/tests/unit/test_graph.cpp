#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "sumess/analysis.hpp"
#include "sumess/error.hpp"

using namespace sumess;

namespace {

SubmoduleId cyclic(const Analysis& a, std::vector<std::int64_t> c) {
  return a.lattice().id_of(a.module().orbit(a.module().encode(c)));
}

std::uint32_t as_oracle(const Length& l) { return l.is_finite() ? l.value() : oracle::kInf; }

}  // namespace

TEST(Graph, Z8Z2ProperDegrees) {
  const auto a = Analysis::build(fixtures::zmod({8, 2}));
  EXPECT_EQ(a.proper().degree(cyclic(a, {4, 0})), 2u);
  // Brute force (oracle::sum_essential_graph) also gives 4 for the Z8 factor.
  EXPECT_EQ(a.proper().degree(cyclic(a, {1, 0})), 4u);
  EXPECT_EQ(a.proper().vertex_count(), 7u);
  EXPECT_EQ(a.full().vertex_count(), 9u);
}

TEST(Graph, Z4Z3DegreeOneVertices) {
  const auto a = Analysis::build(fixtures::zmod({4, 3}));
  std::vector<SubmoduleId> deg1;
  for (SubmoduleId v : a.proper().vertices())
    if (a.proper().degree(v) == 1) deg1.push_back(v);
  std::vector<SubmoduleId> expected = {cyclic(a, {2, 0}), cyclic(a, {1, 0})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(deg1, expected);
  EXPECT_EQ(a.proper().degree(cyclic(a, {0, 1})), 2u);
}

TEST(Graph, DegreeFormulaForDistinctSimples) {
  const auto a = Analysis::build(fixtures::zmod({2, 3, 5}));
  const auto r = a.full().report();
  EXPECT_EQ(r.max_degree, 3u);
  EXPECT_EQ(r.min_degree, 1u);
  for (SubmoduleId v : a.full().vertices()) {
    std::size_t below = 0;
    for (SubmoduleId s : a.lattice().atoms()) below += a.lattice().contains(v, s);
    EXPECT_EQ(a.full().degree(v), (1u << below) - 1);
  }
}

TEST(Graph, ZpZpIsComplete) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto a = Analysis::build(fixtures::zmod({p, p}));
    EXPECT_TRUE(a.full().is_complete());
    EXPECT_EQ(a.full().vertex_count(), p + 1);
    const auto& atoms = a.lattice().atoms();
    EXPECT_EQ(a.module().count_homs(a.lattice().at(atoms[0]), a.lattice().at(atoms[1])) + 1, p + 1);
  }
}

TEST(Graph, ClosingExampleGirths) {
  const auto a = Analysis::build(fixtures::zmod({4, 9}));
  EXPECT_EQ(a.proper().girth(), Length::finite(4));
  EXPECT_TRUE(a.proper().triangle_free());
  EXPECT_FALSE(a.proper().is_tree());
  const auto b = Analysis::build(fixtures::zmod({8, 3}));
  EXPECT_EQ(b.proper().girth(), Length::infinity());
  EXPECT_TRUE(b.proper().is_tree());
  EXPECT_EQ(b.proper().star_center(), cyclic(b, {0, 1}));
}

TEST(Graph, K2HasTwoStarCenters) {
  const auto a = Analysis::build(fixtures::zmod({2, 3}));
  EXPECT_EQ(a.full().star_centers().size(), 2u);
  EXPECT_EQ(a.full().k_regular(), std::optional<std::uint32_t>(1));
}

TEST(Graph, MatchesBruteForceInvariants) {
  for (const auto& p : fixtures::small_modules(24)) {
    const auto a = Analysis::build(p);
    const auto o = oracle::make(p);
    const auto sets = oracle::submodules_by_growth(o);
    for (const EssGraph* g : {&a.full(), &a.proper()}) {
      const auto ref = oracle::sum_essential_graph(o, sets, g->kind() == GraphKind::Proper);
      ASSERT_EQ(g->vertex_count(), ref.vertices.size()) << p.name;
      std::vector<std::size_t> to_ref;
      for (SubmoduleId x : g->vertices()) {
        oracle::Set s;
        a.lattice().at(x).members().for_each([&](std::size_t i) { s.push_back(static_cast<std::uint32_t>(i)); });
        to_ref.push_back(oracle::vertex_index(ref, s));
      }
      for (std::size_t i = 0; i < to_ref.size(); ++i)
        for (std::size_t j = 0; j < to_ref.size(); ++j)
          EXPECT_EQ(static_cast<bool>(g->row(i).test(j)), static_cast<bool>(ref.adj[to_ref[i]][to_ref[j]])) << p.name;
      std::size_t edges = 0;
      bool triangle = false;
      const std::size_t v = ref.vertices.size();
      for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
          edges += ref.adj[i][j] && i < j;
          for (std::size_t k = 0; k < v; ++k) triangle |= ref.adj[i][j] && ref.adj[j][k] && ref.adj[i][k];
        }
      EXPECT_EQ(g->edge_count(), edges) << p.name;
      EXPECT_EQ(g->triangle_free(), !triangle) << p.name;
      EXPECT_EQ(as_oracle(g->diameter()), oracle::diameter(ref.adj)) << p.name;
      EXPECT_EQ(as_oracle(g->girth()), oracle::girth(ref.adj)) << p.name;
    }
  }
}

TEST(Graph, UnknownVertexThrows) {
  const auto a = Analysis::build(fixtures::zmod({8, 2}));
  const SubmoduleId ess = a.lattice().socle();
  EXPECT_THROW(a.proper().degree(ess), UnknownVertex);
  EXPECT_THROW(a.full().degree(a.lattice().zero()), UnknownVertex);
}

TEST(Graph, CliqueSearch) {
  const auto a = Analysis::build(fixtures::zmod({2, 2, 2}));
  const auto clique = a.full().find_clique(4);
  ASSERT_TRUE(clique.has_value());
  EXPECT_TRUE(a.full().is_clique(*clique));
  EXPECT_FALSE(a.full().find_clique(a.full().vertex_count() + 1).has_value());
  Caps caps;
  caps.clique_search = 2;
  const auto b = Analysis::build(fixtures::zmod({2, 2, 2}), caps);
  EXPECT_THROW(b.full().find_clique(8), CliqueSearchCapExceeded);
}

TEST(Graph, NPartiteWitnesses) {
  const auto semisimple = Analysis::build(fixtures::zmod({2, 3}));
  const auto w = n_partite_witness(semisimple.lattice(), semisimple.full());
  EXPECT_EQ(w.n, 2u);
  EXPECT_TRUE(w.verified);
  EXPECT_TRUE(std::holds_alternative<PartitionWitness>(w.witness));

  const auto other = Analysis::build(fixtures::zmod({4, 3}));
  const auto c = n_partite_witness(other.lattice(), other.full());
  ASSERT_TRUE(std::holds_alternative<CliqueWitness>(c.witness));
  EXPECT_EQ(std::get<CliqueWitness>(c.witness).clique.size(), 3u);
  EXPECT_TRUE(c.verified);

  const auto chain = Analysis::build(fixtures::zmod({8}));
  EXPECT_THROW(n_partite_witness(chain.lattice(), chain.full()), HypothesisNotMet);
  EXPECT_THROW(n_partite_witness(other.lattice(), other.proper()), HypothesisNotMet);
}

TEST(Graph, EmptyGraphConventions) {
  const auto a = Analysis::build(fixtures::zmod({4}));
  EXPECT_TRUE(a.proper().empty());
  EXPECT_TRUE(a.proper().is_connected());
  EXPECT_EQ(a.proper().diameter(), Length::finite(0));
  EXPECT_EQ(a.proper().girth(), Length::infinity());
  EXPECT_FALSE(a.proper().k_regular().has_value());
}

TEST(Graph, DotExport) {
  const auto a = Analysis::build(fixtures::zmod({2, 3}));
  EXPECT_EQ(export_dot(a.full()),
            "graph \"S(Z2+Z3)\" {\n  v1 [label=\"<(1,0)>\"];\n  v2 [label=\"<(0,1)>\"];\n  v1 -- v2;\n}\n");
}

TEST(Graph, JsonExport) {
  const auto a = Analysis::build(fixtures::zmod({8, 3}));
  const auto j = nlohmann::json::parse(export_json(a.proper()));
  EXPECT_EQ(j["graph"], "N");
  EXPECT_EQ(j["girth"], "inf");
  EXPECT_EQ(j["is_tree"], true);
  EXPECT_EQ(j["vertices"].size(), a.proper().vertex_count());
  EXPECT_EQ(j["edges"].size(), a.proper().edge_count());
}
