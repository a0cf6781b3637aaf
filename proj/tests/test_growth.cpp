#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ncalg/digraph.hpp"
#include "ncalg/ufnarovski.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace testing_support;

namespace {

const Alphabet kTwo = Alphabet::standard(2);

using EdgeSet = std::multiset<std::pair<std::string, std::string>>;

EdgeSet edge_set(const UfnarovskiGraph& g, const Alphabet& a) {
  EdgeSet out;
  for (const auto& e : g.edges) out.insert({a.format(g.vertices[e.from]), a.format(g.vertices[e.to])});
  return out;
}

UfnarovskiGraph graph_of(const Alphabet& a, std::initializer_list<std::string_view> omega) {
  return build_ufnarovski(MonomialSet::from_reduced(words(a, omega)), a);
}

}  // namespace

TEST(Ufnarovski, DownUpGraph) {
  auto g = graph_of(kTwo, {"x1^2*x2", "x1*x2^2"});
  EXPECT_EQ(g.ell, 3u);
  EXPECT_EQ(g.vertices, words(kTwo, {"x1^2", "x1*x2", "x2*x1", "x2^2"}));
  EdgeSet expected{{"x1*x2", "x2*x1"}, {"x2*x1", "x1*x2"}, {"x2*x1", "x1*x1"},
                   {"x1*x1", "x1*x1"}, {"x2*x2", "x2*x2"}, {"x2*x2", "x2*x1"}};
  EXPECT_EQ(edge_set(g, kTwo), expected);
  EXPECT_EQ(classify_growth(g), GrowthClass::polynomial(3));
}

TEST(Ufnarovski, SingleCommutationGraph) {
  auto g = graph_of(kTwo, {"x2*x1"});
  EXPECT_EQ(g.vertices, words(kTwo, {"x1", "x2"}));
  EdgeSet expected{{"x1", "x1"}, {"x1", "x2"}, {"x2", "x2"}};
  EXPECT_EQ(edge_set(g, kTwo), expected);
  EXPECT_EQ(classify_growth(g), GrowthClass::polynomial(2));
}

TEST(Ufnarovski, CubicObstructionGraphFollowsTheEdgeRule) {
  // Omega = {x2^2*x1}: x1^2*x2 is normal, so x1^2 -> x1*x2 is an edge as well.
  auto g = graph_of(kTwo, {"x2^2*x1"});
  EdgeSet expected{{"x1*x1", "x1*x1"}, {"x1*x1", "x1*x2"}, {"x1*x2", "x2*x1"},
                   {"x1*x2", "x2*x2"}, {"x2*x1", "x1*x1"}, {"x2*x1", "x1*x2"},
                   {"x2*x2", "x2*x2"}};
  EXPECT_EQ(edge_set(g, kTwo), expected);
  auto analysis = analyze_growth(g);
  EXPECT_EQ(analysis.growth, GrowthClass::exponential());
  ASSERT_TRUE(analysis.witness.has_value());
  EXPECT_TRUE(verify_witness(g, *analysis.witness));
}

TEST(Ufnarovski, EmptyObstructionSet) {
  auto g2 = build_ufnarovski(MonomialSet{}, kTwo);
  EXPECT_EQ(g2.ell, 1u);
  EXPECT_EQ(g2.vertices.size(), 1u);
  EXPECT_EQ(g2.edges.size(), 2u);
  auto analysis = analyze_growth(g2);
  EXPECT_EQ(analysis.growth, GrowthClass::exponential());
  ASSERT_TRUE(analysis.witness.has_value());
  EXPECT_TRUE(verify_witness(g2, *analysis.witness));

  Alphabet one = Alphabet::standard(1);
  EXPECT_EQ(classify_growth(build_ufnarovski(MonomialSet{}, one)), GrowthClass::polynomial(1));
}

TEST(Ufnarovski, DeadLetters) {
  Alphabet three = Alphabet::standard(3);
  auto g = graph_of(three, {"x1", "x3*x2"});
  for (const Word& v : g.vertices) EXPECT_FALSE(v.has_factor(Word{0}));
  EXPECT_EQ(classify_growth(g), GrowthClass::polynomial(2));
}

TEST(GkDimension, Examples) {
  Alphabet three = Alphabet::standard(3);
  auto pbw = MonomialSet::from_reduced(words(three, {"x2*x1", "x3*x1", "x3*x2"}));
  EXPECT_EQ(gk_dimension(pbw, three), Dimension::finite(3));
  auto square = MonomialSet::from_reduced(words(three, {"x1^2"}));
  EXPECT_EQ(gk_dimension(square, three), Dimension::infinite());
  Alphabet one = Alphabet::standard(1);
  EXPECT_EQ(gk_dimension(MonomialSet::from_reduced(words(one, {"x1^2"})), one),
            Dimension::finite(0));
}

TEST(GkDimension, ExponentialWitnessForSquareOverThreeLetters) {
  Alphabet three = Alphabet::standard(3);
  auto g = graph_of(three, {"x1^2"});
  auto analysis = analyze_growth(g);
  EXPECT_EQ(analysis.growth, GrowthClass::exponential());
  ASSERT_TRUE(analysis.witness.has_value());
  EXPECT_TRUE(verify_witness(g, *analysis.witness));
  CycleWitness broken = *analysis.witness;
  broken.second = broken.first;
  EXPECT_FALSE(verify_witness(g, broken));
}

TEST(Dot, Rendering) {
  EXPECT_EQ(render_dot("g", {}, {}), "digraph g {\n}\n");
  Alphabet one = Alphabet::standard(1);
  std::string loop = emit_dot(build_ufnarovski(MonomialSet{}, one), one);
  EXPECT_EQ(loop, "digraph ufnarovski {\n  v0 [label=\"1\"];\n  v0 -> v0 [label=\"x1\"];\n}\n");

  std::string down = emit_dot(graph_of(kTwo, {"x1^2*x2", "x1*x2^2"}), kTwo);
  EXPECT_EQ(std::count(down.begin(), down.end(), '\n'), 1 + 4 + 6 + 1);
  EXPECT_NE(down.find("v0 -> v0"), std::string::npos);
  EXPECT_LT(down.find("v0 -> v0"), down.find("v1 -> v2"));
  EXPECT_EQ(down, emit_dot(graph_of(kTwo, {"x1^2*x2", "x1*x2^2"}), kTwo));
}

TEST(Scc, ComponentsAreReverseTopological) {
  std::vector<std::vector<std::size_t>> succ{{1}, {0, 2}, {3}, {2}, {}};
  std::size_t count = 0;
  auto comp = strongly_connected_components(succ, count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_EQ(comp[2], comp[3]);
  EXPECT_GT(comp[0], comp[2]);
  EXPECT_TRUE(reaches_cycle(succ, 0));
  EXPECT_FALSE(reaches_cycle({{1}, {}}, 0));
}

TEST(Properties, WalkCountsEqualNormalWordCounts) {
  Random rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(2, 3);
    auto omega = rng.omega(n);
    auto g = build_ufnarovski(omega, Alphabet::standard(n));
    auto brute = brute_counts_by_length(omega.words(), n, 8);
    auto walks = walk_counts(g, 8 - (g.ell - 1));
    for (std::size_t len = g.ell - 1; len <= 8; ++len)
      EXPECT_EQ(walks[len - (g.ell - 1)], brute[len]) << "length " << len;
  }
}

TEST(Properties, ClassificationIgnoresVertexLabels) {
  Random rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(2, 3);
    auto omega = rng.omega(n);
    auto g = build_ufnarovski(omega, Alphabet::standard(n));
    std::vector<std::size_t> perm(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.gen);
    UfnarovskiGraph h;
    h.ell = g.ell;
    h.vertices.resize(g.vertices.size());
    h.out_edges.resize(g.vertices.size());
    h.in_edges.resize(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) h.vertices[perm[i]] = g.vertices[i];
    std::vector<UfnarovskiGraph::Edge> edges = g.edges;
    std::shuffle(edges.begin(), edges.end(), rng.gen);
    for (auto e : edges) {
      e.from = perm[e.from];
      e.to = perm[e.to];
      h.out_edges[e.from].push_back(h.edges.size());
      h.in_edges[e.to].push_back(h.edges.size());
      h.edges.push_back(e);
    }
    EXPECT_EQ(classify_growth(h), classify_growth(g));
  }
}

TEST(Properties, PolynomialGrowthMatchesCountGrowth) {
  Random rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(2, 3);
    auto omega = rng.omega(n);
    Alphabet a = Alphabet::standard(n);
    auto analysis = analyze_growth(build_ufnarovski(omega, a));
    auto counts = count_normal_words(omega, a, 20);
    if (analysis.witness) {
      EXPECT_TRUE(verify_witness(build_ufnarovski(omega, a), *analysis.witness));
      continue;
    }
    std::size_t m = analysis.growth.degree;
    if (m == 0) {
      EXPECT_EQ(counts[20], 0);
      continue;
    }
    // Counts per length are bounded by C*L^(m-1) and nonzero for all lengths.
    BigInt bound = 1;
    for (std::size_t i = 0; i + 1 < m; ++i) bound *= 20;
    EXPECT_LE(counts[20], bound * 1000);
    EXPECT_GT(counts[20], 0);
    if (m >= 2) EXPECT_GT(counts[20], counts[10]);
  }
}
