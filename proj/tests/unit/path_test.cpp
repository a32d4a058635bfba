#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "kgraph/path.hpp"
#include "oracles.hpp"

namespace kgraph {
namespace {

using namespace kgraph::testing;

std::vector<EdgeId> ids(const KGraph& g, std::initializer_list<const char*> names) {
  std::vector<EdgeId> out;
  for (const char* n : names) out.push_back(edge(g, n));
  return out;
}

TEST(Compose, IdentityMorphism) {
  const KGraph g = mix_graph();
  const Path p = Path::of_edge(g, edge(g, "b"));
  EXPECT_EQ(compose(g, Path::at(g, p.range()), p), p);
  EXPECT_EQ(compose(g, p, Path::at(g, p.source())), p);
}

TEST(Compose, TorusNormalForm) {
  const KGraph g = torus_graph();
  const Path p = compose(g, Path::of_edge(g, edge(g, "e")), Path::of_edge(g, edge(g, "f")));
  EXPECT_EQ(p.edges(), ids(g, {"e", "f"}));
  EXPECT_EQ(p.degree(), (Degree{1, 1}));
  const Path q = compose(g, Path::of_edge(g, edge(g, "f")), Path::of_edge(g, edge(g, "e")));
  EXPECT_EQ(q, p);
}

TEST(Compose, MixNormalizesThroughTheSquare) {
  const KGraph g = mix_graph();
  const Path ab = compose(g, Path::of_edge(g, edge(g, "a")), Path::of_edge(g, edge(g, "b")));
  const Path bc = compose(g, Path::of_edge(g, edge(g, "b")), Path::of_edge(g, edge(g, "c")));
  EXPECT_EQ(ab.edges(), ids(g, {"a", "b"}));
  EXPECT_EQ(bc.edges(), ids(g, {"a", "b"}));
  EXPECT_EQ(ab.range(), vertex(g, "v"));
  EXPECT_EQ(ab.source(), vertex(g, "u"));
}

TEST(Compose, RejectsNonComposable) {
  const KGraph g = mix_graph();
  try {
    compose(g, Path::of_edge(g, edge(g, "c")), Path::of_edge(g, edge(g, "a")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotComposable);
  }
  const std::vector<EdgeId> bad = ids(g, {"b", "a"});
  EXPECT_THROW(Path::of_edges(g, bad), Error);
}

TEST(Factor, Extremes) {
  const KGraph g = mix_graph();
  const std::vector<EdgeId> seq = ids(g, {"a", "a", "b", "c"});
  const Path p = Path::of_edges(g, seq);
  auto [h0, t0] = factor(g, p, Degree::zero(2));
  EXPECT_EQ(h0, Path::at(g, p.range()));
  EXPECT_EQ(t0, p);
  auto [h1, t1] = factor(g, p, p.degree());
  EXPECT_EQ(h1, p);
  EXPECT_EQ(t1, Path::at(g, p.source()));
}

TEST(Factor, TorusSplitsAfterFlip) {
  const KGraph g = torus_graph();
  const Path p = Path::of_edges(g, ids(g, {"e", "f"}));
  auto [head, tail] = factor(g, p, Degree{0, 1});
  EXPECT_EQ(head.edges(), ids(g, {"f"}));
  EXPECT_EQ(tail.edges(), ids(g, {"e"}));
}

TEST(Factor, DegreeOutOfRange) {
  const KGraph g = torus_graph();
  const Path p = Path::of_edge(g, edge(g, "e"));
  try {
    factor(g, p, Degree{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOutOfRange);
  }
}

TEST(PathsInto, Examples) {
  const KGraph loop = loop_graph();
  const auto powers = paths_into(loop, 0, Degree{3});
  ASSERT_EQ(powers.size(), 1u);
  EXPECT_EQ(powers[0].edges(), ids(loop, {"e", "e", "e"}));

  const KGraph e = edge_graph();
  EXPECT_TRUE(paths_into(e, vertex(e, "v"), Degree{2}).empty());

  const KGraph mix = mix_graph();
  const auto into_v = paths_into(mix, vertex(mix, "v"), Degree{1, 1});
  ASSERT_EQ(into_v.size(), 1u);
  EXPECT_EQ(into_v[0].edges(), ids(mix, {"a", "b"}));
  EXPECT_EQ(paths_into(mix, 0, Degree::zero(2)).size(), 1u);
}

TEST(Reachable, Examples) {
  const KGraph e = edge_graph();
  EXPECT_EQ(reachable(e, vertex(e, "v"), FaceSet()), set_of(e, {"v"}));
  EXPECT_EQ(reachable(e, vertex(e, "v"), FaceSet{1}), set_of(e, {"v", "w"}));
  const KGraph mix = mix_graph();
  EXPECT_EQ(reachable(mix, vertex(mix, "u"), FaceSet{1}), set_of(mix, {"u"}));
  EXPECT_EQ(reachable(mix, vertex(mix, "v"), FaceSet{2}), set_of(mix, {"u", "v"}));
}

// Random composable walks: compose then factor at every m <= d reproduces the
// path, and factor(compose(p, q), d(p)) = (p, q).
TEST(PathProperty, ComposeFactorRoundTrip) {
  Rng rng(21);
  for (const KGraph& g : random_corpus(21, 100, {.max_vertices = 5, .max_rank = 3})) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<EdgeId> walk;
      VertexId at = static_cast<VertexId>(rng() % g.vertex_count());
      for (int step = 0; step < 5; ++step) {
        std::vector<EdgeId> options;
        for (Color c = 1; c <= g.rank(); ++c)
          for (EdgeId e : g.edges_into(at, c)) options.push_back(e);
        if (options.empty()) break;
        const EdgeId e = options[rng() % options.size()];
        walk.push_back(e);
        at = g.source(e);
      }
      if (walk.empty()) continue;
      const Path p = Path::of_edges(g, walk);
      for (const Degree& m : oracle::degrees_below(p.degree())) {
        auto [head, tail] = factor(g, p, m);
        EXPECT_EQ(head.degree(), m);
        EXPECT_EQ(tail.degree(), p.degree() - m);
        EXPECT_EQ(compose(g, head, tail), p);
        EXPECT_EQ(factor(g, compose(g, head, tail), m), std::make_pair(head, tail));
      }
      Degree expected = Degree::zero(g.rank());
      for (EdgeId e : walk) expected += Degree::unit(g.rank(), g.color(e));
      EXPECT_EQ(p.degree(), expected);
      for (std::size_t k = 1; k < p.edges().size(); ++k) {
        EXPECT_EQ(g.source(p.edges()[k - 1]), g.range(p.edges()[k]));
        EXPECT_LE(g.color(p.edges()[k - 1]), g.color(p.edges()[k]));
      }
    }
  }
}

// |paths_into(v, m + k)| = Σ_{p ∈ paths_into(v, m)} |paths_into(s(p), k)|,
// and the counts agree with brute-force walking.
TEST(PathProperty, CountingConsistency) {
  for (const KGraph& g : random_corpus(22, 80, {.max_vertices = 4, .max_rank = 2})) {
    const Degree bound = Degree(std::vector<std::uint32_t>(g.rank(), 2));
    for (const Degree& m : oracle::degrees_below(bound))
      for (const Degree& k : oracle::degrees_below(bound))
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          std::size_t sum = 0;
          for (const Path& p : paths_into(g, v, m)) sum += paths_into(g, p.source(), k).size();
          const auto whole = paths_into(g, v, m + k);
          EXPECT_EQ(whole.size(), sum);
          EXPECT_EQ(whole.size(), oracle::path_count(g, v, m + k));
          std::set<std::vector<EdgeId>> distinct;
          for (const Path& p : whole) distinct.insert(p.edges());
          EXPECT_EQ(distinct.size(), whole.size());
        }
  }
}

// reachable(v, C) equals the sources of paths with support in C, bounded by
// |Γ⁰| · (max per-color edge count) in total degree.
TEST(PathProperty, ReachabilityEqualsPathSources) {
  for (const KGraph& g : random_corpus(23, 80, {.max_vertices = 5, .max_rank = 2,
                                                .max_edges_per_color = 4})) {
    std::size_t max_per_color = 0;
    for (Color c = 1; c <= g.rank(); ++c) {
      std::size_t count = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) count += g.color(e) == c;
      max_per_color = std::max(max_per_color, count);
    }
    const auto limit = static_cast<std::uint32_t>(
        std::min<std::size_t>(g.vertex_count() * std::max<std::size_t>(max_per_color, 1), 6));
    for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
      const FaceSet colors(mask);
      Degree bound = Degree::zero(g.rank());
      for (Color c : colors.colors()) bound[c - 1] = limit;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexSet sources = VertexSet(g.vertex_count(), {v});
        for (const Degree& m : oracle::degrees_below(bound))
          if (m.total() <= limit) sources |= oracle::path_sources(g, v, m);
        EXPECT_EQ(reachable(g, v, colors), sources);
      }
    }
  }
}

}  // namespace
}  // namespace kgraph
