#include <gtest/gtest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "kgraph/vertex_calculus.hpp"
#include "oracles.hpp"

namespace kgraph {
namespace {

using namespace kgraph::testing;

std::vector<VertexSet> all_subsets(const KGraph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) {
    VertexSet s = g.no_vertices();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if ((bits >> v) & 1) s.insert(v);
    out.push_back(s);
  }
  return out;
}

TEST(EdgePreimage, Examples) {
  const KGraph mix = mix_graph();
  EXPECT_EQ(edge_preimage(mix, mix.all_vertices(), 1), mix.all_vertices());
  EXPECT_EQ(edge_preimage(mix, set_of(mix, {"u"}), 2), set_of(mix, {"u", "v"}));
  const KGraph e = edge_graph();
  EXPECT_EQ(edge_preimage(e, e.no_vertices(), 1), set_of(e, {"w"}));
}

TEST(DegreePreimage, Examples) {
  const KGraph mix = mix_graph();
  const VertexSet v = set_of(mix, {"v"});
  EXPECT_EQ(degree_preimage(mix, v, Degree::zero(2)), v);
  EXPECT_EQ(degree_preimage(mix, v, Degree{1, 1}), set_of(mix, {"u"}));
  EXPECT_EQ(oracle::preimage(mix, v, Degree{1, 1}), set_of(mix, {"u"}));
  const KGraph loop = loop_graph();
  EXPECT_EQ(degree_preimage(loop, loop.no_vertices(), Degree{1}), loop.no_vertices());
}

TEST(WSet, Examples) {
  const KGraph mix = mix_graph();
  EXPECT_EQ(w_set(mix, FaceSet()), mix.no_vertices());
  EXPECT_EQ(w_set(mix, FaceSet{2}), set_of(mix, {"v"}));
  EXPECT_EQ(w_set(mix, FaceSet{1}), set_of(mix, {"u", "v"}));
  const KGraph e = edge_graph();
  EXPECT_EQ(w_set(e, FaceSet{1}), set_of(e, {"v"}));
}

TEST(USet, Examples) {
  const KGraph mix = mix_graph();
  EXPECT_EQ(u_set(mix, FaceSet()), mix.no_vertices());
  EXPECT_EQ(u_set(mix, FaceSet{2}), set_of(mix, {"v"}));
  EXPECT_EQ(u_set(mix, FaceSet{1}), set_of(mix, {"u", "v"}));
  EXPECT_EQ(u_set(mix, FaceSet{1, 2}), w_set(mix, FaceSet{1, 2}));
  const TracingSets t = tracing_sets(mix);
  EXPECT_EQ(t.u_of(FaceSet{2}), set_of(mix, {"v"}));
  EXPECT_EQ(t.w_of(FaceSet{1}), set_of(mix, {"u", "v"}));
}

TEST(Hereditary, Examples) {
  const KGraph e = edge_graph();
  EXPECT_TRUE(is_hereditary(e, e.no_vertices()));
  EXPECT_TRUE(is_hereditary(e, e.all_vertices()));
  EXPECT_FALSE(is_hereditary(e, set_of(e, {"v"})));
  const KGraph mix = mix_graph();
  EXPECT_TRUE(is_hereditary(mix, set_of(mix, {"u"})));
}

TEST(Saturated, Examples) {
  const KGraph mix = mix_graph();
  EXPECT_TRUE(is_f_saturated(mix, mix.all_vertices()));
  EXPECT_FALSE(is_f_saturated(mix, set_of(mix, {"u"})));
  const KGraph e = edge_graph();
  EXPECT_FALSE(is_f_saturated(e, set_of(e, {"w"})));
}

TEST(InvariantSet, Examples) {
  const KGraph mix = mix_graph();
  EXPECT_TRUE(is_invariant_set(mix, mix.no_vertices()));
  EXPECT_FALSE(is_invariant_set(mix, set_of(mix, {"u"})));
  const KGraph e = edge_graph();
  EXPECT_TRUE(is_invariant_set(e, e.no_vertices()));
  EXPECT_FALSE(is_invariant_set(e, set_of(e, {"v"})));
  EXPECT_FALSE(is_invariant_set(e, set_of(e, {"w"})));
  EXPECT_TRUE(is_invariant_set(e, set_of(e, {"v", "w"})));
}

class VertexCalculusProperty : public ::testing::Test {
 protected:
  static const std::vector<KGraph>& corpus() {
    static const std::vector<KGraph> graphs =
        random_corpus(31, 80, {.max_vertices = 4, .max_rank = 2, .max_edges_per_color = 5});
    return graphs;
  }
};

// Composition, order independence, intersection, monotonicity, and agreement
// with the path-quantified definition.
TEST_F(VertexCalculusProperty, PreimageLaws) {
  for (const KGraph& g : corpus()) {
    const Degree bound(std::vector<std::uint32_t>(g.rank(), 2));
    const auto subsets = all_subsets(g);
    for (const Degree& m : oracle::degrees_below(bound)) {
      for (const VertexSet& v : subsets) {
        const VertexSet pre = degree_preimage(g, v, m);
        EXPECT_EQ(pre, oracle::preimage(g, v, m));
        for (const Degree& k : oracle::degrees_below(bound))
          EXPECT_EQ(degree_preimage(g, v, m + k), degree_preimage(g, degree_preimage(g, v, k), m));
        VertexSet reversed = v;
        for (Color c = 1; c <= g.rank(); ++c)
          for (std::uint32_t t = 0; t < m.of(c); ++t) reversed = edge_preimage(g, reversed, c);
        EXPECT_EQ(pre, reversed);
      }
      for (const VertexSet& a : subsets)
        for (const VertexSet& b : subsets) {
          EXPECT_EQ(degree_preimage(g, a & b, m), degree_preimage(g, a, m) & degree_preimage(g, b, m));
          if (a.is_subset_of(b))
            EXPECT_TRUE(degree_preimage(g, a, m).is_subset_of(degree_preimage(g, b, m)));
        }
    }
  }
}

// Edge-level hereditary check = path-level check = V ⊆ (Γ^m)^{-1}(V) for all m,
// and = V ⊆ (Γ^{1_i})^{-1}(V) for all i.
TEST_F(VertexCalculusProperty, HereditaryEquivalences) {
  for (const KGraph& g : corpus()) {
    const Degree bound(std::vector<std::uint32_t>(g.rank(), g.rank() == 1 ? 4 : 2));
    for (const VertexSet& v : all_subsets(g)) {
      const bool edge_level = is_hereditary(g, v);
      EXPECT_EQ(edge_level, oracle::hereditary(g, v, bound));
      bool contained = true;
      for (const Degree& m : oracle::degrees_below(bound))
        contained = contained && v.is_subset_of(degree_preimage(g, v, m));
      EXPECT_EQ(edge_level, contained);
      bool positive = true;
      for (Color i = 1; i <= g.rank(); ++i)
        positive = positive && v.is_subset_of(edge_preimage(g, v, i));
      EXPECT_EQ(edge_level, positive);
    }
  }
}

TEST_F(VertexCalculusProperty, TracingSandwiches) {
  for (const KGraph& g : corpus()) {
    const std::uint32_t n = g.rank();
    EXPECT_TRUE(u_set(g, FaceSet()).empty());
    EXPECT_TRUE(w_set(g, FaceSet()).empty());
    EXPECT_EQ(u_set(g, FaceSet::full(n)), w_set(g, FaceSet::full(n)));
    for (std::uint32_t f = 0; f < face_count(n); ++f) {
      EXPECT_TRUE(u_set(g, FaceSet(f)).is_subset_of(w_set(g, FaceSet(f))));
      EXPECT_EQ(u_set(g, FaceSet(f)), oracle::u_set(g, FaceSet(f)));
      EXPECT_EQ(w_set(g, FaceSet(f)), oracle::w_set(g, FaceSet(f)));
      for (std::uint32_t h = 0; h < face_count(n); ++h)
        if (FaceSet(f).is_subset_of(FaceSet(h)))
          EXPECT_TRUE(w_set(g, FaceSet(f)).is_subset_of(w_set(g, FaceSet(h))));
    }
  }
}

TEST_F(VertexCalculusProperty, SaturationMatchesDefinition) {
  for (const KGraph& g : corpus()) {
    const TracingSets t = tracing_sets(g);
    for (const VertexSet& v : all_subsets(g)) {
      const bool saturated = is_f_saturated(g, v);
      EXPECT_EQ(saturated, oracle::saturated(g, v));
      EXPECT_EQ(saturated, is_f_saturated(g, v, t));
      if (g.rank() == 1) {
        const bool katsura = (edge_preimage(g, v, 1) & u_set(g, FaceSet{1})).is_subset_of(v);
        EXPECT_EQ(saturated, katsura);
      }
    }
  }
}

}  // namespace
}  // namespace kgraph
