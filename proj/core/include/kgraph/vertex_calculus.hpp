#pragma once

#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// (Γ^{1_i})^{-1}(V): vertices all of whose color-i in-edges have source in
/// V. Vertices receiving no color-i edge belong vacuously.
VertexSet edge_preimage(const KGraph& g, const VertexSet& v, Color i);

/// (Γ^m)^{-1}(V), computed as iterated edge preimages. The zero degree maps
/// V to itself.
VertexSet degree_preimage(const KGraph& g, const VertexSet& v, const Degree& m);

/// W^F: vertices receiving at least one edge with color in F. Empty for F = ∅.
VertexSet w_set(const KGraph& g, FaceSet f);

/// U^F, the F-tracing vertices: those all of whose descendants along colors
/// outside F lie in W^F. Empty for F = ∅.
VertexSet u_set(const KGraph& g, FaceSet f);

/// W^F and U^F for every F, indexed by mask.
struct TracingSets {
  std::vector<VertexSet> w;
  std::vector<VertexSet> u;

  const VertexSet& w_of(FaceSet f) const { return w[f.mask()]; }
  const VertexSet& u_of(FaceSet f) const { return u[f.mask()]; }
};

TracingSets tracing_sets(const KGraph& g);

/// Every edge with range in V has source in V.
bool is_hereditary(const KGraph& g, const VertexSet& v);

/// For every F: (⋂_{i∈F} (Γ^{1_i})^{-1}(V)) ∩ U^F ⊆ V.
bool is_f_saturated(const KGraph& g, const VertexSet& v);
bool is_f_saturated(const KGraph& g, const VertexSet& v, const TracingSets& tracing);

/// Hereditary and F-saturated; the vertex-level form of an invariant ideal.
bool is_invariant_set(const KGraph& g, const VertexSet& v);

}  // namespace kgraph
