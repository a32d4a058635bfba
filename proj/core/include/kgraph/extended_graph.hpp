#pragma once

#include <string>
#include <vector>

#include "kgraph/families.hpp"

namespace kgraph {

/// v^F: a copy of base vertex v in component F, present only when v ∉ W^F.
struct ExtendedVertex {
  VertexId base;
  FaceSet label;
};

/// γ^F: a copy of base edge γ (color i) in component F, present only when
/// s(γ) ∉ W^F. Its source is s(γ)^F and its range r(γ)^{F∖{i}}.
struct ExtendedEdge {
  EdgeId base;
  FaceSet label;
};

/// Γ_W together with the provenance of every vertex and edge. Indices line
/// up with `graph`'s dense vertex and edge indices.
struct ExtendedGraph {
  KGraph graph;
  std::vector<ExtendedVertex> vertices;
  std::vector<ExtendedEdge> edges;
};

/// "<base-id>@<F>", e.g. "v@{}" or "e@{1,3}".
std::string extended_name(const std::string& base, FaceSet label);

/// Builds Γ_W for an invariant family W.
///
/// Squares are inherited componentwise: a base square e·f = f'·e' with
/// colors i < j yields e^{F∖{j}}·f^F = f'^{F∖{i}}·e'^F for every F where
/// f^F exists. Throws NotAnInvariantFamily; InternalValidationFailure means a
/// bug, never bad input.
ExtendedGraph build_extended(const KGraph& g, const SubsetFamily& w);

/// In Γ_W every v^G receives at least one color-i edge for each i ∉ G and
/// none for i ∈ G.
bool receiving_pattern_check(const KGraph& g, const SubsetFamily& w,
                             const ExtendedGraph& extended);

/// Γ_{W_V} for a T-family V: the graph whose Toeplitz algebra is the quotient
/// by the ideal of V. Throws NotATFamily.
ExtendedGraph quotient_graph(const KGraph& g, const SubsetFamily& v);

}  // namespace kgraph
