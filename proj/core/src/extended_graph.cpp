#include "kgraph/extended_graph.hpp"

namespace kgraph {

std::string extended_name(const std::string& base, FaceSet label) {
  return base + "@" + label.to_string();
}

ExtendedGraph build_extended(const KGraph& g, const SubsetFamily& w) {
  if (!is_invariant_family(g, w))
    throw Error(ErrorCode::NotAnInvariantFamily, "Γ_W needs an invariant family");

  const auto faces = static_cast<std::uint32_t>(face_count(g.rank()));
  KGraphSpec spec;
  spec.rank = g.rank();
  std::vector<ExtendedVertex> vertices;
  std::vector<ExtendedEdge> edges;

  // Dense lookup (base, label) -> present?
  auto vertex_present = [&](VertexId v, FaceSet f) { return !w[f].contains(v); };
  auto edge_present = [&](EdgeId e, FaceSet f) { return !w[f].contains(g.source(e)); };

  for (std::uint32_t mask = 0; mask < faces; ++mask) {
    const FaceSet f(mask);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!vertex_present(v, f)) continue;
      spec.vertices.push_back(extended_name(g.vertex_name(v), f));
      vertices.push_back({v, f});
    }
  }

  for (std::uint32_t mask = 0; mask < faces; ++mask) {
    const FaceSet f(mask);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!edge_present(e, f)) continue;
      const FaceSet range_label = f.without(g.color(e));
      if (!vertex_present(g.range(e), range_label))
        throw Error(ErrorCode::InternalValidationFailure,
                    "edge " + extended_name(g.edge_name(e), f) + " has no range vertex " +
                        extended_name(g.vertex_name(g.range(e)), range_label));
      spec.edges.push_back({extended_name(g.edge_name(e), f), g.color(e),
                            extended_name(g.vertex_name(g.range(e)), range_label),
                            extended_name(g.vertex_name(g.source(e)), f)});
      edges.push_back({e, f});
    }
  }

  for (const SquareSpec& sq : g.spec().squares) {
    const EdgeId e = *g.find_edge(sq.lhs.first);
    const EdgeId f = *g.find_edge(sq.lhs.second);
    const EdgeId f2 = *g.find_edge(sq.rhs.first);
    const EdgeId e2 = *g.find_edge(sq.rhs.second);
    const Color i = g.color(e);
    const Color j = g.color(f);
    for (std::uint32_t mask = 0; mask < faces; ++mask) {
      const FaceSet label(mask);
      if (!edge_present(f, label)) continue;
      const FaceSet e_label = label.without(j);
      const FaceSet f2_label = label.without(i);
      if (!edge_present(e, e_label) || !edge_present(f2, f2_label) || !edge_present(e2, label))
        throw Error(ErrorCode::InternalValidationFailure,
                    "square " + sq.lhs.first + "·" + sq.lhs.second + " loses an edge in component " +
                        label.to_string());
      spec.squares.push_back({{extended_name(sq.lhs.first, e_label),
                               extended_name(sq.lhs.second, label)},
                              {extended_name(sq.rhs.first, f2_label),
                               extended_name(sq.rhs.second, label)}});
    }
  }

  try {
    return ExtendedGraph{validate(spec), std::move(vertices), std::move(edges)};
  } catch (const Error& err) {
    throw Error(ErrorCode::InternalValidationFailure,
                std::string("extended graph failed validation: ") + err.what(), err.subjects());
  }
}

bool receiving_pattern_check(const KGraph& g, const SubsetFamily& w,
                             const ExtendedGraph& extended) {
  require_family_of(g, w);
  const KGraph& x = extended.graph;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    const FaceSet label = extended.vertices[v].label;
    for (Color i = 1; i <= x.rank(); ++i) {
      const bool receives = !x.edges_into(v, i).empty();
      if (label.contains(i) == receives) return false;
    }
  }
  return true;
}

ExtendedGraph quotient_graph(const KGraph& g, const SubsetFamily& v) {
  return build_extended(g, t_to_invariant(g, v));
}

}  // namespace kgraph
