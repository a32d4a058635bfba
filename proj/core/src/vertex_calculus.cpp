#include "kgraph/vertex_calculus.hpp"

#include <deque>

namespace kgraph {

VertexSet edge_preimage(const KGraph& g, const VertexSet& v, Color i) {
  VertexSet out = g.no_vertices();
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    bool all_inside = true;
    for (EdgeId e : g.edges_into(u, i)) {
      if (!v.contains(g.source(e))) {
        all_inside = false;
        break;
      }
    }
    if (all_inside) out.insert(u);
  }
  return out;
}

VertexSet degree_preimage(const KGraph& g, const VertexSet& v, const Degree& m) {
  VertexSet out = v;
  for (Color c = g.rank(); c >= 1; --c)
    for (std::uint32_t k = 0; k < m.of(c); ++k) out = edge_preimage(g, out, c);
  return out;
}

VertexSet w_set(const KGraph& g, FaceSet f) {
  VertexSet out = g.no_vertices();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (f.contains(g.color(e))) out.insert(g.range(e));
  return out;
}

VertexSet u_set(const KGraph& g, FaceSet f) {
  const VertexSet w = w_set(g, f);
  // Vertices that reach a non-W^F vertex along colors outside F are exactly
  // the ones excluded; propagate that badness from sources back to ranges.
  VertexSet bad = w.complement();
  std::deque<VertexId> queue;
  bad.for_each([&](VertexId v) { queue.push_back(v); });
  const auto outside = (FaceSet::full(g.rank()) - f).colors();
  while (!queue.empty()) {
    VertexId s = queue.front();
    queue.pop_front();
    for (Color c : outside) {
      for (EdgeId e : g.edges_from(s, c)) {
        VertexId r = g.range(e);
        if (!bad.contains(r)) {
          bad.insert(r);
          queue.push_back(r);
        }
      }
    }
  }
  return bad.complement();
}

TracingSets tracing_sets(const KGraph& g) {
  TracingSets t;
  const std::size_t faces = face_count(g.rank());
  t.w.reserve(faces);
  t.u.reserve(faces);
  for (std::uint32_t mask = 0; mask < faces; ++mask) {
    t.w.push_back(w_set(g, FaceSet(mask)));
    t.u.push_back(u_set(g, FaceSet(mask)));
  }
  return t;
}

bool is_hereditary(const KGraph& g, const VertexSet& v) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (v.contains(g.range(e)) && !v.contains(g.source(e))) return false;
  return true;
}

bool is_f_saturated(const KGraph& g, const VertexSet& v, const TracingSets& tracing) {
  std::vector<VertexSet> pre;
  pre.reserve(g.rank());
  for (Color i = 1; i <= g.rank(); ++i) pre.push_back(edge_preimage(g, v, i));
  for (std::uint32_t mask = 1; mask < face_count(g.rank()); ++mask) {
    const FaceSet f(mask);
    VertexSet lhs = tracing.u_of(f);
    for (Color i : f.colors()) lhs &= pre[i - 1];
    if (!lhs.is_subset_of(v)) return false;
  }
  return true;
}

bool is_f_saturated(const KGraph& g, const VertexSet& v) {
  return is_f_saturated(g, v, tracing_sets(g));
}

bool is_invariant_set(const KGraph& g, const VertexSet& v) {
  return is_hereditary(g, v) && is_f_saturated(g, v);
}

}  // namespace kgraph
