#include "kgraph/path.hpp"

#include <algorithm>
#include <deque>

namespace kgraph {

namespace {

// Moves edges so that the k-th occurrence of each color lands where the k-th
// occurrence of that color sits in `target`. Same-colored edges never swap.
void rearrange(const KGraph& g, std::vector<EdgeId>& edges, const std::vector<Color>& target) {
  const std::size_t n = edges.size();
  std::vector<std::vector<std::size_t>> slots(g.rank() + 1);
  for (std::size_t k = 0; k < n; ++k) slots[target[k]].push_back(k);
  std::vector<std::size_t> seen(g.rank() + 1, 0);
  std::vector<std::size_t> dest(n);
  for (std::size_t k = 0; k < n; ++k) {
    Color c = g.color(edges[k]);
    dest[k] = slots[c][seen[c]++];
  }
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b > 0 && dest[b - 1] > dest[b]; --b) {
      auto [x, y] = g.flip(edges[b - 1], edges[b]);
      edges[b - 1] = x;
      edges[b] = y;
      std::swap(dest[b - 1], dest[b]);
    }
  }
}

Degree degree_of(const KGraph& g, std::span<const EdgeId> edges) {
  Degree d = Degree::zero(g.rank());
  for (EdgeId e : edges) d[g.color(e) - 1] += 1;
  return d;
}

}  // namespace

void normalize(const KGraph& g, std::vector<EdgeId>& edges) {
  for (std::size_t a = 1; a < edges.size(); ++a) {
    for (std::size_t b = a; b > 0 && g.color(edges[b - 1]) > g.color(edges[b]); --b) {
      auto [x, y] = g.flip(edges[b - 1], edges[b]);
      edges[b - 1] = x;
      edges[b] = y;
    }
  }
}

Path Path::at(const KGraph& g, VertexId v) {
  return Path(v, v, Degree::zero(g.rank()), {});
}

Path Path::of_edge(const KGraph& g, EdgeId e) {
  return Path(g.range(e), g.source(e), Degree::unit(g.rank(), g.color(e)), {e});
}

Path Path::of_edges(const KGraph& g, std::span<const EdgeId> edges) {
  if (edges.empty())
    throw Error(ErrorCode::NotComposable, "an edge sequence needs at least one edge");
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (g.source(edges[k]) != g.range(edges[k + 1]))
      throw Error(ErrorCode::NotComposable,
                  "s(" + g.edge_name(edges[k]) + ") != r(" + g.edge_name(edges[k + 1]) + ")",
                  {g.edge_name(edges[k]), g.edge_name(edges[k + 1])});
  }
  std::vector<EdgeId> seq(edges.begin(), edges.end());
  normalize(g, seq);
  Degree d = degree_of(g, seq);
  return Path(g.range(edges.front()), g.source(edges.back()), std::move(d), std::move(seq));
}

Path compose(const KGraph& g, const Path& p, const Path& q) {
  if (p.source() != q.range())
    throw Error(ErrorCode::NotComposable,
                "source " + g.vertex_name(p.source()) + " differs from range " +
                    g.vertex_name(q.range()));
  std::vector<EdgeId> seq = p.edges();
  seq.insert(seq.end(), q.edges().begin(), q.edges().end());
  normalize(g, seq);
  return Path(p.range(), q.source(), p.degree() + q.degree(), std::move(seq));
}

std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m) {
  if (m.rank() != p.degree().rank() || !m.is_below(p.degree()))
    throw Error(ErrorCode::DegreeOutOfRange,
                "cannot factor degree " + m.to_string() + " out of " + p.degree().to_string());
  const Degree rest = p.degree() - m;
  std::vector<Color> target;
  target.reserve(p.edges().size());
  for (Color c = 1; c <= g.rank(); ++c) target.insert(target.end(), m.of(c), c);
  for (Color c = 1; c <= g.rank(); ++c) target.insert(target.end(), rest.of(c), c);

  std::vector<EdgeId> seq = p.edges();
  rearrange(g, seq, target);
  const auto split = static_cast<std::ptrdiff_t>(m.total());
  std::vector<EdgeId> head(seq.begin(), seq.begin() + split);
  std::vector<EdgeId> tail(seq.begin() + split, seq.end());
  const VertexId mid = head.empty() ? p.range() : g.source(head.back());
  return {Path(p.range(), mid, m, std::move(head)), Path(mid, p.source(), rest, std::move(tail))};
}

std::vector<Path> paths_into(const KGraph& g, VertexId v, const Degree& m) {
  std::vector<Color> colors;
  for (Color c = 1; c <= g.rank(); ++c) colors.insert(colors.end(), m.of(c), c);

  std::vector<Path> out;
  std::vector<EdgeId> stack;
  auto extend = [&](auto&& self, VertexId at) -> void {
    if (stack.size() == colors.size()) {
      out.push_back(Path(v, at, m, stack));
      return;
    }
    for (EdgeId e : g.edges_into(at, colors[stack.size()])) {
      stack.push_back(e);
      self(self, g.source(e));
      stack.pop_back();
    }
  };
  extend(extend, v);
  return out;
}

VertexSet reachable(const KGraph& g, VertexId v, FaceSet colors) {
  VertexSet seen = g.no_vertices();
  seen.insert(v);
  std::deque<VertexId> queue{v};
  const auto allowed = colors.colors();
  while (!queue.empty()) {
    VertexId at = queue.front();
    queue.pop_front();
    for (Color c : allowed) {
      if (c > g.rank()) continue;
      for (EdgeId e : g.edges_into(at, c)) {
        VertexId s = g.source(e);
        if (!seen.contains(s)) {
          seen.insert(s);
          queue.push_back(s);
        }
      }
    }
  }
  return seen;
}

}  // namespace kgraph
