#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <tuple>

namespace kgraph {

namespace {

class Fnv1a {
 public:
  void bytes(std::string_view s) {
    for (unsigned char c : s) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void str(std::string_view s) {
    number(s.size());
    bytes(s);
  }
  void number(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (x >> (8 * i)) & 0xff;
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::uint64_t fingerprint_of(const KGraphSpec& canonical) {
  Fnv1a h;
  h.number(canonical.rank);
  h.number(canonical.vertices.size());
  for (const auto& v : canonical.vertices) h.str(v);
  h.number(canonical.edges.size());
  for (const auto& e : canonical.edges) {
    h.str(e.id);
    h.number(e.color);
    h.str(e.range);
    h.str(e.source);
  }
  h.number(canonical.squares.size());
  for (const auto& s : canonical.squares) {
    h.str(s.lhs.first);
    h.str(s.lhs.second);
    h.str(s.rhs.first);
    h.str(s.rhs.second);
  }
  return h.value();
}

std::string pair_text(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace

KGraphSpec canonicalize(KGraphSpec spec) {
  std::sort(spec.vertices.begin(), spec.vertices.end());
  std::sort(spec.edges.begin(), spec.edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return std::tie(a.id, a.color, a.range, a.source) < std::tie(b.id, b.color, b.range, b.source);
  });
  std::sort(spec.squares.begin(), spec.squares.end(),
            [](const SquareSpec& a, const SquareSpec& b) {
              return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
            });
  return spec;
}

std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::pair<EdgeId, EdgeId> KGraph::flip(EdgeId x, EdgeId y) const {
  const auto& table = color_[x] < color_[y] ? forward_ : backward_;
  auto it = table.find(key(x, y));
  if (color_[x] == color_[y] || it == table.end())
    throw Error(ErrorCode::NotComposable,
                "no square rewrites " + pair_text(edge_name(x), edge_name(y)),
                {edge_name(x), edge_name(y)});
  return it->second;
}

std::string KGraph::format(const VertexSet& s) const {
  std::vector<std::string> names;
  s.for_each([&](VertexId v) { names.push_back(vertex_name(v)); });
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ',';
    out += names[i];
  }
  return out + "}";
}

KGraph validate(const KGraphSpec& spec) {
  if (spec.rank < 1 || spec.rank > max_rank)
    throw Error(ErrorCode::InvalidRank, "rank must lie in 1.." + std::to_string(max_rank) +
                                            ", got " + std::to_string(spec.rank));

  KGraph g;
  g.rank_ = spec.rank;
  g.spec_ = spec;

  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    if (!g.vertex_index_.emplace(spec.vertices[i], static_cast<VertexId>(i)).second)
      throw Error(ErrorCode::DuplicateId, "vertex id '" + spec.vertices[i] + "' repeated",
                  {spec.vertices[i]});
  }

  const std::size_t nv = spec.vertices.size();
  g.into_.assign(spec.rank, std::vector<std::vector<EdgeId>>(nv));
  g.from_.assign(spec.rank, std::vector<std::vector<EdgeId>>(nv));

  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const EdgeSpec& e = spec.edges[i];
    const auto id = static_cast<EdgeId>(i);
    if (!g.edge_index_.emplace(e.id, id).second)
      throw Error(ErrorCode::DuplicateId, "edge id '" + e.id + "' repeated", {e.id});
    if (e.color < 1 || e.color > spec.rank)
      throw Error(ErrorCode::InvalidColor,
                  "edge '" + e.id + "' has color " + std::to_string(e.color) +
                      " outside 1.." + std::to_string(spec.rank),
                  {e.id});
    auto r = g.find_vertex(e.range);
    auto s = g.find_vertex(e.source);
    if (!r || !s)
      throw Error(ErrorCode::DanglingEndpoint,
                  "edge '" + e.id + "' refers to unknown vertex '" + (r ? e.source : e.range) + "'",
                  {e.id});
    g.color_.push_back(e.color);
    g.range_.push_back(*r);
    g.source_.push_back(*s);
    g.into_[e.color - 1][*r].push_back(id);
    g.from_[e.color - 1][*s].push_back(id);
  }

  // Squares: resolve, check colors and endpoints, reject repeats on either side.
  for (const SquareSpec& sq : spec.squares) {
    const std::string text = pair_text(sq.lhs.first, sq.lhs.second) + " = " +
                             pair_text(sq.rhs.first, sq.rhs.second);
    EdgeId ids[4];
    const std::string* names[4] = {&sq.lhs.first, &sq.lhs.second, &sq.rhs.first,
                                   &sq.rhs.second};
    for (int k = 0; k < 4; ++k) {
      auto id = g.find_edge(*names[k]);
      if (!id)
        throw Error(ErrorCode::DanglingEndpoint,
                    "square " + text + " refers to unknown edge '" + *names[k] + "'",
                    {*names[k]});
      ids[k] = *id;
    }
    const auto [e, f, f2, e2] = ids;
    const Color i = g.color_[e];
    const Color j = g.color_[f];
    if (!(i < j) || g.color_[e2] != i || g.color_[f2] != j)
      throw Error(ErrorCode::SquareEndpointMismatch,
                  "square " + text + " must relate color i then j to color j then i with i < j",
                  {sq.lhs.first, sq.lhs.second, sq.rhs.first, sq.rhs.second});
    if (g.source_[e] != g.range_[f] || g.source_[f2] != g.range_[e2] ||
        g.range_[e] != g.range_[f2] || g.source_[f] != g.source_[e2])
      throw Error(ErrorCode::SquareEndpointMismatch, "square " + text + " has mismatched endpoints",
                  {sq.lhs.first, sq.lhs.second, sq.rhs.first, sq.rhs.second});
    if (!g.forward_.emplace(KGraph::key(e, f), std::pair{f2, e2}).second)
      throw Error(ErrorCode::SquareNotBijective,
                  "pair " + pair_text(sq.lhs.first, sq.lhs.second) + " factors more than once",
                  {sq.lhs.first, sq.lhs.second});
    if (!g.backward_.emplace(KGraph::key(f2, e2), std::pair{e, f}).second)
      throw Error(ErrorCode::SquareNotBijective,
                  "pair " + pair_text(sq.rhs.first, sq.rhs.second) + " factors more than once",
                  {sq.rhs.first, sq.rhs.second});
  }

  // Completeness: every composable bicolored pair appears on its side.
  for (Color i = 1; i <= spec.rank; ++i) {
    for (Color j = 1; j <= spec.rank; ++j) {
      if (i == j) continue;
      const auto& table = i < j ? g.forward_ : g.backward_;
      for (EdgeId x = 0; x < g.edge_count(); ++x) {
        if (g.color_[x] != i) continue;
        for (EdgeId y : g.edges_into(g.source_[x], j)) {
          if (!table.contains(KGraph::key(x, y)))
            throw Error(ErrorCode::SquareNotBijective,
                        "composable pair " + pair_text(g.edge_name(x), g.edge_name(y)) +
                            " has no square",
                        {g.edge_name(x), g.edge_name(y)});
        }
      }
    }
  }

  // Associativity: both routes from e·f·g (colors i<j<k) to the reversed
  // color order must agree.
  if (spec.rank >= 3) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (Color j = g.color_[e] + 1; j <= spec.rank; ++j) {
        for (EdgeId f : g.edges_into(g.source_[e], j)) {
          for (Color k = j + 1; k <= spec.rank; ++k) {
            for (EdgeId h : g.edges_into(g.source_[f], k)) {
              // Route A: (f,h), then (e,h'), then (e',f').
              auto [h1, f1] = g.flip(f, h);
              auto [h2, e1] = g.flip(e, h1);
              auto [f2, e2] = g.flip(e1, f1);
              // Route B: (e,f), then (e',h), then (f',h').
              auto [f3, e3] = g.flip(e, f);
              auto [h3, e4] = g.flip(e3, h);
              auto [h4, f4] = g.flip(f3, h3);
              if (h2 != h4 || f2 != f4 || e2 != e4)
                throw Error(ErrorCode::AssociativityViolation,
                            "triple (" + g.edge_name(e) + ", " + g.edge_name(f) + ", " +
                                g.edge_name(h) + ") rewrites to (" + g.edge_name(h2) + ", " +
                                g.edge_name(f2) + ", " + g.edge_name(e2) + ") and (" +
                                g.edge_name(h4) + ", " + g.edge_name(f4) + ", " +
                                g.edge_name(e4) + ")",
                            {g.edge_name(e), g.edge_name(f), g.edge_name(h)});
            }
          }
        }
      }
    }
  }

  g.fingerprint_ = fingerprint_of(canonicalize(spec));
  return g;
}

}  // namespace kgraph
