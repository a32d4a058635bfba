#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// A path in color-normal form: edge colors are non-decreasing from the
/// range end to the source end. By the factorization property every path
/// has exactly one such representative. An empty edge list is the degree-0
/// path at `range() == source()`.
class Path {
 public:
  /// The degree-0 path at v.
  static Path at(const KGraph& g, VertexId v);
  static Path of_edge(const KGraph& g, EdgeId e);
  /// Builds the path e_0·e_1·…·e_k from any composable edge sequence
  /// (range end first) and normalizes it. Throws NotComposable.
  static Path of_edges(const KGraph& g, std::span<const EdgeId> edges);

  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const Degree& degree() const { return degree_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool is_vertex() const { return edges_.empty(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(VertexId r, VertexId s, Degree d, std::vector<EdgeId> edges)
      : range_(r), source_(s), degree_(std::move(d)), edges_(std::move(edges)) {}

  friend Path compose(const KGraph&, const Path&, const Path&);
  friend std::pair<Path, Path> factor(const KGraph&, const Path&, const Degree&);
  friend std::vector<Path> paths_into(const KGraph&, VertexId, const Degree&);

  VertexId range_ = 0;
  VertexId source_ = 0;
  Degree degree_;
  std::vector<EdgeId> edges_;
};

/// p·q, normalized. Requires s(p) = r(q); throws NotComposable otherwise.
Path compose(const KGraph& g, const Path& p, const Path& q);

/// The unique (head, tail) with d(head) = m and head·tail = p.
/// Throws DegreeOutOfRange unless m <= d(p).
std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m);

/// All paths of degree m with range v, each in normal form, in
/// deterministic order.
std::vector<Path> paths_into(const KGraph& g, VertexId v, const Degree& m);

/// Vertices reachable from v by following edges with colors in `colors`
/// from range to source, including v itself.
VertexSet reachable(const KGraph& g, VertexId v, FaceSet colors);

/// Sorts an edge sequence into color-normal form by adjacent square flips.
/// Each flip removes one color inversion, so this terminates.
void normalize(const KGraph& g, std::vector<EdgeId>& edges);

}  // namespace kgraph
