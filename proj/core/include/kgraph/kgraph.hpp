#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"
#include "kgraph/vertex_set.hpp"

namespace kgraph {

struct EdgeSpec {
  std::string id;
  Color color = 1;
  std::string range;
  std::string source;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// A factorization rule e·f = f'·e' where color(e) = color(e') = i,
/// color(f) = color(f') = j and i < j. `lhs` is (e, f), `rhs` is (f', e').
/// Paths are written range end first, so s(e) = r(f).
struct SquareSpec {
  std::pair<std::string, std::string> lhs;
  std::pair<std::string, std::string> rhs;

  friend bool operator==(const SquareSpec&, const SquareSpec&) = default;
};

/// Unvalidated finite presentation of a k-graph: a colored 1-skeleton plus
/// commuting squares. Element order is whatever the producer chose;
/// `canonicalize` sorts it.
struct KGraphSpec {
  std::uint32_t rank = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<SquareSpec> squares;

  friend bool operator==(const KGraphSpec&, const KGraphSpec&) = default;
};

/// Sorts vertices by id, edges by id and squares by their left-hand pair.
KGraphSpec canonicalize(KGraphSpec spec);

class KGraph;

/// Checks the k-graph axioms on a finite presentation and builds the
/// incidence indices.
///
/// The square family must be endpoint-consistent and define, for every pair of
/// colors i < j, a bijection between composable (i, j) edge pairs and
/// composable (j, i) edge pairs. For rank >= 3 every composable triple of
/// three distinct colors must reach the same reversed triple along both
/// rewriting routes.
KGraph validate(const KGraphSpec& spec);

/// An immutable, validated k-graph. Safe to share across threads.
class KGraph {
 public:
  std::uint32_t rank() const { return rank_; }
  std::size_t vertex_count() const { return spec_.vertices.size(); }
  std::size_t edge_count() const { return spec_.edges.size(); }
  std::size_t square_count() const { return spec_.squares.size(); }

  const KGraphSpec& spec() const { return spec_; }
  /// Hash of the canonical presentation; stable across element reordering.
  std::uint64_t fingerprint() const { return fingerprint_; }

  const std::string& vertex_name(VertexId v) const { return spec_.vertices[v]; }
  const std::string& edge_name(EdgeId e) const { return spec_.edges[e].id; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  Color color(EdgeId e) const { return color_[e]; }
  VertexId range(EdgeId e) const { return range_[e]; }
  VertexId source(EdgeId e) const { return source_[e]; }

  /// Edges of color `c` with range `v`.
  std::span<const EdgeId> edges_into(VertexId v, Color c) const { return into_[c - 1][v]; }
  /// Edges of color `c` with source `v`.
  std::span<const EdgeId> edges_from(VertexId v, Color c) const { return from_[c - 1][v]; }

  /// Rewrites the composable two-edge path x·y of distinct colors into its
  /// other factorization, using the square table in whichever direction
  /// applies. Flipping twice is the identity.
  std::pair<EdgeId, EdgeId> flip(EdgeId x, EdgeId y) const;

  VertexSet no_vertices() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  /// Renders the set as a sorted list of vertex ids, e.g. "{u,v}".
  std::string format(const VertexSet& s) const;

 private:
  friend KGraph validate(const KGraphSpec& spec);
  KGraph() = default;

  static std::uint64_t key(EdgeId a, EdgeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::uint32_t rank_ = 1;
  KGraphSpec spec_;
  std::uint64_t fingerprint_ = 0;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<Color> color_;
  std::vector<VertexId> range_;
  std::vector<VertexId> source_;
  std::vector<std::vector<std::vector<EdgeId>>> into_;
  std::vector<std::vector<std::vector<EdgeId>>> from_;
  // (e, f) with color(e) < color(f)  ->  (f', e')
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> forward_;
  // (f', e')  ->  (e, f)
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> backward_;
};

}  // namespace kgraph
