#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "kgraph/families.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/lattice.hpp"

namespace kgraph {

/// Format version written by this library and the only one it reads.
inline constexpr int format_version = 1;

struct ParseOptions {
  /// Accept unknown fields, reporting each through `warn`, instead of
  /// rejecting them.
  bool lenient = false;
  std::function<void(const std::string&)> warn;
};

/// Reads a graph document:
///
///   {
///     "format": "kgraph",
///     "version": 1,
///     "rank": 2,
///     "vertices": ["u", "v"],
///     "edges": [{"id": "a", "color": 1, "range": "v", "source": "v"}, ...],
///     "squares": [[["a", "b"], ["b", "c"]], ...]
///   }
///
/// Element order is preserved; no graph axioms are checked here.
/// Throws SyntaxError (with line/column), SchemaError naming the field, or
/// VersionUnsupported.
KGraphSpec parse_graph(std::string_view text, const ParseOptions& options = {});

/// Canonical text: fixed field order, vertices/edges/squares sorted, one edge
/// or square per line. parse_graph(serialize_graph(s)) == canonicalize(s).
std::string serialize_graph(const KGraphSpec& spec);
std::string serialize_graph(const KGraph& g);

/// 16 hex digits of the graph fingerprint.
std::string graph_checksum(const KGraph& g);

struct FamilyDocument {
  SubsetFamily family;
  FamilyKind kind = FamilyKind::Raw;
  std::optional<std::string> graph_name;
  std::optional<std::string> checksum;
};

/// Reads a family document against g:
///
///   {
///     "format": "kgraph-family",
///     "version": 1,
///     "graph": {"name": "mix", "checksum": "0123456789abcdef"},
///     "kind": "t",
///     "entries": {"{}": [], "{1}": ["u", "v"], "{2}": ["v"], "{1,2}": ["u", "v"]}
///   }
///
/// "graph" and both of its fields are optional; a checksum that does not
/// match g is a SchemaError. Every F ⊆ [n] must have exactly one entry.
FamilyDocument parse_family(std::string_view text, const KGraph& g,
                            const ParseOptions& options = {});

/// Canonical family text: entries in mask order, vertex ids sorted. The kind
/// written is `f.kind()`.
std::string serialize_family(const KGraph& g, const SubsetFamily& f,
                             std::optional<std::string> graph_name = std::nullopt);

/// DOT digraph of the 1-skeleton; an edge points from source to range and is
/// labeled with its color.
std::string export_dot(const KGraph& g);

/// DOT digraph of the Hasse diagram; nodes are labeled with the family
/// components, edges point from lower to upper.
std::string export_dot(const KGraph& g, const FamilyLattice& lattice);

}  // namespace kgraph
