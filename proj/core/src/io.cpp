#include "kgraph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kgraph {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

// Parses with duplicate-key detection; nlohmann silently keeps the last value.
json parse_json(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: keys.emplace_back(); break;
      case json::parse_event_t::object_end:
        if (!keys.empty()) keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!keys.empty() && !keys.back().insert(parsed.get<std::string>()).second && !duplicate)
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw Error::at(ErrorCode::SyntaxError, what, line, column);
  }
  if (duplicate)
    throw Error(ErrorCode::SchemaError, "field '" + *duplicate + "' appears twice", {*duplicate});
  return doc;
}

class Schema {
 public:
  explicit Schema(const ParseOptions& options) : options_(options) {}

  [[noreturn]] void fail(const std::string& field, const std::string& path,
                         const std::string& why) const {
    throw Error(ErrorCode::SchemaError, path + ": " + why, {field});
  }

  const json& require(const json& obj, const std::string& field, const std::string& path) const {
    auto it = obj.find(field);
    if (it == obj.end()) fail(field, path, "missing field '" + field + "'");
    return *it;
  }

  void only(const json& obj, std::initializer_list<std::string_view> allowed,
            const std::string& path) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) != allowed.end()) continue;
      if (!options_.lenient) fail(it.key(), path, "unknown field '" + it.key() + "'");
      if (options_.warn) options_.warn(path + ": ignoring unknown field '" + it.key() + "'");
    }
  }

  std::string string(const json& v, const std::string& field, const std::string& path) const {
    if (!v.is_string()) fail(field, path, "expected a string");
    return v.get<std::string>();
  }

  std::uint64_t unsigned_int(const json& v, const std::string& field,
                             const std::string& path) const {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
      fail(field, path, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  const json& array(const json& v, const std::string& field, const std::string& path) const {
    if (!v.is_array()) fail(field, path, "expected an array");
    return v;
  }

  const json& object(const json& v, const std::string& field, const std::string& path) const {
    if (!v.is_object()) fail(field, path, "expected an object");
    return v;
  }

  void header(const json& doc, const std::string& expected_format) const {
    object(doc, "document", "document");
    const json& version = require(doc, "version", "document");
    if (!version.is_number_integer() || version.get<std::int64_t>() != format_version)
      throw Error(ErrorCode::VersionUnsupported,
                  "version " + version.dump() + " is not supported (expected " +
                      std::to_string(format_version) + ")",
                  {"version"});
    if (string(require(doc, "format", "document"), "format", "format") != expected_format)
      fail("format", "format", "expected \"" + expected_format + "\"");
  }

 private:
  const ParseOptions& options_;
};

std::pair<std::string, std::string> edge_pair(const Schema& schema, const json& v,
                                              const std::string& path) {
  if (!v.is_array() || v.size() != 2) schema.fail("squares", path, "expected a pair of edge ids");
  return {schema.string(v[0], "squares", path), schema.string(v[1], "squares", path)};
}

FaceSet parse_face(const Schema& schema, const std::string& key, std::uint32_t rank) {
  const std::string path = "entries." + key;
  if (key.size() < 2 || key.front() != '{' || key.back() != '}')
    schema.fail("entries", path, "expected a color set such as \"{1,2}\"");
  FaceSet f;
  Color last = 0;
  const std::string body = key.substr(1, key.size() - 2);
  if (body.empty()) return f;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string token = body.substr(pos, comma - pos);
    if (token.empty() || token.size() > 2 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        token[0] == '0')
      schema.fail("entries", path, "malformed color '" + token + "'");
    const Color c = static_cast<Color>(std::stoul(token));
    if (c > rank) schema.fail("entries", path, "color " + token + " exceeds the rank");
    if (c <= last) schema.fail("entries", path, "colors must be strictly increasing");
    f = f.with(c);
    last = c;
    pos = comma + 1;
  }
  return f;
}

const char* dot_color(Color c) {
  static constexpr const char* palette[] = {"blue", "red", "darkgreen", "orange",
                                            "purple", "brown", "cyan", "magenta"};
  return palette[(c - 1) % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace

KGraphSpec parse_graph(std::string_view text, const ParseOptions& options) {
  const json doc = parse_json(text);
  Schema schema(options);
  schema.header(doc, "kgraph");
  schema.only(doc, {"format", "version", "rank", "vertices", "edges", "squares"}, "document");

  KGraphSpec spec;
  const std::uint64_t rank = schema.unsigned_int(schema.require(doc, "rank", "document"), "rank",
                                                 "rank");
  if (rank < 1 || rank > max_rank)
    schema.fail("rank", "rank", "rank must lie in 1.." + std::to_string(max_rank));
  spec.rank = static_cast<std::uint32_t>(rank);

  const json& vertices =
      schema.array(schema.require(doc, "vertices", "document"), "vertices", "vertices");
  for (std::size_t k = 0; k < vertices.size(); ++k)
    spec.vertices.push_back(
        schema.string(vertices[k], "vertices", "vertices[" + std::to_string(k) + "]"));

  const json& edges = schema.array(schema.require(doc, "edges", "document"), "edges", "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    const json& e = schema.object(edges[k], "edges", path);
    schema.only(e, {"id", "color", "range", "source"}, path);
    EdgeSpec edge;
    edge.id = schema.string(schema.require(e, "id", path), "id", path + ".id");
    const std::uint64_t color =
        schema.unsigned_int(schema.require(e, "color", path), "color", path + ".color");
    if (color < 1 || color > spec.rank)
      schema.fail("color", path + ".color",
                  "color " + std::to_string(color) + " outside 1.." + std::to_string(spec.rank));
    edge.color = static_cast<Color>(color);
    edge.range = schema.string(schema.require(e, "range", path), "range", path + ".range");
    edge.source = schema.string(schema.require(e, "source", path), "source", path + ".source");
    spec.edges.push_back(std::move(edge));
  }

  const json& squares =
      schema.array(schema.require(doc, "squares", "document"), "squares", "squares");
  for (std::size_t k = 0; k < squares.size(); ++k) {
    const std::string path = "squares[" + std::to_string(k) + "]";
    const json& s = squares[k];
    if (!s.is_array() || s.size() != 2) schema.fail("squares", path, "expected [[e, f], [f', e']]");
    spec.squares.push_back({edge_pair(schema, s[0], path + "[0]"),
                            edge_pair(schema, s[1], path + "[1]")});
  }
  return spec;
}

std::string serialize_graph(const KGraphSpec& input) {
  const KGraphSpec spec = canonicalize(input);
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"kgraph\",\n";
  out << "  \"version\": " << format_version << ",\n";
  out << "  \"rank\": " << spec.rank << ",\n";
  out << "  \"vertices\": [";
  for (std::size_t k = 0; k < spec.vertices.size(); ++k)
    out << (k ? ", " : "") << quoted(spec.vertices[k]);
  out << "],\n";
  out << "  \"edges\": [";
  for (std::size_t k = 0; k < spec.edges.size(); ++k) {
    const EdgeSpec& e = spec.edges[k];
    out << (k ? ",\n    " : "\n    ") << "{\"id\": " << quoted(e.id) << ", \"color\": " << e.color
        << ", \"range\": " << quoted(e.range) << ", \"source\": " << quoted(e.source) << "}";
  }
  out << (spec.edges.empty() ? "],\n" : "\n  ],\n");
  out << "  \"squares\": [";
  for (std::size_t k = 0; k < spec.squares.size(); ++k) {
    const SquareSpec& s = spec.squares[k];
    out << (k ? ",\n    " : "\n    ") << "[[" << quoted(s.lhs.first) << ", "
        << quoted(s.lhs.second) << "], [" << quoted(s.rhs.first) << ", "
        << quoted(s.rhs.second) << "]]";
  }
  out << (spec.squares.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

std::string serialize_graph(const KGraph& g) { return serialize_graph(g.spec()); }

std::string graph_checksum(const KGraph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(g.fingerprint()));
  return buf;
}

FamilyDocument parse_family(std::string_view text, const KGraph& g, const ParseOptions& options) {
  const json doc = parse_json(text);
  Schema schema(options);
  schema.header(doc, "kgraph-family");
  schema.only(doc, {"format", "version", "graph", "kind", "entries"}, "document");

  FamilyDocument out{SubsetFamily(g), FamilyKind::Raw, std::nullopt, std::nullopt};
  if (auto it = doc.find("graph"); it != doc.end()) {
    const json& ref = schema.object(*it, "graph", "graph");
    schema.only(ref, {"name", "checksum"}, "graph");
    if (auto n = ref.find("name"); n != ref.end())
      out.graph_name = schema.string(*n, "name", "graph.name");
    if (auto c = ref.find("checksum"); c != ref.end()) {
      out.checksum = schema.string(*c, "checksum", "graph.checksum");
      if (*out.checksum != graph_checksum(g))
        schema.fail("checksum", "graph.checksum",
                    "family was written for graph " + *out.checksum + ", not " +
                        graph_checksum(g));
    }
  }

  const std::string kind_text = schema.string(schema.require(doc, "kind", "document"), "kind",
                                              "kind");
  const auto kind = parse_family_kind(kind_text);
  if (!kind) schema.fail("kind", "kind", "expected one of t, o, invariant, raw");
  out.kind = *kind;
  out.family.set_kind(*kind);

  const json& entries =
      schema.object(schema.require(doc, "entries", "document"), "entries", "entries");
  std::vector<bool> seen(face_count(g.rank()), false);
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const FaceSet f = parse_face(schema, it.key(), g.rank());
    if (seen[f.mask()]) schema.fail("entries", "entries." + it.key(), "component given twice");
    seen[f.mask()] = true;
    const std::string path = "entries." + it.key();
    const json& ids = schema.array(it.value(), "entries", path);
    VertexSet set = g.no_vertices();
    for (const json& id : ids) {
      const std::string name = schema.string(id, "entries", path);
      auto v = g.find_vertex(name);
      if (!v) schema.fail("entries", path, "unknown vertex '" + name + "'");
      if (set.contains(*v)) schema.fail("entries", path, "vertex '" + name + "' listed twice");
      set.insert(*v);
    }
    out.family[f] = std::move(set);
  }
  for (std::uint32_t mask = 0; mask < seen.size(); ++mask)
    if (!seen[mask])
      schema.fail("entries", "entries", "missing component " + FaceSet(mask).to_string());
  return out;
}

std::string serialize_family(const KGraph& g, const SubsetFamily& f,
                             std::optional<std::string> graph_name) {
  require_family_of(g, f);
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"kgraph-family\",\n";
  out << "  \"version\": " << format_version << ",\n";
  out << "  \"graph\": {";
  if (graph_name) out << "\"name\": " << quoted(*graph_name) << ", ";
  out << "\"checksum\": \"" << graph_checksum(g) << "\"},\n";
  out << "  \"kind\": \"" << to_string(f.kind()) << "\",\n";
  out << "  \"entries\": {";
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
    std::vector<std::string> names;
    f[FaceSet(mask)].for_each([&](VertexId v) { names.push_back(g.vertex_name(v)); });
    std::sort(names.begin(), names.end());
    out << (mask ? ",\n    " : "\n    ") << quoted(FaceSet(mask).to_string()) << ": [";
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? ", " : "") << quoted(names[k]);
    out << "]";
  }
  out << "\n  }\n}\n";
  return out.str();
}

std::string export_dot(const KGraph& g) {
  std::ostringstream out;
  out << "digraph kgraph {\n";
  out << "  // rank " << g.rank() << "; edges point from source to range\n";
  // Canonical order, so the picture does not depend on input order.
  const KGraphSpec spec = canonicalize(g.spec());
  for (const auto& v : spec.vertices) out << "  " << quoted(v) << ";\n";
  for (const auto& e : spec.edges) {
    out << "  " << quoted(e.source) << " -> " << quoted(e.range) << " [label=\"" << e.color
        << "\", color=" << dot_color(e.color) << ", tooltip=" << quoted(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const KGraph& g, const FamilyLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  // " << to_string(lattice.kind()) << "-families, " << lattice.size()
      << " elements; each edge is a covering pair, pointing up\n";
  out << "  node [shape=box];\n";
  for (std::size_t k = 0; k < lattice.size(); ++k)
    out << "  n" << k << " [label=" << quoted(format(g, lattice.elements()[k])) << "];\n";
  for (auto [a, b] : hasse(lattice)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kgraph
