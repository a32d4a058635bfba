#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kgraph/lattice.hpp"

namespace kgraph::testing {

KGraphSpec loop_spec() {
  return {1, {"v"}, {{"e", 1, "v", "v"}}, {}};
}

KGraphSpec edge_spec() {
  return {1, {"v", "w"}, {{"e", 1, "v", "w"}}, {}};
}

KGraphSpec torus_spec() {
  return {2, {"v"}, {{"e", 1, "v", "v"}, {"f", 2, "v", "v"}}, {{{"e", "f"}, {"f", "e"}}}};
}

KGraphSpec broken_torus_spec() {
  KGraphSpec spec = torus_spec();
  spec.squares.clear();
  return spec;
}

KGraphSpec mix_spec() {
  return {2,
          {"u", "v"},
          {{"a", 1, "v", "v"}, {"b", 2, "v", "u"}, {"c", 1, "u", "u"}},
          {{{"a", "b"}, {"b", "c"}}}};
}

KGraphSpec cube_spec() {
  return {3,
          {"v"},
          {{"x", 1, "v", "v"}, {"y", 2, "v", "v"}, {"z", 3, "v", "v"}},
          {{{"x", "y"}, {"y", "x"}}, {{"x", "z"}, {"z", "x"}}, {{"y", "z"}, {"z", "y"}}}};
}

KGraphSpec twist_spec() {
  KGraphSpec spec;
  spec.rank = 3;
  spec.vertices = {"v"};
  const char letters[] = {'x', 'y', 'z'};
  auto name = [&](int color, int k) { return std::string(1, letters[color]) + std::to_string(k); };
  for (int c = 0; c < 3; ++c)
    for (int k = 0; k < 2; ++k)
      spec.edges.push_back({name(c, k), static_cast<Color>(c + 1), "v", "v"});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          spec.squares.push_back({{name(i, a), name(j, b)}, {name(j, a), name(i, b)}});
  return spec;
}

KGraph loop_graph() { return validate(loop_spec()); }
KGraph edge_graph() { return validate(edge_spec()); }
KGraph torus_graph() { return validate(torus_spec()); }
KGraph mix_graph() { return validate(mix_spec()); }
KGraph cube_graph() { return validate(cube_spec()); }
KGraph twist_graph() { return validate(twist_spec()); }

std::string data_path(const std::string& name) { return std::string(KGRAPH_TEST_DATA_DIR) + "/" + name; }

std::string data_file(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VertexId vertex(const KGraph& g, const char* id) {
  auto v = g.find_vertex(id);
  if (!v) throw std::runtime_error(std::string("no vertex ") + id);
  return *v;
}

EdgeId edge(const KGraph& g, const char* id) {
  auto e = g.find_edge(id);
  if (!e) throw std::runtime_error(std::string("no edge ") + id);
  return *e;
}

VertexSet set_of(const KGraph& g, std::initializer_list<const char*> ids) {
  VertexSet s = g.no_vertices();
  for (const char* id : ids) s.insert(vertex(g, id));
  return s;
}

SubsetFamily family_of(const KGraph& g, std::vector<std::vector<std::string>> components,
                       FamilyKind kind) {
  if (components.size() != face_count(g.rank()))
    throw std::runtime_error("family needs one component per subset of colors");
  SubsetFamily f(g, kind);
  for (std::uint32_t mask = 0; mask < components.size(); ++mask)
    for (const auto& id : components[mask]) f[FaceSet(mask)].insert(vertex(g, id.c_str()));
  return f;
}

std::vector<SubsetFamily> enumerated(const KGraph& g, FamilyKind kind) {
  return enumerate_families(g, kind).elements();
}

}  // namespace kgraph::testing
