#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kgraph/families.hpp"
#include "kgraph/kgraph.hpp"

namespace kgraph::testing {

// Desk-scale fixtures.
//   loop:   n=1, one vertex v, one loop e.
//   edge:   n=1, vertices v, w, edge e with r(e)=v, s(e)=w.
//   torus:  n=2, one vertex v, loops e (1) and f (2), e·f = f·e.
//   mix:    n=2, color-1 loops a at v and c at u, color-2 edge b: u -> v,
//           a·b = b·c.
//   cube:   n=3, one vertex, one loop per color, all squares commuting.
//   twist:  n=3, one vertex, loops x0,x1 / y0,y1 / z0,z1 and squares
//           p_a·q_b = q_a·p_b for every color pair. Every swap of two square
//           outputs within one color pair breaks associativity.
KGraphSpec loop_spec();
KGraphSpec edge_spec();
KGraphSpec torus_spec();
KGraphSpec broken_torus_spec();
KGraphSpec mix_spec();
KGraphSpec cube_spec();
KGraphSpec twist_spec();

KGraph loop_graph();
KGraph edge_graph();
KGraph torus_graph();
KGraph mix_graph();
KGraph cube_graph();
KGraph twist_graph();

/// Reads a file under tests/data.
std::string data_file(const std::string& name);
std::string data_path(const std::string& name);

VertexSet set_of(const KGraph& g, std::initializer_list<const char*> ids);

/// Components listed in mask order: {}, {1}, {2}, {1,2}, ...
SubsetFamily family_of(const KGraph& g, std::vector<std::vector<std::string>> components,
                       FamilyKind kind = FamilyKind::Raw);

EdgeId edge(const KGraph& g, const char* id);
VertexId vertex(const KGraph& g, const char* id);

/// Elements of the enumerated lattice, by value.
std::vector<SubsetFamily> enumerated(const KGraph& g, FamilyKind kind);

}  // namespace kgraph::testing
