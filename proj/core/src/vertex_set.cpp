#include "kgraph/vertex_set.hpp"

namespace kgraph {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : bits_(universe) {
  for (VertexId v : members) bits_.set(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  return a.bits_ < b.bits_;
}

}  // namespace kgraph
