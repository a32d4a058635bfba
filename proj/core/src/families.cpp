#include "kgraph/families.hpp"

#include <algorithm>

namespace kgraph {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Raw: return "raw";
    case FamilyKind::T: return "t";
    case FamilyKind::O: return "o";
    case FamilyKind::Invariant: return "invariant";
  }
  return "raw";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept {
  if (text == "raw") return FamilyKind::Raw;
  if (text == "t") return FamilyKind::T;
  if (text == "o") return FamilyKind::O;
  if (text == "invariant") return FamilyKind::Invariant;
  return std::nullopt;
}

SubsetFamily::SubsetFamily(const KGraph& g, FamilyKind kind)
    : rank_(g.rank()),
      vertex_count_(g.vertex_count()),
      graph_(g.fingerprint()),
      kind_(kind),
      components_(face_count(g.rank()), g.no_vertices()) {}

SubsetFamily SubsetFamily::constant(const KGraph& g, const VertexSet& v, FamilyKind kind) {
  SubsetFamily f(g, kind);
  std::fill(f.components_.begin(), f.components_.end(), v);
  return f;
}

SubsetFamily SubsetFamily::all_vertices(const KGraph& g, FamilyKind kind) {
  return constant(g, g.all_vertices(), kind);
}

bool SubsetFamily::precedes(const SubsetFamily& other) const {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (!components_[k].is_subset_of(other.components_[k])) return false;
  return true;
}

bool operator<(const SubsetFamily& a, const SubsetFamily& b) {
  if (a.graph_ != b.graph_) return a.graph_ < b.graph_;
  return std::lexicographical_compare(a.components_.begin(), a.components_.end(),
                                      b.components_.begin(), b.components_.end());
}

std::string format(const KGraph& g, const SubsetFamily& f) {
  std::string out;
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
    if (mask != 0) out += ' ';
    out += FaceSet(mask).to_string() + ":" + g.format(f[FaceSet(mask)]);
  }
  return out;
}

void require_family_of(const KGraph& g, const SubsetFamily& f) {
  if (!f.belongs_to(g) || f.rank() != g.rank() || f.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::GraphMismatch, "family was built over a different graph");
}

bool is_t_family(const KGraph& g, const SubsetFamily& v) {
  require_family_of(g, v);
  const FaceSet all = FaceSet::full(g.rank());
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
    const FaceSet f(mask);
    for (Color i : (all - f).colors()) {
      if ((edge_preimage(g, v[f], i) & v[f.with(i)]) != v[f]) return false;
    }
  }
  return true;
}

bool is_o_family(const KGraph& g, const SubsetFamily& v, const TracingSets& tracing) {
  if (!is_t_family(g, v)) return false;
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask)
    if (!tracing.u_of(FaceSet(mask)).is_subset_of(v[FaceSet(mask)])) return false;
  return true;
}

bool is_o_family(const KGraph& g, const SubsetFamily& v) {
  return is_o_family(g, v, tracing_sets(g));
}

bool is_invariant_family(const KGraph& g, const SubsetFamily& w) {
  require_family_of(g, w);
  const FaceSet all = FaceSet::full(g.rank());
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
    const FaceSet f(mask);
    for (Color i : (all - f).colors()) {
      if (edge_preimage(g, w[f] & w[f.with(i)], i) != w[f]) return false;
    }
  }
  return true;
}

bool is_family_of_kind(const KGraph& g, const SubsetFamily& f, FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Raw:
      require_family_of(g, f);
      return true;
    case FamilyKind::T: return is_t_family(g, f);
    case FamilyKind::O: return is_o_family(g, f);
    case FamilyKind::Invariant: return is_invariant_family(g, f);
  }
  return false;
}

SubsetFamily t_to_invariant(const KGraph& g, const SubsetFamily& v) {
  if (!is_t_family(g, v)) throw Error(ErrorCode::NotATFamily, "expected a T-family");
  SubsetFamily w(g, FamilyKind::Invariant);
  const FaceSet all = FaceSet::full(g.rank());
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask) {
    const FaceSet f(mask);
    w[f] = degree_preimage(g, v[f], Degree::indicator(g.rank(), all - f));
  }
  return w;
}

SubsetFamily invariant_to_t(const KGraph& g, const SubsetFamily& w) {
  if (!is_invariant_family(g, w))
    throw Error(ErrorCode::NotAnInvariantFamily, "expected an invariant family");
  SubsetFamily v(g, FamilyKind::T);
  const std::uint32_t faces = static_cast<std::uint32_t>(face_count(g.rank()));
  for (std::uint32_t mask = 0; mask < faces; ++mask) {
    VertexSet acc = g.all_vertices();
    for (std::uint32_t sup = 0; sup < faces; ++sup)
      if ((sup & mask) == mask) acc &= w[FaceSet(sup)];
    v[FaceSet(mask)] = std::move(acc);
  }
  return v;
}

SubsetFamily cnp_family(const KGraph& g) {
  SubsetFamily f(g, FamilyKind::O);
  for (std::uint32_t mask = 0; mask < face_count(g.rank()); ++mask)
    f[FaceSet(mask)] = u_set(g, FaceSet(mask));
  return f;
}

}  // namespace kgraph
