#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/kgraph.hpp"
#include "kgraph/vertex_calculus.hpp"

namespace kgraph {

/// What a family claims to be. `Raw` makes no claim.
enum class FamilyKind { Raw, T, O, Invariant };

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept;

/// A total map from subsets F ⊆ [n] to vertex sets, tied to one graph.
///
/// Components are stored in mask order. Equality is componentwise and
/// ignores the kind tag; `<` is the dedup order (components compared in mask
/// order).
class SubsetFamily {
 public:
  /// The all-empty family over g.
  explicit SubsetFamily(const KGraph& g, FamilyKind kind = FamilyKind::Raw);

  static SubsetFamily constant(const KGraph& g, const VertexSet& v,
                               FamilyKind kind = FamilyKind::Raw);
  static SubsetFamily all_vertices(const KGraph& g, FamilyKind kind = FamilyKind::Raw);

  std::uint32_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::uint64_t graph_fingerprint() const { return graph_; }
  bool belongs_to(const KGraph& g) const { return graph_ == g.fingerprint(); }

  FamilyKind kind() const { return kind_; }
  SubsetFamily& set_kind(FamilyKind kind) {
    kind_ = kind;
    return *this;
  }

  const VertexSet& operator[](FaceSet f) const { return components_[f.mask()]; }
  VertexSet& operator[](FaceSet f) { return components_[f.mask()]; }
  std::span<const VertexSet> components() const { return components_; }

  /// K1 ⪯ K2: componentwise inclusion.
  bool precedes(const SubsetFamily& other) const;

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return a.graph_ == b.graph_ && a.components_ == b.components_;
  }
  friend bool operator<(const SubsetFamily& a, const SubsetFamily& b);

 private:
  std::uint32_t rank_;
  std::size_t vertex_count_;
  std::uint64_t graph_;
  FamilyKind kind_;
  std::vector<VertexSet> components_;
};

/// Renders as "{}:{...} {1}:{...} ..." in mask order.
std::string format(const KGraph& g, const SubsetFamily& f);

/// For all F and i ∉ F: (Γ^{1_i})^{-1}(V^F) ∩ V^{F∪{i}} = V^F.
bool is_t_family(const KGraph& g, const SubsetFamily& v);

/// A T-family with U^F ⊆ V^F for all F.
bool is_o_family(const KGraph& g, const SubsetFamily& v);
bool is_o_family(const KGraph& g, const SubsetFamily& v, const TracingSets& tracing);

/// For all G and i ∉ G: W^G = (Γ^{1_i})^{-1}(W^G ∩ W^{G∪{i}}).
bool is_invariant_family(const KGraph& g, const SubsetFamily& w);

/// Dispatches on kind; `Raw` accepts any family of the right shape.
bool is_family_of_kind(const KGraph& g, const SubsetFamily& f, FamilyKind kind);

/// W^F = (Γ^{1 - 1_F})^{-1}(V^F). Throws NotATFamily.
SubsetFamily t_to_invariant(const KGraph& g, const SubsetFamily& v);

/// V^F = ⋂_{G ⊇ F} W^G. Throws NotAnInvariantFamily.
SubsetFamily invariant_to_t(const KGraph& g, const SubsetFamily& w);

/// F ↦ U^F, the least O-family.
SubsetFamily cnp_family(const KGraph& g);

/// Throws GraphMismatch unless f was built over g.
void require_family_of(const KGraph& g, const SubsetFamily& f);

}  // namespace kgraph
