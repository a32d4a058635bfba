#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kgraph/families.hpp"

namespace kgraph {

struct SearchLimits {
  /// Upper bound on candidate vertex sets (enumerator) or candidate families
  /// (oracle) that may be examined.
  std::uint64_t max_candidates = std::uint64_t{1} << 24;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Worker threads for the enumerator; 0 means hardware concurrency. The
  /// result does not depend on this.
  unsigned threads = 1;
};

/// A deduplicated set of families of one kind, ordered by componentwise
/// inclusion. Elements are kept sorted in the dedup order.
class FamilyLattice {
 public:
  FamilyLattice(FamilyKind kind, std::vector<SubsetFamily> elements);

  FamilyKind kind() const { return kind_; }
  const std::vector<SubsetFamily>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  std::optional<std::size_t> index_of(const SubsetFamily& f) const;
  bool contains(const SubsetFamily& f) const { return index_of(f).has_value(); }

  /// The ⪯-least / ⪯-greatest element, if one exists.
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  friend bool operator==(const FamilyLattice& a, const FamilyLattice& b) {
    return a.kind_ == b.kind_ && a.elements_ == b.elements_;
  }

 private:
  FamilyKind kind_;
  std::vector<SubsetFamily> elements_;
};

/// Exhaustive oracle: filters all (2^|Γ⁰|)^(2^n) families through the kind's
/// predicate. Throws BudgetExceeded up front when that count exceeds the
/// budget.
FamilyLattice brute_force_families(const KGraph& g, FamilyKind kind,
                                   const SearchLimits& limits = {});

/// Enumerates all families of the given kind by component search.
///
/// Components are assigned in order of decreasing |F|. The defining
/// equations only couple the F component to the F∪{i} components, which are
/// already fixed, so each component is a simultaneous fixed point of
/// monotone operators. Every such fixed point lies between the least and
/// greatest fixed point of their intersection; the search tests exactly the
/// sets in that interval. Throws BudgetExceeded naming the component.
FamilyLattice enumerate_families(const KGraph& g, FamilyKind kind,
                                 const SearchLimits& limits = {});

/// Least and greatest fixed point of the component operator for F, given the
/// components of all strict supersets of F in `partial`.
struct FixedPointBounds {
  VertexSet least;
  VertexSet greatest;
};

/// Φ_F(S): the intersection over i ∉ F of the per-color operators
/// (Γ^{1_i})^{-1}(S) ∩ V^{F∪{i}} for T/O families and
/// (Γ^{1_i})^{-1}(S ∩ W^{F∪{i}}) for invariant families. The identity when
/// F = [n].
VertexSet component_operator(const KGraph& g, FamilyKind kind, const SubsetFamily& partial,
                             FaceSet f, const VertexSet& s);

FixedPointBounds fixed_point_bounds(const KGraph& g, FamilyKind kind,
                                    const SubsetFamily& partial, FaceSet f);

/// Componentwise intersection. Throws KindMismatch when both carry
/// different non-raw kinds, GraphMismatch across graphs.
SubsetFamily meet(const SubsetFamily& a, const SubsetFamily& b);

/// Least upper bound inside `lattice`: the meet of all elements above both.
/// Linear in the lattice size. Throws NotInLattice.
SubsetFamily join(const SubsetFamily& a, const SubsetFamily& b, const FamilyLattice& lattice);

/// Covering pairs (lower, upper) as element indices, sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const FamilyLattice& lattice);

}  // namespace kgraph
