#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kgraph {

/// Edge colors are 1-based: a graph of rank n uses colors 1..n.
using Color = std::uint32_t;

/// Largest supported rank. Families have 2^rank components, so anything
/// beyond this is out of reach for the lattice search anyway.
inline constexpr std::uint32_t max_rank = 16;

/// A subset F of the colors [n], stored as a bitmask with bit c-1 for color c.
///
/// The natural order on masks (binary value) is the fixed order in which
/// family components are stored and serialized.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  constexpr explicit FaceSet(std::uint32_t mask) : mask_(mask) {}
  FaceSet(std::initializer_list<Color> colors);

  static constexpr FaceSet full(std::uint32_t rank) {
    return FaceSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }
  static constexpr FaceSet single(Color c) { return FaceSet(std::uint32_t{1} << (c - 1)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(Color c) const { return (mask_ >> (c - 1)) & 1u; }
  constexpr bool is_subset_of(FaceSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr FaceSet with(Color c) const { return FaceSet(mask_ | single(c).mask_); }
  constexpr FaceSet without(Color c) const { return FaceSet(mask_ & ~single(c).mask_); }

  std::vector<Color> colors() const;

  /// Renders as a sorted color list, e.g. "{}" or "{1,3}".
  std::string to_string() const;

  friend constexpr FaceSet operator|(FaceSet a, FaceSet b) { return FaceSet(a.mask_ | b.mask_); }
  friend constexpr FaceSet operator&(FaceSet a, FaceSet b) { return FaceSet(a.mask_ & b.mask_); }
  friend constexpr FaceSet operator-(FaceSet a, FaceSet b) { return FaceSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(FaceSet, FaceSet) = default;
  friend constexpr auto operator<=>(FaceSet, FaceSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Number of subsets of [rank], i.e. the number of family components.
constexpr std::size_t face_count(std::uint32_t rank) { return std::size_t{1} << rank; }

/// An element of N^n.
///
/// Coordinates are indexed 0-based through `operator[]`; `of(c)` takes a
/// 1-based color.
class Degree {
 public:
  Degree() = default;
  Degree(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit Degree(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  static Degree zero(std::size_t rank) { return Degree(std::vector<std::uint32_t>(rank, 0)); }
  static Degree unit(std::size_t rank, Color c);
  /// The characteristic vector 1_F.
  static Degree indicator(std::size_t rank, FaceSet f);

  std::size_t rank() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  std::uint32_t of(Color c) const { return coords_[c - 1]; }
  std::span<const std::uint32_t> coords() const { return coords_; }

  std::uint64_t total() const;
  bool is_zero() const;
  FaceSet support() const;

  /// Coordinatewise order m <= k.
  bool is_below(const Degree& other) const;
  /// m ⊥ k: disjoint supports.
  bool is_orthogonal(const Degree& other) const;

  Degree join(const Degree& other) const;
  Degree meet(const Degree& other) const;

  Degree& operator+=(const Degree& other);
  /// Precondition: other.is_below(*this).
  Degree& operator-=(const Degree& other);
  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }

  std::string to_string() const;

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

}  // namespace kgraph
