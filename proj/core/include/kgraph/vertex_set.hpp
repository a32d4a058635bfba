#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kgraph {

/// Dense vertex index into a graph's vertex list.
using VertexId = std::uint32_t;
/// Dense edge index into a graph's edge list.
using EdgeId = std::uint32_t;

/// A subset of a graph's vertices, as a bitmask over the dense vertex order.
///
/// Sets over different universes never compare equal; mixing them in set
/// algebra is a precondition violation.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  bool contains(VertexId v) const { return bits_.test(v); }
  VertexSet& insert(VertexId v) {
    bits_.set(v);
    return *this;
  }
  VertexSet& erase(VertexId v) {
    bits_.reset(v);
    return *this;
  }

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

  VertexSet complement() const;

  VertexSet& operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Members in increasing index order.
  std::vector<VertexId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      fn(static_cast<VertexId>(i));
  }

  const Bits& bits() const { return bits_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  /// Total order (universe first, then bit pattern); used as a dedup key.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

 private:
  Bits bits_;
};

}  // namespace kgraph
