#include "kgraph/degree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace kgraph {

FaceSet::FaceSet(std::initializer_list<Color> colors) {
  for (Color c : colors) mask_ |= single(c).mask();
}

std::vector<Color> FaceSet::colors() const {
  std::vector<Color> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    out.push_back(static_cast<Color>(std::countr_zero(m)) + 1);
  return out;
}

std::string FaceSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Color c : colors()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  out += '}';
  return out;
}

Degree Degree::unit(std::size_t rank, Color c) {
  Degree d = zero(rank);
  d.coords_[c - 1] = 1;
  return d;
}

Degree Degree::indicator(std::size_t rank, FaceSet f) {
  Degree d = zero(rank);
  for (Color c : f.colors()) d.coords_[c - 1] = 1;
  return d;
}

std::uint64_t Degree::total() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

bool Degree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
}

FaceSet Degree::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) mask |= std::uint32_t{1} << i;
  return FaceSet(mask);
}

bool Degree::is_below(const Degree& other) const {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

bool Degree::is_orthogonal(const Degree& other) const {
  return (support() & other.support()).empty();
}

Degree Degree::join(const Degree& other) const {
  assert(rank() == other.rank());
  Degree out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::max(coords_[i], other.coords_[i]);
  return out;
}

Degree Degree::meet(const Degree& other) const {
  assert(rank() == other.rank());
  Degree out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::min(coords_[i], other.coords_[i]);
  return out;
}

Degree& Degree::operator+=(const Degree& other) {
  assert(rank() == other.rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Degree& Degree::operator-=(const Degree& other) {
  assert(other.is_below(*this));
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::string Degree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

}  // namespace kgraph
