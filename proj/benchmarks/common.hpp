#pragma once

#include <string>

#include "kgraph/kgraph.hpp"

namespace kgraph::bench {

// Grid of side n: vertices (x,y), a color-1 edge (x,y) <- (x+1,y) and a
// color-2 edge (x,y) <- (x,y+1), with the obvious commuting squares.
inline KGraphSpec grid_spec(int n) {
  auto name = [](int x, int y) { return std::to_string(x) + "_" + std::to_string(y); };
  KGraphSpec spec;
  spec.rank = 2;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) spec.vertices.push_back(name(x, y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x + 1 < n) spec.edges.push_back({"h" + name(x, y), 1, name(x, y), name(x + 1, y)});
      if (y + 1 < n) spec.edges.push_back({"u" + name(x, y), 2, name(x, y), name(x, y + 1)});
    }
  for (int x = 0; x + 1 < n; ++x)
    for (int y = 0; y + 1 < n; ++y)
      spec.squares.push_back(
          {{"h" + name(x, y), "u" + name(x + 1, y)}, {"u" + name(x, y), "h" + name(x, y + 1)}});
  return spec;
}

// One vertex with `loops` loops of each of `rank` colors, all squares
// commuting index-wise.
inline KGraphSpec bouquet_spec(std::uint32_t rank, int loops) {
  KGraphSpec spec;
  spec.rank = rank;
  spec.vertices = {"v"};
  auto name = [](Color c, int k) { return "c" + std::to_string(c) + "_" + std::to_string(k); };
  for (Color c = 1; c <= rank; ++c)
    for (int k = 0; k < loops; ++k) spec.edges.push_back({name(c, k), c, "v", "v"});
  for (Color i = 1; i <= rank; ++i)
    for (Color j = i + 1; j <= rank; ++j)
      for (int a = 0; a < loops; ++a)
        for (int b = 0; b < loops; ++b) spec.squares.push_back({{name(i, a), name(j, b)}, {name(j, b), name(i, a)}});
  return spec;
}

}  // namespace kgraph::bench
