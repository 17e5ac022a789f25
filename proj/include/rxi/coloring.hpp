#pragma once

// Total edge colorings. Colors are positive labels 1..palette indexed by
// edge-list position; not every label has to appear.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rxi/graph.hpp"

namespace rxi {

inline constexpr int kMaxPalette = 64;

struct EdgeColoring {
  std::vector<int> colors;  // one color per edge-list position, 1-based
  int palette = 0;          // colors are drawn from 1..palette
};

/// Validates a coloring against a graph. palette 0 means "largest color used".
inline EdgeColoring make_coloring(const Graph& g, std::vector<int> colors, int palette = 0) {
  if (static_cast<int>(colors.size()) != g.size())
    throw std::invalid_argument("coloring has " + std::to_string(colors.size()) +
                                " entries for " + std::to_string(g.size()) + " edges");
  int max_used = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1)
      throw std::invalid_argument("color at edge " + std::to_string(i) + " must be positive");
    max_used = std::max(max_used, colors[i]);
  }
  if (palette == 0) palette = max_used;
  if (max_used > palette)
    throw std::invalid_argument("color " + std::to_string(max_used) +
                                " exceeds palette " + std::to_string(palette));
  if (palette > kMaxPalette)
    throw std::invalid_argument("palette above supported limit " + std::to_string(kMaxPalette));
  return EdgeColoring{std::move(colors), palette};
}

}  // namespace rxi
