#pragma once

#include <cstdint>
#include <vector>

#include "runfree/structure.hpp"

namespace runfree {

/// Explicit labeled hypergraph, used only by the exhaustive oracle.
/// Colorings are bitmasks over [0, vertex_count): bit v set = vertex v blue.
struct UniformHypergraph {
  StructureSpec spec;
  int vertex_count = 0;
  bool cyclic = false;
  std::vector<std::vector<int>> edges;       // ordered, each of size r
  std::vector<std::uint64_t> edge_masks;     // precomputed vertex bitmasks

  bool edge_fully_blue(int e, std::uint64_t blue) const {
    return (blue & edge_masks[e]) == edge_masks[e];
  }
};

/// Canonical labeled hypergraph for the family instance.
/// Throws std::invalid_argument for parameters invalid for the family.
UniformHypergraph build(const StructureSpec& spec);

/// True iff some k consecutive edges (cyclically consecutive for cycles)
/// are all fully blue.
bool has_forbidden_run(const UniformHypergraph& h, std::uint64_t blue, int k);

/// Length of the longest run of consecutive fully blue edges (cyclic for
/// cycle families).
int max_blue_run(const UniformHypergraph& h, std::uint64_t blue);

}  // namespace runfree
