#pragma once

#include <stdexcept>
#include <string>

namespace runfree {

enum class Family {
  LoosePath,   // consecutive edges share exactly one vertex
  LooseCycle,  // cyclic analogue, every edge has two degree-2 vertices
  MTightPath,  // consecutive edges share m vertices (m = 1 is loose)
  TightPath,   // shorthand for MTightPath with m = r-1
  TightCycle,  // n vertices, edges are windows of r consecutive vertices mod n
};

/// Identifies one hypergraph family instance.
///
/// `m` is the overlap between consecutive edges of an m-tight path: edge i+1
/// is edge i shifted by r-m vertex positions, so m = 1 recovers the loose
/// path and m = r-1 the (r-1)-tight path. Ignored for the other families.
struct StructureSpec {
  Family family = Family::LoosePath;
  int r = 2;
  int n = 0;
  int m = 1;
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Number of vertices of the structure; throws std::invalid_argument for
/// parameters invalid for the family (see build() in hypergraph.hpp).
int vertex_count(const StructureSpec& spec);

void validate(const StructureSpec& spec);

}  // namespace runfree
