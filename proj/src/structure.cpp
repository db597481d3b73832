#include "runfree/structure.hpp"

namespace runfree {

std::string family_name(Family f) {
  switch (f) {
    case Family::LoosePath: return "loose-path";
    case Family::LooseCycle: return "loose-cycle";
    case Family::MTightPath: return "m-tight-path";
    case Family::TightPath: return "tight-path";
    case Family::TightCycle: return "tight-cycle";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "loose-path") return Family::LoosePath;
  if (name == "loose-cycle") return Family::LooseCycle;
  if (name == "m-tight-path") return Family::MTightPath;
  if (name == "tight-path") return Family::TightPath;
  if (name == "tight-cycle") return Family::TightCycle;
  throw std::invalid_argument("unknown family: " + name);
}

void validate(const StructureSpec& spec) {
  if (spec.r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  switch (spec.family) {
    case Family::LoosePath:
      if (spec.n < 0) throw std::invalid_argument("loose path needs n >= 0");
      break;
    case Family::LooseCycle:
      if (spec.n < 3) throw std::invalid_argument("loose cycle needs n >= 3");
      break;
    case Family::MTightPath:
      if (spec.n < 1) throw std::invalid_argument("m-tight path needs n >= 1");
      if (spec.m < 1 || spec.m > spec.r - 1)
        throw std::invalid_argument("m-tight path needs 1 <= m <= r-1");
      break;
    case Family::TightPath:
      if (spec.r < 3) throw std::invalid_argument("tight path needs r >= 3");
      if (spec.n < 1) throw std::invalid_argument("tight path needs n >= 1");
      break;
    case Family::TightCycle:
      if (spec.r < 3) throw std::invalid_argument("tight cycle needs r >= 3");
      if (spec.n < 2 * spec.r)
        throw std::invalid_argument("tight cycle needs n >= 2r");
      break;
  }
}

int vertex_count(const StructureSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::LoosePath:
      return spec.n == 0 ? 1 : spec.n * (spec.r - 1) + 1;
    case Family::LooseCycle:
      return spec.n * (spec.r - 1);
    case Family::MTightPath:
      // overlap m means shift r-m per edge
      return spec.r + (spec.n - 1) * (spec.r - spec.m);
    case Family::TightPath:
      return spec.n + spec.r - 1;
    case Family::TightCycle:
      return spec.n;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace runfree
