#pragma once

#include <cstddef>
#include <vector>

#include "ids/geom.hpp"

namespace ids {

enum class WitnessKind { Line, Circle };

// A line through two points of S or a circle through three non-collinear
// points of S, with the indices of the points off it.
struct StructureWitness {
  WitnessKind kind = WitnessKind::Line;
  std::vector<std::size_t> defining;
  std::size_t covered_count = 0;
  std::vector<std::size_t> exceptional;
};

// Maximizes the number of covered points; ties prefer a line, then the
// lexicographically smallest defining indices.
StructureWitness structure_witness(const PointSet& s);

// Whether point p lies on the witness defined over s.
bool on_witness(const PointSet& s, const StructureWitness& w, const NormalizedPoint& p);

struct AdmissibilityReport {
  bool admissible = true;
  // Empty when admissible; three indices for a collinear triple, four for a
  // concyclic quadruple.
  std::vector<std::size_t> violation;
};

AdmissibilityReport erdos_admissible(const PointSet& s);

}  // namespace ids
