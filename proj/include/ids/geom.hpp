#pragma once

// Plane geometry over the normalized lattice model: a point is stored as a
// pair (x, t) of rationals and denotes (x, t*sqrt(m)) for the ambient m.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ids/exactmath.hpp"

namespace ids {

struct NormalizedPoint {
  Rat x;
  Rat t;
  friend bool operator==(const NormalizedPoint&, const NormalizedPoint&) = default;
  friend auto operator<=>(const NormalizedPoint& a, const NormalizedPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.t <=> b.t;
  }
};

struct PointSet {
  long m = 1;
  std::optional<Int> M;
  std::vector<NormalizedPoint> points;
  std::string name;
  std::string source;

  std::size_t size() const { return points.size(); }
};

// Throws DomainError when m is not a positive squarefree integer or two
// points coincide.
void validate_pointset(const PointSet& s);

// Smallest even positive integer D with D*x and D*t integral for all points.
Int lattice_denominator(const PointSet& s);

Rat dist2(const NormalizedPoint& p, const NormalizedPoint& q, long m);

struct IdsCertificate {
  bool accepted = false;
  // Full symmetric distance matrix when accepted.
  std::vector<std::vector<Int>> distances;
  // First pair (row-major, i < j) whose squared distance is not a square.
  std::size_t bad_i = 0;
  std::size_t bad_j = 0;
  Rat bad_dist2;
};

IdsCertificate verify_ids(const PointSet& s);

bool collinear3(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                long m);

struct ConcyclicResult {
  bool concyclic = false;
  bool degenerate = false;  // some three of the four points are collinear
};

ConcyclicResult concyclic4_checked(const NormalizedPoint& p1, const NormalizedPoint& p2,
                                   const NormalizedPoint& p3, const NormalizedPoint& p4, long m);
bool concyclic4(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                const NormalizedPoint& p4, long m);

// Raw 4x4 determinant with rows (x^2 + m t^2, x, t, 1).
Rat concyclic_det(const NormalizedPoint& p1, const NormalizedPoint& p2, const NormalizedPoint& p3,
                  const NormalizedPoint& p4, long m);

Rat circumradius2(const Rat& d1, const Rat& d2, const Rat& d3);

struct DistanceMatrix {
  std::vector<std::vector<Int>> d;
  std::size_t n() const { return d.size(); }
};

DistanceMatrix distance_matrix(const PointSet& s);

PointSet reconstruct_from_distances(const DistanceMatrix& dm);

Int diameter(const PointSet& s);

// The smallest non-degenerate angle over ordered triples, reported through
// its cosine: cos2 = cos^2 and cos_sign = sign of cos. The vertex is `vertex`.
struct AngleReport {
  Rat cos2;
  int cos_sign = 0;
  std::size_t first = 0;
  std::size_t vertex = 0;
  std::size_t last = 0;
};

AngleReport min_angle_cos2(const PointSet& s);

}  // namespace ids
