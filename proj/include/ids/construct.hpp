#pragma once

// Generators for the two classical infinite families of integer distance
// sets (all points but one on a line; all points on a circle), transforms
// that preserve integrality, and fixture loading.

#include <string>
#include <vector>

#include "ids/geom.hpp"

namespace ids {

struct DivisorPair {
  Int d1;
  Int d2;
};

// Pairs d1 * d2 = h^2 with d1 <= d2 and d1 = d2 (mod 2), in increasing d1.
std::vector<DivisorPair> apex_divisor_pairs(const Int& h);

// Apex (0, h) followed by the collinear points (x, 0) in increasing x.
PointSet collinear_plus_apex(const Int& h);

// An angle phi with sin(phi) = a/c and cos(phi) = b/c, a^2 + b^2 = c^2.
// The triple (0, 1, 1) is phi = 0.
struct PythagoreanAngle {
  Int a;
  Int b;
  Int c;
};

struct ConcyclicSet {
  PointSet set;
  Rat radius;  // circle centred at the origin
};

// Point i sits at angle 2*phi_i on a circle of radius r, where 2r is the
// least common multiple of every reduced chord denominator and every c_i.
ConcyclicSet concyclic_pythagorean(const std::vector<PythagoreanAngle>& angles);

// Primitive triples (a, b, c) with a, b > 0 and c <= cmax, sorted by (c, a).
std::vector<PythagoreanAngle> primitive_triples(const Int& cmax);

enum class TransformKind { Translate, ReflectX, Scale };

struct Transform {
  TransformKind kind = TransformKind::ReflectX;
  Rat dx;      // Translate: x offset
  Rat dt;      // Translate: offset of the t coordinate
  Int factor;  // Scale: positive integer
};

PointSet transform(const PointSet& s, const Transform& op);

// Loads <dir>/<name>.json. An empty dir means the IDS_FIXTURE_DIR
// environment variable, falling back to the build-time default. The name
// "triangle_345" is built in.
PointSet load_fixture(const std::string& name, const std::string& dir = "");

std::string default_fixture_dir();

}  // namespace ids
