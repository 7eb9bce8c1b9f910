#include "ids/classify.hpp"

namespace ids {

bool on_witness(const PointSet& s, const StructureWitness& w, const NormalizedPoint& p) {
  const auto& pts = s.points;
  if (w.kind == WitnessKind::Line)
    return collinear3(pts[w.defining[0]], pts[w.defining[1]], p, s.m);
  return concyclic_det(pts[w.defining[0]], pts[w.defining[1]], pts[w.defining[2]], p, s.m)
      .is_zero();
}

StructureWitness structure_witness(const PointSet& s) {
  if (s.size() < 2) throw PreconditionError("structure_witness needs at least two points");
  const std::size_t n = s.size();
  const auto& pts = s.points;
  StructureWitness best;
  bool have = false;
  auto consider = [&](WitnessKind kind, std::vector<std::size_t> def) {
    StructureWitness w;
    w.kind = kind;
    w.defining = std::move(def);
    for (std::size_t p = 0; p < n; ++p) {
      bool on = false;
      for (auto d : w.defining) on = on || d == p;
      if (!on) on = on_witness(s, w, pts[p]);
      if (on)
        ++w.covered_count;
      else
        w.exceptional.push_back(p);
    }
    if (!have || w.covered_count > best.covered_count) {
      best = std::move(w);
      have = true;
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) consider(WitnessKind::Line, {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear3(pts[i], pts[j], pts[k], s.m)) continue;
        consider(WitnessKind::Circle, {i, j, k});
      }
  return best;
}

AdmissibilityReport erdos_admissible(const PointSet& s) {
  const std::size_t n = s.size();
  const auto& p = s.points;
  AdmissibilityReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear3(p[i], p[j], p[k], s.m)) {
          r.admissible = false;
          r.violation = {i, j, k};
          return r;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (concyclic4(p[i], p[j], p[k], p[l], s.m)) {
            r.admissible = false;
            r.violation = {i, j, k, l};
            return r;
          }
  return r;
}

}  // namespace ids
