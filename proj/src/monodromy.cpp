#include <cmath>
#include <numbers>

#include "ids/varieties.hpp"

namespace ids {

namespace {

using C = std::complex<double>;

double segment_distance(C a, C b, C p) {
  C ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Leading factor 2(-a + i sqrt(m) b) of d_j^2 along the isotropic line.
std::vector<C> sheet_factors(long m, const std::vector<NormalizedPoint>& pts) {
  std::vector<C> f;
  const double sm = std::sqrt(static_cast<double>(m));
  for (const auto& p : pts) f.emplace_back(-2.0 * p.x.to_double(), 2.0 * sm * p.t.to_double());
  return f;
}

}  // namespace

std::vector<C> branch_points(long m, const std::vector<NormalizedPoint>& pts) {
  std::vector<C> z;
  const double sm = std::sqrt(static_cast<double>(m));
  for (const auto& p : pts) z.emplace_back(p.x.to_double() / 2.0, sm * p.t.to_double() / 2.0);
  return z;
}

std::vector<int> winding_numbers(const Loop& loop, const std::vector<C>& centers) {
  std::vector<int> w;
  for (const auto& c : centers) {
    double total = 0;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
      C u = loop[i] - c, v = loop[i + 1] - c;
      if (std::abs(u) == 0 || std::abs(v) == 0) throw DomainError("loop passes through a center");
      total += std::arg(v / u);
    }
    double turns = total / (2 * std::numbers::pi);
    double r = std::round(turns);
    if (std::abs(turns - r) > 1e-6) throw DomainError("loop is not closed or too coarse");
    w.push_back(static_cast<int>(r));
  }
  return w;
}

Loop lasso_loop(long m, const std::vector<NormalizedPoint>& pts, const std::vector<int>& windings,
                std::size_t circle_samples, double bend) {
  if (windings.size() != pts.size()) throw PreconditionError("one winding number per point");
  if (circle_samples < 8) throw PreconditionError("circle needs at least 8 samples");
  const auto z = branch_points(m, pts);
  const std::size_t k = z.size();
  std::vector<double> rho(k);
  for (std::size_t j = 0; j < k; ++j) {
    double r = std::abs(z[j]);
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) r = std::min(r, std::abs(z[i] - z[j]));
    if (r == 0) throw DomainError("branch points must be distinct and nonzero");
    rho[j] = 0.3 * r;
  }
  Loop loop{C(0, 0)};
  for (std::size_t j = 0; j < k; ++j) {
    if (windings[j] == 0) continue;
    const C u = z[j] / std::abs(z[j]);
    const C w = z[j] - rho[j] * u;
    auto clear = [&](C a, C b) {
      for (std::size_t i = 0; i < k; ++i) {
        double need = i == j ? 0.5 * rho[j] : 0.5 * rho[i];
        if (segment_distance(a, b, z[i]) < need) return false;
      }
      return true;
    };
    std::optional<C> via;
    for (int attempt = 0; attempt < 200 && !via; ++attempt) {
      double off = bend + (attempt % 2 ? 1 : -1) * 0.07 * ((attempt + 1) / 2);
      C v = w * 0.5 + C(0, off) * w;
      if (clear(C(0, 0), v) && clear(v, w)) via = v;
    }
    if (!via) throw DomainError("no clear path to branch point " + std::to_string(j));
    const double start = std::arg(w - z[j]);
    const int turns = windings[j];
    const std::size_t steps = circle_samples * static_cast<std::size_t>(std::abs(turns));
    loop.push_back(*via);
    loop.push_back(w);
    for (std::size_t s = 1; s <= steps; ++s) {
      double ang = start + (turns > 0 ? 1 : -1) * 2 * std::numbers::pi * static_cast<double>(s) /
                               static_cast<double>(circle_samples);
      loop.push_back(z[j] + rho[j] * std::polar(1.0, ang));
    }
    loop.back() = w;
    loop.push_back(*via);
    loop.push_back(C(0, 0));
  }
  if (loop.size() == 1) loop.push_back(C(0, 0));
  return loop;
}

std::vector<int> monodromy_signs(long m, const std::vector<NormalizedPoint>& pts, const Loop& loop,
                                 double tol) {
  if (loop.size() < 2) throw PreconditionError("loop needs at least two vertices");
  if (std::abs(loop.front()) > 1e-12 || std::abs(loop.back()) > 1e-12)
    throw PreconditionError("loop must start and end at 0");
  const auto z = branch_points(m, pts);
  const auto f = sheet_factors(m, pts);
  std::vector<int> signs;
  for (std::size_t j = 0; j < z.size(); ++j) {
    auto sq = [&](C p) { return f[j] * (p - z[j]); };
    const C d0 = std::sqrt(sq(C(0, 0)));
    C d = d0;
    for (std::size_t s = 0; s + 1 < loop.size(); ++s) {
      const C a = loop[s], b = loop[s + 1];
      if (segment_distance(a, b, z[j]) < tol)
        throw DomainError("loop passes within tolerance of branch point " + std::to_string(j));
      double t = 0, h = 1;
      while (t < 1) {
        h = std::min(h, 1 - t);
        C cur = a + t * (b - a);
        C nxt = a + (t + h) * (b - a);
        C fc = sq(cur), fn = sq(nxt);
        if (std::abs(fn - fc) > 0.1 * std::abs(fc)) {
          h /= 2;
          if (h < 1e-15) throw DomainError("continuation step underflow near a branch point");
          continue;
        }
        C cand = std::sqrt(fn);
        d = std::abs(cand - d) <= std::abs(cand + d) ? cand : -cand;
        t += h;
        h *= 2;
      }
    }
    const C ratio = d / d0;
    if (std::abs(ratio - C(1, 0)) <= 1e-6)
      signs.push_back(1);
    else if (std::abs(ratio + C(1, 0)) <= 1e-6)
      signs.push_back(-1);
    else
      throw DomainError("sheet endpoint does not snap to a square root");
  }
  return signs;
}

}  // namespace ids
