#include "ids/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "ids/classify.hpp"

namespace ids {

void validate_config(const SearchConfig& cfg) {
  if (cfg.a < 1) throw DomainError("anchor separation must be at least 1");
  if (cfg.box < cfg.a) throw DomainError("box bound must be at least the anchor separation");
  if (cfg.radius_bound < 1) throw DomainError("radius bound must be positive");
  if (cfg.m_values.empty()) throw DomainError("at least one value of m is required");
  for (long m : cfg.m_values)
    if (m <= 0 || !is_squarefree(Int(m)))
      throw DomainError("m = " + std::to_string(m) + " is not squarefree and positive");
}

namespace {

bool perfect_square_u64(std::uint64_t v, std::uint64_t& root) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && static_cast<unsigned __int128>(s) * s > v) --s;
  while (static_cast<unsigned __int128>(s + 1) * (s + 1) <= v) ++s;
  root = s;
  return static_cast<unsigned __int128>(s) * s == v;
}

// With X = 2a x and T = 2a t the conditions read X = r0^2 - r1^2 + a^2 and
// m T^2 = 4 a^2 r0^2 - X^2, all in machine integers when a, R, B < 2^20.
std::vector<NormalizedPoint> candidates_fast(long a, long R, long B, long m) {
  std::vector<NormalizedPoint> out;
  const __int128 four_a2 = static_cast<__int128>(4) * a * a;
  const __int128 limN = four_a2 * B * B;
  const Int den(2 * a);
  for (long r0 = 1; r0 <= R; ++r0) {
    const long lo = std::max({1L, a - r0, r0 - a});
    const long hi = std::min(R, r0 + a);
    for (long r1 = lo; r1 <= hi; ++r1) {
      const __int128 X = static_cast<__int128>(r0) * r0 - static_cast<__int128>(r1) * r1 +
                         static_cast<__int128>(a) * a;
      if (X > 2 * static_cast<__int128>(a) * B || -X > 2 * static_cast<__int128>(a) * B) continue;
      const __int128 N = four_a2 * r0 * r0 - X * X;
      if (N < 0 || N > limN || N % m != 0) continue;
      std::uint64_t T = 0;
      if (!perfect_square_u64(static_cast<std::uint64_t>(N / m), T)) continue;
      Rat x(Int(static_cast<long>(X)), den);
      Rat t(Int(static_cast<unsigned long>(T)), den);
      out.push_back({x, t});
      if (T != 0) out.push_back({x, -t});
    }
  }
  return out;
}

}  // namespace

std::vector<NormalizedPoint> candidates_two_anchors(const SearchConfig& cfg, long m) {
  validate_config(cfg);
  const Int& a = cfg.a;
  const Int lim(1L << 20);
  if (a < lim && cfg.radius_bound < lim && cfg.box < lim && m < (1L << 20)) {
    auto out = candidates_fast(a.get_si(), cfg.radius_bound.get_si(), cfg.box.get_si(), m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return candidates_two_anchors_exact(cfg, m);
}

std::vector<NormalizedPoint> candidates_two_anchors_exact(const SearchConfig& cfg, long m) {
  validate_config(cfg);
  const Int& a = cfg.a;
  const Rat B(cfg.box), B2 = Rat(cfg.box) * Rat(cfg.box);
  std::vector<NormalizedPoint> out;
  for (Int r0 = 1; r0 <= cfg.radius_bound; ++r0)
    for (Int r1 = 1; r1 <= cfg.radius_bound; ++r1) {
      if (abs(Int(r0 - r1)) > a || r0 + r1 < a) continue;
      Rat x(Int(r0 * r0 - r1 * r1 + a * a), Int(2 * a));
      if (abs(x) > B) continue;
      Rat rest = Rat(Int(r0 * r0)) - x * x;
      if (rest.sign() < 0 || rest > B2) continue;
      auto t = rational_sqrt(rest / Rat(m));
      if (!t) continue;
      out.push_back({x, *t});
      if (!t->is_zero()) out.push_back({x, -*t});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::uint64_t isqrt_u128(unsigned __int128 v, bool& exact) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<unsigned __int128>(s) * s > v) --s;
  while (static_cast<unsigned __int128>(s + 1) * (s + 1) <= v) ++s;
  exact = static_cast<unsigned __int128>(s) * s == v;
  return s;
}

}  // namespace

CompatGraph::CompatGraph(long m, std::vector<NormalizedPoint> vertices)
    : m_(m), vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  const std::size_t words = (n + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words, 0));
  Int L = 1;
  for (const auto& p : vertices_) L = lcm(L, lcm(p.x.den(), p.t.den()));
  std::vector<Int> X, T;
  bool small = m < (1L << 20) && L < (Int(1) << 30);
  for (const auto& p : vertices_) {
    X.push_back(p.x.num() * (L / p.x.den()));
    T.push_back(p.t.num() * (L / p.t.den()));
    small = small && abs(X.back()) < (Int(1) << 30) && abs(T.back()) < (Int(1) << 30);
  }
  const std::uint64_t Lsmall = small ? L.get_ui() : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = false;
      if (small) {
        long long dx = X[i].get_si() - X[j].get_si(), dt = T[i].get_si() - T[j].get_si();
        unsigned __int128 v = static_cast<unsigned __int128>(static_cast<__int128>(dx) * dx) +
                              static_cast<unsigned __int128>(m) *
                                  static_cast<unsigned __int128>(static_cast<__int128>(dt) * dt);
        bool exact = false;
        std::uint64_t s = isqrt_u128(v, exact);
        edge = v > 0 && exact && s % Lsmall == 0;
      } else {
        Int dx = X[i] - X[j], dt = T[i] - T[j];
        Int v = dx * dx + m * dt * dt;
        auto s = is_perfect_square(v);
        edge = v > 0 && s && *s % L == 0;
      }
      if (edge) {
        rows_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        rows_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
}

std::size_t CompatGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto w : rows_[i]) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

CompatGraph build_graph(long m, const NormalizedPoint& anchor0, const NormalizedPoint& anchor1,
                        const std::vector<NormalizedPoint>& candidates) {
  std::vector<NormalizedPoint> v{anchor0, anchor1};
  v.insert(v.end(), candidates.begin(), candidates.end());
  std::set<NormalizedPoint> seen(v.begin(), v.end());
  if (seen.size() != v.size()) throw PreconditionError("graph vertices must be distinct");
  return CompatGraph(m, std::move(v));
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  for (auto w : b)
    if (w) return true;
  return false;
}

class CliqueSearch {
 public:
  CliqueSearch(const CompatGraph& g, const CliqueFlags& f) : g_(g), f_(f) {
    const auto& V = g.vertices();
    const long m = g.m();
    const NormalizedPoint &a0 = V[0], &a1 = V[1];
    std::vector<std::size_t> elig;
    for (std::size_t v = 2; v < g.size(); ++v) {
      if (!g.adjacent(0, v) || !g.adjacent(1, v)) continue;
      if (f.require_erdos && collinear3(a0, a1, V[v], m)) continue;
      elig.push_back(v);
    }
    // Restricted adjacency among eligible vertices.
    const std::size_t N = elig.size();
    std::vector<std::vector<bool>> adj(N, std::vector<bool>(N, false));
    std::vector<std::size_t> deg(N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        std::size_t u = elig[i], w = elig[j];
        if (!g.adjacent(u, w)) continue;
        if (f.require_erdos &&
            (collinear3(a0, V[u], V[w], m) || collinear3(a1, V[u], V[w], m) ||
             concyclic4(a0, a1, V[u], V[w], m)))
          continue;
        adj[i][j] = adj[j][i] = true;
        ++deg[i];
        ++deg[j];
      }
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
    vert_.resize(N);
    on_axis_.resize(N);
    for (std::size_t p = 0; p < N; ++p) {
      vert_[p] = elig[order[p]];
      on_axis_[p] = collinear3(a0, a1, V[vert_[p]], m);
    }
    words_ = (N + 63) / 64;
    nbr_.assign(N, Bits(words_, 0));
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q)
        if (adj[order[p]][order[q]]) set(nbr_[p], q);
    for (std::size_t p = 0; p < N; ++p)
      if (!f.require_noncollinear || !on_axis_[p]) roots_.push_back(p);
  }

  CliqueResult run(const ProgressFn& progress) {
    if (!f_.require_noncollinear) record({});
    std::atomic<std::size_t> next{0}, done{0};
    std::mutex pm;
    auto worker = [&] {
      std::vector<std::size_t> C;
      for (;;) {
        std::size_t r = next.fetch_add(1);
        if (r >= roots_.size()) return;
        const std::size_t root = roots_[r];
        Bits P(words_, 0);
        for (std::size_t q = 0; q < vert_.size(); ++q)
          if (test(nbr_[root], q) && (q > root || (f_.require_noncollinear && on_axis_[q])))
            set(P, q);
        C.assign(1, root);
        expand(C, P);
        std::size_t d = done.fetch_add(1) + 1;
        if (progress) {
          std::lock_guard<std::mutex> lk(pm);
          progress({d, roots_.size(), best_.load()});
        }
      }
    };
    const unsigned nw = std::max(1u, std::min<unsigned>(f_.workers, static_cast<unsigned>(
                                                            std::max<std::size_t>(roots_.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nw; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return finish();
  }

 private:
  static void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
  static void reset(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  static bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

  std::size_t bound() const {
    return std::max(best_.load(), f_.target_size.value_or(0));
  }

  bool erdos_compatible(const std::vector<std::size_t>& C, std::size_t v) const {
    const auto& V = g_.vertices();
    const long m = g_.m();
    std::vector<const NormalizedPoint*> S{&V[0], &V[1]};
    for (auto c : C) S.push_back(&V[vert_[c]]);
    const NormalizedPoint& p = V[vert_[v]];
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = std::max<std::size_t>(i + 1, 2); j < S.size(); ++j)
        if (collinear3(*S[i], *S[j], p, m)) return false;
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j)
        for (std::size_t k = std::max<std::size_t>(j + 1, 2); k < S.size(); ++k)
          if (concyclic4(*S[i], *S[j], *S[k], p, m)) return false;
    return true;
  }

  void record(const std::vector<std::size_t>& C) {
    const std::size_t sz = C.size() + 2;
    if (sz < bound()) return;
    std::vector<std::size_t> key;
    for (auto c : C) key.push_back(vert_[c]);
    std::sort(key.begin(), key.end());
    std::lock_guard<std::mutex> lk(rm_);
    const std::size_t cur = best_.load();
    if (sz < cur) return;
    if (sz > cur) {
      found_.clear();
      truncated_ = false;
      best_.store(sz);
    }
    found_.insert(std::move(key));
    if (found_.size() > f_.max_results) {
      found_.erase(std::prev(found_.end()));
      truncated_ = true;
    }
  }

  void expand(std::vector<std::size_t>& C, Bits P) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    record(C);
    if (!any(P)) return;
    std::vector<std::size_t> order, color;
    Bits uncolored = P;
    std::size_t c = 0;
    while (any(uncolored)) {
      ++c;
      Bits Q = uncolored;
      while (any(Q)) {
        std::size_t v = 0;
        for (std::size_t w = 0; w < words_; ++w)
          if (Q[w]) {
            v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(Q[w]));
            break;
          }
        reset(Q, v);
        reset(uncolored, v);
        for (std::size_t w = 0; w < words_; ++w) Q[w] &= ~nbr_[v][w];
        order.push_back(v);
        color.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (C.size() + 2 + color[i] < bound()) return;
      const std::size_t v = order[i];
      if (f_.require_erdos && !erdos_compatible(C, v)) {
        reset(P, v);
        continue;
      }
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = P[w] & nbr_[v][w];
      C.push_back(v);
      expand(C, std::move(next));
      C.pop_back();
      reset(P, v);
    }
  }

  CliqueResult finish() {
    CliqueResult res;
    res.nodes = nodes_.load();
    res.truncated = truncated_;
    if (found_.empty()) return res;
    res.max_size = best_.load();
    const auto& V = g_.vertices();
    for (const auto& key : found_) {
      PointSet s;
      s.m = g_.m();
      s.points = {V[0], V[1]};
      for (auto k : key) s.points.push_back(V[k]);
      std::sort(s.points.begin(), s.points.end());
      if (!verify_ids(s).accepted) throw std::logic_error("clique fails distance verification");
      if (f_.require_erdos && !erdos_admissible(s).admissible)
        throw std::logic_error("clique fails the admissibility check");
      res.cliques.push_back(std::move(s));
    }
    std::sort(res.cliques.begin(), res.cliques.end(),
              [](const PointSet& x, const PointSet& y) { return x.points < y.points; });
    return res;
  }

  const CompatGraph& g_;
  CliqueFlags f_;
  std::vector<std::size_t> vert_;
  std::vector<bool> on_axis_;
  std::vector<Bits> nbr_;
  std::vector<std::size_t> roots_;
  std::size_t words_ = 0;
  std::atomic<std::size_t> best_{0};
  std::atomic<std::size_t> nodes_{0};
  std::mutex rm_;
  std::set<std::vector<std::size_t>> found_;
  bool truncated_ = false;
};

}  // namespace

CliqueResult max_clique(const CompatGraph& g, const CliqueFlags& flags, const ProgressFn& progress) {
  if (g.size() < 2) throw PreconditionError("graph must contain both anchors");
  if (!g.adjacent(0, 1)) throw DomainError("anchors are not at integer distance");
  CliqueSearch s(g, flags);
  return s.run(progress);
}

std::vector<SearchResult> run_search(const SearchConfig& cfg, const ProgressFn& progress) {
  validate_config(cfg);
  std::vector<SearchResult> out;
  for (long m : cfg.m_values) {
    SearchResult r;
    r.m = m;
    auto cand = candidates_two_anchors(cfg, m);
    r.candidate_count = cand.size();
    CompatGraph g = build_graph(m, {Rat(0), Rat(0)}, {Rat(cfg.a), Rat(0)}, cand);
    CliqueFlags f{cfg.require_noncollinear, cfg.require_erdos, cfg.target_size, cfg.workers,
                  cfg.max_results};
    r.cliques = max_clique(g, f, progress);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ids
