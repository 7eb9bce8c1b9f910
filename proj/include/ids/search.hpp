#pragma once

// Bounded exhaustive search for integer distance sets containing the two
// anchors (0, 0) and (a, 0): every other point has integer distances r0, r1
// to the anchors, so it is an intersection of two integer-radius circles.
// Points pairwise at integer distance form cliques of a compatibility graph.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ids/geom.hpp"

namespace ids {

struct SearchConfig {
  Int a = 1;
  std::vector<long> m_values{1};
  Int box = 10;           // |x| <= B and |t| sqrt(m) <= B
  Int radius_bound = 10;  // r0, r1 <= radius_bound
  std::optional<std::size_t> target_size;
  bool require_noncollinear = false;  // the set is not contained in a line
  bool require_erdos = false;         // no three collinear, no four concyclic
  unsigned workers = 1;
  std::size_t max_results = 1000;
};

void validate_config(const SearchConfig& cfg);

// Points other than the anchors, sorted by (x, t).
std::vector<NormalizedPoint> candidates_two_anchors(const SearchConfig& cfg, long m);
// Same enumeration carried out entirely in arbitrary precision.
std::vector<NormalizedPoint> candidates_two_anchors_exact(const SearchConfig& cfg, long m);

class CompatGraph {
 public:
  CompatGraph() = default;
  // Vertex 0 and 1 are the anchors, followed by the candidates.
  CompatGraph(long m, std::vector<NormalizedPoint> vertices);

  std::size_t size() const { return vertices_.size(); }
  long m() const { return m_; }
  const std::vector<NormalizedPoint>& vertices() const { return vertices_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i][j >> 6] >> (j & 63)) & 1u;
  }
  const std::vector<std::uint64_t>& row(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const;

 private:
  long m_ = 1;
  std::vector<NormalizedPoint> vertices_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

CompatGraph build_graph(long m, const NormalizedPoint& anchor0, const NormalizedPoint& anchor1,
                        const std::vector<NormalizedPoint>& candidates);

struct CliqueFlags {
  bool require_noncollinear = false;
  bool require_erdos = false;
  std::optional<std::size_t> target_size;
  unsigned workers = 1;
  std::size_t max_results = 1000;
};

struct Progress {
  std::size_t done = 0;
  std::size_t total = 0;
  std::size_t best = 0;
};

using ProgressFn = std::function<void(const Progress&)>;

struct CliqueResult {
  std::size_t max_size = 0;
  std::vector<PointSet> cliques;  // canonical order, point lists sorted
  bool truncated = false;         // more than max_results maximum cliques exist
  std::size_t nodes = 0;
};

// Maximum cliques that contain both anchors (vertices 0 and 1).
CliqueResult max_clique(const CompatGraph& g, const CliqueFlags& flags,
                        const ProgressFn& progress = nullptr);

struct SearchResult {
  long m = 1;
  std::size_t candidate_count = 0;
  CliqueResult cliques;
};

std::vector<SearchResult> run_search(const SearchConfig& cfg, const ProgressFn& progress = nullptr);

}  // namespace ids
