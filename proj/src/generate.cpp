#include "tcmis/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcmis/priorities.hpp"

namespace tcmis {

namespace {

// splitmix64 stream; mix64 is its output function
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(mix64(seed)) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    return mix64(state);
  }

  double unit() { return hash_to_unit(next()); }
};

}  // namespace

Graph gnp_graph(VertexId n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (p <= 0.0 || n < 2) return edgeless_graph(n);
  if (p >= 1.0) return complete_graph(n);

  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  const double log_q = std::log1p(-p);
  const std::int64_t total =
      static_cast<std::int64_t>(n) * (n - 1) / 2;  // ordered pairs i < j

  std::int64_t idx = -1;
  std::int64_t row = 0;
  std::int64_t row_start = 0;  // linear index of pair (row, row+1)
  std::int64_t row_len = n - 1;
  for (;;) {
    double u = rng.unit();
    std::int64_t gap =
        static_cast<std::int64_t>(std::floor(std::log1p(-u) / log_q));
    idx += 1 + gap;
    if (idx >= total) break;
    while (idx - row_start >= row_len) {
      row_start += row_len;
      ++row;
      --row_len;
    }
    VertexId i = static_cast<VertexId>(row);
    VertexId j = static_cast<VertexId>(row + 1 + (idx - row_start));
    edges.emplace_back(i, j);
  }
  return graph_from_edges(n, edges);
}

Graph gnp_graph_avg_degree(VertexId n, double avg_degree, std::uint64_t seed) {
  double p = n > 1 ? avg_degree / static_cast<double>(n - 1) : 0.0;
  return gnp_graph(n, p, seed);
}

Graph rmat_graph(int scale, int edge_factor, std::uint64_t seed) {
  if (scale < 1 || scale > 30)
    throw std::invalid_argument("rmat scale must be in [1, 30]");
  if (edge_factor < 1) throw std::invalid_argument("edge_factor must be >= 1");
  const VertexId n = VertexId{1} << scale;
  const std::int64_t samples = static_cast<std::int64_t>(edge_factor) * n;

  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(samples);
  for (std::int64_t e = 0; e < samples; ++e) {
    VertexId u = 0, v = 0;
    for (int level = 0; level < scale; ++level) {
      double r = rng.unit();
      u <<= 1;
      v <<= 1;
      if (r < 0.57) {
        // top-left quadrant
      } else if (r < 0.76) {
        v |= 1;
      } else if (r < 0.95) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    edges.emplace_back(u, v);
  }
  return graph_from_edges(n, edges);  // drops loops, merges duplicates
}

Graph path_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return graph_from_edges(n, edges);
}

Graph cycle_graph(VertexId n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return graph_from_edges(n, edges);
}

Graph complete_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

Graph star_graph(VertexId leaves) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return graph_from_edges(leaves + 1, edges);
}

Graph edgeless_graph(VertexId n) { return graph_from_edges(n, {}); }

Graph petersen_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  return graph_from_edges(10, edges);
}

}  // namespace tcmis
