#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcmis::testing {

std::vector<std::uint8_t> dense_adjacency(const Graph& g) {
  if (g.n > 4096) throw std::invalid_argument("dense oracle limited to n <= 4096");
  std::vector<std::uint8_t> a(static_cast<std::size_t>(g.n) * g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.neighbors_of(v))
      a[static_cast<std::size_t>(v) * g.n + u] = 1;
  return a;
}

std::vector<DenseBlock> dense_blocking_oracle(const Graph& g, int tile_dim) {
  auto a = dense_adjacency(g);
  const int T = tile_dim;
  std::int32_t n_blocks = static_cast<std::int32_t>((g.n + T - 1) / T);
  std::vector<DenseBlock> blocks;
  for (std::int32_t br = 0; br < n_blocks; ++br) {
    for (std::int32_t bc = 0; bc < n_blocks; ++bc) {
      std::int64_t nnz = 0;
      for (int i = 0; i < T; ++i) {
        for (int j = 0; j < T; ++j) {
          VertexId v = br * T + i;
          VertexId u = bc * T + j;
          if (v < g.n && u < g.n && a[static_cast<std::size_t>(v) * g.n + u])
            ++nnz;
        }
      }
      if (nnz > 0) blocks.push_back({br, bc, nnz});
    }
  }
  return blocks;
}

std::vector<bool> segment_mask_oracle(std::span<const std::uint8_t> values,
                                      int tile_dim) {
  std::size_t n_segments = (values.size() + tile_dim - 1) / tile_dim;
  std::vector<bool> mask(n_segments, false);
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] != 0) mask[k / tile_dim] = true;
  return mask;
}

std::vector<std::int32_t> dense_tile_mma_oracle(
    std::span<const std::uint8_t> payload, std::span<const std::uint8_t> segment,
    int tile_dim) {
  std::vector<std::int32_t> out(tile_dim, 0);
  for (int i = 0; i < tile_dim; ++i)
    for (int j = 0; j < tile_dim; ++j)
      out[i] += payload[static_cast<std::size_t>(i) * tile_dim + j] * segment[j];
  return out;
}

std::vector<std::uint64_t> dense_max_np_oracle(
    const Graph& g, const PriorityVector& priorities,
    std::span<const VertexState> states) {
  auto a = dense_adjacency(g);
  std::vector<std::uint64_t> max_np(g.n, kNoNeighborKey);
  for (VertexId v = 0; v < g.n; ++v) {
    if (states[v] != VertexState::Alive) continue;
    std::uint64_t best = kNoNeighborKey;
    for (VertexId u = 0; u < g.n; ++u)
      if (a[static_cast<std::size_t>(v) * g.n + u] &&
          states[u] == VertexState::Alive)
        best = std::max(best, priority_key(priorities, u));
    max_np[v] = best;
  }
  return max_np;
}

std::vector<VertexId> sequential_greedy_mis(const Graph& g,
                                            const PriorityVector& priorities) {
  std::vector<VertexId> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return priority_key(priorities, a) > priority_key(priorities, b);
  });
  std::vector<std::uint8_t> blocked(g.n, 0);
  std::vector<VertexId> mis;
  for (VertexId v : order) {
    if (blocked[v]) continue;
    mis.push_back(v);
    for (VertexId u : g.neighbors_of(v)) blocked[u] = 1;
  }
  std::sort(mis.begin(), mis.end());
  return mis;
}

std::vector<std::uint8_t> sequential_pending_oracle(
    const Graph& g, const PriorityVector& priorities,
    std::span<const VertexState> states) {
  std::vector<VertexId> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return priority_key(priorities, a) > priority_key(priorities, b);
  });
  std::vector<std::uint8_t> pending(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    pending[v] = states[v] == VertexState::Alive ? 1 : 0;
  std::vector<std::uint8_t> c(g.n, 0);
  for (VertexId v : order) {
    if (!pending[v]) continue;
    c[v] = 1;
    pending[v] = 0;
    for (VertexId u : g.neighbors_of(v)) pending[u] = 0;
  }
  return c;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  auto ranks = [](std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    // average ranks over ties
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  auto rx = ranks(xs);
  auto ry = ranks(ys);
  double n = static_cast<double>(xs.size());
  double mean = (n - 1.0) / 2.0;
  double cov = 0, var_x = 0, var_y = 0;
  for (std::size_t k = 0; k < rx.size(); ++k) {
    cov += (rx[k] - mean) * (ry[k] - mean);
    var_x += (rx[k] - mean) * (rx[k] - mean);
    var_y += (ry[k] - mean) * (ry[k] - mean);
  }
  if (var_x == 0 || var_y == 0) return 0.0;
  return cov / std::sqrt(var_x * var_y);
}

double chi_squared_uniform(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace tcmis::testing
