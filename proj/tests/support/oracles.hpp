#pragma once

// Independent reference implementations used only by tests. Everything here
// recomputes expected values from first principles (dense matrices, direct
// scans, sequential greedy passes) without touching the tiled code paths.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tcmis/graph.hpp"
#include "tcmis/engine.hpp"
#include "tcmis/priorities.hpp"

namespace tcmis::testing {

/// Dense 0/1 adjacency matrix; only for small n.
std::vector<std::uint8_t> dense_adjacency(const Graph& g);

struct DenseBlock {
  std::int32_t block_row = 0;
  std::int32_t block_col = 0;
  std::int64_t nonzeros = 0;
};

/// Blocks of the dense adjacency with at least one set entry, scanned
/// T x T cell by cell, sorted by (block_row, block_col).
std::vector<DenseBlock> dense_blocking_oracle(const Graph& g, int tile_dim);

/// Per-segment any-nonzero scan.
std::vector<bool> segment_mask_oracle(std::span<const std::uint8_t> values,
                                      int tile_dim);

/// Row-by-row dot products of a dense T x T tile with a T-length vector.
std::vector<std::int32_t> dense_tile_mma_oracle(
    std::span<const std::uint8_t> payload, std::span<const std::uint8_t> segment,
    int tile_dim);

/// Alive-neighbor maximum over the dense adjacency.
std::vector<std::uint64_t> dense_max_np_oracle(
    const Graph& g, const PriorityVector& priorities,
    std::span<const VertexState> states);

/// The lexicographically-first MIS of the (p, id) order: take vertices in
/// decreasing key, adding each whose neighbors are all still free.
std::vector<VertexId> sequential_greedy_mis(const Graph& g,
                                            const PriorityVector& priorities);

/// Sequential fixed point of repeated strict local-maximum selection over
/// the pending (= alive) set; the reference for the h3 candidate vector.
std::vector<std::uint8_t> sequential_pending_oracle(
    const Graph& g, const PriorityVector& priorities,
    std::span<const VertexState> states);

/// Spearman rank correlation.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Chi-squared statistic against the uniform expectation.
double chi_squared_uniform(std::span<const std::int64_t> counts);

}  // namespace tcmis::testing
