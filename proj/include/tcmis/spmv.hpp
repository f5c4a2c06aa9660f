#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcmis/graph.hpp"
#include "tcmis/tiling.hpp"

namespace tcmis {

/// One tile multiply-accumulate: out[i] += popcount(rows[i] & segment).
/// This is the exact integer form of a T x T times T x 1 product of 0/1
/// operands; every contribution is bounded by tile_dim.
void tile_mma(std::span<const std::uint64_t> payload_rows,
              std::uint64_t segment_bits, std::span<std::int32_t> out);

struct SpmvStats {
  std::int64_t tiles_evaluated = 0;
  std::int64_t tiles_skipped = 0;
};

struct SpmvOptions {
  int workers = 0;                  // <= 0 means hardware concurrency
  bool skip_empty_segments = true;  // early-exit on all-zero column segments
};

/// Blocked product nc = A * c restricted to real vertices. Tiles whose
/// candidate segment is all zero contribute nothing and, with skipping
/// enabled, are never evaluated; stats reports both counts. Each block
/// row is reduced by one worker in ascending block-column order, so the
/// output is identical for any worker count.
std::vector<std::int32_t> tiled_spmv(const TiledAdjacency& a,
                                     const TiledVector& c,
                                     const SpmvOptions& options = {},
                                     SpmvStats* stats = nullptr);

/// Definitionally correct neighbor counting by direct CSR traversal:
/// nc[v] = |{u in N(v) : candidates[u] != 0}|. The independent reference
/// for tiled_spmv.
std::vector<std::int32_t> csr_neighbor_count_oracle(
    const Graph& g, std::span<const std::uint8_t> candidates);

}  // namespace tcmis
