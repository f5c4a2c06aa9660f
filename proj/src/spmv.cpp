#include "tcmis/spmv.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "tcmis/parallel.hpp"

namespace tcmis {

void tile_mma(std::span<const std::uint64_t> payload_rows,
              std::uint64_t segment_bits, std::span<std::int32_t> out) {
  for (std::size_t i = 0; i < payload_rows.size(); ++i)
    out[i] += std::popcount(payload_rows[i] & segment_bits);
}

std::vector<std::int32_t> tiled_spmv(const TiledAdjacency& a,
                                     const TiledVector& c,
                                     const SpmvOptions& options,
                                     SpmvStats* stats) {
  if (a.tile_dim != c.tile_dim || a.n_padded != c.n_padded || a.n != c.n)
    throw std::invalid_argument(
        "tiled adjacency and vector disagree on tile layout");

  const int T = a.tile_dim;
  std::vector<std::int32_t> nc(a.n, 0);
  std::atomic<std::int64_t> evaluated{0};
  std::atomic<std::int64_t> skipped{0};

  // One task per block row: its tiles are reduced into a private
  // accumulator in ascending block-column order and written once, so the
  // result does not depend on scheduling.
  parallel_for(a.n_block_rows(), options.workers, [&](std::int64_t br) {
    std::int32_t acc[64] = {0};
    std::int64_t eval_count = 0, skip_count = 0;
    for (std::int64_t t = a.block_row_offsets[br];
         t < a.block_row_offsets[br + 1]; ++t) {
      std::uint64_t segment = c.segment_bits[a.tile_col[t]];
      if (options.skip_empty_segments && segment == 0) {
        ++skip_count;
        continue;
      }
      ++eval_count;
      tile_mma(a.tile_payload(t), segment, {acc, static_cast<std::size_t>(T)});
    }
    VertexId base = static_cast<VertexId>(br) * T;
    VertexId hi = std::min<VertexId>(a.n, base + T);
    for (VertexId v = base; v < hi; ++v) nc[v] = acc[v - base];
    evaluated.fetch_add(eval_count, std::memory_order_relaxed);
    skipped.fetch_add(skip_count, std::memory_order_relaxed);
  });

  if (stats) {
    stats->tiles_evaluated = evaluated.load();
    stats->tiles_skipped = skipped.load();
  }
  return nc;
}

std::vector<std::int32_t> csr_neighbor_count_oracle(
    const Graph& g, std::span<const std::uint8_t> candidates) {
  if (static_cast<VertexId>(candidates.size()) != g.n)
    throw std::invalid_argument("candidate vector length must equal n");
  std::vector<std::int32_t> nc(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v) {
    std::int32_t count = 0;
    for (VertexId u : g.neighbors_of(v))
      if (candidates[u] != 0) ++count;
    nc[v] = count;
  }
  return nc;
}

}  // namespace tcmis
