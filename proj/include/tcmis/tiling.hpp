#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tcmis/graph.hpp"

namespace tcmis {

/// Block-compressed adjacency: the n_padded x n_padded 0/1 matrix cut into
/// T x T tiles, keeping only tiles with at least one set bit. Tiles are
/// sorted by (block_row, block_col) and grouped per block row. Each tile
/// row is bit-packed into one 64-bit word (bit j of word i is entry (i,j),
/// row-major), which caps tile_dim at 64.
struct TiledAdjacency {
  int tile_dim = 16;
  VertexId n = 0;
  VertexId n_padded = 0;
  std::vector<std::int32_t> tile_row;            // block row per tile
  std::vector<std::int32_t> tile_col;            // block col per tile
  std::vector<std::uint64_t> row_bits;           // tile_dim words per tile
  std::vector<std::int64_t> block_row_offsets;   // n_block_rows + 1

  std::int64_t tile_count() const {
    return static_cast<std::int64_t>(tile_col.size());
  }

  std::int32_t n_block_rows() const {
    return static_cast<std::int32_t>(block_row_offsets.empty()
                                         ? 0
                                         : block_row_offsets.size() - 1);
  }

  std::span<const std::uint64_t> tile_payload(std::int64_t t) const {
    return {row_bits.data() + t * tile_dim,
            static_cast<std::size_t>(tile_dim)};
  }

  bool payload_bit(std::int64_t t, int i, int j) const {
    return (row_bits[t * tile_dim + i] >> j) & 1u;
  }
};

/// Cut the adjacency matrix of g into T x T tiles, dropping all-zero ones.
/// Throws std::invalid_argument unless 1 <= tile_dim <= 64.
TiledAdjacency tile_graph(const Graph& g, int tile_dim);

/// Per-vertex vector padded to the tile grid, with a per-segment non-zero
/// summary so all-zero segments can be skipped without touching values.
struct TiledVector {
  int tile_dim = 16;
  VertexId n = 0;
  VertexId n_padded = 0;
  std::vector<std::uint8_t> values;          // length n_padded, zero beyond n
  std::vector<std::uint64_t> segment_bits;   // bit i of word s = values[s*T+i] != 0

  std::int32_t n_segments() const {
    return static_cast<std::int32_t>(segment_bits.size());
  }

  bool segment_nonzero(std::int32_t s) const { return segment_bits[s] != 0; }
};

TiledVector pack_vector(std::span<const std::uint8_t> values, int tile_dim);

/// Inverse of tile_graph; reconstructs the exact source graph.
Graph tiled_to_csr_roundtrip(const TiledAdjacency& a);

struct TileStats {
  std::int64_t tile_count = 0;
  std::int64_t total_nonzeros = 0;
  std::vector<std::int64_t> occupancy_histogram;  // index = non-zeros per tile
  double density = 0.0;                           // tile_count*T^2 / n_padded^2
};

TileStats tile_stats(const TiledAdjacency& a);

/// Binary cache of the tiled format. Layout (little endian):
///   8 bytes magic "TCMISTIL", u32 version (1), u32 tile_dim, u64 n,
///   u64 tile_count, then per tile u32 block_row, u32 block_col and
///   ceil(T*T/8) payload bytes, row-major, bit k = entry (k/T, k%T),
///   LSB-first within each byte.
void write_tiled(std::ostream& out, const TiledAdjacency& a);
TiledAdjacency read_tiled(std::istream& in);

/// In-memory sizes used for the tiled-vs-CSR footprint comparison; the
/// tiled figure matches the binary cache layout above.
std::int64_t tiled_bytes_estimate(const TiledAdjacency& a);
std::int64_t csr_bytes_estimate(const Graph& g);

}  // namespace tcmis
