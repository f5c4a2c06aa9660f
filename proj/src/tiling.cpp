#include "tcmis/tiling.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tcmis {

namespace {

constexpr char kMagic[8] = {'T', 'C', 'M', 'I', 'S', 'T', 'I', 'L'};
constexpr std::uint32_t kVersion = 1;

void check_tile_dim(int tile_dim) {
  if (tile_dim < 1 || tile_dim > 64)
    throw std::invalid_argument("tile_dim must be in [1, 64], got " +
                                std::to_string(tile_dim));
}

template <typename T>
void write_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    bytes[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T)))
    throw std::runtime_error("truncated tiled file");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

TiledAdjacency tile_graph(const Graph& g, int tile_dim) {
  check_tile_dim(tile_dim);
  const int T = tile_dim;
  TiledAdjacency a;
  a.tile_dim = T;
  a.n = g.n;
  std::int32_t n_blocks = static_cast<std::int32_t>((g.n + T - 1) / T);
  a.n_padded = n_blocks * T;
  a.block_row_offsets.assign(n_blocks + 1, 0);

  struct Entry {
    std::int32_t block_col;
    std::int8_t i, j;
  };
  std::vector<Entry> scratch;

  for (std::int32_t br = 0; br < n_blocks; ++br) {
    scratch.clear();
    VertexId row_hi = std::min<VertexId>(g.n, (br + 1) * T);
    for (VertexId v = br * T; v < row_hi; ++v) {
      for (VertexId u : g.neighbors_of(v))
        scratch.push_back({u / T, static_cast<std::int8_t>(v - br * T),
                           static_cast<std::int8_t>(u % T)});
    }
    std::sort(scratch.begin(), scratch.end(),
              [](const Entry& x, const Entry& y) { return x.block_col < y.block_col; });

    std::size_t k = 0;
    while (k < scratch.size()) {
      std::int32_t bc = scratch[k].block_col;
      a.tile_row.push_back(br);
      a.tile_col.push_back(bc);
      std::size_t base = a.row_bits.size();
      a.row_bits.resize(base + T, 0);
      for (; k < scratch.size() && scratch[k].block_col == bc; ++k)
        a.row_bits[base + scratch[k].i] |= std::uint64_t{1} << scratch[k].j;
    }
    a.block_row_offsets[br + 1] = a.tile_count();
  }
  return a;
}

TiledVector pack_vector(std::span<const std::uint8_t> values, int tile_dim) {
  check_tile_dim(tile_dim);
  const int T = tile_dim;
  TiledVector c;
  c.tile_dim = T;
  c.n = static_cast<VertexId>(values.size());
  std::int32_t n_segments = static_cast<std::int32_t>((c.n + T - 1) / T);
  c.n_padded = n_segments * T;
  c.values.assign(c.n_padded, 0);
  std::copy(values.begin(), values.end(), c.values.begin());
  c.segment_bits.assign(n_segments, 0);
  for (VertexId k = 0; k < c.n; ++k)
    if (values[k] != 0)
      c.segment_bits[k / T] |= std::uint64_t{1} << (k % T);
  return c;
}

Graph tiled_to_csr_roundtrip(const TiledAdjacency& a) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  const int T = a.tile_dim;
  for (std::int64_t t = 0; t < a.tile_count(); ++t) {
    VertexId row_base = a.tile_row[t] * T;
    VertexId col_base = a.tile_col[t] * T;
    auto payload = a.tile_payload(t);
    for (int i = 0; i < T; ++i) {
      std::uint64_t bits = payload[i];
      while (bits != 0) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        VertexId v = row_base + i;
        VertexId u = col_base + j;
        if (v < u) edges.emplace_back(v, u);  // each edge stored twice
      }
    }
  }
  return graph_from_edges(a.n, edges);
}

TileStats tile_stats(const TiledAdjacency& a) {
  TileStats stats;
  stats.tile_count = a.tile_count();
  const int T = a.tile_dim;
  stats.occupancy_histogram.assign(static_cast<std::size_t>(T) * T + 1, 0);
  for (std::int64_t t = 0; t < stats.tile_count; ++t) {
    std::int64_t nnz = 0;
    for (std::uint64_t word : a.tile_payload(t)) nnz += std::popcount(word);
    stats.total_nonzeros += nnz;
    stats.occupancy_histogram[nnz]++;
  }
  double padded = static_cast<double>(a.n_padded);
  stats.density = padded == 0.0 ? 0.0
                                : static_cast<double>(stats.tile_count) * T * T /
                                      (padded * padded);
  return stats;
}

void write_tiled(std::ostream& out, const TiledAdjacency& a) {
  out.write(kMagic, sizeof(kMagic));
  write_le<std::uint32_t>(out, kVersion);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(a.tile_dim));
  write_le<std::uint64_t>(out, static_cast<std::uint64_t>(a.n));
  write_le<std::uint64_t>(out, static_cast<std::uint64_t>(a.tile_count()));
  const int T = a.tile_dim;
  const int payload_bytes = (T * T + 7) / 8;
  std::vector<unsigned char> buf(payload_bytes);
  for (std::int64_t t = 0; t < a.tile_count(); ++t) {
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(a.tile_row[t]));
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(a.tile_col[t]));
    std::fill(buf.begin(), buf.end(), 0);
    auto payload = a.tile_payload(t);
    for (int i = 0; i < T; ++i) {
      std::uint64_t bits = payload[i];
      while (bits != 0) {
        int j = std::countr_zero(bits);
        bits &= bits - 1;
        int k = i * T + j;
        buf[k / 8] |= static_cast<unsigned char>(1u << (k % 8));
      }
    }
    out.write(reinterpret_cast<const char*>(buf.data()), payload_bytes);
  }
  if (!out) throw std::runtime_error("failed writing tiled file");
}

TiledAdjacency read_tiled(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not a tiled adjacency file");
  if (read_le<std::uint32_t>(in) != kVersion)
    throw std::runtime_error("unsupported tiled file version");
  std::uint32_t tile_dim = read_le<std::uint32_t>(in);
  check_tile_dim(static_cast<int>(tile_dim));
  std::uint64_t n = read_le<std::uint64_t>(in);
  std::uint64_t tile_count = read_le<std::uint64_t>(in);

  TiledAdjacency a;
  a.tile_dim = static_cast<int>(tile_dim);
  a.n = static_cast<VertexId>(n);
  const int T = a.tile_dim;
  std::int32_t n_blocks = static_cast<std::int32_t>((a.n + T - 1) / T);
  a.n_padded = n_blocks * T;
  a.block_row_offsets.assign(n_blocks + 1, 0);
  const int payload_bytes = (T * T + 7) / 8;
  std::vector<unsigned char> buf(payload_bytes);

  std::int32_t prev_row = -1, prev_col = -1;
  for (std::uint64_t t = 0; t < tile_count; ++t) {
    std::int32_t br = static_cast<std::int32_t>(read_le<std::uint32_t>(in));
    std::int32_t bc = static_cast<std::int32_t>(read_le<std::uint32_t>(in));
    if (br >= n_blocks || bc >= n_blocks)
      throw std::runtime_error("tile coordinates out of range");
    if (br < prev_row || (br == prev_row && bc <= prev_col))
      throw std::runtime_error("tiles not sorted by (block_row, block_col)");
    prev_row = br;
    prev_col = bc;
    if (!in.read(reinterpret_cast<char*>(buf.data()), payload_bytes))
      throw std::runtime_error("truncated tiled file");
    a.tile_row.push_back(br);
    a.tile_col.push_back(bc);
    std::size_t base = a.row_bits.size();
    a.row_bits.resize(base + T, 0);
    for (int k = 0; k < T * T; ++k)
      if ((buf[k / 8] >> (k % 8)) & 1u)
        a.row_bits[base + k / T] |= std::uint64_t{1} << (k % T);
    a.block_row_offsets[br + 1] = static_cast<std::int64_t>(t) + 1;
  }
  // fill gaps for block rows with no tiles
  for (std::int32_t br = 0; br < n_blocks; ++br)
    a.block_row_offsets[br + 1] =
        std::max(a.block_row_offsets[br + 1], a.block_row_offsets[br]);
  return a;
}

std::int64_t tiled_bytes_estimate(const TiledAdjacency& a) {
  const int payload_bytes = (a.tile_dim * a.tile_dim + 7) / 8;
  return 24 + a.tile_count() * (8 + payload_bytes);
}

std::int64_t csr_bytes_estimate(const Graph& g) {
  return static_cast<std::int64_t>((g.n + 1) * sizeof(EdgeIndex) +
                                   g.neighbors.size() * sizeof(VertexId));
}

}  // namespace tcmis
