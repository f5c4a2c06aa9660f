#pragma once

#include <cstdint>
#include <vector>

#include "tcmis/graph.hpp"

namespace tcmis {

/// splitmix64 output function. Full-avalanche finalizer over 64 bits.
std::uint64_t mix64(std::uint64_t x);

/// Hash of vertex v under a run seed: the splitmix64 stream seeded at
/// mix64(seed), evaluated at index v. Pure in (v, seed).
std::uint64_t vertex_hash(std::uint64_t v, std::uint64_t seed);

/// Map a 64-bit hash to [0, 1) with 53 random bits.
double hash_to_unit(std::uint64_t h);

/// Fold a round counter into a seed, for schemes that redraw priorities
/// each iteration.
std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t round);

inline constexpr int kDefaultScaleBits = 20;
inline constexpr int kMinScaleBits = 8;
inline constexpr int kMaxScaleBits = 30;

/// Per-vertex discretized priorities. The comparison key is the pair
/// (p[v], v), so ties in p fall back to vertex id and the order over
/// vertices is strictly total. Priorities are drawn once per run and
/// reused across iterations.
struct PriorityVector {
  std::vector<std::uint32_t> p;
  std::uint64_t seed = 0;

  VertexId size() const { return static_cast<VertexId>(p.size()); }
};

/// h1: pure hash priorities, no structural bias.
PriorityVector h1_random(VertexId n, std::uint64_t seed);

/// Degree-aware priority of a single vertex before discretization:
/// avg_deg / (avg_deg + deg - eps), scaled by 2^scale_bits and floored.
/// The denominator is clamped below at 1/1024 so near-zero average
/// degrees stay finite, and the scaled value saturates at the 32-bit
/// maximum (isolated vertices in dense graphs can push it past 1).
std::uint32_t h2_priority_value(double avg_degree, VertexId degree, double eps,
                                int scale_bits);

/// h2: degree-aware priorities biased toward low-degree vertices, with a
/// per-vertex perturbation eps(v) ~ U[0,1) drawn from vertex_hash(v, seed).
/// scale_bits must lie in [8, 30].
PriorityVector h2_degree_aware(const Graph& g, std::uint64_t seed,
                               int scale_bits = kDefaultScaleBits);

/// Sentinel below every real priority key; the identity of max over keys.
inline constexpr std::uint64_t kNoNeighborKey = 0;

/// Strict-total-order key for vertex v: (p[v], v) packed so that plain
/// integer comparison matches lexicographic order. Always non-zero.
inline std::uint64_t priority_key(const PriorityVector& pv, VertexId v) {
  return (static_cast<std::uint64_t>(pv.p[v]) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 1);
}

/// True iff v is strictly greater than u in the (p, id) order.
inline bool priority_gt(const PriorityVector& pv, VertexId u, VertexId v) {
  return priority_key(pv, v) > priority_key(pv, u);
}

}  // namespace tcmis
