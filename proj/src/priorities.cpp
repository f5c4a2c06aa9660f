#include "tcmis/priorities.hpp"

#include <cmath>
#include <stdexcept>

namespace tcmis {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
// Floor for the priority denominator; engages only when the average
// degree is below 1 or the perturbation pushes it toward zero.
constexpr double kDenomFloor = 1.0 / 1024.0;
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t vertex_hash(std::uint64_t v, std::uint64_t seed) {
  return mix64(mix64(seed) + (v + 1) * kGolden);
}

double hash_to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t round) {
  return mix64(seed + mix64(round + kGolden));
}

PriorityVector h1_random(VertexId n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("h1_random requires n >= 1");
  PriorityVector pv;
  pv.seed = seed;
  pv.p.resize(n);
  for (VertexId v = 0; v < n; ++v)
    pv.p[v] = static_cast<std::uint32_t>(vertex_hash(v, seed) >> 32);
  return pv;
}

std::uint32_t h2_priority_value(double avg_degree, VertexId degree, double eps,
                                int scale_bits) {
  double denom = avg_degree + static_cast<double>(degree) - eps;
  if (denom < kDenomFloor) denom = kDenomFloor;
  double scaled = std::floor(avg_degree / denom * std::ldexp(1.0, scale_bits));
  if (scaled < 0.0) return 0;
  if (scaled >= 4294967295.0) return 0xffffffffu;  // saturate, keeps order
  return static_cast<std::uint32_t>(scaled);
}

PriorityVector h2_degree_aware(const Graph& g, std::uint64_t seed,
                               int scale_bits) {
  if (scale_bits < kMinScaleBits || scale_bits > kMaxScaleBits)
    throw std::invalid_argument("scale_bits must be in [8, 30]");
  PriorityVector pv;
  pv.seed = seed;
  pv.p.resize(g.n);
  if (g.n == 0) return pv;
  double avg = 2.0 * static_cast<double>(g.num_edges()) / g.n;
  for (VertexId v = 0; v < g.n; ++v) {
    double eps = hash_to_unit(vertex_hash(v, seed));
    pv.p[v] = h2_priority_value(avg, g.degree(v), eps, scale_bits);
  }
  return pv;
}

}  // namespace tcmis
