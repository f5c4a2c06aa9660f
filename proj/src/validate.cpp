#include "tcmis/validate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace tcmis {

namespace {

std::vector<std::uint8_t> membership(const Graph& g,
                                     std::span<const VertexId> set) {
  std::vector<std::uint8_t> in_set(g.n, 0);
  for (VertexId v : set) {
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("set contains vertex id " +
                                  std::to_string(v) + " outside [0, n)");
    in_set[v] = 1;
  }
  return in_set;
}

struct BruteForce {
  std::vector<std::uint64_t> adjacency;
  int best = 0;

  void search(std::uint64_t candidates, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    int v = std::countr_zero(candidates);
    std::uint64_t v_bit = std::uint64_t{1} << v;
    // include v first so good bounds appear early
    search(candidates & ~(adjacency[v] | v_bit), size + 1);
    if ((adjacency[v] & candidates) != 0)  // excluding an isolated v never helps
      search(candidates & ~v_bit, size);
  }
};

}  // namespace

IndependenceReport check_independence(const Graph& g,
                                      std::span<const VertexId> set) {
  auto in_set = membership(g, set);
  for (VertexId v = 0; v < g.n; ++v) {
    if (!in_set[v]) continue;
    for (VertexId u : g.neighbors_of(v)) {
      if (in_set[u])
        return {false, std::pair{std::min(u, v), std::max(u, v)}};
    }
  }
  return {true, std::nullopt};
}

MaximalityReport check_maximality(const Graph& g,
                                  std::span<const VertexId> set) {
  if (!check_independence(g, set).independent)
    throw std::invalid_argument("maximality is defined on independent sets");
  auto in_set = membership(g, set);
  for (VertexId v = 0; v < g.n; ++v) {
    if (in_set[v]) continue;
    bool blocked = false;
    for (VertexId u : g.neighbors_of(v)) {
      if (in_set[u]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return {false, v};
  }
  return {true, std::nullopt};
}

int brute_force_max_is(const Graph& g) {
  if (g.n > kBruteForceMaxVertices)
    throw std::invalid_argument("brute force limited to n <= 30");
  BruteForce bf;
  bf.adjacency.assign(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.neighbors_of(v))
      bf.adjacency[v] |= std::uint64_t{1} << u;
  std::uint64_t all =
      g.n == 0 ? 0 : (g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1);
  bf.search(all, 0);
  return bf.best;
}

QualityReport quality_report(const Graph& g, std::span<const VertexId> result,
                             std::span<const VertexId> reference) {
  QualityReport report;
  report.cardinality = static_cast<std::int64_t>(result.size());
  report.reference_cardinality = static_cast<std::int64_t>(reference.size());
  if (report.reference_cardinality == 0) {
    if (g.n > 0)
      throw std::invalid_argument("empty reference set on a non-empty graph");
    report.deviation_pct = 0.0;
  } else {
    report.deviation_pct =
        100.0 *
        static_cast<double>(report.reference_cardinality - report.cardinality) /
        static_cast<double>(report.reference_cardinality);
  }
  report.independent = check_independence(g, result).independent;
  report.maximal = report.independent
                       ? check_maximality(g, result).maximal
                       : false;
  return report;
}

}  // namespace tcmis
