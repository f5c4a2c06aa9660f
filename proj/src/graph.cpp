#include "tcmis/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcmis {

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nbrs = neighbors_of(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph graph_from_edges(VertexId n,
                       std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");

  std::vector<std::pair<VertexId, VertexId>> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint outside [0, n)");
    if (u == v) continue;  // self loops dropped during ingestion
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  Graph g;
  g.n = n;
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  g.neighbors.reserve(directed.size());
  for (auto [u, v] : directed) {
    g.offsets[u + 1]++;
    g.neighbors.push_back(v);
  }
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
  return g;
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  if (g.n == 0) {
    stats.avg_degree = Rational{0, 1};
    return stats;
  }
  VertexId min_deg = g.degree(0);
  VertexId max_deg = min_deg;
  for (VertexId v = 1; v < g.n; ++v) {
    VertexId d = g.degree(v);
    min_deg = std::min(min_deg, d);
    max_deg = std::max(max_deg, d);
  }
  stats.avg_degree = make_rational(2 * g.num_edges(), g.n);
  stats.min_degree = min_deg;
  stats.max_degree = max_deg;
  return stats;
}

GraphValidationReport validate_graph(const Graph& g) {
  GraphValidationReport report;
  auto add = [&report](std::string msg) {
    report.violations.push_back(std::move(msg));
  };

  if (g.n < 0) {
    add("negative vertex count");
    return report;
  }
  if (g.offsets.size() != static_cast<std::size_t>(g.n) + 1) {
    add("offsets length is " + std::to_string(g.offsets.size()) +
        ", expected n+1 = " + std::to_string(g.n + 1));
    return report;
  }
  if (!g.offsets.empty() && g.offsets[0] != 0)
    add("offsets origin: offsets[0] = " + std::to_string(g.offsets[0]));
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.offsets[v + 1] < g.offsets[v])
      add("offsets decrease at vertex " + std::to_string(v));
  }
  if (g.offsets[g.n] != static_cast<EdgeIndex>(g.neighbors.size()))
    add("offsets[n] = " + std::to_string(g.offsets[g.n]) +
        " does not match neighbor count " + std::to_string(g.neighbors.size()));
  if (!report.ok()) return report;  // ranges unusable past this point

  std::vector<std::pair<VertexId, VertexId>> directed;
  directed.reserve(g.neighbors.size());
  for (VertexId v = 0; v < g.n; ++v) {
    auto nbrs = g.neighbors_of(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      VertexId u = nbrs[k];
      if (u < 0 || u >= g.n) {
        add("neighbor id " + std::to_string(u) + " of vertex " +
            std::to_string(v) + " out of range");
        continue;
      }
      if (u == v) add("self loop at vertex " + std::to_string(v));
      if (k > 0 && nbrs[k - 1] == u)
        add("duplicate neighbor " + std::to_string(u) + " of vertex " +
            std::to_string(v));
      else if (k > 0 && nbrs[k - 1] > u)
        add("unsorted neighbor list at vertex " + std::to_string(v));
      directed.emplace_back(v, u);
    }
  }

  // symmetry, checked on a sorted copy so broken lists cannot hide entries
  std::vector<std::pair<VertexId, VertexId>> sorted = directed;
  std::sort(sorted.begin(), sorted.end());
  for (auto [v, u] : directed) {
    if (!std::binary_search(sorted.begin(), sorted.end(), std::pair{u, v}))
      add("missing reverse edge (" + std::to_string(v) + "," +
          std::to_string(u) + ")");
  }
  return report;
}

}  // namespace tcmis
