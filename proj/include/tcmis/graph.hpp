#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tcmis {

using VertexId = std::int32_t;
using EdgeIndex = std::int64_t;

/// Undirected simple graph in compressed sparse row form. Neighbor lists
/// are sorted ascending, contain no self loops and no duplicates, and the
/// adjacency is symmetric. All loaders and generators produce this
/// normalized form; algorithms may assume it.
struct Graph {
  VertexId n = 0;
  std::vector<EdgeIndex> offsets;   // n+1, offsets[0] == 0
  std::vector<VertexId> neighbors;  // flat adjacency, length 2m

  EdgeIndex num_edges() const {
    return static_cast<EdgeIndex>(neighbors.size()) / 2;
  }

  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets[v + 1] - offsets[v]);
  }

  std::span<const VertexId> neighbors_of(VertexId v) const {
    return {neighbors.data() + offsets[v],
            static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }

  bool has_edge(VertexId u, VertexId v) const;

  bool operator==(const Graph&) const = default;
};

/// Normalize an arbitrary edge list into a Graph: self loops dropped,
/// duplicates merged, reverse edges added. Vertex ids must lie in [0, n).
Graph graph_from_edges(VertexId n,
                       std::span<const std::pair<VertexId, VertexId>> edges);

/// Exact rational, kept in lowest terms. Enough for mean degrees.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(long long num, long long den);

struct DegreeStats {
  Rational avg_degree;
  VertexId min_degree = 0;
  VertexId max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Structural check of every Graph invariant. The report lists one line
/// per violation, naming the vertices involved; an empty list means the
/// graph is well formed.
struct GraphValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

GraphValidationReport validate_graph(const Graph& g);

}  // namespace tcmis
