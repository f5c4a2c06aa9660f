#pragma once

#include <cstdint>

#include "tcmis/graph.hpp"

namespace tcmis {

/// Erdos-Renyi G(n, p) via geometric gap sampling over the ordered pairs.
/// Deterministic in (n, p, seed) on every platform.
Graph gnp_graph(VertexId n, double p, std::uint64_t seed);

/// G(n, p) with p chosen for the requested expected average degree.
Graph gnp_graph_avg_degree(VertexId n, double avg_degree, std::uint64_t seed);

/// Recursive-matrix graph with 2^scale vertices and edge_factor * 2^scale
/// edge samples (quadrant weights 0.57/0.19/0.19/0.05), normalized to a
/// simple undirected graph. Skewed degree distribution.
Graph rmat_graph(int scale, int edge_factor, std::uint64_t seed);

Graph path_graph(VertexId n);
Graph cycle_graph(VertexId n);
Graph complete_graph(VertexId n);
Graph star_graph(VertexId leaves);  // vertex 0 is the center
Graph edgeless_graph(VertexId n);
Graph petersen_graph();

}  // namespace tcmis
