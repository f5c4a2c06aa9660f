#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "tcmis/graph.hpp"

namespace tcmis {

struct IndependenceReport {
  bool independent = false;
  // one edge with both endpoints inside the set, when not independent
  std::optional<std::pair<VertexId, VertexId>> violating_edge;
};

IndependenceReport check_independence(const Graph& g,
                                      std::span<const VertexId> set);

struct MaximalityReport {
  bool maximal = false;
  // a vertex that could still be added, when not maximal
  std::optional<VertexId> addable_vertex;
};

/// Requires an independent input set; throws std::invalid_argument
/// otherwise.
MaximalityReport check_maximality(const Graph& g,
                                  std::span<const VertexId> set);

inline constexpr VertexId kBruteForceMaxVertices = 30;

/// Exact maximum independent set cardinality by subset branching with
/// adjacency-mask pruning. Only for n <= 30; throws beyond that.
int brute_force_max_is(const Graph& g);

struct QualityReport {
  std::int64_t cardinality = 0;
  std::int64_t reference_cardinality = 0;
  // positive means smaller (worse) than the reference
  double deviation_pct = 0.0;
  bool independent = false;
  bool maximal = false;
};

/// Cardinality deviation of result against reference,
/// 100 * (reference - cardinality) / reference, plus validity flags for
/// result. Throws when the reference is empty on a non-empty graph.
QualityReport quality_report(const Graph& g, std::span<const VertexId> result,
                             std::span<const VertexId> reference);

}  // namespace tcmis
