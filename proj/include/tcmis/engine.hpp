#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tcmis/graph.hpp"
#include "tcmis/priorities.hpp"
#include "tcmis/tiling.hpp"

namespace tcmis {

/// Per-vertex lifecycle. Transitions are monotone: a vertex leaves Alive
/// exactly once and never changes again.
enum class VertexState : std::uint8_t { Alive = 0, InMIS = 1, Removed = 2 };

enum class Heuristic { H1, H2, H3, LubyFresh, LubyPerm };

const char* heuristic_name(Heuristic h);
Heuristic heuristic_from_name(const std::string& name);

struct IterationStats {
  int iteration = 0;
  std::int64_t candidates_selected = 0;
  std::int64_t vertices_removed = 0;
  std::int64_t alive_remaining = 0;
  std::int64_t tiles_evaluated = 0;
  std::int64_t tiles_skipped = 0;
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
  double phase3_ms = 0.0;
};

struct MISResult {
  std::vector<VertexId> mis;  // ascending vertex ids
  std::vector<IterationStats> iterations;
  Heuristic heuristic = Heuristic::H3;
  std::uint64_t seed = 0;

  std::int64_t cardinality() const {
    return static_cast<std::int64_t>(mis.size());
  }
  double phase1_ms() const;
  double phase2_ms() const;
  double phase3_ms() const;
  double total_ms() const;
  std::int64_t tiles_evaluated() const;
  std::int64_t tiles_skipped() const;
};

struct EngineConfig {
  Heuristic heuristic = Heuristic::H3;
  std::uint64_t seed = 1;
  int tile_dim = 16;
  int workers = 0;  // <= 0 means hardware concurrency
  int scale_bits = kDefaultScaleBits;
  // Test hook, called once per iteration with the finalized candidate
  // vector and the states it was generated against (before the state
  // update). Null in normal runs.
  std::function<void(int iteration, std::span<const std::uint8_t> candidates,
                     std::span<const VertexState> states)>
      iteration_observer;
};

/// Max over alive neighbors of the (p, id) key, per alive vertex;
/// kNoNeighborKey when no neighbor is alive, so such vertices always pass
/// the strict dominance test. Entries for non-alive vertices are
/// kNoNeighborKey and carry no meaning.
std::vector<std::uint64_t> compute_max_np(const Graph& g,
                                          const PriorityVector& priorities,
                                          std::span<const VertexState> states,
                                          int workers = 1);

/// Candidate indicator: c[v] = 1 iff v is alive and its key strictly
/// exceeds max_np[v]. Packed into the tile layout of tile_dim.
TiledVector generate_candidates(const PriorityVector& priorities,
                                std::span<const std::uint64_t> max_np,
                                std::span<const VertexState> states,
                                int tile_dim, int workers = 1);

struct Phase3Outcome {
  std::int64_t selected = 0;
  std::int64_t removed = 0;
};

/// State update rules, each vertex from its own (c, nc, state) only:
/// candidates join the MIS, alive non-candidates with a candidate
/// neighbor are removed, everyone else is untouched. A candidate flag on
/// a non-alive vertex indicates engine corruption and throws.
Phase3Outcome phase3_update(std::span<VertexState> states,
                            std::span<const std::uint8_t> candidates,
                            std::span<const std::int32_t> neighbor_counts,
                            std::vector<VertexId>* newly_selected = nullptr,
                            int workers = 1);

/// Ordered conflict resolution for h3. Starting from the alive set as the
/// pending set, repeatedly select pending vertices that strictly dominate
/// all pending neighbors and drop their pending neighbors, until nothing
/// is pending. The union of selections is returned; it never contains two
/// adjacent vertices, and alive states are not modified here.
std::vector<std::uint8_t> run_h3_resolution(const Graph& g,
                                            const PriorityVector& priorities,
                                            std::span<const VertexState> states,
                                            int workers = 1);

/// Three-phase tiled MIS over a prebuilt tiled adjacency (heuristics H1,
/// H2, H3). Deterministic in (graph, heuristic, seed, tile_dim) for any
/// worker count; terminates in at most n iterations.
MISResult run_tc_mis(const Graph& g, const TiledAdjacency& tiled,
                     const EngineConfig& config);

/// Convenience overload that tiles g first.
MISResult run_tc_mis(const Graph& g, const EngineConfig& config);

enum class LubyMode {
  Fresh,        // redraw random priorities every iteration
  Permutation,  // fix degree-aware priorities once, reuse across iterations
};

/// CSR reference implementation of the classic randomized MIS rounds.
/// Permutation mode with degree-aware priorities is the quality reference
/// the heuristic comparisons measure against.
MISResult run_luby_reference(const Graph& g, std::uint64_t seed, LubyMode mode,
                             int scale_bits = kDefaultScaleBits,
                             int workers = 1);

/// Dispatch on heuristic id: H1/H2/H3 run the tiled engine, LubyFresh and
/// LubyPerm run the CSR reference.
MISResult run_mis(const Graph& g, const EngineConfig& config);

}  // namespace tcmis
