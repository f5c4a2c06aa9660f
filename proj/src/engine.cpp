#include "tcmis/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "tcmis/parallel.hpp"
#include "tcmis/spmv.hpp"

namespace tcmis {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

PriorityVector priorities_for(const Graph& g, const EngineConfig& config) {
  switch (config.heuristic) {
    case Heuristic::H1:
      return h1_random(std::max<VertexId>(g.n, 1), config.seed);
    case Heuristic::H2:
    case Heuristic::H3:
      return h2_degree_aware(g, config.seed, config.scale_bits);
    default:
      throw std::invalid_argument(
          "tiled engine only runs h1/h2/h3; use run_luby_reference");
  }
}

}  // namespace

const char* heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::H1: return "h1";
    case Heuristic::H2: return "h2";
    case Heuristic::H3: return "h3";
    case Heuristic::LubyFresh: return "luby-fresh";
    case Heuristic::LubyPerm: return "luby-perm";
  }
  return "?";
}

Heuristic heuristic_from_name(const std::string& name) {
  if (name == "h1") return Heuristic::H1;
  if (name == "h2") return Heuristic::H2;
  if (name == "h3") return Heuristic::H3;
  if (name == "luby-fresh") return Heuristic::LubyFresh;
  if (name == "luby-perm") return Heuristic::LubyPerm;
  throw std::invalid_argument("unknown heuristic '" + name + "'");
}

double MISResult::phase1_ms() const {
  double total = 0;
  for (const auto& it : iterations) total += it.phase1_ms;
  return total;
}
double MISResult::phase2_ms() const {
  double total = 0;
  for (const auto& it : iterations) total += it.phase2_ms;
  return total;
}
double MISResult::phase3_ms() const {
  double total = 0;
  for (const auto& it : iterations) total += it.phase3_ms;
  return total;
}
double MISResult::total_ms() const {
  return phase1_ms() + phase2_ms() + phase3_ms();
}
std::int64_t MISResult::tiles_evaluated() const {
  std::int64_t total = 0;
  for (const auto& it : iterations) total += it.tiles_evaluated;
  return total;
}
std::int64_t MISResult::tiles_skipped() const {
  std::int64_t total = 0;
  for (const auto& it : iterations) total += it.tiles_skipped;
  return total;
}

std::vector<std::uint64_t> compute_max_np(const Graph& g,
                                          const PriorityVector& priorities,
                                          std::span<const VertexState> states,
                                          int workers) {
  std::vector<std::uint64_t> max_np(g.n, kNoNeighborKey);
  parallel_chunks(g.n, workers, [&](std::int64_t lo, std::int64_t hi) {
    for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
      if (states[v] != VertexState::Alive) continue;
      std::uint64_t best = kNoNeighborKey;
      for (VertexId u : g.neighbors_of(v)) {
        if (states[u] != VertexState::Alive) continue;
        best = std::max(best, priority_key(priorities, u));
      }
      max_np[v] = best;
    }
  });
  return max_np;
}

TiledVector generate_candidates(const PriorityVector& priorities,
                                std::span<const std::uint64_t> max_np,
                                std::span<const VertexState> states,
                                int tile_dim, int workers) {
  VertexId n = static_cast<VertexId>(states.size());
  std::vector<std::uint8_t> c(n, 0);
  parallel_chunks(n, workers, [&](std::int64_t lo, std::int64_t hi) {
    for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
      if (states[v] == VertexState::Alive &&
          priority_key(priorities, v) > max_np[v])
        c[v] = 1;
    }
  });
  return pack_vector(c, tile_dim);
}

Phase3Outcome phase3_update(std::span<VertexState> states,
                            std::span<const std::uint8_t> candidates,
                            std::span<const std::int32_t> neighbor_counts,
                            std::vector<VertexId>* newly_selected,
                            int workers) {
  VertexId n = static_cast<VertexId>(states.size());
  if (static_cast<VertexId>(candidates.size()) < n ||
      static_cast<VertexId>(neighbor_counts.size()) != n)
    throw std::invalid_argument("phase3 input lengths must cover n");

  std::atomic<std::int64_t> selected{0};
  std::atomic<std::int64_t> removed{0};
  std::atomic<bool> corrupt{false};
  parallel_chunks(n, workers, [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t sel = 0, rem = 0;
    for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
      if (candidates[v] != 0) {
        if (states[v] != VertexState::Alive) {
          corrupt.store(true, std::memory_order_relaxed);
          return;
        }
        states[v] = VertexState::InMIS;
        ++sel;
      } else if (states[v] == VertexState::Alive && neighbor_counts[v] > 0) {
        states[v] = VertexState::Removed;
        ++rem;
      }
    }
    selected.fetch_add(sel, std::memory_order_relaxed);
    removed.fetch_add(rem, std::memory_order_relaxed);
  });
  if (corrupt.load())
    throw std::logic_error("candidate flagged on a non-alive vertex");

  if (newly_selected) {
    for (VertexId v = 0; v < n; ++v)
      if (candidates[v] != 0) newly_selected->push_back(v);
  }
  return {selected.load(), removed.load()};
}

std::vector<std::uint8_t> run_h3_resolution(const Graph& g,
                                            const PriorityVector& priorities,
                                            std::span<const VertexState> states,
                                            int workers) {
  std::vector<std::uint8_t> pending(g.n, 0);
  std::vector<std::uint8_t> c(g.n, 0);
  std::atomic<std::int64_t> pending_count{0};
  parallel_chunks(g.n, workers, [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t count = 0;
    for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
      if (states[v] == VertexState::Alive) {
        pending[v] = 1;
        ++count;
      }
    }
    pending_count.fetch_add(count, std::memory_order_relaxed);
  });

  std::vector<std::uint8_t> winners(g.n, 0);
  std::int64_t remaining = pending_count.load();
  while (remaining > 0) {
    // select pending vertices that dominate every pending neighbor
    parallel_chunks(g.n, workers, [&](std::int64_t lo, std::int64_t hi) {
      for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
        winners[v] = 0;
        if (!pending[v]) continue;
        std::uint64_t key = priority_key(priorities, v);
        bool dominates = true;
        for (VertexId u : g.neighbors_of(v)) {
          if (pending[u] && priority_key(priorities, u) >= key) {
            dominates = false;
            break;
          }
        }
        winners[v] = dominates ? 1 : 0;
      }
    });

    // winners leave pending as selections, their neighbors as losers
    std::atomic<std::int64_t> dropped{0};
    parallel_chunks(g.n, workers, [&](std::int64_t lo, std::int64_t hi) {
      std::int64_t count = 0;
      for (VertexId v = static_cast<VertexId>(lo); v < hi; ++v) {
        if (!pending[v]) continue;
        if (winners[v]) {
          c[v] = 1;
          pending[v] = 0;
          ++count;
          continue;
        }
        for (VertexId u : g.neighbors_of(v)) {
          if (winners[u]) {
            pending[v] = 0;
            ++count;
            break;
          }
        }
      }
      dropped.fetch_add(count, std::memory_order_relaxed);
    });

    std::int64_t delta = dropped.load();
    if (delta == 0)
      throw std::logic_error("pending set stopped shrinking");  // unreachable
    remaining -= delta;
  }
  return c;
}

MISResult run_tc_mis(const Graph& g, const TiledAdjacency& tiled,
                     const EngineConfig& config) {
  if (tiled.n != g.n)
    throw std::invalid_argument("tiled adjacency built for a different graph");
  const int workers = resolve_workers(config.workers);

  MISResult result;
  result.heuristic = config.heuristic;
  result.seed = config.seed;
  if (g.n == 0) return result;

  PriorityVector priorities = priorities_for(g, config);
  std::vector<VertexState> states(g.n, VertexState::Alive);
  std::int64_t alive = g.n;
  int iteration = 0;

  while (alive > 0) {
    if (++iteration > g.n)
      throw std::runtime_error("iteration cap exceeded; engine livelock");
    IterationStats stats;
    stats.iteration = iteration;

    auto t0 = Clock::now();
    TiledVector candidates;
    if (config.heuristic == Heuristic::H3) {
      candidates = pack_vector(
          run_h3_resolution(g, priorities, states, workers), config.tile_dim);
    } else {
      auto max_np = compute_max_np(g, priorities, states, workers);
      candidates = generate_candidates(priorities, max_np, states,
                                       config.tile_dim, workers);
    }
    stats.phase1_ms = ms_since(t0);

    auto t1 = Clock::now();
    SpmvStats spmv_stats;
    SpmvOptions spmv_options;
    spmv_options.workers = workers;
    auto neighbor_counts =
        tiled_spmv(tiled, candidates, spmv_options, &spmv_stats);
    stats.phase2_ms = ms_since(t1);
    stats.tiles_evaluated = spmv_stats.tiles_evaluated;
    stats.tiles_skipped = spmv_stats.tiles_skipped;

    if (config.iteration_observer)
      config.iteration_observer(
          iteration, {candidates.values.data(), static_cast<std::size_t>(g.n)},
          states);

    auto t2 = Clock::now();
    auto outcome = phase3_update(
        states, {candidates.values.data(), static_cast<std::size_t>(g.n)},
        neighbor_counts, &result.mis, workers);
    stats.phase3_ms = ms_since(t2);

    alive -= outcome.selected + outcome.removed;
    stats.candidates_selected = outcome.selected;
    stats.vertices_removed = outcome.removed;
    stats.alive_remaining = alive;
    result.iterations.push_back(stats);
  }

  std::sort(result.mis.begin(), result.mis.end());
  return result;
}

MISResult run_tc_mis(const Graph& g, const EngineConfig& config) {
  return run_tc_mis(g, tile_graph(g, config.tile_dim), config);
}

MISResult run_luby_reference(const Graph& g, std::uint64_t seed, LubyMode mode,
                             int scale_bits, int workers) {
  MISResult result;
  result.heuristic =
      mode == LubyMode::Fresh ? Heuristic::LubyFresh : Heuristic::LubyPerm;
  result.seed = seed;
  if (g.n == 0) return result;

  PriorityVector priorities;
  if (mode == LubyMode::Permutation)
    priorities = h2_degree_aware(g, seed, scale_bits);

  std::vector<VertexState> states(g.n, VertexState::Alive);
  std::int64_t alive = g.n;
  int iteration = 0;

  while (alive > 0) {
    if (++iteration > g.n)
      throw std::runtime_error("iteration cap exceeded; reference livelock");
    IterationStats stats;
    stats.iteration = iteration;

    auto t0 = Clock::now();
    if (mode == LubyMode::Fresh)
      priorities = h1_random(g.n, combine_seed(seed, iteration));
    auto max_np = compute_max_np(g, priorities, states, workers);
    std::vector<std::uint8_t> candidates(g.n, 0);
    for (VertexId v = 0; v < g.n; ++v)
      if (states[v] == VertexState::Alive &&
          priority_key(priorities, v) > max_np[v])
        candidates[v] = 1;
    stats.phase1_ms = ms_since(t0);

    auto t1 = Clock::now();
    auto neighbor_counts = csr_neighbor_count_oracle(g, candidates);
    stats.phase2_ms = ms_since(t1);

    auto t2 = Clock::now();
    auto outcome =
        phase3_update(states, candidates, neighbor_counts, &result.mis, workers);
    stats.phase3_ms = ms_since(t2);

    alive -= outcome.selected + outcome.removed;
    stats.candidates_selected = outcome.selected;
    stats.vertices_removed = outcome.removed;
    stats.alive_remaining = alive;
    result.iterations.push_back(stats);
  }

  std::sort(result.mis.begin(), result.mis.end());
  return result;
}

MISResult run_mis(const Graph& g, const EngineConfig& config) {
  switch (config.heuristic) {
    case Heuristic::LubyFresh:
      return run_luby_reference(g, config.seed, LubyMode::Fresh,
                                config.scale_bits, config.workers);
    case Heuristic::LubyPerm:
      return run_luby_reference(g, config.seed, LubyMode::Permutation,
                                config.scale_bits, config.workers);
    default:
      return run_tc_mis(g, config);
  }
}

}  // namespace tcmis
