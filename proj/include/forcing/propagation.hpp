#pragma once

#include <cstdint>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

/// One force performed during a closure run. In a skew run, `white_force`
/// records whether the forcer was itself white at the time.
struct ForceEvent {
    int forcer;
    int forced;
    bool white_force = false;

    bool operator==(const ForceEvent&) const = default;
};

/// Ordered record of one closure run. Replaying `events` from `initial`
/// reproduces `final_set`; each vertex is forced at most once.
struct Chronology {
    VertexSet initial;
    VertexSet final_set;
    std::vector<ForceEvent> events;

    bool covers_all() const { return final_set == VertexSet::full(final_set.universe()); }
};

/// Standard zero-forcing closure: a blue vertex with exactly one white
/// neighbor forces it. Deterministic: the applicable force with the
/// smallest (forcer, forced) pair executes first.
Chronology zf_closure(const Graph& g, const VertexSet& blue);

/// Skew closure: any vertex (blue or white) with exactly one white neighbor
/// forces it. The empty start set is allowed.
Chronology skew_zf_closure(const Graph& g, const VertexSet& blue);

/// Power-domination closure: color N[S], then run the zero-forcing closure.
/// The chronology records only the forcing phase; its initial set is N[S].
Chronology pd_closure(const Graph& g, const VertexSet& seeds);

bool is_zero_forcing(const Graph& g, const VertexSet& blue);
bool is_power_dominating(const Graph& g, const VertexSet& seeds);

/// Closure variants that pick a uniformly random applicable force at each
/// step. By confluence the final set matches the canonical run; only the
/// chronology differs.
Chronology zf_closure_randomized(const Graph& g, const VertexSet& blue, std::uint64_t seed);
Chronology skew_zf_closure_randomized(const Graph& g, const VertexSet& blue, std::uint64_t seed);
Chronology pd_closure_randomized(const Graph& g, const VertexSet& seeds, std::uint64_t seed);

/// Reusable buffers for the worklist closure, for callers that run many
/// closures on same-sized graphs (solvers).
struct ClosureScratch {
    std::vector<int> white_count;
    std::vector<int> queue;
    VertexSet blue;
};

/// Worklist closure without chronology. Overwrites scratch.blue with the
/// final set and returns true when everything ends blue.
bool zf_spreads(const Graph& g, const VertexSet& blue, ClosureScratch& scratch);
bool skew_spreads(const Graph& g, const VertexSet& blue, ClosureScratch& scratch);
bool pd_spreads(const Graph& g, const VertexSet& seeds, ClosureScratch& scratch);

/// Final set only (allocating convenience wrappers).
VertexSet zf_final(const Graph& g, const VertexSet& blue);
VertexSet skew_zf_final(const Graph& g, const VertexSet& blue);
VertexSet pd_final(const Graph& g, const VertexSet& seeds);

}  // namespace forcing
