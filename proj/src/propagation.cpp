#include "forcing/propagation.hpp"

#include <random>

namespace forcing {

namespace {

enum class Rule { Standard, Skew };

void init_white_counts(const Graph& g, const VertexSet& blue, std::vector<int>& wc) {
    const int n = g.order();
    wc.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (!blue.contains(u)) ++c;
        wc[v] = c;
    }
}

bool eligible(Rule rule, const VertexSet& blue, const std::vector<int>& wc, int v) {
    return wc[v] == 1 && (rule == Rule::Skew || blue.contains(v));
}

int unique_white_neighbor(const Graph& g, const VertexSet& blue, int v) {
    for (int u : g.neighbors(v))
        if (!blue.contains(u)) return u;
    return -1;
}

/// Scan-based closure; scans ascending so the smallest applicable forcer
/// (hence the smallest (forcer, forced) pair) goes first. A randomized
/// selector may be supplied for confluence testing.
Chronology run_closure(const Graph& g, const VertexSet& start, Rule rule,
                       std::mt19937_64* rng) {
    Chronology chron;
    chron.initial = start;
    VertexSet blue = start;
    const int n = g.order();
    std::vector<int> wc;
    init_white_counts(g, blue, wc);

    std::vector<int> candidates;
    for (;;) {
        int forcer = -1;
        if (rng == nullptr) {
            for (int v = 0; v < n; ++v)
                if (eligible(rule, blue, wc, v)) {
                    forcer = v;
                    break;
                }
        } else {
            candidates.clear();
            for (int v = 0; v < n; ++v)
                if (eligible(rule, blue, wc, v)) candidates.push_back(v);
            if (!candidates.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                forcer = candidates[pick(*rng)];
            }
        }
        if (forcer < 0) break;

        const int forced = unique_white_neighbor(g, blue, forcer);
        chron.events.push_back({forcer, forced,
                                rule == Rule::Skew && !blue.contains(forcer)});
        blue.add(forced);
        for (int u : g.neighbors(forced)) --wc[u];
    }
    chron.final_set = std::move(blue);
    return chron;
}

}  // namespace

Chronology zf_closure(const Graph& g, const VertexSet& blue) {
    return run_closure(g, blue, Rule::Standard, nullptr);
}

Chronology skew_zf_closure(const Graph& g, const VertexSet& blue) {
    return run_closure(g, blue, Rule::Skew, nullptr);
}

Chronology pd_closure(const Graph& g, const VertexSet& seeds) {
    return run_closure(g, closed_neighborhood(g, seeds), Rule::Standard, nullptr);
}

Chronology zf_closure_randomized(const Graph& g, const VertexSet& blue, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_closure(g, blue, Rule::Standard, &rng);
}

Chronology skew_zf_closure_randomized(const Graph& g, const VertexSet& blue,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_closure(g, blue, Rule::Skew, &rng);
}

Chronology pd_closure_randomized(const Graph& g, const VertexSet& seeds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_closure(g, closed_neighborhood(g, seeds), Rule::Standard, &rng);
}

namespace {

bool spreads_worklist(const Graph& g, const VertexSet& start, Rule rule,
                      ClosureScratch& s) {
    const int n = g.order();
    s.blue = start;
    init_white_counts(g, s.blue, s.white_count);
    s.queue.clear();
    int blue_count = s.blue.count();
    if (blue_count == n) return true;

    for (int v = 0; v < n; ++v)
        if (eligible(rule, s.blue, s.white_count, v)) s.queue.push_back(v);

    while (!s.queue.empty()) {
        const int v = s.queue.back();
        s.queue.pop_back();
        if (!eligible(rule, s.blue, s.white_count, v)) continue;
        const int w = unique_white_neighbor(g, s.blue, v);
        s.blue.add(w);
        if (++blue_count == n) return true;
        for (int u : g.neighbors(w)) {
            if (--s.white_count[u] == 1 && (rule == Rule::Skew || s.blue.contains(u)))
                s.queue.push_back(u);
        }
        // Becoming blue can make w itself a forcer under the standard rule.
        if (rule == Rule::Standard && s.white_count[w] == 1) s.queue.push_back(w);
    }
    return false;
}

}  // namespace

bool zf_spreads(const Graph& g, const VertexSet& blue, ClosureScratch& scratch) {
    return spreads_worklist(g, blue, Rule::Standard, scratch);
}

bool skew_spreads(const Graph& g, const VertexSet& blue, ClosureScratch& scratch) {
    return spreads_worklist(g, blue, Rule::Skew, scratch);
}

bool pd_spreads(const Graph& g, const VertexSet& seeds, ClosureScratch& scratch) {
    return spreads_worklist(g, closed_neighborhood(g, seeds), Rule::Standard, scratch);
}

bool is_zero_forcing(const Graph& g, const VertexSet& blue) {
    ClosureScratch s;
    return zf_spreads(g, blue, s);
}

bool is_power_dominating(const Graph& g, const VertexSet& seeds) {
    ClosureScratch s;
    return pd_spreads(g, seeds, s);
}

VertexSet zf_final(const Graph& g, const VertexSet& blue) {
    ClosureScratch s;
    zf_spreads(g, blue, s);
    return s.blue;
}

VertexSet skew_zf_final(const Graph& g, const VertexSet& blue) {
    ClosureScratch s;
    skew_spreads(g, blue, s);
    return s.blue;
}

VertexSet pd_final(const Graph& g, const VertexSet& seeds) {
    ClosureScratch s;
    pd_spreads(g, seeds, s);
    return s.blue;
}

}  // namespace forcing
