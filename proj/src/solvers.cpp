#include "forcing/solvers.hpp"

#include <algorithm>
#include <limits>

#include "forcing/errors.hpp"
#include "forcing/propagation.hpp"

namespace forcing {

namespace {

/// C(n, k), saturating at `cap` to avoid overflow.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        if (result > cap / static_cast<std::uint64_t>(n - k + i)) return cap + 1;
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

/// Sweeps k-subsets of `free_vertices` in lexicographic order, each unioned
/// with `forced`, for k = start_k .. n. The first passing candidate at the
/// smallest feasible cardinality is the lexicographically smallest minimum
/// witness because `forced` is constant across candidates.
template <typename Pred>
SolveResult solve_minimum(const Graph& g, const VertexSet& forced, int start_k,
                          std::uint64_t budget, Pred pred) {
    const int n = g.order();
    const std::vector<int> free_vertices = forced.complement().members();
    const int free_count = static_cast<int>(free_vertices.size());
    const int base = forced.count();

    std::uint64_t work = 0;
    std::vector<int> pos;
    for (int k = std::max(start_k, base); k <= n; ++k) {
        const int pick = k - base;
        const std::uint64_t level = binomial_capped(free_count, pick, budget);
        if (work > budget || level > budget - work)
            throw BudgetExceededError(k, work, budget);

        pos.resize(pick);
        for (int i = 0; i < pick; ++i) pos[i] = i;
        VertexSet candidate = forced;
        for (;;) {
            candidate = forced;
            for (int i = 0; i < pick; ++i) candidate.add(free_vertices[pos[i]]);
            ++work;
            if (pred(candidate)) return SolveResult{k, candidate, work};

            // next combination
            int i = pick - 1;
            while (i >= 0 && pos[i] == free_count - pick + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < pick; ++j) pos[j] = pos[j - 1] + 1;
        }
        if (pick == free_count) break;  // only the full set remains; nothing bigger helps
    }
    // Unreachable for the predicates used here: the full vertex set always
    // passes each of them.
    throw Error("no subset passed the predicate");
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

SolveResult zero_forcing_number(const Graph& g, std::uint64_t budget) {
    const VertexSet isolated = isolated_vertices(g);
    const int start = std::max(degree_stats(g).min_degree, isolated.count());
    ClosureScratch scratch;
    return solve_minimum(g, isolated, start, budget,
                         [&](const VertexSet& b) { return zf_spreads(g, b, scratch); });
}

SolveResult skew_zero_forcing_number(const Graph& g, std::uint64_t budget) {
    const VertexSet isolated = isolated_vertices(g);
    ClosureScratch scratch;
    return solve_minimum(g, isolated, isolated.count(), budget,
                         [&](const VertexSet& b) { return skew_spreads(g, b, scratch); });
}

SolveResult power_domination_number(const Graph& g, std::uint64_t budget) {
    const VertexSet isolated = isolated_vertices(g);
    ClosureScratch scratch;
    return solve_minimum(g, isolated, std::max(1, isolated.count()), budget,
                         [&](const VertexSet& s) { return pd_spreads(g, s, scratch); });
}

SolveResult domination_number(const Graph& g, std::uint64_t budget) {
    const VertexSet isolated = isolated_vertices(g);
    const VertexSet everything = VertexSet::full(g.order());
    return solve_minimum(g, isolated, std::max(1, isolated.count()), budget,
                         [&](const VertexSet& s) {
                             return closed_neighborhood(g, s) == everything;
                         });
}

SolveResult total_domination_number(const Graph& g, std::uint64_t budget) {
    if (!isolated_vertices(g).empty())
        throw InfeasibleError("total domination undefined: graph has an isolated vertex");
    const VertexSet everything = VertexSet::full(g.order());
    return solve_minimum(g, VertexSet(g.order()), 1, budget,
                         [&](const VertexSet& s) {
                             return open_neighborhood(g, s) == everything;
                         });
}

int pd_lower_bound_zf(const Graph& g, int zero_forcing_value) {
    const int maxdeg = degree_stats(g).max_degree;
    if (maxdeg == 0) throw InfeasibleError("bound requires a graph with an edge");
    return ceil_div(zero_forcing_value, maxdeg);
}

int pd_lower_bound_nullity(const Graph& g, const RationalMatrix& a) {
    if (!is_symmetric(a)) throw SymmetryError("bound requires a symmetric matrix");
    if (!(pattern_graph(a) == g))
        throw PatternError("matrix pattern does not match the graph");
    const int maxdeg = degree_stats(g).max_degree;
    if (maxdeg == 0) throw InfeasibleError("bound requires a graph with an edge");
    return ceil_div(nullity(a), maxdeg);
}

bool check_thm31(const Graph& g, const VertexSet& pds, int zero_forcing_value) {
    if (!isolated_vertices(g).empty())
        throw InfeasibleError("degree-sum bound requires no isolated vertices");
    if (!is_power_dominating(g, pds))
        throw InfeasibleError("the supplied set is not power dominating");
    int degree_sum = 0;
    for (int v : pds.members()) degree_sum += g.degree(v);
    return zero_forcing_value <= degree_sum;
}

}  // namespace forcing
