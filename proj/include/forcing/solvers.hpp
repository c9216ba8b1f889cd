#pragma once

#include <cstdint>

#include "forcing/graph.hpp"
#include "forcing/rational.hpp"

namespace forcing {

/// Default cap on the number of candidate subsets a solver may examine.
/// Overridable per call and via the FORCING_LAB_BUDGET environment variable
/// in the CLI. Instances that project past the cap are beyond desk scale.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Result of an exact minimum-cardinality solve. The witness is the
/// lexicographically smallest passing set of minimum cardinality; `work`
/// counts candidate subsets examined.
struct SolveResult {
    int value;
    VertexSet witness;
    std::uint64_t work;
};

/// Z(G): minimum zero forcing set. Search starts at max(delta(G), #isolated)
/// and sweeps k-subsets in lexicographic order; throws BudgetExceededError
/// when the projected candidate count passes the budget.
SolveResult zero_forcing_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Z^-(G): minimum skew zero forcing set (possibly empty).
SolveResult skew_zero_forcing_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// gamma_P(G): minimum power dominating set. Isolated vertices are forced
/// into every candidate; an edgeless graph yields |G| with witness V.
SolveResult power_domination_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// gamma(G): minimum dominating set.
SolveResult domination_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// gamma_t(G): minimum set with N(S) = V. Throws InfeasibleError when the
/// graph has an isolated vertex.
SolveResult total_domination_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// ceil(Z / maxdeg): the general power-domination lower bound. Requires an
/// edge (throws InfeasibleError on edgeless graphs).
int pd_lower_bound_zf(const Graph& g, int zero_forcing_value);

/// ceil(nullity(A) / maxdeg) for a symmetric matrix with pattern exactly g.
/// Throws SymmetryError / PatternError / InfeasibleError as appropriate.
int pd_lower_bound_nullity(const Graph& g, const RationalMatrix& a);

/// True iff Z <= sum of degrees over the power dominating set `pds`.
/// Throws InfeasibleError when g has an isolated vertex or pds is not
/// power dominating.
bool check_thm31(const Graph& g, const VertexSet& pds, int zero_forcing_value);

}  // namespace forcing
