#pragma once

#include <string>

#include "forcing/graph.hpp"
#include "forcing/propagation.hpp"

namespace forcing {

enum class SetKind { ZeroForcing, PowerDominating };

/// A constructed candidate set on its host graph. Cardinality is asserted at
/// build time; the forcing/domination claim itself is deliberately left to
/// the propagation module (tests replay every construction through it).
struct ConstructionOutput {
    Graph host;
    VertexSet set;
    SetKind claimed_kind;
    int claimed_cardinality;
    std::string source;
};

/// Zero forcing set of G x K_n derived from a skew forcing chronology of G,
/// of size |B|*n + (|G|-|B|)*(n-2). All free choices are resolved to
/// smallest indices; a white force omits column pair {0,1} on the forcer
/// copy and {2,3} on the forced copy so every associate pair keeps a blue
/// member. Requires n >= 4.
ConstructionOutput tensor_complete_zfs(const Graph& g, int n);
/// Same, from a caller-supplied skew zero forcing set (need not be minimum).
ConstructionOutput tensor_complete_zfs(const Graph& g, int n, const VertexSet& skew_set);

/// The explicit size-t zero forcing set of P_t x K_3 for even t:
/// {(r,2) : r even} together with {(r,0) : r odd}.
ConstructionOutput even_path_k3_zfs(int t);

/// Zero forcing set of P_t x K_n of size (n-2)t for even t, n >= 3.
ConstructionOutput even_path_kn_zfs(int t, int n);

/// Zero forcing set of C_t x K_n: the last copy (odd t) or last two copies
/// (even t) of K_n plus the even-path construction on the remaining path.
/// Size (n-2)t+2 for odd t, (n-2)t+4 for even t.
ConstructionOutput cycle_kn_zfs(int t, int n);

/// The 2n vertices of two consecutive n-cycles in C_n box C_m (m >= n >= 3).
ConstructionOutput torus_zfs(int n, int m);

/// The residue-class power dominating set of (P_t or C_t) x K_n:
/// size ceil(t/2) when t != 2 (mod 4), else t/2 + 1.
ConstructionOutput tensor_complete_pds(BaseFamily family, int t, int n);

/// Zero-forcing upper bound for G*H: (gamma_g or gamma_t_g, depending on
/// whether gamma_P(H) = 1) times (maxdeg(G)|H| + maxdeg(H)).
int lex_zf_bound(const Graph& g, const Graph& h, int gamma_g, int gamma_t_g,
                 bool pd_h_is_one);

}  // namespace forcing
