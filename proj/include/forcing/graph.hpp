#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace forcing {

/// Subset of the vertices 0..n-1 of a fixed host graph, stored as a bitset.
/// Unused tail bits of the last word are kept at zero, so equality and
/// ordering can compare words directly.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet from_members(int universe, std::span<const int> members);

    int universe() const { return n_; }
    bool contains(int v) const;
    void add(int v);
    void remove(int v);
    void clear();

    int count() const;
    bool empty() const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet complement() const;
    std::vector<int> members() const;
    /// Smallest member, or -1 when empty.
    int first() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    /// Set difference (this minus other).
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph: vertex count plus sorted adjacency lists.
/// Product graphs additionally carry a per-vertex coordinate label (g,h).
/// Graphs are immutable once built; all algorithms take them read-only.
class Graph {
public:
    using Label = std::pair<int, int>;

    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// out-of-range endpoints, and duplicate edges.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return neighbor_set(u).contains(v); }
    /// Neighborhood of v as a bitset (N(v), open).
    const VertexSet& neighbor_set(int v) const { return rows_[v]; }

    const std::optional<std::vector<Label>>& labels() const { return labels_; }

    /// Structural equality: same order and same adjacency. Labels are
    /// bookkeeping for product coordinates and do not participate.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    friend Graph with_labels(Graph g, std::vector<Graph::Label> labels);

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_;
    std::optional<std::vector<Label>> labels_;
};

// Named families.
Graph path(int t);      // t >= 1
Graph cycle(int t);     // t >= 3
Graph complete(int n);  // n >= 1
/// Triangle 0,1,2 with pendant vertices 3~0, 4~1, 5~2.
/// Degree multiset {3,3,3,1,1,1}, six edges.
Graph three_sun();

/// Distinguishes path-based from cycle-based parametrized hosts.
enum class BaseFamily { Path, Cycle };
Graph base_family_graph(BaseFamily family, int t);

// Graph products. The vertex (g,h) sits at index g*|H| + h, and every
// product carries the coordinate labels.
Graph tensor(const Graph& g, const Graph& h);
Graph cartesian(const Graph& g, const Graph& h);
Graph lexicographic(const Graph& g, const Graph& h);

struct DegreeStats {
    int min_degree;
    int max_degree;
    bool regular;
};
DegreeStats degree_stats(const Graph& g);

/// N[S] = S together with every neighbor of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// N(S), the union of open neighborhoods.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// Vertices of degree zero.
VertexSet isolated_vertices(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace forcing
