#include "forcing/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

int word_count(int n) { return (n + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() &= (1ULL << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::from_members(int universe, std::span<const int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

bool VertexSet::contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1ULL;
}

void VertexSet::add(int v) {
    if (v < 0 || v >= n_) throw Error("VertexSet: vertex " + std::to_string(v) + " out of range");
    words_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::remove(int v) {
    if (v < 0 || v >= n_) throw Error("VertexSet: vertex " + std::to_string(v) + " out of range");
    words_[v >> 6] &= ~(1ULL << (v & 63));
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0ULL);
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet s = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
    return s;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1) throw Error("graph order must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v))
            throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.rows_[u].add(v);
        g.rows_[v].add(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph with_labels(Graph g, std::vector<Graph::Label> labels) {
    g.labels_ = std::move(labels);
    return g;
}

Graph path(int t) {
    if (t < 1) throw Error("path requires t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(t, edges);
}

Graph cycle(int t) {
    if (t < 3) throw Error("cycle requires t >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(t - 1, 0);
    return Graph::from_edge_list(t, edges);
}

Graph complete(int n) {
    if (n < 1) throw Error("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph three_sun() {
    return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
}

Graph base_family_graph(BaseFamily family, int t) {
    return family == BaseFamily::Path ? path(t) : cycle(t);
}

namespace {

std::vector<Graph::Label> product_labels(int gn, int hn) {
    std::vector<Graph::Label> labels;
    labels.reserve(static_cast<std::size_t>(gn) * hn);
    for (int g = 0; g < gn; ++g)
        for (int h = 0; h < hn; ++h) labels.emplace_back(g, h);
    return labels;
}

template <typename AdjacencyRule>
Graph build_product(const Graph& g, const Graph& h, AdjacencyRule rule) {
    const int gn = g.order(), hn = h.order();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < gn; ++a)
        for (int x = 0; x < hn; ++x)
            for (int b = 0; b < gn; ++b)
                for (int y = 0; y < hn; ++y) {
                    const int u = a * hn + x, v = b * hn + y;
                    if (u < v && rule(a, x, b, y)) edges.emplace_back(u, v);
                }
    Graph p = Graph::from_edge_list(gn * hn, edges);
    return with_labels(std::move(p), product_labels(gn, hn));
}

}  // namespace

Graph tensor(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int a, int x, int b, int y) {
        return g.adjacent(a, b) && h.adjacent(x, y);
    });
}

Graph cartesian(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int a, int x, int b, int y) {
        return (a == b && h.adjacent(x, y)) || (x == y && g.adjacent(a, b));
    });
}

Graph lexicographic(const Graph& g, const Graph& h) {
    return build_product(g, h, [&](int a, int x, int b, int y) {
        return g.adjacent(a, b) || (a == b && h.adjacent(x, y));
    });
}

DegreeStats degree_stats(const Graph& g) {
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi, lo == hi};
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    for (int v : s.members()) out |= g.neighbor_set(v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.order());
    for (int v : s.members()) out |= g.neighbor_set(v);
    return out;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.add(v);
    return out;
}

bool is_connected(const Graph& g) {
    VertexSet seen(g.order());
    std::vector<int> stack{0};
    seen.add(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen.contains(u)) {
                seen.add(u);
                stack.push_back(u);
            }
    }
    return seen.count() == g.order();
}

}  // namespace forcing
