#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "capax/matrix.hpp"

namespace capax {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Default cap on constructed graph sizes (strong products/powers).
inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t(1) << 20;

// Immutable simple undirected graph over vertices 0..n-1, adjacency held as
// one bitset row per vertex. Row i corresponds to the vertex labeled i, i.e.
// to the (i+1)-th row/column of the adjacency matrix in 1-based presentation.
class Graph {
public:
    explicit Graph(std::vector<Bitset> rows) : adj_(std::move(rows)) {
        const std::size_t n = adj_.size();
        for (std::size_t u = 0; u < n; ++u) {
            if (adj_[u].size() != n) throw std::invalid_argument("ragged adjacency rows");
            if (adj_[u].test(u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            for (auto v = adj_[u].find_first(); v != Bitset::npos; v = adj_[u].find_next(v))
                if (!adj_[v].test(u)) throw std::invalid_argument("asymmetric adjacency");
        }
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : Graph(rows_from_edges(n, edges)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    bool adjacent(int u, int v) const { return adj_[check(u)].test(check(v)); }

    const Bitset& neighbors(int u) const { return adj_[check(u)]; }

    int degree(int u) const { return static_cast<int>(adj_[check(u)].count()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += static_cast<long long>(row.count());
        return twice / 2;
    }

    bool is_regular(int* degree_out = nullptr) const {
        if (adj_.empty()) return true;
        const int d = degree(0);
        for (int u = 1; u < vertex_count(); ++u)
            if (degree(u) != d) return false;
        if (degree_out) *degree_out = d;
        return true;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    static std::vector<Bitset> rows_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n <= 0) throw std::invalid_argument("vertex count must be positive");
        std::vector<Bitset> rows(n, Bitset(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop forbidden");
            rows[u].set(v);
            rows[v].set(u);
        }
        return rows;
    }

    int check(int u) const {
        if (u < 0 || u >= vertex_count()) throw std::out_of_range("vertex index out of range");
        return u;
    }

    std::vector<Bitset> adj_;
};

// Binary m-tuple label; the leftmost tuple coordinate is the most significant
// bit, so (1,0,0,1,0) has value 18.
struct VertexLabel {
    int m = 0;
    std::uint32_t value = 0;

    static VertexLabel from_bits(const std::vector<int>& bits) {
        if (bits.empty() || bits.size() > 31) throw std::invalid_argument("label length out of range");
        VertexLabel label{static_cast<int>(bits.size()), 0};
        for (int b : bits) {
            if (b != 0 && b != 1) throw std::invalid_argument("label coordinate not binary");
            label.value = label.value << 1 | static_cast<std::uint32_t>(b);
        }
        return label;
    }

    std::vector<int> bits() const {
        std::vector<int> out(m);
        for (int i = 0; i < m; ++i) out[i] = value >> (m - 1 - i) & 1u;
        return out;
    }
};

inline int hamming_distance(std::uint32_t u, std::uint32_t v) {
    return std::popcount(u ^ v);
}

// Vertices are binary m-tuples (2^m of them); u ~ v iff d_H(u,v) lies in the
// distance set. Regular of degree sum_{i in D} C(m,i).
inline Graph hamming_graph(int m, const std::vector<int>& distances) {
    if (m < 1 || m > 16) throw std::invalid_argument("hamming graph dimension must be in 1..16");
    std::uint32_t allowed = 0;
    for (int d : distances) {
        if (d < 1 || d > m) throw std::invalid_argument("hamming distance out of range 1..m");
        allowed |= std::uint32_t(1) << d;
    }
    const std::uint32_t n = std::uint32_t(1) << m;
    std::vector<std::uint32_t> deltas;
    for (std::uint32_t x = 1; x < n; ++x)
        if (allowed >> std::popcount(x) & 1u) deltas.push_back(x);
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t x : deltas) rows[u].set(u ^ x);
    return Graph(std::move(rows));
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> rows(n);
    for (int u = 0; u < n; ++u) {
        rows[u] = ~g.neighbors(u);
        rows[u].reset(u);
    }
    return Graph(std::move(rows));
}

// Strong product: vertex (g,h) gets index g*|V(H)|+h; distinct vertices are
// adjacent iff each coordinate pair is equal or adjacent.
inline Graph strong_product(const Graph& g, const Graph& h,
                            std::uint64_t vertex_cap = kDefaultVertexCap) {
    const std::uint64_t ng = g.vertex_count(), nh = h.vertex_count();
    if (ng * nh > vertex_cap)
        throw std::invalid_argument("strong product exceeds vertex cap of " + std::to_string(vertex_cap));
    const std::size_t n = static_cast<std::size_t>(ng * nh);
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::uint64_t a = 0; a < ng; ++a) {
        std::vector<std::uint64_t> ga{a};
        for (auto b = g.neighbors(static_cast<int>(a)).find_first(); b != Bitset::npos;
             b = g.neighbors(static_cast<int>(a)).find_next(b))
            ga.push_back(b);
        for (std::uint64_t x = 0; x < nh; ++x) {
            Bitset& row = rows[a * nh + x];
            for (std::uint64_t b : ga) {
                row.set(b * nh + x);
                const Bitset& hn = h.neighbors(static_cast<int>(x));
                for (auto y = hn.find_first(); y != Bitset::npos; y = hn.find_next(y))
                    row.set(b * nh + y);
            }
            row.reset(a * nh + x);
        }
    }
    return Graph(std::move(rows));
}

inline Graph strong_power(const Graph& g, int k, std::uint64_t vertex_cap = kDefaultVertexCap) {
    if (k < 1) throw std::invalid_argument("strong power exponent must be positive");
    const std::uint64_t n = g.vertex_count();
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
        if (n != 0 && size > vertex_cap / n)
            throw std::invalid_argument("strong power exceeds vertex cap of " + std::to_string(vertex_cap));
        size *= n;
    }
    Graph power = g;
    for (int i = 1; i < k; ++i) power = strong_product(power, g, vertex_cap);
    return power;
}

inline SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const Bitset& row = g.neighbors(i);
        for (auto j = row.find_first(); j != Bitset::npos && static_cast<int>(j) <= i;
             j = row.find_next(j))
            m.set(i, static_cast<int>(j), 1.0);
    }
    return m;
}

}  // namespace capax
