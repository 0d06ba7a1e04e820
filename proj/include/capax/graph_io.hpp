#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/graph.hpp"

namespace capax {

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat graph_format_from_name(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    throw std::invalid_argument("unknown graph format: " + name);
}

// Edge-list format: first line is the vertex count, then one "u v" pair per
// line, 0-based. Blank lines are skipped.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n <= 0)
                throw std::invalid_argument("edge list line 1: expected positive vertex count");
            std::string rest;
            if (fields >> rest) throw std::invalid_argument("edge list line 1: trailing tokens");
            continue;
        }
        long long u, v;
        if (!(fields >> u)) continue;  // blank line
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected exactly two vertex indices");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": vertex index out of range");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw std::invalid_argument("empty edge list input");
    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        const Bitset& row = g.neighbors(u);
        for (auto v = row.find_next(u); v != Bitset::npos; v = row.find_next(v))
            out << u << " " << v << "\n";
    }
    return out.str();
}

namespace detail {

// graph6 upper-triangle bit order: (0,1),(0,2),(1,2),(0,3),...
inline void g6_append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int group = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            group <<= 1;
            if (k + b < bits.size() && bits[k + b]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

inline int g6_byte(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range at offset " +
                                                       std::to_string(pos));
    return c - 63;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>((n >> shift & 0x3f) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>((n >> shift & 0x3f) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(n * (n - 1) / 2);
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i)
            bits.push_back(g.adjacent(static_cast<int>(i), static_cast<int>(j)));
    detail::g6_append_bits(out, bits);
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.starts_with(">>graph6<<")) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    std::uint64_t n;
    if (s[pos] != '~') {
        n = detail::g6_byte(s, pos++);
    } else if (s.size() > 1 && s[1] != '~') {
        ++pos;
        n = 0;
        for (int k = 0; k < 3; ++k) n = n << 6 | static_cast<std::uint64_t>(detail::g6_byte(s, pos++));
    } else {
        pos += 2;
        n = 0;
        for (int k = 0; k < 6; ++k) n = n << 6 | static_cast<std::uint64_t>(detail::g6_byte(s, pos++));
    }
    if (n == 0) throw std::invalid_argument("graph6: zero vertex count");
    if (n > kDefaultVertexCap) throw std::invalid_argument("graph6: vertex count exceeds cap");

    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::size_t expected = pos + (nbits + 5) / 6;
    if (s.size() != expected)
        throw std::invalid_argument("graph6: payload length mismatch (expected " +
                                    std::to_string(expected) + " bytes, got " +
                                    std::to_string(s.size()) + ")");

    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++bit) {
            const int group = detail::g6_byte(s, pos + bit / 6);
            if (group >> (5 - bit % 6) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::EdgeList ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

}  // namespace capax
