#pragma once

#include <string>
#include <vector>

#include "capax/graph.hpp"

namespace capax {

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

// Kneser K(5,2): vertices are the 2-subsets of {0..4}, adjacent iff disjoint.
inline Graph petersen_graph() {
    std::vector<int> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.push_back(1 << a | 1 << b);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(10, edges);
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse " + what + ": '" + s + "'");
    }
}

}  // namespace detail

// Accepted names: hamming:<m>:<d1,d2,...>, complete:<n>, cycle:<n>,
// empty:<n>, petersen.
inline Graph builtin_graph(const std::string& name) {
    const auto parts = detail::split(name, ':');
    const std::string& kind = parts[0];
    if (kind == "petersen") {
        if (parts.size() != 1) throw std::invalid_argument("petersen takes no parameters");
        return petersen_graph();
    }
    if (kind == "hamming") {
        if (parts.size() != 3) throw std::invalid_argument("expected hamming:<m>:<d1,d2,...>");
        const int m = detail::parse_int(parts[1], "hamming dimension");
        std::vector<int> distances;
        if (!parts[2].empty())
            for (const auto& d : detail::split(parts[2], ','))
                distances.push_back(detail::parse_int(d, "hamming distance"));
        return hamming_graph(m, distances);
    }
    if (parts.size() != 2) throw std::invalid_argument("unknown builtin graph: " + name);
    const int n = detail::parse_int(parts[1], "vertex count");
    if (kind == "complete") return complete_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "empty") return empty_graph(n);
    throw std::invalid_argument("unknown builtin graph: " + name);
}

}  // namespace capax
