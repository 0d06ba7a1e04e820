#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "capax/graph.hpp"
#include "capax/rational.hpp"

namespace capax {

struct IndependentSetCertificate {
    std::vector<int> vertices;  // sorted ascending

    int size() const { return static_cast<int>(vertices.size()); }
};

struct SearchBudget {
    long long max_nodes = 50'000'000;
    double max_seconds = 60.0;

    void validate() const {
        if (max_nodes <= 0 || max_seconds <= 0)
            throw std::invalid_argument("search budget must be positive");
    }
};

enum class SearchStatus { Exact, LowerBound };

struct MisResult {
    int size = 0;
    IndependentSetCertificate certificate;
    SearchStatus status = SearchStatus::Exact;
    long long nodes_explored = 0;
};

inline bool is_independent_set(const Graph& g, const std::vector<int>& vertices) {
    Bitset seen(g.vertex_count());
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
        if (seen.test(v))
            throw std::invalid_argument("duplicate vertex in set: " + std::to_string(v));
        seen.set(v);
    }
    for (int v : vertices)
        if ((g.neighbors(v) & seen).any()) return false;
    return true;
}

// Upper bound on the largest independent set inside `candidates`: a greedy
// clique cover, since every clique meets an independent set at most once.
inline int clique_cover_bound(const Graph& g, const Bitset& candidates) {
    if (candidates.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("candidate bitset size mismatch");
    Bitset uncovered = candidates;
    int cliques = 0;
    while (uncovered.any()) {
        ++cliques;
        auto v = uncovered.find_first();
        uncovered.reset(v);
        Bitset extend = uncovered & g.neighbors(static_cast<int>(v));
        while (extend.any()) {
            auto u = extend.find_first();
            uncovered.reset(u);
            extend.reset(u);
            extend &= g.neighbors(static_cast<int>(u));
        }
    }
    return cliques;
}

// Parallelism cap for searches, from CAPAX_THREADS (>= 1). The search itself
// runs on a single thread; the cap bounds whatever pool a caller may use.
inline int search_thread_cap() {
    if (const char* env = std::getenv("CAPAX_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 1;
}

namespace detail {

class MisSearch {
public:
    MisSearch(const Graph& g, const SearchBudget& budget)
        : g_(g), budget_(budget),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds))) {}

    MisResult run() {
        const int n = g_.vertex_count();
        Bitset all(n);
        all.set();

        // Greedy warm start, ascending index.
        Bitset avail = all;
        while (avail.any()) {
            const auto v = avail.find_first();
            best_.push_back(static_cast<int>(v));
            avail.reset(v);
            avail -= g_.neighbors(static_cast<int>(v));
        }

        std::vector<int> current;
        expand(all, current);

        std::sort(best_.begin(), best_.end());
        return {static_cast<int>(best_.size()),
                IndependentSetCertificate{best_},
                exhausted_ ? SearchStatus::LowerBound : SearchStatus::Exact,
                nodes_};
    }

private:
    bool budget_spent() {
        if (exhausted_) return true;
        if (nodes_ >= budget_.max_nodes ||
            (nodes_ % 1024 == 0 && std::chrono::steady_clock::now() >= deadline_))
            exhausted_ = true;
        return exhausted_;
    }

    int bound(const Bitset& candidates) const {
        const auto count = static_cast<int>(candidates.count());
        return count <= 64 ? clique_cover_bound(g_, candidates) : count;
    }

    void expand(const Bitset& candidates, std::vector<int>& current) {
        ++nodes_;
        if (budget_spent()) return;
        if (current.size() > best_.size()) best_ = current;
        if (!candidates.any()) return;
        if (static_cast<int>(current.size()) + bound(candidates) <= static_cast<int>(best_.size()))
            return;

        // Branch vertex: max degree within the candidate set, lowest index on ties.
        int branch = -1;
        std::size_t branch_deg = 0;
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            const std::size_t deg = (g_.neighbors(static_cast<int>(v)) & candidates).count();
            if (branch < 0 || deg > branch_deg) {
                branch = static_cast<int>(v);
                branch_deg = deg;
            }
        }

        Bitset include = candidates;
        include.reset(branch);
        include -= g_.neighbors(branch);
        current.push_back(branch);
        expand(include, current);
        current.pop_back();

        Bitset exclude = candidates;
        exclude.reset(branch);
        expand(exclude, current);
    }

    const Graph& g_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> best_;
    long long nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail

// Exact maximum independent set by branch and bound with greedy clique-cover
// pruning; budget exhaustion degrades the result to a lower bound, never an
// error.
inline MisResult max_independent_set(const Graph& g, const SearchBudget& budget = {}) {
    budget.validate();
    return detail::MisSearch(g, budget).run();
}

enum class CountStatus { Exact, Partial };

struct CountResult {
    BigInt count = 0;
    CountStatus status = CountStatus::Exact;
    long long nodes_explored = 0;
};

namespace detail {

class SizeCounter {
public:
    SizeCounter(const Graph& g, int target, const SearchBudget& budget)
        : g_(g), target_(target), budget_(budget),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds))) {}

    CountResult run() {
        Bitset all(g_.vertex_count());
        all.set();
        rec(all, 0);
        return {count_, exhausted_ ? CountStatus::Partial : CountStatus::Exact, nodes_};
    }

private:
    bool budget_spent() {
        if (exhausted_) return true;
        if (nodes_ >= budget_.max_nodes ||
            (nodes_ % 1024 == 0 && std::chrono::steady_clock::now() >= deadline_))
            exhausted_ = true;
        return exhausted_;
    }

    void rec(const Bitset& candidates, int size) {
        ++nodes_;
        if (budget_spent()) return;
        if (size == target_) {
            ++count_;
            return;
        }
        const int need = target_ - size;
        const auto avail = static_cast<int>(candidates.count());
        if (avail < need) return;
        if (avail <= 64 && clique_cover_bound(g_, candidates) < need) return;
        // Members are taken in ascending order, so each set is counted once.
        for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            Bitset next = candidates;
            for (std::size_t u = 0; u <= v; ++u) next.reset(u);
            next -= g_.neighbors(static_cast<int>(v));
            rec(next, size + 1);
            if (exhausted_) return;
        }
    }

    const Graph& g_;
    int target_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    BigInt count_ = 0;
    long long nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail

// Number of independent sets of exactly the target size. Optional, budgeted:
// on exhaustion the count so far is returned with Partial status.
inline CountResult count_independent_sets(const Graph& g, int target_size,
                                          const SearchBudget& budget = {}) {
    budget.validate();
    if (target_size < 0) throw std::invalid_argument("target size must be non-negative");
    if (target_size == 0) return {1, CountStatus::Exact, 0};
    return detail::SizeCounter(g, target_size, budget).run();
}

// Certificates serialize as JSON arrays of vertex indices.
inline nlohmann::json to_json(const IndependentSetCertificate& cert) { return cert.vertices; }

inline IndependentSetCertificate certificate_from_json(const nlohmann::json& j) {
    IndependentSetCertificate cert;
    for (const auto& e : j) cert.vertices.push_back(e.get<int>());
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

}  // namespace capax
