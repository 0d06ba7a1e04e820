#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "capax/matrix.hpp"
#include "capax/rational.hpp"

namespace capax {

// Binary Krawtchouk polynomial K_k(j) = sum_s (-1)^s C(j,s) C(m-j,k-s): the
// eigenvalue of the distance-k matrix of the m-cube on the j-th eigenspace.
inline BigInt krawtchouk(int m, int k, int j) {
    if (m < 0 || k < 0 || j < 0 || k > m || j > m)
        throw std::out_of_range("krawtchouk indices must satisfy 0 <= k,j <= m");
    BigInt sum = 0;
    for (int s = 0; s <= k; ++s) {
        const BigInt term = binomial(j, s) * binomial(m - j, k - s);
        sum += (s % 2 == 0) ? term : -term;
    }
    return sum;
}

// Entrywise rule f over Hamming distances 0..m, defining the 2^m x 2^m matrix
// with entry (u,v) = f(d_H(u,v)) under the decimal vertex labeling.
struct DistanceProfile {
    int m = 0;
    std::vector<Rational> f;

    DistanceProfile(int m_, std::vector<Rational> values) : m(m_), f(std::move(values)) {
        if (m < 0 || f.size() != static_cast<std::size_t>(m) + 1)
            throw std::invalid_argument("distance profile needs m+1 values");
    }
};

struct SchemeSpectrum {
    struct Line {
        Rational value;
        BigInt multiplicity;  // C(m,j)
    };
    std::vector<Line> by_eigenspace;  // indexed by j = 0..m

    Rational max_value() const {
        Rational best = by_eigenspace.at(0).value;
        for (const auto& line : by_eigenspace)
            if (line.value > best) best = line.value;
        return best;
    }

    Rational min_value() const {
        Rational best = by_eigenspace.at(0).value;
        for (const auto& line : by_eigenspace)
            if (line.value < best) best = line.value;
        return best;
    }

    // Distinct eigenvalues with total multiplicities, descending.
    std::vector<Line> merged() const {
        std::vector<Line> out;
        for (const auto& line : by_eigenspace) {
            bool found = false;
            for (auto& o : out)
                if (o.value == line.value) {
                    o.multiplicity += line.multiplicity;
                    found = true;
                    break;
                }
            if (!found) out.push_back(line);
        }
        std::sort(out.begin(), out.end(),
                  [](const Line& a, const Line& b) { return a.value > b.value; });
        return out;
    }
};

inline RationalSymMatrix profile_matrix(const DistanceProfile& p) {
    if (p.m > 12) throw std::invalid_argument("profile matrix limited to m <= 12");
    const std::uint32_t n = std::uint32_t(1) << p.m;
    RationalSymMatrix out(static_cast<int>(n));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v <= u; ++v)
            out.set(static_cast<int>(u), static_cast<int>(v), p.f[std::popcount(u ^ v)]);
    return out;
}

// Exact spectrum: eigenvalue sum_k f(k) K_k(j) with multiplicity C(m,j).
inline SchemeSpectrum profile_spectrum(const DistanceProfile& p) {
    SchemeSpectrum spectrum;
    spectrum.by_eigenspace.reserve(p.m + 1);
    for (int j = 0; j <= p.m; ++j) {
        Rational value = 0;
        for (int k = 0; k <= p.m; ++k) value += p.f[k] * Rational(krawtchouk(p.m, k, j));
        spectrum.by_eigenspace.push_back({value, binomial(p.m, j)});
    }
    return spectrum;
}

// Entrywise certificate for the Schrijver program on hamming_graph(5,{1,2}):
// distance-5 pairs (the antidiagonal under decimal labeling) get 3, the other
// non-edge distances get 1, edges get -1. Largest eigenvalue: 4.
inline DistanceProfile schrijver_certificate_profile() {
    return DistanceProfile(5, {1, -1, -1, 1, 1, 3});
}

// Entrywise certificate for the Lovasz program on the same graph: every
// non-edge entry is exactly 1. Largest eigenvalue: 16/3.
inline DistanceProfile lovasz_certificate_profile() {
    return DistanceProfile(5, {1, Rational(-7, 9), Rational(-7, 9), 1, 1, 1});
}

inline nlohmann::json to_json(const DistanceProfile& p) {
    std::vector<std::string> values;
    values.reserve(p.f.size());
    for (const auto& v : p.f) values.push_back(to_fraction_string(v));
    return values;
}

inline DistanceProfile distance_profile_from_json(const nlohmann::json& j) {
    std::vector<Rational> values;
    for (const auto& e : j)
        values.push_back(e.is_string() ? parse_fraction(e.get<std::string>())
                                       : Rational(e.get<long long>()));
    if (values.empty()) throw std::invalid_argument("empty distance profile");
    const int m = static_cast<int>(values.size()) - 1;
    return DistanceProfile(m, std::move(values));
}

}  // namespace capax
