#ifndef POWERGRAPH_RNG_HPP
#define POWERGRAPH_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace powergraph {

// mt19937_64 output is pinned by the standard, so seeded runs reproduce
// across platforms as long as no std::*_distribution is involved.
using Rng = std::mt19937_64;

/// Uniform draw from [0, m) without modulo bias.
inline std::uint64_t bounded(Rng& rng, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("bounded(rng, 0)");
    std::uint64_t min = (~m + 1) % m; // 2^64 mod m
    std::uint64_t x = rng();
    while (x < min) x = rng();
    return x % m;
}

/// Uniform k-subset of {0, ..., n-1} via partial Fisher-Yates, sorted.
inline std::vector<std::size_t> sample_subset(Rng& rng, std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("subset size exceeds ground set");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + bounded(rng, n - i)]);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace powergraph

#endif
