#ifndef POWERGRAPH_EMBEDDING_HPP
#define POWERGRAPH_EMBEDDING_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/graph.hpp"

namespace powergraph {

enum class Provenance { kConstructedPhi, kConstructedLongFactor, kOracle };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::kConstructedPhi: return "phi";
        case Provenance::kConstructedLongFactor: return "long-factor";
        case Provenance::kOracle: return "oracle";
    }
    return "?";
}

/// Injective vertex map between two graphs. Pairs are kept sorted by source.
/// For dense graphs the entries are 0-based indices instead of labels.
struct EmbeddingMap {
    std::vector<std::pair<label_t, label_t>> pairs;
    Provenance provenance = Provenance::kOracle;

    void add(label_t from, label_t to) { pairs.emplace_back(from, to); }

    void sort_by_source() {
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
            if (pairs[i].first == pairs[i + 1].first)
                throw std::invalid_argument("embedding maps vertex " +
                                            std::to_string(pairs[i].first) + " twice");
    }

    label_t image_of(label_t v) const {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(v, label_t{0}));
        if (it == pairs.end() || it->first != v)
            throw std::invalid_argument("embedding undefined on vertex " + std::to_string(v));
        return it->second;
    }

    bool injective() const {
        std::vector<label_t> images;
        images.reserve(pairs.size());
        for (const auto& [from, to] : pairs) images.push_back(to);
        std::sort(images.begin(), images.end());
        return std::adjacent_find(images.begin(), images.end()) == images.end();
    }
};

/// True iff the map is injective and preserves adjacency in both directions
/// (an induced embedding). Requires the map to be total on g and to land
/// inside h.
inline bool verify_embedding(const EmbeddingMap& map, const PowerGraph& g, const PowerGraph& h) {
    for (label_t v : g.labels()) map.image_of(v);  // totality
    for (const auto& [from, to] : map.pairs) {
        if (!g.contains(from))
            throw std::invalid_argument("embedding source " + std::to_string(from) +
                                        " is not a vertex of the guest");
        if (!h.contains(to))
            throw std::invalid_argument("embedding target " + std::to_string(to) +
                                        " is not a vertex of the host");
    }
    if (!map.injective()) return false;
    const auto& ls = g.labels();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (g.adjacent(ls[i], ls[j]) != h.adjacent(map.image_of(ls[i]), map.image_of(ls[j])))
                return false;
    return true;
}

/// Dense-index variant of verify_embedding.
inline bool verify_embedding_dense(const EmbeddingMap& map, const DenseGraph& g,
                                   const DenseGraph& h) {
    if (map.pairs.size() != g.order())
        throw std::invalid_argument("embedding is not total on the guest");
    std::vector<bool> seen(g.order(), false);
    for (const auto& [from, to] : map.pairs) {
        if (from >= g.order()) throw std::invalid_argument("embedding source out of range");
        if (to >= h.order()) throw std::invalid_argument("embedding target out of range");
        if (seen[static_cast<std::size_t>(from)])
            throw std::invalid_argument("embedding maps a vertex twice");
        seen[static_cast<std::size_t>(from)] = true;
    }
    if (!map.injective()) return false;
    for (std::size_t i = 0; i < map.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < map.pairs.size(); ++j) {
            const auto& [a, fa] = map.pairs[i];
            const auto& [b, fb] = map.pairs[j];
            if (g.adjacent(a, b) != h.adjacent(fa, fb)) return false;
        }
    return true;
}

} // namespace powergraph

#endif
