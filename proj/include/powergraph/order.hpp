#ifndef POWERGRAPH_ORDER_HPP
#define POWERGRAPH_ORDER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/embedding.hpp"
#include "powergraph/factor_matrix.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/rng.hpp"

namespace powergraph {

/// An injective row map h with h(i) = i for every i <= floor(log2 c).
/// Stores the identity entries for the low rows plus one entry per matched
/// high row.
struct CPreservingMap {
    label_t c = 1;
    unsigned low_threshold = 0;
    std::map<unsigned, unsigned> assignments;

    unsigned map_row(unsigned i) const {
        if (i <= low_threshold) return i;
        auto it = assignments.find(i);
        if (it == assignments.end())
            throw std::invalid_argument("row " + std::to_string(i) + " is unassigned");
        return it->second;
    }
};

/// Decides G <=_c H: the low rows of M_G must be dominated pointwise by the
/// same rows of M_H, and the nonempty high rows of M_G must match injectively
/// into dominating high rows of M_H.
inline std::optional<CPreservingMap> leq_c(const PowerGraph& g, const PowerGraph& h, label_t c) {
    const FactorMatrix mg = factor_matrix(g, c);
    const FactorMatrix mh = factor_matrix(h, c);
    const unsigned threshold = mg.low_threshold();

    CPreservingMap witness;
    witness.c = c;
    witness.low_threshold = threshold;
    for (unsigned l = 0; l <= threshold; ++l) {
        witness.assignments[l] = l;
        if (!mh.row_dominates(l, mg, l)) return std::nullopt;
    }

    const std::vector<unsigned> g_rows = mg.high_rows();
    const std::vector<unsigned> h_rows = mh.high_rows();
    if (g_rows.size() > h_rows.size()) return std::nullopt;

    // candidate hosts in increasing row order, except that a row's own index
    // comes first so that G <=_c G yields the identity witness
    std::vector<std::vector<std::size_t>> candidates(g_rows.size());
    for (std::size_t i = 0; i < g_rows.size(); ++i) {
        for (std::size_t j = 0; j < h_rows.size(); ++j)
            if (mh.row_dominates(h_rows[j], mg, g_rows[i])) candidates[i].push_back(j);
        auto self = std::find_if(candidates[i].begin(), candidates[i].end(),
                                 [&](std::size_t j) { return h_rows[j] == g_rows[i]; });
        if (self != candidates[i].end()) std::rotate(candidates[i].begin(), self, self + 1);
    }

    // augmenting-path matching; process heavier guest rows first
    std::vector<std::size_t> order(g_rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::uint64_t> weight(g_rows.size(), 0);
    for (std::size_t i = 0; i < g_rows.size(); ++i)
        for (const auto& [id, cnt] : mg.rows().at(g_rows[i])) weight[i] += cnt;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });

    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_h(h_rows.size(), kFree);  // host row -> guest row
    std::vector<bool> visited;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j : candidates[i]) {
            if (visited[j]) continue;
            visited[j] = true;
            if (match_h[j] == kFree || self(self, match_h[j])) {
                match_h[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i : order) {
        visited.assign(h_rows.size(), false);
        if (!augment(augment, i)) return std::nullopt;
    }
    for (std::size_t j = 0; j < h_rows.size(); ++j)
        if (match_h[j] != kFree) witness.assignments[g_rows[match_h[j]]] = h_rows[j];
    return witness;
}

/// Builds the vertex map behind a successful <=_c decision: every factor of g
/// goes to a distinct t-equivalent factor of h in the cell chosen by the row
/// map, targets taken in increasing label order, i-th vertex to i-th vertex.
/// The result is verified as an induced embedding before it is returned.
inline EmbeddingMap build_embedding_phi(const PowerGraph& g, const PowerGraph& h, label_t c,
                                        const CPreservingMap& witness) {
    auto group = [c](const PowerGraph& x) {
        std::map<std::pair<unsigned, TClassId>, std::vector<Factor>> cells;
        for (const Factor& f : factor_components(x)) {
            if (f.length() > c)
                throw std::invalid_argument("factor [" + std::to_string(f.lo) + ", " +
                                            std::to_string(f.hi) + "] is longer than the bound " +
                                            std::to_string(c));
            auto [l, t] = classify_factor(f);
            cells[{l.i, t}].push_back(f);  // factor_components is already label-ordered
        }
        return cells;
    };
    const auto g_cells = group(g);
    const auto h_cells = group(h);

    EmbeddingMap map;
    map.provenance = Provenance::kConstructedPhi;
    for (const auto& [cell, factors] : g_cells) {
        const auto& [l, t] = cell;
        auto target = h_cells.find({witness.map_row(l), t});
        if (target == h_cells.end() || target->second.size() < factors.size())
            throw std::logic_error("leq_c witness does not cover cell l=" + std::to_string(l));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const Factor& from = factors[k];
            const Factor& to = target->second[k];
            for (label_t d = 0; d < from.length(); ++d) map.add(from.lo + d, to.lo + d);
        }
    }
    map.sort_by_source();
    if (!verify_embedding(map, g, h))
        throw std::logic_error("constructed phi map is not an induced embedding");
    return map;
}

/// The shift embedding from the long-factor argument: with n the largest
/// label of g and 2^k the smallest power of two above n, any factor of the
/// host of length at least 5n has a vertex y of power exactly 2^k among its
/// first 4n vertices, and z -> y + z is an induced embedding.
inline std::optional<EmbeddingMap> long_factor_embedding(const PowerGraph& g,
                                                         const PowerGraph& host) {
    EmbeddingMap map;
    map.provenance = Provenance::kConstructedLongFactor;
    if (g.empty()) return map;

    const label_t n = g.max_label();
    std::optional<Factor> target;
    for (const Factor& f : factor_components(host))
        if (f.length() >= 5 * n) {
            target = f;
            break;
        }
    if (!target) return std::nullopt;

    const label_t power = label_t{1} << std::bit_width(n);  // smallest 2^k > n
    label_t y = 0;
    for (label_t v = target->lo; v < target->lo + 4 * n; ++v)
        if (q(v) == power) {
            y = v;
            break;
        }
    if (y == 0) throw std::logic_error("no vertex of power " + std::to_string(power) +
                                       " among the first 4n vertices of the long factor");
    for (label_t z : g.labels()) {
        if (q(y + z) != q(z))
            throw std::logic_error("shift embedding does not preserve q at " + std::to_string(z));
        map.add(z, y + z);
    }
    map.sort_by_source();
    if (!verify_embedding(map, g, host))
        throw std::logic_error("shift map is not an induced embedding");
    return map;
}

enum class ComparisonRoute { kLongFactor, kLeqC, kOracle };

inline const char* comparison_route_name(ComparisonRoute r) {
    switch (r) {
        case ComparisonRoute::kLongFactor: return "long-factor";
        case ComparisonRoute::kLeqC: return "leq-c";
        case ComparisonRoute::kOracle: return "oracle";
    }
    return "?";
}

/// 1-based indices i < j with a verified embedding of the i-th graph into the
/// j-th one.
struct ComparablePair {
    std::size_t i = 0;
    std::size_t j = 0;
    EmbeddingMap map;
    ComparisonRoute route = ComparisonRoute::kLeqC;
};

struct ComparisonOptions {
    bool oracle_fallback = false;  // exponential-time last resort, off by default
    SearchBudget budget;
};

inline bool factors_bounded_by(const PowerGraph& g, label_t c) {
    for (const Factor& f : factor_components(g))
        if (f.length() > c) return false;
    return true;
}

/// Random induced subgraph of D_host_n with factor-components of length at
/// most c: a uniform subset of up to max_order labels, repaired by dropping
/// labels that would extend a run beyond c. Used by the comparable-pair
/// experiments, where small graphs keep the factor matrices in a set dense
/// enough for dominance collisions.
inline PowerGraph random_c_bounded_subgraph(Rng& rng, label_t host_n, label_t c,
                                            label_t max_order = 24) {
    if (host_n == 0 || c == 0) throw std::invalid_argument("host size and bound must be >= 1");
    const std::size_t k =
        static_cast<std::size_t>(bounded(rng, std::min<label_t>(host_n, max_order) + 1));
    std::vector<std::size_t> picks = sample_subset(rng, static_cast<std::size_t>(host_n), k);
    std::vector<label_t> labels;
    label_t run = 0;
    for (std::size_t p : picks) {
        const label_t v = static_cast<label_t>(p) + 1;
        if (!labels.empty() && v == labels.back() + 1) {
            if (run == c) continue;  // would make a factor longer than c
            ++run;
        } else {
            run = 1;
        }
        labels.push_back(v);
    }
    return PowerGraph::from_labels(std::move(labels));
}

/// First comparable pair (i < j, lexicographic scan) found via the
/// long-factor construction, then <=_c with the constructed phi map, then the
/// optional generic oracle.
inline std::optional<ComparablePair> find_comparable_pair(std::span<const PowerGraph> sequence,
                                                          label_t c,
                                                          const ComparisonOptions& options = {}) {
    for (std::size_t i = 0; i < sequence.size(); ++i)
        for (std::size_t j = i + 1; j < sequence.size(); ++j) {
            const PowerGraph& a = sequence[i];
            const PowerGraph& b = sequence[j];
            if (auto shift = long_factor_embedding(a, b))
                return ComparablePair{i + 1, j + 1, std::move(*shift),
                                      ComparisonRoute::kLongFactor};
            if (factors_bounded_by(a, c) && factors_bounded_by(b, c))
                if (auto witness = leq_c(a, b, c))
                    return ComparablePair{i + 1, j + 1, build_embedding_phi(a, b, c, *witness),
                                          ComparisonRoute::kLeqC};
            if (options.oracle_fallback) {
                OracleResult r = induced_embeds(a, b, options.budget);
                if (r.status == OracleStatus::kEmbeds)
                    return ComparablePair{i + 1, j + 1, std::move(*r.map),
                                          ComparisonRoute::kOracle};
            }
        }
    return std::nullopt;
}

} // namespace powergraph

#endif
