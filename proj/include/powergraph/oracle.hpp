#ifndef POWERGRAPH_ORACLE_HPP
#define POWERGRAPH_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "powergraph/embedding.hpp"
#include "powergraph/graph.hpp"

namespace powergraph {

/// Node allowance for one backtracking search. Exhausting it yields
/// INCONCLUSIVE, never a wrong answer.
struct SearchBudget {
    std::uint64_t node_limit = 1'000'000;
};

enum class OracleStatus { kEmbeds, kNotEmbeds, kInconclusive };

inline const char* oracle_status_name(OracleStatus s) {
    switch (s) {
        case OracleStatus::kEmbeds: return "embeds";
        case OracleStatus::kNotEmbeds: return "not-embeds";
        case OracleStatus::kInconclusive: return "inconclusive";
    }
    return "?";
}

struct OracleResult {
    OracleStatus status = OracleStatus::kInconclusive;
    std::optional<EmbeddingMap> map;  // present iff status == kEmbeds
    std::uint64_t nodes = 0;          // candidate assignments tried
};

namespace detail {

struct EmbedSearch {
    const DenseGraph& g;
    const DenseGraph& h;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::size_t> order;      // guest vertices, most-constrained first
    std::vector<std::size_t> image;      // image[guest vertex]
    std::vector<bool> used;              // host vertices already taken
    std::vector<std::size_t> g_degree, h_degree;

    EmbedSearch(const DenseGraph& g_, const DenseGraph& h_, std::uint64_t limit)
        : g(g_), h(h_), node_limit(limit) {
        order.resize(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) order[i] = i;
        g_degree.resize(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) g_degree[i] = g.degree(i);
        h_degree.resize(h.order());
        for (std::size_t i = 0; i < h.order(); ++i) h_degree[i] = h.degree(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return g_degree[a] > g_degree[b]; });
        image.assign(g.order(), 0);
        used.assign(h.order(), false);
    }

    bool feasible(std::size_t u, std::size_t v) const {
        // degree and co-degree filters are valid for induced embeddings
        if (h_degree[v] < g_degree[u]) return false;
        if ((h.order() - 1 - h_degree[v]) < (g.order() - 1 - g_degree[u])) return false;
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const std::size_t u = order[depth];
        for (std::size_t v = 0; v < h.order(); ++v) {
            if (used[v] || !feasible(u, v)) continue;
            if (++nodes > node_limit) {
                out_of_budget = true;
                return false;
            }
            bool consistent = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const std::size_t w = order[d];
                if (g.adjacent(u, w) != h.adjacent(v, image[w])) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            image[u] = v;
            used[v] = true;
            if (extend(depth + 1)) return true;
            used[v] = false;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace detail

/// Backtracking search for an induced embedding of g into h. EMBEDS returns
/// a verified map; NOT_EMBEDS is emitted only after exhausting the whole
/// search space within budget.
inline OracleResult induced_embeds(const DenseGraph& g, const DenseGraph& h,
                                   SearchBudget budget = {}) {
    if (budget.node_limit == 0) throw std::invalid_argument("node limit must be >= 1");
    OracleResult result;
    if (g.order() == 0) {
        result.status = OracleStatus::kEmbeds;
        result.map = EmbeddingMap{{}, Provenance::kOracle};
        return result;
    }
    if (g.order() > h.order()) {
        result.status = OracleStatus::kNotEmbeds;
        return result;
    }
    detail::EmbedSearch search(g, h, budget.node_limit);
    const bool found = search.extend(0);
    result.nodes = search.nodes;
    if (found) {
        EmbeddingMap map;
        map.provenance = Provenance::kOracle;
        for (std::size_t u = 0; u < g.order(); ++u)
            map.add(static_cast<label_t>(u), static_cast<label_t>(search.image[u]));
        map.sort_by_source();
        if (!verify_embedding_dense(map, g, h))
            throw std::logic_error("oracle produced a non-induced embedding");
        result.status = OracleStatus::kEmbeds;
        result.map = std::move(map);
    } else {
        result.status = search.out_of_budget ? OracleStatus::kInconclusive
                                             : OracleStatus::kNotEmbeds;
    }
    return result;
}

/// Convenience wrapper on label graphs; the returned map is on labels.
inline OracleResult induced_embeds(const PowerGraph& g, const PowerGraph& h,
                                   SearchBudget budget = {}) {
    OracleResult r = induced_embeds(to_dense(g), to_dense(h), budget);
    if (r.map) {
        for (auto& [from, to] : r.map->pairs) {
            from = g.labels()[static_cast<std::size_t>(from)];
            to = h.labels()[static_cast<std::size_t>(to)];
        }
        r.map->sort_by_source();
    }
    return r;
}

/// Smallest n with g an induced subgraph of D_n, found by an oracle-backed
/// binary search (g inside D_n implies g inside D_{n+1}, and the stored max
/// label is always attainable via the identity). Returns nothing only when a
/// search runs out of budget before the answer is settled. Off the hot path;
/// the host size is capped to keep the dense conversions sane.
inline std::optional<label_t> minimal_host_n(const PowerGraph& g, SearchBudget budget = {}) {
    if (g.empty()) return 0;
    if (g.max_label() > 4096)
        throw std::invalid_argument("minimal_host_n supports max label <= 4096");
    const DenseGraph guest = to_dense(g);
    label_t lo = g.order(), hi = g.max_label();  // embeds at hi, unknown below
    while (lo < hi) {
        const label_t mid = lo + (hi - lo) / 2;
        OracleResult r = induced_embeds(guest, to_dense(build_dn(mid)), budget);
        if (r.status == OracleStatus::kInconclusive) return std::nullopt;
        if (r.status == OracleStatus::kEmbeds)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

struct AntichainResult {
    std::vector<PowerGraph> family;  // pairwise incomparable, sorted by (order, labels)
    bool exact = false;              // true when the search space was fully explored
    std::uint64_t oracle_calls = 0;
};

/// Largest found family of pairwise oracle-incomparable induced subgraphs of
/// D_n. Subsets are deduplicated by isomorphism first (isomorphic graphs are
/// mutually comparable). Exact for small n unless the branch-and-bound node
/// budget runs out.
inline AntichainResult antichain_search(label_t n, std::size_t max_size,
                                        SearchBudget budget = {}) {
    if (n == 0 || n > 12) throw std::invalid_argument("antichain_search supports 1 <= n <= 12");
    if (max_size == 0) throw std::invalid_argument("max_size must be >= 1");

    AntichainResult result;
    const std::size_t count = std::size_t{1} << n;
    std::vector<PowerGraph> subs;
    std::vector<DenseGraph> dense;
    subs.reserve(count);
    dense.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<label_t> labels;
        for (label_t v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) labels.push_back(v);
        subs.push_back(PowerGraph::from_labels(std::move(labels)));
        dense.push_back(to_dense(subs.back()));
    }

    auto iso = [&](std::size_t a, std::size_t b) {
        if (dense[a].order() != dense[b].order()) return false;
        ++result.oracle_calls;
        if (induced_embeds(dense[a], dense[b], budget).status != OracleStatus::kEmbeds)
            return false;
        ++result.oracle_calls;
        return induced_embeds(dense[b], dense[a], budget).status == OracleStatus::kEmbeds;
    };

    // isomorphism dedup: keep the first representative of each class
    std::vector<std::size_t> reps;
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>,
             std::vector<std::size_t>>
        by_signature;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::size_t> degrees(dense[i].order());
        for (std::size_t v = 0; v < dense[i].order(); ++v) degrees[v] = dense[i].degree(v);
        std::sort(degrees.begin(), degrees.end());
        auto key = std::make_tuple(dense[i].order(), dense[i].edge_count(), std::move(degrees));
        auto& bucket = by_signature[key];
        bool duplicate = false;
        for (std::size_t r : bucket)
            if (iso(r, i)) {
                duplicate = true;
                break;
            }
        if (!duplicate) {
            bucket.push_back(i);
            reps.push_back(i);
        }
    }
    std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
        if (subs[a].order() != subs[b].order()) return subs[a].order() < subs[b].order();
        return subs[a].labels() < subs[b].labels();
    });

    // comparability matrix over representatives
    const std::size_t m = reps.size();
    std::vector<std::vector<bool>> comparable(m, std::vector<bool>(m, false));
    bool all_conclusive = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (dense[reps[i]].order() >= dense[reps[j]].order()) continue;  // non-iso, same or larger
            ++result.oracle_calls;
            OracleStatus s = induced_embeds(dense[reps[i]], dense[reps[j]], budget).status;
            if (s == OracleStatus::kEmbeds) {
                comparable[i][j] = comparable[j][i] = true;
            } else if (s == OracleStatus::kInconclusive) {
                comparable[i][j] = comparable[j][i] = true;  // conservative
                all_conclusive = false;
            }
        }

    // greedy seed: fewest comparabilities first
    std::vector<std::size_t> deg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (comparable[i][j]) ++deg[i];
    std::vector<std::size_t> greedy_order(m);
    for (std::size_t i = 0; i < m; ++i) greedy_order[i] = i;
    std::stable_sort(greedy_order.begin(), greedy_order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    std::vector<std::size_t> best;
    for (std::size_t i : greedy_order) {
        if (best.size() >= max_size) break;
        bool ok = true;
        for (std::size_t j : best)
            if (comparable[i][j]) {
                ok = false;
                break;
            }
        if (ok) best.push_back(i);
    }

    // branch and bound over the comparability graph for an exact maximum
    std::uint64_t bb_nodes = 0;
    bool bb_cut = false;
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (bb_cut) return;
        if (++bb_nodes > budget.node_limit) {
            bb_cut = true;
            return;
        }
        if (chosen.size() > best.size()) best = chosen;
        if (best.size() >= max_size) return;
        if (next >= m || chosen.size() + (m - next) <= best.size()) return;
        bool ok = true;
        for (std::size_t j : chosen)
            if (comparable[next][j]) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(next);
            self(self, next + 1);
            chosen.pop_back();
        }
        self(self, next + 1);
    };
    recurse(recurse, 0);

    std::sort(best.begin(), best.end());
    for (std::size_t i : best) result.family.push_back(subs[reps[i]]);
    result.exact = all_conclusive && !bb_cut && best.size() < max_size;

    // certificate: recheck pairwise incomparability both ways
    for (std::size_t i = 0; i < result.family.size(); ++i)
        for (std::size_t j = 0; j < result.family.size(); ++j) {
            if (i == j) continue;
            result.oracle_calls += 1;
            if (induced_embeds(result.family[i], result.family[j], budget).status ==
                OracleStatus::kEmbeds)
                throw std::logic_error("antichain certificate failed: family members comparable");
        }
    return result;
}

} // namespace powergraph

#endif
