#ifndef POWERGRAPH_SIMILARITY_HPP
#define POWERGRAPH_SIMILARITY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"
#include "powergraph/rng.hpp"

namespace powergraph {

/// Default vertex-count cap for the 2^n exhaustive subset scans.
inline constexpr std::size_t kDefaultExhaustiveCap = 26;

/// Partition of U by equality of neighbourhoods outside U. Members and the u
/// set are vertex labels (for PowerGraph inputs) or 0-based indices (for
/// DenseGraph inputs). Classes are ordered by smallest member.
struct SimilarityReport {
    std::vector<label_t> u;
    std::vector<std::vector<label_t>> classes;
    std::size_t class_count() const { return classes.size(); }
};

/// In EXACT mode, `value` is the true minimum over all admissible subsets and
/// therefore a certified lower bound on the clique-width of the graph. In
/// SAMPLED mode it is only the minimum over the drawn subsets: an upper bound
/// estimate of mu(G) that certifies nothing by itself.
struct MuResult {
    enum class Mode { kExact, kSampled };

    std::uint64_t value = 0;
    std::vector<label_t> witness;  // labels / indices; empty in the degenerate case
    Mode mode = Mode::kExact;
    std::uint64_t samples = 0;     // sampled mode only
    std::uint64_t seed = 0;        // sampled mode only
    std::vector<std::string> violations;
};

/// Admissible subset sizes ceil(n/3) <= |U| <= floor(2n/3). May be empty
/// (lo > hi) for n <= 1.
inline std::pair<std::size_t, std::size_t> admissible_size_range(std::size_t n) {
    return {(n + 2) / 3, (2 * n) / 3};
}

namespace detail {

inline std::vector<std::uint64_t> mask_words(std::size_t n) {
    return std::vector<std::uint64_t>(n == 0 ? 0 : (n + 63) / 64, 0);
}

inline void set_bit(std::vector<std::uint64_t>& m, std::size_t i) {
    m[i / 64] |= std::uint64_t{1} << (i % 64);
}

inline bool test_bit(const std::vector<std::uint64_t>& m, std::size_t i) {
    return (m[i / 64] >> (i % 64)) & 1;
}

/// Number of similarity classes of the subset given as mask words.
inline std::size_t mu_of_mask(const DenseGraph& g, const std::vector<std::uint64_t>& mask) {
    const std::size_t w = g.words_per_row();
    std::vector<std::vector<std::uint64_t>> keys;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (!test_bit(mask, i)) continue;
        std::vector<std::uint64_t> key(w);
        const std::uint64_t* row = g.row(i);
        for (std::size_t j = 0; j < w; ++j) key[j] = row[j] & ~mask[j];
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys.size();
}

/// Single-word variant with early abort: returns limit + 1 as soon as the
/// class count exceeds limit.
inline std::size_t mu_of_word(const std::uint64_t* rows, std::uint64_t mask, std::size_t limit) {
    std::uint64_t keys[64];
    std::size_t cnt = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        unsigned x = static_cast<unsigned>(std::countr_zero(rest));
        std::uint64_t key = rows[x] & ~mask;
        bool found = false;
        for (std::size_t k = 0; k < cnt; ++k)
            if (keys[k] == key) {
                found = true;
                break;
            }
        if (!found) {
            keys[cnt++] = key;
            if (cnt > limit) return limit + 1;
        }
    }
    return cnt;
}

/// Adjacency rows of a DenseGraph with at most 64 vertices, one word each.
inline std::vector<std::uint64_t> word_rows(const DenseGraph& g) {
    std::vector<std::uint64_t> rows(g.order(), 0);
    for (std::size_t i = 0; i < g.order(); ++i) rows[i] = g.row(i)[0];
    return rows;
}

inline std::vector<label_t> mask_to_indices(std::uint64_t mask) {
    std::vector<label_t> out;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
        out.push_back(static_cast<label_t>(std::countr_zero(rest)));
    return out;
}

/// Sum of C(n, k) for k in [lo, hi], saturated at uint64 max.
inline std::uint64_t admissible_subset_count(std::size_t n, std::size_t lo, std::size_t hi) {
    if (lo > hi) return 0;
    unsigned __int128 total = 0;
    for (std::size_t k = lo; k <= hi; ++k) {
        unsigned __int128 c = 1;
        for (std::size_t i = 0; i < k; ++i) {
            c = c * (n - i) / (i + 1);
            if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
        }
        total += c;
        if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(total);
}

} // namespace detail

/// Similarity classes of u inside the dense graph (u holds 0-based indices).
inline SimilarityReport similarity_classes(const DenseGraph& g, std::vector<label_t> u) {
    std::sort(u.begin(), u.end());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] >= g.order()) throw std::invalid_argument("subset vertex out of range");
        if (i > 0 && u[i] == u[i - 1]) throw std::invalid_argument("duplicate vertex in subset");
    }
    auto mask = detail::mask_words(g.order());
    for (label_t x : u) detail::set_bit(mask, static_cast<std::size_t>(x));

    SimilarityReport report;
    report.u = u;
    std::map<std::vector<std::uint64_t>, std::size_t> class_of;
    for (label_t x : u) {
        std::vector<std::uint64_t> key(g.words_per_row());
        const std::uint64_t* row = g.row(static_cast<std::size_t>(x));
        for (std::size_t j = 0; j < key.size(); ++j) key[j] = row[j] & ~mask[j];
        auto [it, inserted] = class_of.try_emplace(std::move(key), report.classes.size());
        if (inserted) report.classes.emplace_back();
        report.classes[it->second].push_back(x);
    }
    return report;
}

/// Similarity classes of u inside a PowerGraph (u holds vertex labels).
inline SimilarityReport similarity_classes(const PowerGraph& g, const std::vector<label_t>& u) {
    std::vector<label_t> ranks;
    ranks.reserve(u.size());
    for (label_t v : u) ranks.push_back(static_cast<label_t>(g.rank_of(v)));
    SimilarityReport r = similarity_classes(to_dense(g), std::move(ranks));
    const auto& ls = g.labels();
    for (auto& m : r.u) m = ls[static_cast<std::size_t>(m)];
    for (auto& cls : r.classes)
        for (auto& m : cls) m = ls[static_cast<std::size_t>(m)];
    return r;
}

/// mu(G) by scanning every admissible subset. Witness ties break toward the
/// lexicographically smallest vertex sequence.
inline MuResult mu_exact(const DenseGraph& g, std::size_t cap = kDefaultExhaustiveCap) {
    const std::size_t n = g.order();
    if (n > cap)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds the exhaustive cap " + std::to_string(cap) +
                                    "; use mu_sampled");
    if (n > 32)
        throw std::invalid_argument("exhaustive subset scan supports at most 32 vertices");

    auto [lo, hi] = admissible_size_range(n);
    MuResult out;
    out.mode = MuResult::Mode::kExact;
    if (lo > hi || n == 0) return out;  // degenerate: no admissible subset

    const auto rows = detail::word_rows(g);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_mask = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        if (k < lo || k > hi) continue;
        std::size_t limit = best == std::numeric_limits<std::uint64_t>::max()
                                ? n
                                : static_cast<std::size_t>(best);
        std::size_t cnt = detail::mu_of_word(rows.data(), mask, limit);
        if (cnt > limit) continue;
        if (cnt < best) {
            best = cnt;
            best_mask = mask;
        } else if (cnt == best) {
            auto a = detail::mask_to_indices(mask), b = detail::mask_to_indices(best_mask);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()))
                best_mask = mask;
        }
    }
    out.value = best;
    out.witness = detail::mask_to_indices(best_mask);
    return out;
}

inline MuResult mu_exact(const PowerGraph& g, std::size_t cap = kDefaultExhaustiveCap) {
    MuResult r = mu_exact(to_dense(g), cap);
    const auto& ls = g.labels();
    for (auto& v : r.witness) v = ls[static_cast<std::size_t>(v)];
    return r;
}

namespace detail {

/// Lemma 2 / Lemma 3 checks for one sampled subset of a full-range D_n,
/// appended to `violations` on failure. `members` holds 0-based ranks, which
/// for D_n are labels minus one.
inline void check_sample_against_lemmas(const std::vector<std::size_t>& members, std::size_t n,
                                        std::size_t mu, std::vector<std::string>& violations) {
    auto format_u = [&]() {
        std::string s;
        for (std::size_t r : members) s += (s.empty() ? "" : " ") + std::to_string(r + 1);
        return s;
    };
    // components of P^U: runs of consecutive labels
    std::size_t comps = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (i == 0 || members[i] != members[i - 1] + 1) ++comps;
    if (comps >= 1 && 2 * mu + 1 < comps)
        violations.push_back("lemma2: U={" + format_u() + "} components=" + std::to_string(comps) +
                             " mu=" + std::to_string(mu));
    // power cliques with power > 1 meeting both sides
    std::vector<bool> in_u(n + 1, false);
    for (std::size_t r : members) in_u[r + 1] = true;
    std::map<label_t, std::pair<bool, bool>> split;  // power -> (meets U, meets complement)
    for (label_t v = 1; v <= n; ++v) {
        label_t p = q(v);
        if (p == 1) continue;
        auto& s = split[p];
        (in_u[v] ? s.first : s.second) = true;
    }
    std::size_t split_count = 0;
    for (const auto& [p, s] : split)
        if (s.first && s.second) ++split_count;
    if (mu < split_count)
        violations.push_back("lemma3: U={" + format_u() + "} split_cliques=" +
                             std::to_string(split_count) + " mu=" + std::to_string(mu));
}

} // namespace detail

/// Minimum of mu_G(U) over `samples` seeded draws of admissible subsets.
/// The value is an estimate, not a certified bound; mode marks it SAMPLED
/// unless the admissible family is small enough to enumerate outright.
inline MuResult mu_sampled(const DenseGraph& g, std::uint64_t samples, std::uint64_t seed,
                           bool check_lemmas_for_full_dn = false) {
    if (samples == 0) throw std::invalid_argument("mu_sampled requires samples >= 1");
    const std::size_t n = g.order();
    auto [lo, hi] = admissible_size_range(n);
    if (lo > hi || n == 0) {
        MuResult out;
        out.mode = MuResult::Mode::kExact;  // nothing to sample
        return out;
    }
    if (n <= 32 && detail::admissible_subset_count(n, lo, hi) <= samples)
        return mu_exact(g, n);  // enumeration subsumes sampling

    MuResult out;
    out.mode = MuResult::Mode::kSampled;
    out.samples = samples;
    out.seed = seed;
    Rng rng(seed);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<label_t> best_members;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t k = static_cast<std::size_t>(lo + bounded(rng, hi - lo + 1));
        std::vector<std::size_t> members = sample_subset(rng, n, k);
        auto mask = detail::mask_words(n);
        for (std::size_t i : members) detail::set_bit(mask, i);
        std::size_t mu = detail::mu_of_mask(g, mask);
        if (check_lemmas_for_full_dn)
            detail::check_sample_against_lemmas(members, n, mu, out.violations);
        std::vector<label_t> as_labels(members.begin(), members.end());
        if (mu < best || (mu == best && std::lexicographical_compare(as_labels.begin(), as_labels.end(),
                                                                     best_members.begin(), best_members.end()))) {
            best = mu;
            best_members = std::move(as_labels);
        }
    }
    out.value = best;
    out.witness = best_members;
    return out;
}

inline MuResult mu_sampled(const PowerGraph& g, std::uint64_t samples, std::uint64_t seed) {
    MuResult r = mu_sampled(to_dense(g), samples, seed, g.is_full_range());
    const auto& ls = g.labels();
    for (auto& v : r.witness) v = ls[static_cast<std::size_t>(v)];
    return r;
}

} // namespace powergraph

#endif
