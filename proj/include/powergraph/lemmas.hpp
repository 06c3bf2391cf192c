#ifndef POWERGRAPH_LEMMAS_HPP
#define POWERGRAPH_LEMMAS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"
#include "powergraph/rng.hpp"
#include "powergraph/similarity.hpp"

namespace powergraph {

/// Outcome of one exhaustive (or seeded) verification run. `tightest`
/// describes the instance with the least slack between the two sides of the
/// inequality, in enumeration order.
struct LemmaReport {
    std::string lemma;
    bool pass = true;
    std::uint64_t checked = 0;
    std::string tightest;
    std::vector<std::string> violations;
};

namespace detail {

inline std::string format_labels(const std::vector<label_t>& v) {
    std::string s;
    for (label_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

inline std::string format_mask(std::uint64_t mask) {
    return format_labels([&] {
        std::vector<label_t> out;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            out.push_back(static_cast<label_t>(std::countr_zero(rest)) + 1);
        return out;
    }());
}

inline void require_scan_size(label_t n, std::size_t cap) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (n > cap)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the exhaustive cap " +
                                    std::to_string(cap));
    if (n > 32) throw std::invalid_argument("exhaustive subset scan supports at most 32 vertices");
}

} // namespace detail

/// If P^U has c+1 connected components, then mu_{D_n}(U) >= c/2. Checked for
/// every subset U of V(D_n).
inline LemmaReport check_lemma2(label_t n, std::size_t cap = kDefaultExhaustiveCap) {
    detail::require_scan_size(n, cap);
    const auto rows = detail::word_rows(to_dense(build_dn(n)));

    LemmaReport report;
    report.lemma = "2";
    std::int64_t best_slack = std::numeric_limits<std::int64_t>::max();
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        ++report.checked;
        std::int64_t comps = std::popcount(mask & ~(mask << 1));
        if (comps == 0) continue;  // empty U, bound is vacuous
        // worth computing only if it could violate or tighten: 2*mu < comps-1+best_slack
        std::int64_t limit64 = (best_slack == std::numeric_limits<std::int64_t>::max())
                                   ? static_cast<std::int64_t>(n)
                                   : (best_slack + comps - 2) / 2;
        std::size_t limit = static_cast<std::size_t>(std::clamp<std::int64_t>(limit64, 0, n));
        std::size_t mu = detail::mu_of_word(rows.data(), mask, limit);
        if (mu > limit) continue;
        std::int64_t slack = 2 * static_cast<std::int64_t>(mu) - (comps - 1);
        if (slack < 0) {
            report.pass = false;
            report.violations.push_back("U={" + detail::format_mask(mask) +
                                        "} components=" + std::to_string(comps) +
                                        " mu=" + std::to_string(mu));
        }
        if (slack < best_slack) {
            best_slack = slack;
            report.tightest = "U={" + detail::format_mask(mask) + "} components=" +
                              std::to_string(comps) + " mu=" + std::to_string(mu) +
                              " slack(2mu-(components-1))=" + std::to_string(slack);
        }
    }
    return report;
}

/// Number of power cliques of D_n that correspond to a power of two greater
/// than 1 and meet both u and its complement. mu_{D_n}(u) is at least that.
struct Lemma3Instance {
    std::size_t split_cliques = 0;
    std::size_t mu = 0;
    bool pass = true;
};

inline Lemma3Instance check_lemma3(label_t n, const std::vector<label_t>& u) {
    PowerGraph dn = build_dn(n);
    for (label_t v : u) dn.rank_of(v);  // validates membership
    std::vector<bool> in_u(n + 1, false);
    for (label_t v : u) in_u[v] = true;

    Lemma3Instance inst;
    for (unsigned k = 1; (label_t{1} << k) <= n; ++k) {
        bool meets_u = false, meets_comp = false;
        for (label_t v = label_t{1} << k; v <= n; v += label_t{2} << k)
            (in_u[v] ? meets_u : meets_comp) = true;
        if (meets_u && meets_comp) ++inst.split_cliques;
    }
    inst.mu = similarity_classes(dn, u).class_count();
    inst.pass = inst.mu >= inst.split_cliques;
    return inst;
}

/// check_lemma3 over every subset of V(D_n).
inline LemmaReport check_lemma3_all(label_t n, std::size_t cap = kDefaultExhaustiveCap) {
    detail::require_scan_size(n, cap);
    const auto rows = detail::word_rows(to_dense(build_dn(n)));
    std::vector<std::uint64_t> clique_masks;  // powers 2^1, 2^2, ... present in [1, n]
    for (unsigned k = 1; (label_t{1} << k) <= n; ++k) {
        std::uint64_t m = 0;
        for (label_t v = label_t{1} << k; v <= n; v += label_t{2} << k)
            m |= std::uint64_t{1} << (v - 1);
        clique_masks.push_back(m);
    }
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    LemmaReport report;
    report.lemma = "3";
    std::int64_t best_slack = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        ++report.checked;
        std::int64_t split = 0;
        for (std::uint64_t qm : clique_masks)
            if ((qm & mask) != 0 && (qm & ~mask & full) != 0) ++split;
        std::int64_t limit64 = (best_slack == std::numeric_limits<std::int64_t>::max())
                                   ? static_cast<std::int64_t>(n)
                                   : split + best_slack - 1;
        std::size_t limit = static_cast<std::size_t>(std::clamp<std::int64_t>(limit64, 0, n));
        std::size_t mu = detail::mu_of_word(rows.data(), mask, limit);
        if (mu > limit) continue;
        std::int64_t slack = static_cast<std::int64_t>(mu) - split;
        if (slack < 0) {
            report.pass = false;
            report.violations.push_back("U={" + detail::format_mask(mask) + "} split_cliques=" +
                                        std::to_string(split) + " mu=" + std::to_string(mu));
        }
        if (slack < best_slack) {
            best_slack = slack;
            report.tightest = "U={" + detail::format_mask(mask) + "} split_cliques=" +
                              std::to_string(split) + " mu=" + std::to_string(mu) +
                              " slack(mu-split)=" + std::to_string(slack);
        }
        if (mask == full) break;  // avoid wrap at n == 64
    }
    return report;
}

/// Every interval of length 2^(c+1) inside [1, max_n] contains a vertex of
/// power 2^k for each k = 1..c.
inline LemmaReport check_lemma4(unsigned c, label_t max_n) {
    if (c == 0) throw std::invalid_argument("c must be >= 1");
    if (c >= 40 || (label_t{1} << (c + 1)) > max_n)
        throw std::invalid_argument("need 2^(c+1) <= max_n");
    const label_t window = label_t{1} << (c + 1);

    LemmaReport report;
    report.lemma = "4";
    std::int64_t best_room = std::numeric_limits<std::int64_t>::max();
    for (label_t a = 1; a + window - 1 <= max_n; ++a) {
        ++report.checked;
        for (unsigned k = 1; k <= c; ++k) {
            const label_t p = label_t{1} << k;
            label_t mult = (a + p - 1) / p;  // first multiple of 2^k at or after a
            if (mult % 2 == 0) ++mult;       // odd multiples have power exactly 2^k
            label_t v = mult * p;
            std::int64_t room = static_cast<std::int64_t>(a + window - 1) - static_cast<std::int64_t>(v);
            if (room < 0) {
                report.pass = false;
                report.violations.push_back("interval [" + std::to_string(a) + ", " +
                                            std::to_string(a + window - 1) + "] misses power 2^" +
                                            std::to_string(k));
            }
            if (room < best_room) {
                best_room = room;
                report.tightest = "interval [" + std::to_string(a) + ", " +
                                  std::to_string(a + window - 1) + "] power 2^" + std::to_string(k) +
                                  " first at " + std::to_string(v) + " room=" + std::to_string(room);
            }
        }
    }
    return report;
}

/// Smallest n certified by the threshold formula to force cwd(D_n) >= c.
inline std::uint64_t theorem2_threshold(unsigned c) {
    if (c == 0) throw std::invalid_argument("c must be >= 1");
    if (c > 50) throw std::invalid_argument("threshold overflows 64-bit arithmetic");
    return 3 * ((2 * std::uint64_t{c} + 1) * ((std::uint64_t{1} << (c + 1)) - 1) + 1);
}

/// Every interval [a, b] within [1, max_b] of length at most max_len has a
/// unique vertex of maximal power.
inline LemmaReport check_lemma_maxone(label_t max_b, label_t max_len) {
    if (max_b == 0 || max_len == 0) throw std::invalid_argument("empty scan range");
    LemmaReport report;
    report.lemma = "maxone";
    for (label_t a = 1; a <= max_b; ++a) {
        label_t best_q = 0;
        std::size_t ties = 0;
        for (label_t b = a; b <= max_b && b - a + 1 <= max_len; ++b) {
            label_t p = q(b);
            if (p > best_q) {
                best_q = p;
                ties = 1;
            } else if (p == best_q) {
                ++ties;
            }
            ++report.checked;
            if (ties != 1) {
                report.pass = false;
                report.violations.push_back("interval [" + std::to_string(a) + ", " +
                                            std::to_string(b) + "] has " + std::to_string(ties) +
                                            " maximal vertices");
            }
        }
    }
    report.tightest = report.pass ? "all intervals have a unique maximal vertex" : "";
    return report;
}

/// Lemma "diffq" plus corollary "maxpower": in every interval [a, b] of
/// length at most max_len, each non-maximal v satisfies q(v) = q(|m - v|) and
/// q(v) < length; any vertex of power >= length is the maximal one.
inline LemmaReport check_lemma_diffq(label_t max_b, label_t max_len) {
    if (max_b == 0 || max_len == 0) throw std::invalid_argument("empty scan range");
    LemmaReport report;
    report.lemma = "diffq";
    for (label_t a = 1; a <= max_b; ++a) {
        label_t m = a;
        for (label_t b = a; b <= max_b && b - a + 1 <= max_len; ++b) {
            if (q(b) > q(m)) m = b;
            ++report.checked;
            const label_t len = b - a + 1;
            for (label_t v = a; v <= b; ++v) {
                if (v == m) continue;
                const label_t diff = v > m ? v - m : m - v;
                if (q(v) != q(diff) || q(v) >= len) {
                    report.pass = false;
                    report.violations.push_back(
                        "interval [" + std::to_string(a) + ", " + std::to_string(b) + "] v=" +
                        std::to_string(v) + " m=" + std::to_string(m) + " q(v)=" +
                        std::to_string(q(v)) + " q(|m-v|)=" + std::to_string(q(diff)));
                }
            }
        }
    }
    report.tightest = report.pass ? "q(v)=q(|m-v|)<length holds off the maximal vertex" : "";
    return report;
}

/// Corollary "intiso" over seeded random pairs of t-equivalent factors: the
/// index-aligned map is an isomorphism, sends maximal to maximal, and
/// preserves q away from the maximal vertex.
inline LemmaReport check_intiso_random(std::uint64_t pairs, std::uint64_t seed,
                                       label_t max_len = 16, label_t max_label = 100000) {
    if (pairs == 0) throw std::invalid_argument("pairs must be >= 1");
    if (max_len == 0 || max_label < max_len) throw std::invalid_argument("bad sampling range");
    LemmaReport report;
    report.lemma = "intiso";
    Rng rng(seed);
    for (std::uint64_t t = 0; t < pairs; ++t) {
        const label_t len = 1 + bounded(rng, max_len);
        const label_t a = 1 + bounded(rng, max_label - len + 1);
        const label_t off = maximal_vertex(a, a + len - 1) - a;
        label_t b = a;  // same interval is always t-equivalent; try to find another
        for (int tries = 0; tries < 4096; ++tries) {
            label_t cand = 1 + bounded(rng, max_label - len + 1);
            if (maximal_vertex(cand, cand + len - 1) - cand == off) {
                b = cand;
                break;
            }
        }
        ++report.checked;

        std::string pair_desc = "[" + std::to_string(a) + ".." + std::to_string(a + len - 1) +
                                "] vs [" + std::to_string(b) + ".." + std::to_string(b + len - 1) + "]";
        if (maximal_vertex(b, b + len - 1) - b != off) {
            report.pass = false;
            report.violations.push_back(pair_desc + ": offsets differ");
            continue;
        }
        for (label_t i = 0; i < len; ++i) {
            if (a + i != a + off && q(a + i) != q(b + i)) {
                report.pass = false;
                report.violations.push_back(pair_desc + ": q not preserved at index " +
                                            std::to_string(i));
            }
            for (label_t j = i + 1; j < len; ++j) {
                const bool adj1 = (j - i == 1) || q(a + i) == q(a + j);
                const bool adj2 = (j - i == 1) || q(b + i) == q(b + j);
                if (adj1 != adj2) {
                    report.pass = false;
                    report.violations.push_back(pair_desc + ": adjacency differs at indices " +
                                                std::to_string(i) + ", " + std::to_string(j));
                }
            }
        }
    }
    report.tightest = report.pass ? "index-aligned map is an isomorphism on every sampled pair" : "";
    return report;
}

} // namespace powergraph

#endif
