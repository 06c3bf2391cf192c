#ifndef POWERGRAPH_GRAPH_HPP
#define POWERGRAPH_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powergraph/power.hpp"

namespace powergraph {

enum class EdgeKind { kNone, kPath, kClique };

/// A member of the class D: a set of integer labels interpreted inside some
/// D_n.  Adjacency is derived from the labels and never stored:
/// a ~ b iff |a-b| = 1 (path edge) or a != b and q(a) = q(b) (clique edge).
class PowerGraph {
public:
    PowerGraph() = default;

    /// Builds a graph from labels (any order). Rejects zeros, duplicates and
    /// labels above the cap.
    static PowerGraph from_labels(std::vector<label_t> labels,
                                  label_t label_cap = kDefaultLabelCap) {
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == 0)
                throw std::invalid_argument("labels must be positive");
            if (labels[i] > label_cap)
                throw std::invalid_argument("label " + std::to_string(labels[i]) +
                                            " exceeds the cap " + std::to_string(label_cap));
            if (i > 0 && labels[i] == labels[i - 1])
                throw std::invalid_argument("duplicate label " + std::to_string(labels[i]));
        }
        PowerGraph g;
        g.labels_ = std::move(labels);
        return g;
    }

    static PowerGraph from_labels(std::initializer_list<label_t> labels,
                                  label_t label_cap = kDefaultLabelCap) {
        return from_labels(std::vector<label_t>(labels), label_cap);
    }

    const std::vector<label_t>& labels() const { return labels_; }
    std::size_t order() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    label_t max_label() const { return labels_.empty() ? 0 : labels_.back(); }

    bool contains(label_t v) const {
        return std::binary_search(labels_.begin(), labels_.end(), v);
    }

    /// Position of v in the canonical (increasing) vertex order.
    std::size_t rank_of(label_t v) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
        if (it == labels_.end() || *it != v)
            throw std::invalid_argument("label " + std::to_string(v) + " is not a vertex");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// Edge kind between two vertices of the graph. Path and clique edges are
    /// disjoint: consecutive integers always have different powers.
    EdgeKind edge_kind(label_t a, label_t b) const {
        if (!contains(a)) throw std::invalid_argument("label " + std::to_string(a) + " is not a vertex");
        if (!contains(b)) throw std::invalid_argument("label " + std::to_string(b) + " is not a vertex");
        if (a == b) return EdgeKind::kNone;
        label_t lo = std::min(a, b), hi = std::max(a, b);
        if (hi - lo == 1) return EdgeKind::kPath;
        if (q(a) == q(b)) return EdgeKind::kClique;
        return EdgeKind::kNone;
    }

    bool adjacent(label_t a, label_t b) const { return edge_kind(a, b) != EdgeKind::kNone; }

    /// Induced subgraph on a subset of the labels.
    PowerGraph induced(const std::vector<label_t>& subset) const {
        for (label_t v : subset)
            if (!contains(v))
                throw std::invalid_argument("label " + std::to_string(v) + " is not a vertex");
        return from_labels(subset);
    }

    /// True iff the labels are exactly {1, ..., n}, i.e. the graph is D_n.
    bool is_full_range() const {
        return labels_.empty() ||
               (labels_.front() == 1 && labels_.back() == labels_.size());
    }

    std::size_t edge_count() const {
        std::size_t path = 0;
        for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
            if (labels_[i + 1] - labels_[i] == 1) ++path;
        std::unordered_map<label_t, std::size_t> by_power;
        for (label_t v : labels_) ++by_power[q(v)];
        std::size_t clique = 0;
        for (const auto& [p, k] : by_power) clique += k * (k - 1) / 2;
        return path + clique;
    }

    /// All edges as (a, b) with a < b, sorted lexicographically.
    std::vector<std::pair<label_t, label_t>> edges() const {
        std::vector<std::pair<label_t, label_t>> out;
        for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
            if (labels_[i + 1] - labels_[i] == 1)
                out.emplace_back(labels_[i], labels_[i + 1]);
        std::unordered_map<label_t, std::vector<label_t>> by_power;
        for (label_t v : labels_) by_power[q(v)].push_back(v);
        for (const auto& [p, members] : by_power)
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (members[j] - members[i] != 1) out.emplace_back(members[i], members[j]);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Power cliques, i.e. vertex classes of equal power, keyed by exponent.
    /// Only classes with at least two members span clique edges.
    std::vector<std::pair<unsigned, std::vector<label_t>>> power_classes() const {
        std::unordered_map<unsigned, std::vector<label_t>> by_exp;
        for (label_t v : labels_) by_exp[power_exponent(v)].push_back(v);
        std::vector<std::pair<unsigned, std::vector<label_t>>> out(by_exp.begin(), by_exp.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const PowerGraph& other) const = default;

private:
    std::vector<label_t> labels_;
};

/// The full graph D_n on labels {1, ..., n}.
inline PowerGraph build_dn(label_t n, label_t label_cap = kDefaultLabelCap) {
    if (n == 0) throw std::invalid_argument("build_dn requires n >= 1");
    if (n > label_cap)
        throw std::invalid_argument("n exceeds the label cap " + std::to_string(label_cap));
    std::vector<label_t> labels(n);
    for (label_t i = 0; i < n; ++i) labels[i] = i + 1;
    return PowerGraph::from_labels(std::move(labels), label_cap);
}

/// The unique label of [lo, hi] with the largest power (Lemma "maxone").
inline label_t maximal_vertex(label_t lo, label_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("empty or invalid interval");
    label_t best = lo, best_q = q(lo);
    bool unique = true;
    for (label_t v = lo + 1; v != 0 && v <= hi; ++v) {
        label_t p = q(v);
        if (p > best_q) {
            best = v;
            best_q = p;
            unique = true;
        } else if (p == best_q) {
            unique = false;
        }
    }
    if (!unique)
        throw std::logic_error("interval with two maximal vertices: [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "]");
    return best;
}

/// An interval-induced piece of a graph in D, with its maximal vertex.
struct Factor {
    label_t lo = 0;          // smallest label s(F)
    label_t hi = 0;          // largest label
    label_t max_vertex = 0;  // m(F)

    static Factor scan(label_t lo, label_t hi) {
        Factor f;
        f.lo = lo;
        f.hi = hi;
        f.max_vertex = maximal_vertex(lo, hi);
        return f;
    }

    label_t length() const { return hi - lo + 1; }
    label_t s() const { return lo; }
    label_t m() const { return max_vertex; }
    label_t offset() const { return max_vertex - lo; }

    bool operator==(const Factor& other) const = default;
};

/// Maximal runs of consecutive labels, in increasing order. Their disjoint
/// union covers the label set.
inline std::vector<Factor> factor_components(const PowerGraph& g) {
    std::vector<Factor> out;
    const auto& ls = g.labels();
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j + 1 < ls.size() && ls[j + 1] == ls[j] + 1) ++j;
        out.push_back(Factor::scan(ls[i], ls[j]));
        i = j + 1;
    }
    return out;
}

/// Label-free graph with an explicit symmetric adjacency matrix, used as the
/// target representation for the generic embedding oracle. Vertices are
/// 0-based row indices; rows are 64-bit words.
class DenseGraph {
public:
    DenseGraph() = default;
    explicit DenseGraph(std::size_t n)
        : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t order() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    void add_edge(std::size_t i, std::size_t j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("self-loops are not allowed");
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }

    bool adjacent(std::size_t i, std::size_t j) const {
        check_vertex(i);
        check_vertex(j);
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
    }

    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

    std::size_t degree(std::size_t i) const {
        check_vertex(i);
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n_; ++i) total += degree(i);
        return total / 2;
    }

    bool operator==(const DenseGraph& other) const = default;

private:
    void check_vertex(std::size_t i) const {
        if (i >= n_) throw std::invalid_argument("vertex index out of range");
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Adjacency matrix of g under the canonical (increasing) label order.
inline DenseGraph to_dense(const PowerGraph& g) {
    const auto& ls = g.labels();
    DenseGraph d(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (ls[j] - ls[i] == 1 || q(ls[i]) == q(ls[j])) d.add_edge(i, j);
    return d;
}

} // namespace powergraph

#endif
