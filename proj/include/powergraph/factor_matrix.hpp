#ifndef POWERGRAPH_FACTOR_MATRIX_HPP
#define POWERGRAPH_FACTOR_MATRIX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"

namespace powergraph {

/// t-equivalence class of a factor: same length, same offset of the maximal
/// vertex from the smallest one. Ordered lexicographically on
/// (length, offset), which fixes the paper-arbitrary column order.
struct TClassId {
    label_t length = 0;
    label_t offset = 0;

    auto operator<=>(const TClassId&) const = default;
};

/// l-equivalence class index: q(m(F)) = 2^i.
struct LIndex {
    unsigned i = 0;

    auto operator<=>(const LIndex&) const = default;
};

inline std::pair<LIndex, TClassId> classify_factor(const Factor& f) {
    if (f.lo == 0) throw std::invalid_argument("empty factor");
    return {LIndex{power_exponent(f.m())}, TClassId{f.length(), f.offset()}};
}

/// Number of t-classes with length <= c: C(c+1, 2).
inline std::uint64_t legal_t_class_count(label_t c) { return c * (c + 1) / 2; }

/// Exponent threshold splitting low rows from high rows: floor(log2 c).
inline unsigned low_row_threshold(label_t c) {
    if (c == 0) throw std::invalid_argument("length bound must be >= 1");
    return static_cast<unsigned>(std::bit_width(c) - 1);
}

/// The matrix M_G of factor-component counts, rows indexed by l-class and
/// columns by t-class. Rows up to floor(log2 c) are always retained (the M'
/// part); higher rows are kept only while nonempty (the M'' part). Zero
/// cells are never stored.
class FactorMatrix {
public:
    using Row = std::map<TClassId, std::uint64_t>;

    explicit FactorMatrix(label_t c) : c_(c), low_threshold_(low_row_threshold(c)) {}

    label_t bound() const { return c_; }
    unsigned low_threshold() const { return low_threshold_; }

    void add(LIndex l, TClassId t) {
        if (t.length == 0 || t.length > c_)
            throw std::invalid_argument("t-class length " + std::to_string(t.length) +
                                        " outside (0, " + std::to_string(c_) + "]");
        if (t.offset >= t.length) throw std::invalid_argument("t-class offset out of range");
        ++rows_[l.i][t];
    }

    std::uint64_t cell(unsigned l, TClassId t) const {
        auto rit = rows_.find(l);
        if (rit == rows_.end()) return 0;
        auto cit = rit->second.find(t);
        return cit == rit->second.end() ? 0 : cit->second;
    }

    /// Nonzero rows in increasing l order. Low rows with no entries are
    /// conceptually present but hold no cells.
    const std::map<unsigned, Row>& rows() const { return rows_; }

    /// Indices of nonempty rows above the low threshold.
    std::vector<unsigned> high_rows() const {
        std::vector<unsigned> out;
        for (const auto& [l, row] : rows_)
            if (l > low_threshold_ && !row.empty()) out.push_back(l);
        return out;
    }

    /// Sum of all cells: the number of factor-components counted.
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [l, row] : rows_)
            for (const auto& [id, cnt] : row) t += cnt;
        return t;
    }

    /// Row r of this matrix dominates row r' of `other` when every count of
    /// r' is covered: other.row(r')[j] <= row(r)[j] for all columns j.
    bool row_dominates(unsigned l_mine, const FactorMatrix& other, unsigned l_other) const {
        auto oit = other.rows_.find(l_other);
        if (oit == other.rows_.end()) return true;
        for (const auto& [id, cnt] : oit->second)
            if (cell(l_mine, id) < cnt) return false;
        return true;
    }

    bool operator==(const FactorMatrix& other) const = default;

private:
    label_t c_;
    unsigned low_threshold_;
    std::map<unsigned, Row> rows_;
};

/// Counts the factor-components of g per (l, t) cell. Errors out, naming the
/// offending interval, if any factor is longer than c.
inline FactorMatrix factor_matrix(const PowerGraph& g, label_t c) {
    FactorMatrix m(c);
    for (const Factor& f : factor_components(g)) {
        if (f.length() > c)
            throw std::invalid_argument("factor [" + std::to_string(f.lo) + ", " +
                                        std::to_string(f.hi) + "] is longer than the bound " +
                                        std::to_string(c));
        auto [l, t] = classify_factor(f);
        m.add(l, t);
    }
    return m;
}

} // namespace powergraph

#endif
