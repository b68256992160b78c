#include "nnov/linalg.hpp"

#include <stdexcept>

namespace nnov {

void RationalMatrix::set(size_t r, size_t c, const Rational& v) {
    if (r >= n_rows_ || c >= n_cols_) throw std::invalid_argument("matrix index out of bounds");
    if (v == 0)
        rows_[r].erase(c);
    else
        rows_[r][c] = v;
}

Rational RationalMatrix::get(size_t r, size_t c) const {
    if (r >= n_rows_ || c >= n_cols_) throw std::invalid_argument("matrix index out of bounds");
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
}

size_t RationalMatrix::nonzero_count() const {
    size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(n_cols_, n_rows_);
    for (size_t r = 0; r < n_rows_; ++r) {
        for (const auto& [c, v] : rows_[r]) t.set(c, r, v);
    }
    return t;
}

namespace {

using SparseRow = std::map<size_t, Rational>;

// Reduce `row` against the pivot set; returns true (and installs the row)
// when it contributes a new pivot.
bool reduce_and_insert(SparseRow row, std::map<size_t, SparseRow>& pivots) {
    while (!row.empty()) {
        const size_t lead = row.begin()->first;
        auto p = pivots.find(lead);
        if (p == pivots.end()) {
            pivots.emplace(lead, std::move(row));
            return true;
        }
        const Rational f = row.begin()->second / p->second.begin()->second;
        for (const auto& [c, v] : p->second) {
            auto it = row.find(c);
            Rational nv = (it == row.end() ? Rational(0) : it->second) - f * v;
            if (nv == 0) {
                if (it != row.end()) row.erase(it);
            } else if (it == row.end()) {
                row.emplace(c, std::move(nv));
            } else {
                it->second = std::move(nv);
            }
        }
    }
    return false;
}

}  // namespace

size_t rank(const RationalMatrix& m) {
    std::map<size_t, SparseRow> pivots;
    size_t rk = 0;
    for (size_t r = 0; r < m.n_rows(); ++r) {
        if (reduce_and_insert(m.row(r), pivots)) ++rk;
    }
    return rk;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& rhs) {
    if (rhs.size() != m.n_rows()) throw std::invalid_argument("solve: rhs length mismatch");
    if (m.n_rows() != m.n_cols()) return std::nullopt;
    const size_t n = m.n_rows();

    // Augment with the rhs in column n; a pivot landing there means the
    // system is inconsistent.
    std::map<size_t, SparseRow> pivots;
    size_t rk = 0;
    for (size_t r = 0; r < n; ++r) {
        SparseRow row = m.row(r);
        if (rhs[r] != 0) row[n] = rhs[r];
        if (reduce_and_insert(std::move(row), pivots)) {
            if (pivots.count(n)) return std::nullopt;  // 0 = nonzero
            ++rk;
        }
    }
    if (rk < n) return std::nullopt;  // singular

    // Back substitution over the triangularized pivot rows.
    std::vector<Rational> x(n, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const size_t col = it->first;
        const SparseRow& row = it->second;
        Rational b(0), sum(0);
        for (const auto& [c, v] : row) {
            if (c == n)
                b = v;
            else if (c != col)
                sum += v * x[c];
        }
        x[col] = (b - sum) / row.at(col);
    }
    return x;
}

bool is_unitriangular(const RationalMatrix& m, const std::vector<size_t>& order) {
    if (m.n_rows() != m.n_cols()) throw std::invalid_argument("is_unitriangular: matrix not square");
    const size_t n = m.n_rows();
    if (order.size() != n) throw std::invalid_argument("is_unitriangular: order size mismatch");
    std::vector<size_t> pos(n, n);
    for (size_t k = 0; k < n; ++k) {
        if (order[k] >= n || pos[order[k]] != n)
            throw std::invalid_argument("is_unitriangular: order is not a permutation");
        pos[order[k]] = k;
    }
    for (size_t k = 0; k < n; ++k) {
        const size_t r = order[k];
        bool diag_one = false;
        for (const auto& [c, v] : m.row(r)) {
            const size_t j = pos[c];
            if (j == k) {
                if (v != 1) return false;
                diag_one = true;
            } else if (j > k) {
                return false;  // nonzero on the later-column side
            }
        }
        if (!diag_one) return false;
    }
    return true;
}

}  // namespace nnov
