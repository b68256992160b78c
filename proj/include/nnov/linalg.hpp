// Sparse exact-rational matrices with rank, solve and unitriangularity
// checks. Pivoting is always first-nonzero in index order: with exact
// arithmetic there is nothing to gain from magnitude pivoting and the
// elimination stays deterministic.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nnov/rational.hpp"

namespace nnov {

class RationalMatrix {
public:
    RationalMatrix(size_t n_rows, size_t n_cols) : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows) {}

    size_t n_rows() const { return n_rows_; }
    size_t n_cols() const { return n_cols_; }

    void set(size_t r, size_t c, const Rational& v);
    Rational get(size_t r, size_t c) const;
    const std::map<size_t, Rational>& row(size_t r) const { return rows_.at(r); }

    size_t nonzero_count() const;
    RationalMatrix transpose() const;

private:
    size_t n_rows_, n_cols_;
    std::vector<std::map<size_t, Rational>> rows_;
};

size_t rank(const RationalMatrix& m);

// Unique solution of a square nonsingular system; nullopt when the matrix is
// not square, singular, or the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& rhs);

// True iff, arranging rows and columns by the given permutation (position k
// uses row order[k] and column order[k]), the diagonal is all 1 and every
// entry on the later-column side of the diagonal is zero.
bool is_unitriangular(const RationalMatrix& m, const std::vector<size_t>& order);

}  // namespace nnov
