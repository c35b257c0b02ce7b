#pragma once

#include <vector>

#include "multiproj/rational.hpp"

namespace multiproj {

/// Dense matrix of exact rationals, row-major. Empty shapes are allowed.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    RationalMatrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw std::invalid_argument("entry count does not match matrix shape");
    }

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<Rational> row(int r) const;

    /// New matrix formed by the given rows, in the given order.
    RationalMatrix select_rows(const std::vector<int>& indices) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination on
/// integer-cleared rows. Pivots are the first nonzero entry in column order.
int rank(const RationalMatrix& m);

/// Basis of the right nullspace, one vector per free column of the reduced
/// echelon form, each scaled so its first nonzero entry is 1.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Indices of a maximal linearly independent set of rows, chosen greedily in
/// ascending row order: a row is kept iff it increases the rank.
std::vector<int> independent_row_subset(const RationalMatrix& m);

} // namespace multiproj
