#include "multiproj/linalg.hpp"

namespace multiproj {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(int r) const {
    return std::vector<Rational>(entries_.begin() + static_cast<std::size_t>(r) * cols_,
                                 entries_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& indices) const {
    RationalMatrix out(static_cast<int>(indices.size()), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (int c = 0; c < cols_; ++c)
            out.at(static_cast<int>(i), c) = at(indices[i], c);
    return out;
}

namespace {

// Row scaled by the lcm of its denominators; scaling does not change the rank.
std::vector<Integer> cleared_row(const RationalMatrix& m, int r) {
    Integer l(1);
    for (int c = 0; c < m.cols(); ++c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    std::vector<Integer> out(m.cols());
    for (int c = 0; c < m.cols(); ++c)
        out[c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    return out;
}

} // namespace

int rank(const RationalMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;

    std::vector<std::vector<Integer>> a;
    a.reserve(rows);
    for (int r = 0; r < rows; ++r)
        a.push_back(cleared_row(m, r));

    // One-step Bareiss: after each pivot the division by the previous pivot is
    // exact (the working entries are minors of the cleared matrix).
    Integer prev(1);
    Integer num;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int p = -1;
        for (int r = rk; r < rows; ++r) {
            if (a[r][col] != 0) {
                p = r;
                break;
            }
        }
        if (p < 0)
            continue;
        std::swap(a[rk], a[p]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                num = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rows; // reduced rows, pivot entries are 1
    std::vector<int> pivot_cols;             // ascending
};

// Gauss-Jordan over the rationals; deterministic (first nonzero pivot).
Echelon reduced_echelon(const RationalMatrix& m) {
    Echelon e;
    std::vector<std::vector<Rational>> a;
    a.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        a.push_back(m.row(r));

    const int cols = m.cols();
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(a.size()); ++col) {
        int p = -1;
        for (int r = row; r < static_cast<int>(a.size()); ++r) {
            if (a[r][col] != 0) {
                p = r;
                break;
            }
        }
        if (p < 0)
            continue;
        std::swap(a[row], a[p]);
        const Rational inv = 1 / a[row][col];
        for (int c = col; c < cols; ++c)
            a[row][c] *= inv;
        for (int r = 0; r < static_cast<int>(a.size()); ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (int c = col; c < cols; ++c)
                a[r][c] -= f * a[row][c];
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    a.resize(row);
    e.rows = std::move(a);
    return e;
}

} // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const int cols = m.cols();
    const Echelon e = reduced_echelon(m);

    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rows[i][f];
        for (const Rational& entry : v) {
            if (entry != 0) {
                const Rational inv = 1 / entry;
                for (Rational& x : v)
                    x *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> independent_row_subset(const RationalMatrix& m) {
    std::vector<int> kept;
    std::vector<std::vector<Rational>> reduced; // one per kept row
    std::vector<int> lead;                      // its first nonzero column

    for (int r = 0; r < m.rows(); ++r) {
        std::vector<Rational> v = m.row(r);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (v[lead[i]] == 0)
                continue;
            const Rational f = v[lead[i]] / reduced[i][lead[i]];
            for (int c = 0; c < m.cols(); ++c)
                v[c] -= f * reduced[i][c];
        }
        int first = -1;
        for (int c = 0; c < m.cols(); ++c) {
            if (v[c] != 0) {
                first = c;
                break;
            }
        }
        if (first < 0)
            continue;
        kept.push_back(r);
        reduced.push_back(std::move(v));
        lead.push_back(first);
    }
    return kept;
}

} // namespace multiproj
