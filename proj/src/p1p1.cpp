#include "multiproj/p1p1.hpp"

#include <algorithm>
#include <numeric>

namespace multiproj {

namespace {

const Dims& p1p1_dims() {
    static const Dims d({1, 1});
    return d;
}

std::vector<int> prefix_sums_padded(const Partition& p, int length) {
    std::vector<int> out(length);
    int acc = 0;
    for (int i = 0; i < length; ++i) {
        if (i < p.size())
            acc += p[i];
        out[i] = acc;
    }
    return out;
}

std::vector<int> strip_trailing_zeros(std::vector<int> v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

// Weakly decreasing positive entries, or nothing.
bool is_partition_vector(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1)
            return false;
        if (i > 0 && v[i] > v[i - 1])
            return false;
    }
    return true;
}

} // namespace

std::pair<Partition, Partition> alpha_beta(const PointSet& x) {
    if (!(x.dims == p1p1_dims()))
        throw WrongAmbient("alpha/beta partitions are defined for P^1 x P^1 only");
    return {fiber_partition(x, 0), fiber_partition(x, 1)};
}

BorderPair border_from_partitions(const Partition& alpha, const Partition& beta) {
    if (alpha.sum() != beta.sum())
        throw SumMismatch("alpha and beta must partition the same integer");
    BorderPair out;
    out.bc = prefix_sums_padded(conjugate(alpha), beta.size());
    out.br = prefix_sums_padded(conjugate(beta), alpha.size());
    return out;
}

BorderVerdict classify_border(const BorderPair& b) {
    BorderVerdict v;
    if (b.bc.empty() || b.br.empty()) {
        v.reasons.push_back("both border vectors must be nonempty");
        return v;
    }

    const std::vector<int> dbc = strip_trailing_zeros(delta(b.bc));
    const std::vector<int> dbr = strip_trailing_zeros(delta(b.br));

    bool shapes_ok = true;
    if (!is_partition_vector(dbc)) {
        v.reasons.push_back("first differences of B_C do not form a partition");
        shapes_ok = false;
    }
    if (!is_partition_vector(dbr)) {
        v.reasons.push_back("first differences of B_R do not form a partition");
        shapes_ok = false;
    }

    const int s_bc = b.bc.back();
    const int s_br = b.br.back();
    if (s_bc != s_br) {
        v.reasons.push_back("B_C ends at " + std::to_string(s_bc) + " but B_R ends at " +
                            std::to_string(s_br) + "; both must end at the same s");
        shapes_ok = false;
    }

    if (b.bc.front() != static_cast<int>(b.br.size()))
        v.reasons.push_back("B_C must start at the length of B_R (" +
                            std::to_string(b.br.size()) + "), got " +
                            std::to_string(b.bc.front()));
    if (b.br.front() != static_cast<int>(b.bc.size()))
        v.reasons.push_back("B_R must start at the length of B_C (" +
                            std::to_string(b.bc.size()) + "), got " +
                            std::to_string(b.br.front()));

    if (shapes_ok) {
        const Partition pc(dbc);
        const Partition pr(dbr);
        if (!majorizes(pc, conjugate(pr)))
            v.reasons.push_back(
                "first differences of B_C do not majorize the conjugate of those of B_R");
    }

    v.feasible = v.reasons.empty();
    return v;
}

PointSet witness_from_matrix(const BinaryMatrix& a) {
    const Margins m = matrix_margins(a);
    for (int c : m.column_sums)
        if (c == 0)
            throw ZeroMargin("matrix has an all-zero column");
    for (int r : m.row_sums)
        if (r == 0)
            throw ZeroMargin("matrix has an all-zero row");

    PointSet x{p1p1_dims(), {}};
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c))
                x.points.push_back(
                    MultiPoint{{{Rational(1), Rational(c + 1)}, {Rational(1), Rational(r + 1)}}});
    return x;
}

PointSet witness_from_partitions(const Partition& alpha, const Partition& beta) {
    return witness_from_matrix(ryser_construct(alpha, beta));
}

std::vector<int> line_counts(const std::vector<int>& bc) {
    if (bc.empty())
        throw std::invalid_argument("empty border vector");
    for (std::size_t i = 1; i < bc.size(); ++i)
        if (bc[i] < bc[i - 1])
            throw std::invalid_argument("border vector must be weakly increasing");

    const int r = static_cast<int>(bc.size());
    const auto value = [&](int i) {
        if (i < 0)
            return 0;
        return bc[std::min(i, r - 1)];
    };
    std::vector<int> out(r);
    for (int j = 1; j <= r; ++j)
        out[j - 1] = (value(j - 1) - value(j - 2)) - (value(j) - value(j - 1));
    return out;
}

} // namespace multiproj
