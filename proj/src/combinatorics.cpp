#include "multiproj/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace multiproj {

Partition Partition::from_unsorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    return Partition(std::move(values));
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return {};
    std::vector<int> out(p[0], 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++out[i];
    return Partition(std::move(out));
}

bool majorizes(const Partition& a, const Partition& b) {
    const std::size_t n = std::max(a.parts().size(), b.parts().size());
    long prefix_a = 0;
    long prefix_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix_a += i < a.parts().size() ? a.parts()[i] : 0;
        prefix_b += i < b.parts().size() ? b.parts()[i] : 0;
        if (prefix_a < prefix_b)
            return false;
    }
    return true;
}

std::vector<int> delta(const std::vector<int>& v) {
    if (v.empty())
        throw std::invalid_argument("delta of an empty sequence");
    std::vector<int> out(v.size());
    out[0] = v[0];
    for (std::size_t i = 1; i < v.size(); ++i)
        out[i] = v[i] - v[i - 1];
    return out;
}

bool gale_ryser_feasible(const Partition& alpha, const Partition& beta) {
    return alpha.sum() == beta.sum() && majorizes(conjugate(alpha), beta);
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            out += at(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BinaryMatrix ryser_construct(const Partition& alpha, const Partition& beta) {
    if (!gale_ryser_feasible(alpha, beta))
        throw Infeasible("no (0,1)-matrix has column sums alpha and row sums beta");

    const int rows = beta.size();
    const int cols = alpha.size();
    BinaryMatrix a(rows, cols);
    std::vector<int> remaining = beta.parts();
    std::vector<int> order(rows);

    for (int c = cols - 1; c >= 0; --c) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return remaining[x] > remaining[y]; });
        for (int u = 0; u < alpha[c]; ++u) {
            const int r = order[u];
            if (remaining[r] <= 0)
                throw Infeasible("column demand exceeds remaining row demand");
            a.set(r, c, 1);
            --remaining[r];
        }
    }
    return a;
}

namespace {

Partition margin_partition(const std::vector<int>& sums, const char* what) {
    for (int v : sums)
        if (v == 0)
            throw ZeroMargin(std::string("matrix has an all-zero ") + what);
    return Partition::from_unsorted(sums);
}

} // namespace

Partition Margins::column_partition() const {
    return margin_partition(column_sums, "column");
}

Partition Margins::row_partition() const {
    return margin_partition(row_sums, "row");
}

Margins matrix_margins(const BinaryMatrix& a) {
    Margins m;
    m.column_sums.assign(a.cols(), 0);
    m.row_sums.assign(a.rows(), 0);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            m.column_sums[c] += a.at(r, c);
            m.row_sums[r] += a.at(r, c);
        }
    }
    return m;
}

} // namespace multiproj
