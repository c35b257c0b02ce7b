#include "multiproj/hilbert.hpp"

#include <algorithm>

namespace multiproj {

RationalMatrix evaluation_matrix(const PointSet& x, const MultiDegree& j) {
    const int k = x.dims.factor_count();
    if (j.size() != k)
        throw std::invalid_argument("multidegree length must match factor count");
    const int s = x.size();

    // Per factor: its exponent vectors, and their values at every point.
    std::vector<std::vector<std::vector<int>>> exps(k);
    std::vector<std::vector<std::vector<Rational>>> values(k); // [factor][point][exp index]
    for (int i = 0; i < k; ++i) {
        exps[i] = factor_exponents(x.dims[i] + 1, j[i]);
        values[i].resize(s);
        for (int p = 0; p < s; ++p) {
            values[i][p].reserve(exps[i].size());
            for (const auto& e : exps[i]) {
                Monomial m;
                m.exponents.assign(1, e);
                MultiPoint single{{x.points[p].coords[i]}};
                values[i][p].push_back(evaluate(m, single));
            }
        }
    }

    const std::int64_t n = basis_size(x.dims, j);
    RationalMatrix out(s, static_cast<int>(n));
    std::vector<std::size_t> idx(k, 0);
    for (int col = 0; col < static_cast<int>(n); ++col) {
        for (int p = 0; p < s; ++p) {
            Rational v = values[0][p][idx[0]];
            for (int i = 1; i < k; ++i)
                v *= values[i][p][idx[i]];
            out.at(p, col) = v;
        }
        int i = k - 1;
        while (i >= 0 && ++idx[i] == exps[i].size()) {
            idx[i] = 0;
            --i;
        }
    }
    return out;
}

int hilbert_value(const PointSet& x, const MultiDegree& j) {
    return rank(evaluation_matrix(x, j));
}

HilbertTable::HilbertTable(Dims dims, int s, std::vector<int> t, std::vector<int> box_values)
    : dims_(std::move(dims)), s_(s), t_(std::move(t)) {
    std::size_t total = 1;
    for (int ti : t_)
        total *= static_cast<std::size_t>(ti);
    if (box_values.size() != total)
        throw std::invalid_argument("box size does not match t");
    box_ = std::move(box_values);

    strides_.assign(t_.size(), 1);
    for (int i = static_cast<int>(t_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * t_[i + 1];
}

int HilbertTable::at(const std::vector<int>& j) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < t_.size(); ++i)
        flat += static_cast<std::size_t>(j[i]) * strides_[i];
    return box_[flat];
}

HilbertTable hilbert_table(const PointSet& x) {
    const int k = x.dims.factor_count();
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i)
        t[i] = projection(x, i).size();

    std::size_t total = 1;
    for (int ti : t)
        total *= static_cast<std::size_t>(ti);

    // Box entries are independent rank computations.
    std::vector<int> box(total);
    std::vector<int> j(k, 0);
    for (std::size_t cell = 0; cell < total; ++cell) {
        box[cell] = hilbert_value(x, MultiDegree(j));
        int i = k - 1;
        while (i >= 0 && ++j[i] == t[i]) {
            j[i] = 0;
            --i;
        }
    }
    return HilbertTable(x.dims, x.size(), std::move(t), std::move(box));
}

int hilbert_query(const HilbertTable& table, const MultiDegree& j) {
    const std::vector<int>& t = table.t();
    if (j.size() != static_cast<int>(t.size()))
        throw std::invalid_argument("multidegree length must match factor count");
    std::vector<int> clamped(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        clamped[i] = std::min(j[static_cast<int>(i)], t[i] - 1);
    return table.at(clamped);
}

Border border(const HilbertTable& table) {
    const std::vector<int>& t = table.t();
    const int k = static_cast<int>(t.size());
    Border out;

    for (int i = 0; i < k; ++i) {
        BorderArray arr;
        for (int h = 0; h < k; ++h)
            if (h != i)
                arr.shape.push_back(t[h]);

        std::size_t total = 1;
        for (int sh : arr.shape)
            total *= static_cast<std::size_t>(sh);
        arr.values.reserve(total);

        std::vector<int> rest(arr.shape.size(), 0);
        for (std::size_t cell = 0; cell < total; ++cell) {
            std::vector<int> j(k);
            int pos = 0;
            for (int h = 0; h < k; ++h)
                j[h] = (h == i) ? t[i] - 1 : rest[pos++];
            arr.values.push_back(table.at(j));

            int d = static_cast<int>(rest.size()) - 1;
            while (d >= 0 && ++rest[d] == arr.shape[d]) {
                rest[d] = 0;
                --d;
            }
        }
        out.arrays.push_back(std::move(arr));
    }
    return out;
}

SeparatorSet separators(const PointSet& x, const MultiDegree& j) {
    const RationalMatrix m = evaluation_matrix(x, j);
    SeparatorSet out;
    out.subset = independent_row_subset(m);
    const int h = static_cast<int>(out.subset.size());
    const RationalMatrix sub = m.select_rows(out.subset);

    for (int i = 0; i < h; ++i) {
        std::vector<int> others;
        others.reserve(h - 1);
        for (int l = 0; l < h; ++l)
            if (l != i)
                others.push_back(l);
        const std::vector<std::vector<Rational>> basis = nullspace(sub.select_rows(others));

        bool found = false;
        for (const auto& v : basis) {
            Rational val(0);
            for (int c = 0; c < sub.cols(); ++c)
                if (v[c] != 0)
                    val += sub.at(i, c) * v[c];
            if (val != 0) {
                out.forms.push_back(MultiForm{j, v});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("no separator form found; rank bookkeeping is broken");
    }
    return out;
}

std::vector<MultiForm> separators_pn(const PointSet& x) {
    if (x.dims.factor_count() != 1)
        throw NotSingleFactor("single-factor separators need k = 1");
    const int s = x.size();
    SeparatorSet sep = separators(x, MultiDegree({s - 1}));
    if (static_cast<int>(sep.subset.size()) != s)
        throw std::logic_error("expected all points to be separated at degree s-1");
    return std::move(sep.forms);
}

bool PropertyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.pass; });
}

namespace {

std::string degree_string(const std::vector<int>& j) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(j[i]);
    }
    return out + ")";
}

// Odometer over the box, j_1 slowest.
bool advance(std::vector<int>& j, const std::vector<int>& t) {
    int i = static_cast<int>(j.size()) - 1;
    while (i >= 0 && ++j[i] == t[i]) {
        j[i] = 0;
        --i;
    }
    return i >= 0;
}

} // namespace

PropertyReport verify_properties(const PointSet& x, const HilbertTable& table) {
    PropertyReport report;
    const std::vector<int>& t = table.t();
    const int k = static_cast<int>(t.size());

    const auto query = [&](std::vector<int> j) { return hilbert_query(table, MultiDegree(j)); };

    // (a) weakly increasing along every axis, including one clamped step out.
    {
        PropertyCheck check{"monotone", true, ""};
        std::vector<int> j(k, 0);
        do {
            for (int d = 0; d < k && check.pass; ++d) {
                std::vector<int> up = j;
                ++up[d];
                if (table.at(j) > query(up)) {
                    check.pass = false;
                    check.detail = "drops after " + degree_string(j) + " along axis " +
                                   std::to_string(d + 1);
                }
            }
        } while (check.pass && advance(j, t));
        report.checks.push_back(std::move(check));
    }

    // (b) a repeated value along an axis stays repeated from there on.
    {
        PropertyCheck check{"stabilizes", true, ""};
        std::vector<int> j(k, 0);
        do {
            for (int d = 0; d < k && check.pass; ++d) {
                if (j[d] == 0)
                    continue;
                std::vector<int> prev = j;
                --prev[d];
                if (table.at(prev) != table.at(j))
                    continue;
                std::vector<int> next = j;
                ++next[d];
                if (query(next) != table.at(j)) {
                    check.pass = false;
                    check.detail = "value repeats at " + degree_string(j) +
                                   " but grows again along axis " + std::to_string(d + 1);
                }
            }
        } while (check.pass && advance(j, t));
        report.checks.push_back(std::move(check));
    }

    // (c) each axis restriction is the Hilbert function of the projection.
    {
        PropertyCheck check{"axis-projection", true, ""};
        for (int d = 0; d < k && check.pass; ++d) {
            const PointSet proj = projection(x, d);
            for (int l = 0; l <= t[d] && check.pass; ++l) {
                std::vector<int> j(k, 0);
                j[d] = l;
                const int expected = hilbert_value(proj, MultiDegree({l}));
                if (query(j) != expected) {
                    check.pass = false;
                    check.detail = "axis " + std::to_string(d + 1) + " at step " +
                                   std::to_string(l) + ": got " + std::to_string(query(j)) +
                                   ", projection gives " + std::to_string(expected);
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    // (d) the corner of the box, and everything beyond, equals s.
    {
        PropertyCheck check{"corner", true, ""};
        std::vector<int> corner(k);
        for (int d = 0; d < k; ++d)
            corner[d] = t[d] - 1;
        std::vector<std::vector<int>> probes{corner};
        for (int d = 0; d < k; ++d) {
            std::vector<int> up = corner;
            up[d] += 1;
            probes.push_back(up);
        }
        std::vector<int> far = corner;
        for (int d = 0; d < k; ++d)
            far[d] += 2;
        probes.push_back(far);
        for (const auto& j : probes) {
            if (query(j) != table.s()) {
                check.pass = false;
                check.detail = "value at " + degree_string(j) + " is " +
                               std::to_string(query(j)) + ", not s = " +
                               std::to_string(table.s());
                break;
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

} // namespace multiproj
