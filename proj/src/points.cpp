#include "multiproj/points.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "multiproj/monomials.hpp"

namespace multiproj {

Dims dims_of(const MultiPoint& p) {
    std::vector<int> n;
    n.reserve(p.coords.size());
    for (const auto& factor : p.coords)
        n.push_back(static_cast<int>(factor.size()) - 1);
    return Dims(std::move(n));
}

MultiPoint normalize(const std::vector<std::vector<Rational>>& raw, const Dims& dims) {
    if (static_cast<int>(raw.size()) != dims.factor_count())
        throw ArityError("expected " + std::to_string(dims.factor_count()) + " factors");
    MultiPoint p;
    p.coords.reserve(raw.size());
    for (int i = 0; i < dims.factor_count(); ++i) {
        const auto& factor = raw[i];
        if (static_cast<int>(factor.size()) != dims[i] + 1)
            throw ArityError("factor " + std::to_string(i + 1) + " needs " +
                             std::to_string(dims[i] + 1) + " coordinates");
        int pivot = -1;
        for (std::size_t j = 0; j < factor.size(); ++j) {
            if (factor[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        }
        if (pivot < 0)
            throw ZeroFactor("factor " + std::to_string(i + 1) + " is the zero vector");
        std::vector<Rational> canon(factor.size());
        const Rational inv = 1 / factor[pivot];
        for (std::size_t j = 0; j < factor.size(); ++j)
            canon[j] = factor[j] * inv;
        p.coords.push_back(std::move(canon));
    }
    return p;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string at_line(int line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

} // namespace

PointSet parse_point_set(const std::string& text) {
    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;

    std::optional<Dims> dims;
    std::vector<MultiPoint> points;

    while (std::getline(in, raw_line)) {
        ++line_no;
        const std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#')
            continue;

        if (!dims) {
            if (line.rfind("dims:", 0) != 0)
                throw SyntaxError(at_line(line_no, "expected 'dims: n1 n2 ...'"));
            std::istringstream header(line.substr(5));
            std::vector<int> n;
            std::string tok;
            while (header >> tok) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size() || v < 1)
                    throw SyntaxError(at_line(line_no, "invalid dims entry '" + tok + "'"));
                n.push_back(v);
            }
            if (n.empty())
                throw SyntaxError(at_line(line_no, "dims needs at least one factor"));
            dims.emplace(std::move(n));
            continue;
        }

        const std::vector<std::string> factor_tokens = split(line, '|');
        if (static_cast<int>(factor_tokens.size()) != dims->factor_count())
            throw ArityError(at_line(line_no, "expected " + std::to_string(dims->factor_count()) +
                                                  " '|'-separated factors"));
        std::vector<std::vector<Rational>> raw;
        raw.reserve(factor_tokens.size());
        for (int i = 0; i < dims->factor_count(); ++i) {
            const std::vector<std::string> coord_tokens = split(factor_tokens[i], ',');
            if (static_cast<int>(coord_tokens.size()) != (*dims)[i] + 1)
                throw ArityError(at_line(line_no, "factor " + std::to_string(i + 1) + " needs " +
                                                      std::to_string((*dims)[i] + 1) +
                                                      " coordinates"));
            std::vector<Rational> coords;
            coords.reserve(coord_tokens.size());
            for (const std::string& tok : coord_tokens) {
                try {
                    coords.push_back(parse_rational(trim(tok)));
                } catch (const SyntaxError& e) {
                    throw SyntaxError(at_line(line_no, e.what()));
                }
            }
            raw.push_back(std::move(coords));
        }

        MultiPoint p;
        try {
            p = normalize(raw, *dims);
        } catch (const ZeroFactor& e) {
            throw ZeroFactor(at_line(line_no, e.what()));
        }
        if (std::find(points.begin(), points.end(), p) != points.end())
            throw DuplicatePoint(at_line(line_no, "duplicate of an earlier point"));
        points.push_back(std::move(p));
    }

    if (!dims)
        throw SyntaxError("missing 'dims:' header");
    if (points.empty())
        throw EmptySet("no points in input");
    return PointSet{*dims, std::move(points)};
}

std::string format_point_set(const PointSet& x) {
    std::string out = "dims:";
    for (int n : x.dims.factors())
        out += " " + std::to_string(n);
    out += "\n";
    for (const MultiPoint& p : x.points) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (i > 0)
                out += "|";
            for (std::size_t j = 0; j < p.coords[i].size(); ++j) {
                if (j > 0)
                    out += ",";
                out += to_string(p.coords[i][j]);
            }
        }
        out += "\n";
    }
    return out;
}

PointSet projection(const PointSet& x, int factor) {
    PointSet out{Dims({x.dims[factor]}), {}};
    for (const MultiPoint& p : x.points) {
        MultiPoint q{{p.coords[factor]}};
        if (std::find(out.points.begin(), out.points.end(), q) == out.points.end())
            out.points.push_back(std::move(q));
    }
    return out;
}

std::vector<Fiber> fibers(const PointSet& x, int factor) {
    const int k = x.dims.factor_count();
    if (k < 2)
        throw NotAProduct("fibers need at least two factors");

    std::vector<int> residual_dims;
    for (int i = 0; i < k; ++i)
        if (i != factor)
            residual_dims.push_back(x.dims[i]);
    const Dims rdims(residual_dims);

    std::vector<Fiber> out;
    for (const MultiPoint& p : x.points) {
        MultiPoint coord{{p.coords[factor]}};
        MultiPoint rest;
        for (int i = 0; i < k; ++i)
            if (i != factor)
                rest.coords.push_back(p.coords[i]);

        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Fiber& f) { return f.coordinate == coord; });
        if (it == out.end()) {
            out.push_back(Fiber{std::move(coord), PointSet{rdims, {std::move(rest)}}});
        } else {
            it->residual.points.push_back(std::move(rest));
        }
    }
    return out;
}

Partition fiber_partition(const PointSet& x, int factor) {
    std::vector<int> sizes;
    for (const Fiber& f : fibers(x, factor))
        sizes.push_back(f.residual.size());
    return Partition::from_unsorted(std::move(sizes));
}

std::vector<MultiForm> point_ideal_generators(const MultiPoint& p) {
    const Dims dims = dims_of(p);
    const int k = dims.factor_count();
    std::vector<MultiForm> out;

    for (int i = 0; i < k; ++i) {
        const auto& factor = p.coords[i];
        int pivot = 0;
        while (factor[pivot] == 0)
            ++pivot;

        MultiDegree deg(std::vector<int>(k, 0));
        deg.entries[i] = 1;
        // Basis of degree e_i is x_{i,0}, ..., x_{i,n_i} in order.
        for (int j = 0; j <= dims[i]; ++j) {
            if (j == pivot)
                continue;
            MultiForm form{deg, std::vector<Rational>(dims[i] + 1, Rational(0))};
            form.coefficients[j] = 1;
            form.coefficients[pivot] = -factor[j];
            out.push_back(std::move(form));
        }
    }
    return out;
}

} // namespace multiproj
