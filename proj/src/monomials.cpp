#include "multiproj/monomials.hpp"

namespace multiproj {

std::int64_t basis_size(const Dims& dims, const MultiDegree& j) {
    if (j.size() != dims.factor_count())
        throw std::invalid_argument("multidegree length must match factor count");
    Integer n(1);
    Integer b;
    for (int i = 0; i < dims.factor_count(); ++i) {
        if (j[i] < 0)
            throw std::invalid_argument("multidegree entries must be >= 0");
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(dims[i] + j[i]),
                     static_cast<unsigned long>(j[i]));
        n *= b;
    }
    return n.get_si();
}

std::vector<std::vector<int>> factor_exponents(int slots, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(slots);
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == slots - 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur.push_back(a);
            self(self, slot + 1, left - a);
            cur.pop_back();
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<Monomial> monomial_basis(const Dims& dims, const MultiDegree& j) {
    const int k = dims.factor_count();
    if (j.size() != k)
        throw std::invalid_argument("multidegree length must match factor count");

    std::vector<std::vector<std::vector<int>>> per_factor(k);
    for (int i = 0; i < k; ++i)
        per_factor[i] = factor_exponents(dims[i] + 1, j[i]);

    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(basis_size(dims, j)));
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        Monomial m;
        m.exponents.reserve(k);
        for (int i = 0; i < k; ++i)
            m.exponents.push_back(per_factor[i][idx[i]]);
        out.push_back(std::move(m));

        int i = k - 1; // factor 1 is the slowest digit
        while (i >= 0 && ++idx[i] == per_factor[i].size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    return out;
}

namespace {

Rational pow_rational(const Rational& base, int e) {
    if (e == 0)
        return 1;
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out; // canonical since base is canonical
}

std::string variable_name(int factor, int index, int k) {
    static const char letters[] = {'x', 'y', 'z', 'w'};
    if (k <= 4)
        return std::string(1, letters[factor]) + std::to_string(index);
    return "x" + std::to_string(factor + 1) + "_" + std::to_string(index);
}

} // namespace

Rational evaluate(const Monomial& m, const MultiPoint& p) {
    Rational v(1);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        for (std::size_t j = 0; j < m.exponents[i].size(); ++j)
            if (m.exponents[i][j] != 0)
                v *= pow_rational(p.coords[i][j], m.exponents[i][j]);
    return v;
}

Rational evaluate(const MultiForm& f, const MultiPoint& p) {
    const Dims dims = dims_of(p);
    const std::vector<Monomial> basis = monomial_basis(dims, f.degree);
    if (basis.size() != f.coefficients.size())
        throw std::invalid_argument("form coefficient count does not match its basis");
    Rational v(0);
    for (std::size_t c = 0; c < basis.size(); ++c)
        if (f.coefficients[c] != 0)
            v += f.coefficients[c] * evaluate(basis[c], p);
    return v;
}

std::string to_string(const Monomial& m, const Dims& dims) {
    std::string out;
    for (int i = 0; i < dims.factor_count(); ++i) {
        for (int j = 0; j <= dims[i]; ++j) {
            const int e = m.exponents[i][j];
            if (e == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += variable_name(i, j, dims.factor_count());
            if (e > 1)
                out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MultiForm& f, const Dims& dims) {
    const std::vector<Monomial> basis = monomial_basis(dims, f.degree);
    std::string out;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Rational& coeff = f.coefficients[c];
        if (coeff == 0)
            continue;
        const std::string mono = to_string(basis[c], dims);
        const bool negative = coeff < 0;
        const Rational mag = abs(coeff);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || mono == "1") {
            out += to_string(mag);
            if (mono != "1")
                out += "*";
        }
        if (mono != "1")
            out += mono;
    }
    return out.empty() ? "0" : out;
}

} // namespace multiproj
