#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multiproj/points.hpp"

namespace multiproj {

/// Multidegree (j_1,...,j_k), one natural per factor.
struct MultiDegree {
    std::vector<int> entries;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> e) : entries(std::move(e)) {}

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[i]; }

    bool operator==(const MultiDegree&) const = default;
};

/// Monomial of the multi-graded polynomial ring: factor i carries an exponent
/// vector of length n_i + 1 whose entries sum to the factor degree.
struct Monomial {
    std::vector<std::vector<int>> exponents;

    bool operator==(const Monomial&) const = default;
};

/// Homogeneous form of a fixed multidegree, as coefficients on the canonical
/// monomial basis of that degree.
struct MultiForm {
    MultiDegree degree;
    std::vector<Rational> coefficients;

    bool operator==(const MultiForm&) const = default;
};

/// Dimension of the degree-j graded piece: the product over factors of
/// binomial(n_i + j_i, j_i).
std::int64_t basis_size(const Dims& dims, const MultiDegree& j);

/// All monomials of multidegree j in canonical order: per-factor exponent
/// vectors in lexicographically decreasing order, factors combined odometer
/// style with factor 1 slowest.
std::vector<Monomial> monomial_basis(const Dims& dims, const MultiDegree& j);

/// Exponent vectors of one factor (length slots, entries summing to total),
/// lexicographically decreasing. Building block of monomial_basis.
std::vector<std::vector<int>> factor_exponents(int slots, int total);

Rational evaluate(const Monomial& m, const MultiPoint& p);
Rational evaluate(const MultiForm& f, const MultiPoint& p);

std::string to_string(const Monomial& m, const Dims& dims);
std::string to_string(const MultiForm& f, const Dims& dims);

} // namespace multiproj
