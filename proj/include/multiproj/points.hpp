#pragma once

#include <string>
#include <vector>

#include "multiproj/combinatorics.hpp"
#include "multiproj/rational.hpp"

namespace multiproj {

/// Factor dimensions (n_1,...,n_k) of the ambient space P^{n_1} x ... x P^{n_k}.
class Dims {
public:
    explicit Dims(std::vector<int> factors) : factors_(std::move(factors)) {
        if (factors_.empty())
            throw std::invalid_argument("at least one factor required");
        for (int n : factors_)
            if (n < 1)
                throw std::invalid_argument("factor dimensions must be >= 1");
    }

    int factor_count() const { return static_cast<int>(factors_.size()); }
    int operator[](int i) const { return factors_[i]; }
    const std::vector<int>& factors() const { return factors_; }

    bool operator==(const Dims&) const = default;

private:
    std::vector<int> factors_;
};

/// Point of a multi-projective space, stored canonically: in every factor the
/// first nonzero coordinate equals 1. Construct via normalize().
struct MultiPoint {
    std::vector<std::vector<Rational>> coords; // factor i has n_i + 1 entries

    bool operator==(const MultiPoint&) const = default;
};

Dims dims_of(const MultiPoint& p);

/// Finite set of distinct points, in insertion order.
struct PointSet {
    Dims dims;
    std::vector<MultiPoint> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// Scales every factor so its first nonzero coordinate is 1. Two raw tuples
/// are projectively equal iff their canonical forms are equal componentwise.
MultiPoint normalize(const std::vector<std::vector<Rational>>& raw, const Dims& dims);

/// Parses the line-based point-set format:
///   # comment and blank lines ignored
///   dims: n1 n2 ... nk
///   c,...,c|c,...,c        one point per line, factors '|'-separated,
///                          coordinates are integers or fractions p/q
PointSet parse_point_set(const std::string& text);

/// Inverse of parse_point_set for canonical sets.
std::string format_point_set(const PointSet& x);

/// The distinct factor-th coordinates of x, as a point set in that single
/// factor, in order of first appearance. factor is 0-based.
PointSet projection(const PointSet& x, int factor);

struct Fiber {
    MultiPoint coordinate; // a point of the factor-th projective space
    PointSet residual;     // the matching points, projected to the other factors
};

/// One fiber per distinct factor-th coordinate, in order of first appearance.
/// The residual sets partition x, so their sizes sum to |x|. Requires k >= 2.
std::vector<Fiber> fibers(const PointSet& x, int factor);

/// Fiber sizes sorted weakly decreasing; a partition of |x|.
Partition fiber_partition(const PointSet& x, int factor);

struct MultiForm;

/// Generators of the ideal of p: for each factor with pivot coordinate j0
/// (the first nonzero, scaled to 1) and each other index j, the linear form
/// x_j - a_j * x_j0 of that factor's degree. All of them vanish at p.
std::vector<MultiForm> point_ideal_generators(const MultiPoint& p);

} // namespace multiproj
