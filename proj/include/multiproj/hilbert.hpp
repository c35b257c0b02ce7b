#pragma once

#include <string>
#include <vector>

#include "multiproj/linalg.hpp"
#include "multiproj/monomials.hpp"
#include "multiproj/points.hpp"

namespace multiproj {

/// The s x N matrix whose row i holds the values of the canonical monomial
/// basis of degree j at the i-th point (canonical representatives).
RationalMatrix evaluation_matrix(const PointSet& x, const MultiDegree& j);

/// Hilbert function value at j: the rank of the evaluation matrix.
int hilbert_value(const PointSet& x, const MultiDegree& j);

/// Hilbert values on the closed box [0,t_1-1] x ... x [0,t_k-1], where
/// t_i is the number of distinct i-th coordinates. Every value outside the
/// box follows by clamping each coordinate to t_i - 1.
class HilbertTable {
public:
    HilbertTable(Dims dims, int s, std::vector<int> t, std::vector<int> box_values);

    const Dims& dims() const { return dims_; }
    int s() const { return s_; }
    const std::vector<int>& t() const { return t_; }
    const std::vector<int>& box_values() const { return box_; } // j_1 outermost

    /// Value at an in-box multidegree.
    int at(const std::vector<int>& j) const;

private:
    Dims dims_;
    int s_;
    std::vector<int> t_;
    std::vector<int> strides_;
    std::vector<int> box_;
};

/// Computes hilbert_value on every multidegree of the box.
HilbertTable hilbert_table(const PointSet& x);

/// Value at any multidegree: coordinates are clamped to the box first.
int hilbert_query(const HilbertTable& table, const MultiDegree& j);

/// Border array i: the box face at j_i = t_i - 1, a (k-1)-dimensional array of
/// shape t_1 x ... x (i-th omitted) x ... x t_k, row-major. For k = 2 the two
/// arrays are the eventual column vector B_C and eventual row vector B_R.
struct BorderArray {
    std::vector<int> shape; // empty for k = 1 (a single value)
    std::vector<int> values;
};

struct Border {
    std::vector<BorderArray> arrays; // one per factor
};

Border border(const HilbertTable& table);

/// Separators: a subset of h = H_X(j) points together with forms of degree j,
/// the i-th vanishing at every subset point except the i-th, where it is
/// nonzero. The subset is the greedy independent row choice in insertion
/// order; each form is the first reduced nullspace basis vector of the
/// submatrix with the i-th subset row removed that is nonzero at that point.
struct SeparatorSet {
    std::vector<int> subset;      // point indices into x
    std::vector<MultiForm> forms; // forms[i] belongs to subset[i]
};

SeparatorSet separators(const PointSet& x, const MultiDegree& j);

/// Single-factor separators: s forms of degree s-1 with the Kronecker
/// vanishing pattern on all of x. Throws NotSingleFactor if k > 1.
std::vector<MultiForm> separators_pn(const PointSet& x);

struct PropertyCheck {
    std::string name;
    bool pass;
    std::string detail; // empty when passing
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool ok() const;
};

/// Structural checks on a computed table: monotonicity along every axis,
/// stabilization of repeated values, axis restrictions matching the projected
/// point sets, and the corner value s. Failures become report entries.
PropertyReport verify_properties(const PointSet& x, const HilbertTable& table);

} // namespace multiproj
