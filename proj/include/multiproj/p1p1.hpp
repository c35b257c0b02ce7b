#pragma once

#include <utility>
#include <vector>

#include "multiproj/combinatorics.hpp"
#include "multiproj/hilbert.hpp"
#include "multiproj/points.hpp"

namespace multiproj {

/// k = 2 border: bc is the eventual column vector (the values the table's
/// columns stabilize to, length r), br the eventual row vector (length t).
struct BorderPair {
    std::vector<int> bc;
    std::vector<int> br;

    bool operator==(const BorderPair&) const = default;
};

/// Fiber-size partitions (alpha, beta) of a point set in P^1 x P^1.
/// Throws WrongAmbient for any other ambient space.
std::pair<Partition, Partition> alpha_beta(const PointSet& x);

/// Closed-form border: bc holds the first |beta| prefix sums of
/// conjugate(alpha) (zero-padded), br the first |alpha| prefix sums of
/// conjugate(beta). Throws SumMismatch when the partitions disagree.
BorderPair border_from_partitions(const Partition& alpha, const Partition& beta);

struct BorderVerdict {
    bool feasible = false;
    std::vector<std::string> reasons; // empty when feasible
};

/// Decides whether a border pair is achieved by some set of distinct points
/// in P^1 x P^1, with reasons for every violated condition.
BorderVerdict classify_border(const BorderPair& b);

/// Point set {P_i x Q_j | a(j-1,i-1) = 1} with P_i = [1:i] over the columns
/// and Q_j = [1:j] over the rows. Throws ZeroMargin on an all-zero row or
/// column.
PointSet witness_from_matrix(const BinaryMatrix& a);

/// Witness with the given fiber partitions, via the Ryser construction.
/// Throws Infeasible when the Gale-Ryser criterion fails.
PointSet witness_from_partitions(const Partition& alpha, const Partition& beta);

/// Entry j (1-based) counts the (1,0)-lines through the set that contain
/// exactly j points, read off the eventual column vector by second
/// differences.
std::vector<int> line_counts(const std::vector<int>& bc);

} // namespace multiproj
