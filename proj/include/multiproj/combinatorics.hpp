#pragma once

#include <string>
#include <vector>

#include "multiproj/errors.hpp"

namespace multiproj {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Sorts the values weakly decreasing first; all must be positive.
    static Partition from_unsorted(std::vector<int> values);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }
    int sum() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Conjugate partition: entry i counts the parts that are >= i+1 (transpose
/// of the Ferrers diagram). Partitions the same integer; length = largest part.
Partition conjugate(const Partition& p);

/// Prefix-sum dominance after zero-padding to a common length. Defined for
/// unequal sums as well: every prefix sum of a must be >= that of b.
bool majorizes(const Partition& a, const Partition& b);

/// First differences with an implicit leading zero: (v0, v1-v0, ...).
/// Entries may be negative when v is not weakly increasing.
std::vector<int> delta(const std::vector<int>& v);

/// Gale-Ryser criterion: a (0,1)-matrix with column sums alpha and row sums
/// beta exists iff the sums agree and conjugate(alpha) majorizes beta.
bool gale_ryser_feasible(const Partition& alpha, const Partition& beta);

/// (0,1)-matrix with margin vectors.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { bits_[static_cast<std::size_t>(r) * cols_ + c] = v ? 1 : 0; }

    /// Rows of '0'/'1' characters, one row per line.
    std::string to_text() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<unsigned char> bits_;
};

/// Ryser's column-filling construction of a matrix with column sums alpha and
/// row sums beta. Columns are processed right to left; each column places its
/// 1s in the rows with the largest remaining row demand, ties broken by
/// smallest row index. Throws Infeasible when no such matrix exists.
BinaryMatrix ryser_construct(const Partition& alpha, const Partition& beta);

struct Margins {
    std::vector<int> column_sums; // unsorted, one per column
    std::vector<int> row_sums;    // unsorted, one per row

    /// Sorted views; throw ZeroMargin if any margin is zero.
    Partition column_partition() const;
    Partition row_partition() const;
};

Margins matrix_margins(const BinaryMatrix& a);

} // namespace multiproj
