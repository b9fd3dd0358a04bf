#pragma once

#include "glmn/rational.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <vector>

namespace glmn {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

// Scale a row so all entries are coprime integers (leading nonzero > 0).
// Keeps fraction-free elimination from blowing up denominators.
void make_primitive(RationalRowVector& row);

// Incrementally maintained row space in reduced echelon form with primitive
// integer rows. insert() returns true iff the vector enlarged the span.
class RowSpan {
public:
    explicit RowSpan(Eigen::Index cols) : cols_(cols) {}

    bool insert(RationalRowVector v);
    bool contains(RationalRowVector v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    Eigen::Index cols() const { return cols_; }
    const std::vector<RationalRowVector>& rows() const { return rows_; }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }

private:
    // Reduces v against the stored rows; returns pivot column or -1 if v = 0.
    Eigen::Index reduce(RationalRowVector& v) const;

    Eigen::Index cols_;
    std::vector<RationalRowVector> rows_;    // echelon rows, primitive
    std::vector<Eigen::Index> pivots_;       // pivot column per row, insertion order
};

// Rank via fraction-free (Bareiss) elimination.
int rank(RationalMatrix a);

// Columns span the null space of a (exact). Empty matrix when kernel is 0.
RationalMatrix kernel_basis(const RationalMatrix& a);

// True iff every column of b lies in the column span of a.
bool column_span_contains(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace glmn
