#pragma once

#include "glmn/rational.hpp"
#include "glmn/superalgebra.hpp"

#include <compare>
#include <vector>

namespace glmn {

// Single-entry shift of a pattern. The top row is fixed and never shifted.
struct Shift {
    int row = 1;
    int col = 1;
    int sign = 1;  // +1 or -1
};

// Triangular pattern of exact rationals: row k holds entries (k,1)..(k,k),
// k = 1..m+n. Stored in lambda coordinates; l and theta views are computed
// on demand.
class Tableau {
public:
    // rows[k-1] must have exactly k entries.
    Tableau(Shape shape, std::vector<std::vector<Rational>> rows);

    // Pattern with every row equal to the leading entries of the top row.
    static Tableau highest_weight(const Shape& shape, const Weight& top);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    const Rational& lambda(int k, int i) const;  // 1 <= i <= k <= m+n
    Rational l_value(int k, int i) const;
    // theta(k, i) = lambda(k+1, i) - lambda(k, i); defined for m <= k <= m+n-1,
    // 1 <= i <= m. Returned as-is; membership predicates restrict it to {0,1}.
    Rational theta(int k, int i) const;

    // Eigenvalue of h_k: row-k sum minus row-(k-1) sum.
    Rational h_eigenvalue(int k) const;
    Weight top_weight() const;

    Tableau shifted(const Shift& s) const;
    // Entry-wise differences against `other` (same shape, same top row) are all
    // integers.
    bool integer_shift_of(const Tableau& other) const;

    // Canonical order: compare rows from the top row down, left to right.
    // Deterministic basis enumeration and matrix fixtures depend on it.
    std::strong_ordering operator<=>(const Tableau& other) const;
    bool operator==(const Tableau& other) const;

private:
    Shape shape_;
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace glmn
