#include "glmn/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace glmn {

namespace mp = boost::multiprecision;

void make_primitive(RationalRowVector& row) {
    Integer den_lcm = 1;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (row(j) != 0) den_lcm = mp::lcm(den_lcm, mp::denominator(row(j)));
    }
    Integer num_gcd = 0;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (row(j) != 0) num_gcd = mp::gcd(num_gcd, Integer(mp::numerator(row(j)) * (den_lcm / mp::denominator(row(j)))));
    }
    if (num_gcd == 0) return;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (Eigen::Index j = 0; j < row.size(); ++j) row(j) *= scale;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (row(j) != 0) {
            if (row(j) < 0) row = -row;
            break;
        }
    }
}

Eigen::Index RowSpan::reduce(RationalRowVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Eigen::Index p = pivots_[r];
        if (v(p) != 0) {
            // v <- pivot*v - v_p*row, fraction-free style on primitive rows
            const Rational vp = v(p);
            const Rational pp = rows_[r](p);
            v = (v * pp - rows_[r] * vp).eval();
        }
    }
    for (Eigen::Index j = 0; j < cols_; ++j) {
        if (v(j) != 0) return j;
    }
    return -1;
}

bool RowSpan::insert(RationalRowVector v) {
    const Eigen::Index p = reduce(v);
    if (p < 0) return false;
    make_primitive(v);
    // back-substitute into existing rows so membership reduction stays cheap
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r](p) != 0) {
            rows_[r] = (rows_[r] * v(p) - v * rows_[r](p)).eval();
            make_primitive(rows_[r]);
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpan::contains(RationalRowVector v) const { return reduce(v) < 0; }

int rank(RationalMatrix a) {
    // Bareiss fraction-free elimination
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Rational prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) a.row(pivot).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
    // reduced echelon over Q on a copy; free columns parameterize the kernel
    RationalMatrix m = a;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        m.row(r) /= m(r, c);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Eigen::Index> free_cols;
    {
        std::size_t pi = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (pi < pivot_col.size() && pivot_col[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    RationalMatrix basis = RationalMatrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Eigen::Index fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = 1;
        for (std::size_t pi = 0; pi < pivot_col.size(); ++pi) {
            basis(pivot_col[pi], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(pi), fc);
        }
    }
    return basis;
}

bool column_span_contains(const RationalMatrix& a, const RationalMatrix& b) {
    if (b.cols() == 0) return true;
    RationalMatrix joint(a.rows(), a.cols() + b.cols());
    joint << a, b;
    return rank(a) == rank(joint);
}

}  // namespace glmn
