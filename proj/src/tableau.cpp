#include "glmn/tableau.hpp"

#include <stdexcept>
#include <string>

namespace glmn {

Tableau::Tableau(Shape shape, std::vector<std::vector<Rational>> rows)
    : shape_(shape), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.total()) {
        throw std::invalid_argument("pattern must have m+n rows");
    }
    for (int k = 1; k <= shape_.total(); ++k) {
        if (static_cast<int>(rows_[static_cast<std::size_t>(k - 1)].size()) != k) {
            throw std::invalid_argument("row " + std::to_string(k) + " must have " +
                                        std::to_string(k) + " entries");
        }
    }
}

Tableau Tableau::highest_weight(const Shape& shape, const Weight& top) {
    if (static_cast<int>(top.entries.size()) != shape.total()) {
        throw std::invalid_argument("weight length does not match shape");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(shape.total()));
    for (int k = 1; k <= shape.total(); ++k) {
        rows.emplace_back(top.entries.begin(), top.entries.begin() + k);
    }
    return Tableau(shape, std::move(rows));
}

const Rational& Tableau::lambda(int k, int i) const {
    if (k < 1 || k > shape_.total() || i < 1 || i > k) {
        throw std::out_of_range("pattern entry (" + std::to_string(k) + "," + std::to_string(i) +
                                ") out of range");
    }
    return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
}

Rational Tableau::l_value(int k, int i) const {
    const Rational& lam = lambda(k, i);
    if (i <= shape_.m) return lam - i + 1;
    return -lam + i - 2 * shape_.m;
}

Rational Tableau::theta(int k, int i) const {
    if (k < shape_.m || k > shape_.total() - 1 || i < 1 || i > shape_.m) {
        throw std::out_of_range("theta index (" + std::to_string(k) + "," + std::to_string(i) +
                                ") out of range");
    }
    return lambda(k + 1, i) - lambda(k, i);
}

Rational Tableau::h_eigenvalue(int k) const {
    if (k < 1 || k > shape_.total()) throw std::out_of_range("row out of range");
    Rational sum = 0;
    for (int j = 1; j <= k; ++j) sum += lambda(k, j);
    for (int j = 1; j <= k - 1; ++j) sum -= lambda(k - 1, j);
    return sum;
}

Weight Tableau::top_weight() const {
    return Weight{rows_.back()};
}

Tableau Tableau::shifted(const Shift& s) const {
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("shift sign must be +-1");
    if (s.row < 1 || s.row > shape_.total() - 1 || s.col < 1 || s.col > s.row) {
        throw std::out_of_range("shift position (" + std::to_string(s.row) + "," +
                                std::to_string(s.col) + ") out of range (top row is fixed)");
    }
    Tableau out = *this;
    out.rows_[static_cast<std::size_t>(s.row - 1)][static_cast<std::size_t>(s.col - 1)] += s.sign;
    return out;
}

bool Tableau::integer_shift_of(const Tableau& other) const {
    if (!(shape_ == other.shape_)) return false;
    if (rows_.back() != other.rows_.back()) return false;
    for (int k = 1; k <= shape_.total() - 1; ++k) {
        for (int i = 1; i <= k; ++i) {
            if (!is_integer(lambda(k, i) - other.lambda(k, i))) return false;
        }
    }
    return true;
}

std::strong_ordering Tableau::operator<=>(const Tableau& other) const {
    if (auto c = shape_.m <=> other.shape_.m; c != 0) return c;
    if (auto c = shape_.n <=> other.shape_.n; c != 0) return c;
    for (int k = shape_.total(); k >= 1; --k) {
        const auto& a = rows_[static_cast<std::size_t>(k - 1)];
        const auto& b = other.rows_[static_cast<std::size_t>(k - 1)];
        for (int i = 0; i < k; ++i) {
            const auto& x = a[static_cast<std::size_t>(i)];
            const auto& y = b[static_cast<std::size_t>(i)];
            if (x < y) return std::strong_ordering::less;
            if (y < x) return std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

bool Tableau::operator==(const Tableau& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
}

}  // namespace glmn
