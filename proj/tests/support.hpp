#pragma once

// Test-only oracles, independent of the library's enumeration and action
// paths. Expected values in the suites are computed here or frozen from
// hand evaluation.

#include "glmn/module.hpp"
#include "glmn/relations.hpp"
#include "glmn/superalgebra.hpp"
#include "glmn/tableau.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace glmn::testing {

// Weyl dimension of the irreducible gl(k) module with dominant integral
// highest weight mu: prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
inline Integer weyl_dim(const std::vector<Rational>& mu) {
    Rational acc = 1;
    const int k = static_cast<int>(mu.size());
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            acc *= (mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)] +
                    j - i) /
                   Rational(j - i);
        }
    }
    return integer_value(acc);
}

// 2^{mn} * weyl(even block) * weyl(odd block); the expected dimension of an
// essentially typical irreducible module.
inline Integer induced_dimension(const Shape& sh, const Weight& w) {
    std::vector<Rational> even(w.entries.begin(), w.entries.begin() + sh.m);
    std::vector<Rational> odd(w.entries.begin() + sh.m, w.entries.end());
    return (Integer(1) << (sh.m * sh.n)) * weyl_dim(even) * weyl_dim(odd);
}

// All dominant integral weights with entries in [-bound, bound].
inline std::vector<Weight> dominant_integral_weights(const Shape& sh, int bound) {
    std::vector<Weight> out;
    std::vector<int> entries(static_cast<std::size_t>(sh.total()));
    const std::function<void(int)> rec = [&](int pos) {
        if (pos == sh.total()) {
            Weight w;
            for (int e : entries) w.entries.push_back(e);
            out.push_back(std::move(w));
            return;
        }
        int hi = bound;
        if (pos > 0 && pos != sh.m) hi = entries[static_cast<std::size_t>(pos - 1)];
        for (int v = hi; v >= -bound; --v) {
            entries[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Direct enumeration of the classical basis conditions for an essentially
// typical dominant integral highest weight: top row fixed; theta steps in
// {0,1} down the even columns; weakly decreasing even entries along the rows
// above the even triangle; interlacing inside both triangles.

inline std::vector<Tableau> classical_basis(const Shape& sh, const Weight& top) {
    const int m = sh.m, total = sh.total();
    std::vector<Tableau> out;
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(total));
    for (int k = 1; k <= total; ++k) rows[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k));
    for (int i = 1; i <= total; ++i) {
        rows[static_cast<std::size_t>(total - 1)][static_cast<std::size_t>(i - 1)] =
            top.entries[static_cast<std::size_t>(i - 1)];
    }
    const auto lam = [&](int k, int i) -> Rational& {
        return rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
    };

    // positions: odd entries top-down, then even columns top-down, then the
    // even triangle top-down
    const std::function<void(int)> fill_even_triangle = [&](int k) {
        if (k == 0) {
            out.emplace_back(sh, rows);
            return;
        }
        const std::function<void(int)> cols = [&](int i) {
            if (i > k) {
                fill_even_triangle(k - 1);
                return;
            }
            const Rational hi = lam(k + 1, i);
            const Rational lo = lam(k + 1, i + 1);
            for (Rational v = hi; v >= lo; v -= 1) {
                lam(k, i) = v;
                cols(i + 1);
            }
        };
        cols(1);
    };

    const std::function<void(int, int)> fill_theta = [&](int k, int i) {
        if (k == m - 1) {
            fill_even_triangle(m - 1);
            return;
        }
        if (i > m) {
            // weakly decreasing even entries in the rows strictly above the
            // even triangle
            if (k >= m + 1) {
                for (int a = 1; a <= m - 1; ++a) {
                    if (!(lam(k, a) - lam(k, a + 1) >= 0)) return;
                }
            }
            fill_theta(k - 1, 1);
            return;
        }
        for (int th : {0, 1}) {
            lam(k, i) = lam(k + 1, i) - th;
            fill_theta(k, i + 1);
        }
    };

    const std::function<void(int, int)> fill_odd = [&](int k, int j) {
        if (k == m) {
            fill_theta(total - 1, 1);
            return;
        }
        if (j > k) {
            fill_odd(k - 1, m + 1);
            return;
        }
        const Rational hi = lam(k + 1, j);
        const Rational lo = lam(k + 1, j + 1);
        for (Rational v = hi; v >= lo; v -= 1) {
            lam(k, j) = v;
            fill_odd(k, j + 1);
        }
    };

    fill_odd(total - 1, m + 1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Direct enumeration of the covariant tensor basis conditions: nonnegative
// integer patterns with the diagonal counting bound and the boundary rule.

inline bool covariant_weight(const Shape& sh, const Weight& w) {
    if (!is_dominant(sh, w)) return false;
    for (const auto& x : w.entries) {
        if (!is_nonneg_integer(x)) return false;
    }
    int positives = 0;
    for (int i = sh.m + 1; i <= sh.total(); ++i) {
        if (w.entries[static_cast<std::size_t>(i - 1)] > 0) ++positives;
    }
    return w.entries[static_cast<std::size_t>(sh.m - 1)] >= positives;
}

inline std::vector<Tableau> covariant_basis(const Shape& sh, const Weight& top) {
    const int m = sh.m, total = sh.total();
    std::vector<Tableau> out;
    for (const Tableau& t : classical_basis(sh, top)) {
        bool ok = true;
        for (int k = m + 1; k <= total && ok; ++k) {
            int positives = 0;
            for (int i = m + 1; i <= k; ++i) {
                if (t.lambda(k, i) > 0) ++positives;
            }
            if (!(t.lambda(k, m) >= positives)) ok = false;
        }
        if (ok && t.lambda(m + 1, m) == 0 && t.theta(m, m) != 0) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

}  // namespace glmn::testing
