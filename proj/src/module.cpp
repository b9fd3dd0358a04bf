#include "glmn/module.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace glmn {

void add_scaled(SparseVector& target, const Rational& coeff, const Tableau& t) {
    if (coeff == 0) return;
    auto [it, fresh] = target.try_emplace(t, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) target.erase(it);
    }
}

void add_scaled(SparseVector& target, const Rational& coeff, const SparseVector& v) {
    if (coeff == 0) return;
    for (const auto& [t, c] : v) add_scaled(target, coeff * c, t);
}

// ---------------------------------------------------------------------------

ModuleSpace::ModuleSpace(Tableau seed, SuperRelationSet relations, ModuleMode mode)
    : seed_(std::move(seed)), relations_(std::move(relations)), mode_(mode) {}

namespace {

bool member_pointwise(const Tableau& t, const SuperRelationSet& rel, ModuleMode mode) {
    if (mode == ModuleMode::QuasiTypical) {
        return satisfies_pointwise(t, rel).status == Satisfaction::Yes;
    }
    return is_covariant_tableau(t, rel);
}

}  // namespace

ModuleSpace ModuleSpace::build(Tableau seed, SuperRelationSet relations, ModuleMode mode,
                               std::size_t cap, int radius) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    if (mode == ModuleMode::QuasiTypical) {
        const SatisfactionReport r = satisfies(seed, relations);
        if (r.status == Satisfaction::No) {
            throw std::invalid_argument("seed does not satisfy the relation set: " + r.detail);
        }
        if (r.status == Satisfaction::Undecided) {
            throw std::invalid_argument("seed satisfaction undecided: " + r.detail);
        }
    } else {
        if (!is_covariant_admissible(relations)) {
            throw std::invalid_argument("relation set is not covariant admissible");
        }
        const SatisfactionReport r = covariant_tableau_check(seed, relations);
        if (r.status != Satisfaction::Yes) {
            throw std::invalid_argument("seed is not covariant for the relation set: " + r.detail);
        }
    }

    ModuleSpace mod(std::move(seed), std::move(relations), mode);
    const int total = mod.shape().total();

    std::set<Tableau> seen{mod.seed_};
    std::deque<Tableau> frontier{mod.seed_};
    int depth = 0;
    bool truncated = false;
    while (!frontier.empty()) {
        if (radius >= 0 && depth >= radius) {
            truncated = true;
            break;
        }
        std::deque<Tableau> next;
        for (const auto& t : frontier) {
            for (int row = 1; row <= total - 1; ++row) {
                for (int col = 1; col <= row; ++col) {
                    for (int sign : {1, -1}) {
                        Tableau cand = t.shifted({row, col, sign});
                        if (seen.count(cand)) continue;
                        if (!member_pointwise(cand, mod.relations_, mode)) continue;
                        if (seen.size() >= cap) {
                            truncated = true;
                            goto done;
                        }
                        seen.insert(cand);
                        next.push_back(std::move(cand));
                    }
                }
            }
        }
        frontier = std::move(next);
        ++depth;
    }
done:
    mod.finite_ = !truncated;
    mod.radius_ = depth;
    mod.basis_.assign(seen.begin(), seen.end());
    std::sort(mod.basis_.begin(), mod.basis_.end());
    for (std::size_t i = 0; i < mod.basis_.size(); ++i) {
        mod.index_[mod.basis_[i]] = static_cast<int>(i);
    }
    return mod;
}

std::optional<int> ModuleSpace::index_of(const Tableau& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool ModuleSpace::member(const Tableau& t) const {
    if (!t.integer_shift_of(seed_)) return false;
    return member_pointwise(t, relations_, mode_);
}

std::string ModuleSpace::describe() const {
    std::string s = "gl(" + std::to_string(shape().m) + "|" + std::to_string(shape().n) + ") ";
    s += mode_ == ModuleMode::QuasiTypical ? "quasi-typical" : "quasi-covariant";
    s += finite_ ? (", dim " + std::to_string(basis_.size()))
                 : (", infinite (ball of " + std::to_string(basis_.size()) + ")");
    return s;
}

// ---------------------------------------------------------------------------
// Generator actions

namespace {

// One summand of an action formula: numerator and denominator factor lists,
// evaluated only after the membership test so that poles on dropped targets
// never fire. On the covariant boundary a vanishing denominator factor is
// always tied to a numerator factor that agrees with it identically along
// the family, so matched zero pairs cancel; only an excess of denominator
// zeros is a genuine pole.
struct Term {
    Rational sign = 1;  // +-1 prefactor
    std::vector<Rational> num, den;

    std::size_t num_zeros() const {
        return static_cast<std::size_t>(
            std::count(num.begin(), num.end(), Rational(0)));
    }
    std::size_t den_zeros() const {
        return static_cast<std::size_t>(
            std::count(den.begin(), den.end(), Rational(0)));
    }
    bool is_pole() const { return den_zeros() > num_zeros(); }
    bool is_zero() const { return num_zeros() > den_zeros(); }

    // value after cancelling matched zero pairs
    Rational value() const {
        if (is_zero()) return 0;
        Rational v = sign;
        for (const auto& x : num) {
            if (x != 0) v *= x;
        }
        for (const auto& x : den) {
            if (x != 0) v /= x;
        }
        return v;
    }
};

// parity of an integer-valued rational sum of thetas
int parity_of(const Rational& x) {
    return static_cast<int>(integer_value(x) % 2 != 0);
}

void emit(const ModuleSpace& mod, SparseVector& out, const Tableau& source, const Shift& shift,
          const Term& term, const char* what, DropDiagnostics* diag) {
    const Tableau target = source.shifted(shift);
    if (mod.member(target)) {
        if (term.is_pole()) {
            throw MemberPoleError(std::string(what) +
                                  ": coefficient pole on a basis member target");
        }
        add_scaled(out, term.value(), target);
        return;
    }
    if (!diag) return;
    if (term.is_pole()) {
        ++diag->outside_pole;
    } else if (term.value() == 0) {
        ++diag->outside_zero_coeff;
    } else {
        ++diag->outside_nonzero_coeff;
    }
}

}  // namespace

SparseVector act_h(const ModuleSpace& mod, int k, const Tableau& t) {
    (void)mod;
    SparseVector out;
    add_scaled(out, t.h_eigenvalue(k), t);
    return out;
}

SparseVector act_e(const ModuleSpace& mod, int k, const Tableau& t, DropDiagnostics* diag) {
    const Shape& sh = mod.shape();
    const int m = sh.m;
    if (k < 1 || k > sh.total() - 1) throw std::out_of_range("raising index out of range");
    SparseVector out;
    const auto l = [&](int row, int col) { return t.l_value(row, col); };

    if (k <= m - 1) {
        for (int i = 1; i <= k; ++i) {
            Term term;
            term.sign = -1;
            for (int j = 1; j <= k + 1; ++j) term.num.push_back(l(k + 1, j) - l(k, i));
            for (int j = 1; j <= k; ++j) {
                if (j != i) term.den.push_back(l(k, j) - l(k, i));
            }
            emit(mod, out, t, {k, i, +1}, term, "e_k (even block)", diag);
        }
        return out;
    }
    if (k == m) {
        Rational theta_prefix = 0;
        for (int i = 1; i <= m; ++i) {
            const Rational th = t.theta(m, i);
            if (th == 1) {
                Term term;
                term.sign = ((i - 1) % 2 ? -1 : 1) * (parity_of(theta_prefix) ? -1 : 1);
                for (int j = 1; j < i; ++j) term.num.push_back(l(m, j) - l(m, i) - 1);
                for (int j = i + 1; j <= m; ++j) term.den.push_back(l(m, j) - l(m, i));
                for (int j = 1; j <= m; ++j) {
                    if (j != i) term.den.push_back(l(m + 1, j) - l(m, i) - 1);
                }
                emit(mod, out, t, {m, i, +1}, term, "e_m", diag);
            } else if (diag && th == 0) {
                ++diag->zero_prefactor;
            }
            theta_prefix += th;
        }
        return out;
    }
    // m+1 <= k <= m+n-1
    for (int i = 1; i <= m; ++i) {
        const Rational th_up = t.theta(k, i);
        const Rational th_down = t.theta(k - 1, i);
        if (!(th_up == 1 && th_down == 0)) {
            if (diag) ++diag->zero_prefactor;
            continue;
        }
        Rational exponent = 0;
        for (int j = 1; j < i; ++j) exponent += t.theta(k, j);
        for (int j = i + 1; j <= m; ++j) exponent += t.theta(k - 1, j);
        Term term;
        term.sign = parity_of(exponent) ? -1 : 1;
        for (int j = 1; j <= m; ++j) {
            if (j == i) continue;
            term.num.push_back(l(k, j) - l(k, i) - 1);
            term.den.push_back(l(k + 1, j) - l(k, i) - 1);
        }
        emit(mod, out, t, {k, i, +1}, term, "e_k (theta block)", diag);
    }
    for (int i = m + 1; i <= k; ++i) {
        Term term;
        term.sign = -1;
        for (int j = 1; j <= m; ++j) {
            term.num.push_back(l(k, j) - l(k, i));
            term.num.push_back(l(k, j) - l(k, i) + 1);
            term.den.push_back(l(k + 1, j) - l(k, i));
            term.den.push_back(l(k - 1, j) - l(k, i) + 1);
        }
        for (int j = m + 1; j <= k + 1; ++j) term.num.push_back(l(k + 1, j) - l(k, i));
        for (int j = m + 1; j <= k; ++j) {
            if (j != i) term.den.push_back(l(k, j) - l(k, i));
        }
        emit(mod, out, t, {k, i, +1}, term, "e_k (odd block)", diag);
    }
    return out;
}

SparseVector act_f(const ModuleSpace& mod, int k, const Tableau& t, DropDiagnostics* diag) {
    const Shape& sh = mod.shape();
    const int m = sh.m;
    if (k < 1 || k > sh.total() - 1) throw std::out_of_range("lowering index out of range");
    SparseVector out;
    const auto l = [&](int row, int col) { return t.l_value(row, col); };

    if (k <= m - 1) {
        for (int i = 1; i <= k; ++i) {
            Term term;
            for (int j = 1; j <= k - 1; ++j) term.num.push_back(l(k - 1, j) - l(k, i));
            for (int j = 1; j <= k; ++j) {
                if (j != i) term.den.push_back(l(k, j) - l(k, i));
            }
            emit(mod, out, t, {k, i, -1}, term, "f_k (even block)", diag);
        }
        return out;
    }
    if (k == m) {
        Rational theta_prefix = 0;
        for (int i = 1; i <= m; ++i) {
            const Rational th = t.theta(m, i);
            if (th == 0) {
                Term term;
                term.sign = ((i - 1) % 2 ? -1 : 1) * (parity_of(theta_prefix) ? -1 : 1);
                term.num.push_back(l(m, i) - l(m + 1, m + 1));
                for (int j = i + 1; j <= m; ++j) term.num.push_back(l(m, j) - l(m, i) + 1);
                for (int j = 1; j <= m - 1; ++j) term.num.push_back(l(m - 1, j) - l(m, i));
                for (int j = 1; j < i; ++j) term.den.push_back(l(m, j) - l(m, i));
                emit(mod, out, t, {m, i, -1}, term, "f_m", diag);
            } else if (diag && th == 1) {
                ++diag->zero_prefactor;
            }
            theta_prefix += th;
        }
        return out;
    }
    // m+1 <= k <= m+n-1
    for (int i = 1; i <= m; ++i) {
        const Rational th_up = t.theta(k, i);
        const Rational th_down = t.theta(k - 1, i);
        if (!(th_down == 1 && th_up == 0)) {
            if (diag) ++diag->zero_prefactor;
            continue;
        }
        Rational exponent = 0;
        for (int j = 1; j < i; ++j) exponent += t.theta(k, j);
        for (int j = i + 1; j <= m; ++j) exponent += t.theta(k - 1, j);
        Term term;
        term.sign = parity_of(exponent) ? -1 : 1;
        for (int j = 1; j <= m; ++j) {
            if (j == i) continue;
            term.num.push_back(l(k, j) - l(k, i) + 1);
            term.den.push_back(l(k - 1, j) - l(k, i) + 1);
        }
        for (int j = m + 1; j <= k + 1; ++j) term.num.push_back(l(k + 1, j) - l(k, i));
        for (int j = m + 1; j <= k - 1; ++j) term.num.push_back(l(k - 1, j) - l(k, i) + 1);
        for (int j = m + 1; j <= k; ++j) {
            term.den.push_back(l(k, j) - l(k, i));
            term.den.push_back(l(k, j) - l(k, i) + 1);
        }
        emit(mod, out, t, {k, i, -1}, term, "f_k (theta block)", diag);
    }
    for (int i = m + 1; i <= k; ++i) {
        Term term;
        for (int j = m + 1; j <= k - 1; ++j) term.num.push_back(l(k - 1, j) - l(k, i));
        for (int j = m + 1; j <= k; ++j) {
            if (j != i) term.den.push_back(l(k, j) - l(k, i));
        }
        emit(mod, out, t, {k, i, -1}, term, "f_k (odd block)", diag);
    }
    return out;
}

SparseVector act(const ModuleSpace& mod, const GenRef& g, const Tableau& t,
                 DropDiagnostics* diag) {
    switch (g.kind) {
        case GenRef::Kind::H: return act_h(mod, g.index, t);
        case GenRef::Kind::E: return act_e(mod, g.index, t, diag);
        case GenRef::Kind::F: return act_f(mod, g.index, t, diag);
    }
    throw std::logic_error("bad generator kind");
}

SparseVector act(const ModuleSpace& mod, const BasisElement& e, const Tableau& t,
                 DropDiagnostics* diag) {
    const Shape& sh = mod.shape();
    if (e.i == e.j) return act_h(mod, e.i, t);
    if (e.j == e.i + 1) return act_e(mod, e.i, t, diag);
    if (e.i == e.j + 1) return act_f(mod, e.j, t, diag);
    // ladder pivot next to the target column
    BasisElement a, b;
    if (e.i < e.j) {
        a = {e.i, e.j - 1};
        b = {e.j - 1, e.j};
    } else {
        a = {e.i, e.j + 1};
        b = {e.j + 1, e.j};
    }
    const int sign = parity(sh, a) * parity(sh, b);
    SparseVector out = act(mod, a, act(mod, b, t, diag), diag);
    const SparseVector ba = act(mod, b, act(mod, a, t, diag), diag);
    add_scaled(out, sign ? 1 : -1, ba);
    return out;
}

SparseVector act(const ModuleSpace& mod, const BasisElement& e, const SparseVector& v,
                 DropDiagnostics* diag) {
    SparseVector out;
    for (const auto& [t, c] : v) {
        add_scaled(out, c, act(mod, e, t, diag));
    }
    return out;
}

RationalMatrix operator_matrix(const ModuleSpace& mod, const BasisElement& e) {
    if (!mod.finite()) throw std::invalid_argument("operator matrix needs a finite basis");
    const auto dim = static_cast<Eigen::Index>(mod.dimension());
    RationalMatrix mat = RationalMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const SparseVector image = act(mod, e, mod.basis()[static_cast<std::size_t>(col)]);
        for (const auto& [target, coeff] : image) {
            mat(*mod.index_of(target), col) = coeff;
        }
    }
    return mat;
}

RationalMatrix operator_matrix(const ModuleSpace& mod, const GenRef& g) {
    return operator_matrix(mod, to_basis_element(g));
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin eigenvalues

void GtEigenvalue::reduce() {
    const auto drop_zeros = [](std::vector<Rational>& v) {
        v.erase(std::remove(v.begin(), v.end(), Rational(0)), v.end());
        std::sort(v.begin(), v.end());
    };
    drop_zeros(numerator);
    drop_zeros(denominator);
    std::size_t i = 0;
    while (i < numerator.size()) {
        auto it = std::find(denominator.begin(), denominator.end(), numerator[i]);
        if (it != denominator.end()) {
            denominator.erase(it);
            numerator.erase(numerator.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
}

bool GtEigenvalue::equivalent(const GtEigenvalue& other) const {
    GtEigenvalue a = *this, b = other;
    a.reduce();
    b.reduce();
    return a.numerator == b.numerator && a.denominator == b.denominator;
}

std::vector<Rational> GtEigenvalue::series(int order) const {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const auto poly = [order](const std::vector<Rational>& roots) {
        std::vector<Rational> p(static_cast<std::size_t>(order) + 1, Rational(0));
        p[0] = 1;
        for (const auto& c : roots) {
            for (int d = order; d >= 1; --d) {
                p[static_cast<std::size_t>(d)] += c * p[static_cast<std::size_t>(d - 1)];
            }
        }
        return p;
    };
    const std::vector<Rational> num = poly(numerator);
    const std::vector<Rational> den = poly(denominator);
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int d = 0; d <= order; ++d) {
        Rational acc = num[static_cast<std::size_t>(d)];
        for (int j = 1; j <= d; ++j) {
            acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(d - j)];
        }
        out[static_cast<std::size_t>(d)] = acc;  // den constant term is 1
    }
    return out;
}

GtEigenvalue gt_eigenvalue(const Tableau& t, int k) {
    const Shape& sh = t.shape();
    if (k < 1 || k > sh.total()) throw std::out_of_range("row out of range");
    GtEigenvalue out;
    if (k <= sh.m) {
        for (int i = 1; i <= k; ++i) out.numerator.push_back(t.l_value(k, i));
    } else {
        for (int i = 1; i <= sh.m; ++i) out.numerator.push_back(t.l_value(k, i));
        for (int j = sh.m + 1; j <= k; ++j) out.denominator.push_back(t.l_value(k, j));
    }
    return out;
}

std::vector<GtEigenvalue> gt_eigenvalue_tuple(const Tableau& t) {
    std::vector<GtEigenvalue> out;
    for (int k = 1; k <= t.shape().total(); ++k) out.push_back(gt_eigenvalue(t, k));
    return out;
}

// ---------------------------------------------------------------------------
// Quantum Berezinian, truncated

namespace {

// Polynomial in t with square-matrix coefficients, truncated at a fixed order.
using OpPoly = std::vector<RationalMatrix>;

OpPoly op_zero(Eigen::Index dim, int order) {
    return OpPoly(static_cast<std::size_t>(order) + 1, RationalMatrix::Zero(dim, dim));
}

OpPoly op_mul(const OpPoly& a, const OpPoly& b, Eigen::Index dim, int order) {
    OpPoly out = op_zero(dim, order);
    for (int i = 0; i <= order; ++i) {
        if (a[static_cast<std::size_t>(i)].isZero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

void op_add(OpPoly& a, const OpPoly& b, const Rational& scale) {
    for (std::size_t d = 0; d < a.size(); ++d) a[d] += scale * b[d];
}

// permutations of 1..n with signs
void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> work;
    do {
        work = perm;
        int inversions = 0;
        for (std::size_t a = 0; a < work.size(); ++a) {
            for (std::size_t b = a + 1; b < work.size(); ++b) {
                if (work[a] > work[b]) ++inversions;
            }
        }
        fn(perm, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<RationalMatrix> berezinian_truncated(const ModuleSpace& mod, int order) {
    if (!mod.finite()) throw std::invalid_argument("truncated Berezinian needs a finite basis");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const Shape& sh = mod.shape();
    const int total = sh.total();
    const auto dim = static_cast<Eigen::Index>(mod.dimension());

    // hatted operator matrices: column parity sign
    std::vector<std::vector<RationalMatrix>> hat(static_cast<std::size_t>(total),
                                                 std::vector<RationalMatrix>(static_cast<std::size_t>(total)));
    for (int i = 1; i <= total; ++i) {
        for (int j = 1; j <= total; ++j) {
            RationalMatrix mat = operator_matrix(mod, BasisElement{i, j});
            if (parity(sh, j) == 1) mat = -mat;
            hat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(mat);
        }
    }
    const auto shifted_entry = [&](int a, int b, const Rational& c) {
        // (1 + t(hatE - c))_{ab} as an OpPoly
        OpPoly p = op_zero(dim, order);
        if (a == b) p[0] = RationalMatrix::Identity(dim, dim);
        if (order >= 1) {
            p[1] = hat[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            if (a == b) p[1] -= c * RationalMatrix::Identity(dim, dim);
        }
        return p;
    };

    // first block: sum over S_m of products of plain entries
    OpPoly first = op_zero(dim, order);
    for_each_permutation(sh.m, [&](const std::vector<int>& sigma, int sign) {
        OpPoly prod = op_zero(dim, order);
        prod[0] = RationalMatrix::Identity(dim, dim);
        for (int k = 1; k <= sh.m; ++k) {
            prod = op_mul(prod, shifted_entry(sigma[static_cast<std::size_t>(k - 1)], k, k - 1),
                          dim, order);
        }
        op_add(first, prod, sign);
    });

    // second block: sum over S_n of products of inverse entries, each
    // expanded as a truncated geometric series of operator-matrix powers
    std::vector<std::vector<std::vector<OpPoly>>> inverse_entries;
    inverse_entries.reserve(static_cast<std::size_t>(sh.n));
    for (int k = 1; k <= sh.n; ++k) {
        // X = hatE - (m - k) Id, an (m+n)x(m+n) array of operators
        std::vector<std::vector<RationalMatrix>> x = hat;
        for (int a = 1; a <= total; ++a) {
            x[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(a - 1)] -=
                Rational(sh.m - k) * RationalMatrix::Identity(dim, dim);
        }
        // powers X^0..X^order; entry (a,b) of (1+tX)^{-1} = sum (-t)^r (X^r)_{ab}
        std::vector<std::vector<std::vector<RationalMatrix>>> powers;
        {
            std::vector<std::vector<RationalMatrix>> id(
                static_cast<std::size_t>(total),
                std::vector<RationalMatrix>(static_cast<std::size_t>(total),
                                            RationalMatrix::Zero(dim, dim)));
            for (int a = 0; a < total; ++a) {
                id[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] =
                    RationalMatrix::Identity(dim, dim);
            }
            powers.push_back(std::move(id));
        }
        for (int r = 1; r <= order; ++r) {
            const auto& prev = powers.back();
            std::vector<std::vector<RationalMatrix>> cur(
                static_cast<std::size_t>(total),
                std::vector<RationalMatrix>(static_cast<std::size_t>(total),
                                            RationalMatrix::Zero(dim, dim)));
            for (int a = 0; a < total; ++a) {
                for (int b = 0; b < total; ++b) {
                    for (int c = 0; c < total; ++c) {
                        cur[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                            x[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] *
                            prev[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
                    }
                }
            }
            powers.push_back(std::move(cur));
        }
        std::vector<std::vector<OpPoly>> entries(
            static_cast<std::size_t>(total),
            std::vector<OpPoly>(static_cast<std::size_t>(total), op_zero(dim, order)));
        for (int a = 0; a < total; ++a) {
            for (int b = 0; b < total; ++b) {
                for (int r = 0; r <= order; ++r) {
                    entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                           [static_cast<std::size_t>(r)] =
                               (r % 2 ? Rational(-1) : Rational(1)) *
                               powers[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)]
                                     [static_cast<std::size_t>(b)];
                }
            }
        }
        inverse_entries.push_back(std::move(entries));
    }
    OpPoly second = op_zero(dim, order);
    for_each_permutation(sh.n, [&](const std::vector<int>& tau, int sign) {
        OpPoly prod = op_zero(dim, order);
        prod[0] = RationalMatrix::Identity(dim, dim);
        for (int k = 1; k <= sh.n; ++k) {
            const int row = sh.m + k, col = sh.m + tau[static_cast<std::size_t>(k - 1)];
            prod = op_mul(prod,
                          inverse_entries[static_cast<std::size_t>(k - 1)]
                                         [static_cast<std::size_t>(row - 1)]
                                         [static_cast<std::size_t>(col - 1)],
                          dim, order);
        }
        op_add(second, prod, sign);
    });

    return op_mul(first, second, dim, order);
}

// ---------------------------------------------------------------------------
// Normalization bookkeeping

Rational shifted_factorial(const Rational& a) {
    const Integer v = integer_value(a);
    if (v >= -1 && v <= 1) return 1;
    if (v > 1) {
        Rational acc = 1;
        for (Integer t = 2; t <= v; ++t) acc *= Rational(t);
        return acc;
    }
    Rational acc = 1;
    for (Integer t = v + 1; t <= -1; ++t) acc *= Rational(t);
    return 1 / acc;
}

Rational normalization_factor_row(const Tableau& t, int k) {
    const Shape& sh = t.shape();
    if (k < 1 || k > sh.total()) throw std::out_of_range("row out of range");
    const auto l = [&](int row, int col) { return t.l_value(row, col); };
    Rational acc = 1;
    if (k <= sh.m) {
        for (int i = 1; i <= k - 1; ++i) {
            for (int j = i; j <= k - 1; ++j) {
                acc *= shifted_factorial(l(k, i) - l(k - 1, j)) /
                       shifted_factorial(l(k - 1, i) - l(k - 1, j));
            }
        }
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                acc *= shifted_factorial(l(k, i) - l(k, j) - 1) /
                       shifted_factorial(l(k - 1, i) - l(k, j) - 1);
            }
        }
        return acc;
    }
    // first block over even pairs and odd pairs below the row
    const auto first = [&](int i, int j) {
        acc *= shifted_factorial(l(k - 1, j) - l(k, i)) /
               shifted_factorial(l(k - 1, j) - l(k - 1, i));
    };
    for (int i = 1; i <= sh.m; ++i) {
        for (int j = i; j <= sh.m; ++j) first(i, j);
    }
    for (int i = sh.m + 1; i <= k - 1; ++i) {
        for (int j = i; j <= k - 1; ++j) first(i, j);
    }
    const auto second = [&](int i, int j) {
        acc *= shifted_factorial(l(k, j) - l(k, i) - 1) /
               shifted_factorial(l(k, j) - l(k - 1, i) - 1);
    };
    for (int i = 1; i <= sh.m; ++i) {
        for (int j = i + 1; j <= sh.m; ++j) second(i, j);
    }
    for (int i = sh.m + 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) second(i, j);
    }
    return acc;
}

Rational normalization_factor(const Tableau& t) {
    Rational acc = 1;
    for (int k = 1; k <= t.shape().total(); ++k) acc *= normalization_factor_row(t, k);
    return acc;
}

}  // namespace glmn
