#include "glmn/superalgebra.hpp"

#include <stdexcept>

namespace glmn {

namespace {

void check_index(const Shape& shape, int i) {
    if (i < 1 || i > shape.total()) {
        throw std::out_of_range("index " + std::to_string(i) + " out of range for gl(" +
                                std::to_string(shape.m) + "|" + std::to_string(shape.n) + ")");
    }
}

}  // namespace

int parity(const Shape& shape, int index) {
    check_index(shape, index);
    return index <= shape.m ? 0 : 1;
}

int parity(const Shape& shape, const BasisElement& e) {
    return (parity(shape, e.i) + parity(shape, e.j)) % 2;
}

GlCombination bracket(const Shape& shape, const BasisElement& a, const BasisElement& b) {
    check_index(shape, a.i);
    check_index(shape, a.j);
    check_index(shape, b.i);
    check_index(shape, b.j);
    GlCombination out;
    const auto add = [&out](int i, int j, const Rational& c) {
        auto [it, inserted] = out.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    // [E_ij, E_kl] = d_kj E_il - (-1)^{(p_i+p_j)(p_k+p_l)} d_il E_kj
    if (b.i == a.j) add(a.i, b.j, 1);
    if (a.i == b.j) {
        const int sign = (parity(shape, a) * parity(shape, b)) % 2;
        add(b.i, a.j, sign ? 1 : -1);
    }
    return out;
}

// ---------------------------------------------------------------------------

LVector weight_to_l(const Shape& shape, const Weight& w) {
    if (static_cast<int>(w.entries.size()) != shape.total()) {
        throw std::invalid_argument("weight length does not match shape");
    }
    LVector l;
    l.entries.reserve(w.entries.size());
    for (int i = 1; i <= shape.total(); ++i) {
        const Rational& x = w.entries[static_cast<std::size_t>(i - 1)];
        if (i <= shape.m) {
            l.entries.push_back(x - i + 1);
        } else {
            l.entries.push_back(-x + i - 2 * shape.m);
        }
    }
    return l;
}

Weight l_to_weight(const Shape& shape, const LVector& l) {
    if (static_cast<int>(l.entries.size()) != shape.total()) {
        throw std::invalid_argument("l-vector length does not match shape");
    }
    Weight w;
    w.entries.reserve(l.entries.size());
    for (int i = 1; i <= shape.total(); ++i) {
        const Rational& x = l.entries[static_cast<std::size_t>(i - 1)];
        if (i <= shape.m) {
            w.entries.push_back(x + i - 1);
        } else {
            w.entries.push_back(-x + i - 2 * shape.m);
        }
    }
    return w;
}

bool is_dominant(const Shape& shape, const Weight& w) {
    for (int i = 1; i < shape.total(); ++i) {
        if (i == shape.m) continue;
        const Rational diff =
            w.entries[static_cast<std::size_t>(i - 1)] - w.entries[static_cast<std::size_t>(i)];
        if (!is_nonneg_integer(diff)) return false;
    }
    return true;
}

bool is_typical(const Shape& shape, const Weight& w) {
    const LVector l = weight_to_l(shape, w);
    for (int i = 1; i <= shape.m; ++i) {
        for (int j = shape.m + 1; j <= shape.total(); ++j) {
            if (l.entries[static_cast<std::size_t>(i - 1)] ==
                l.entries[static_cast<std::size_t>(j - 1)]) {
                return false;
            }
        }
    }
    return true;
}

bool is_essentially_typical(const Shape& shape, const Weight& w) {
    const LVector l = weight_to_l(shape, w);
    const Rational& lo = l.entries[static_cast<std::size_t>(shape.m)];
    const Rational& hi = l.entries[static_cast<std::size_t>(shape.total() - 1)];
    const Rational span = hi - lo;
    // The interval is only defined for a nonnegative integer span; otherwise
    // it is empty. Dominant weights always produce a nonnegative integer span.
    if (!is_nonneg_integer(span)) return true;
    for (int i = 1; i <= shape.m; ++i) {
        const Rational off = l.entries[static_cast<std::size_t>(i - 1)] - lo;
        if (is_integer(off) && off >= 0 && off <= span) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

int parity(const Shape& shape, const GenRef& g) {
    if (g.kind == GenRef::Kind::H) return 0;
    return g.index == shape.m ? 1 : 0;
}

BasisElement to_basis_element(const GenRef& g) {
    switch (g.kind) {
        case GenRef::Kind::H:
            return {g.index, g.index};
        case GenRef::Kind::E:
            return {g.index, g.index + 1};
        case GenRef::Kind::F:
            return {g.index + 1, g.index};
    }
    throw std::logic_error("bad generator kind");
}

std::string to_string(const GenRef& g) {
    const char c = g.kind == GenRef::Kind::H ? 'h' : (g.kind == GenRef::Kind::E ? 'e' : 'f');
    return std::string(1, c) + std::to_string(g.index);
}

std::optional<GenRef> parse_gen(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    GenRef g;
    switch (s[0]) {
        case 'h': g.kind = GenRef::Kind::H; break;
        case 'e': g.kind = GenRef::Kind::E; break;
        case 'f': g.kind = GenRef::Kind::F; break;
        default: return std::nullopt;
    }
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1) return std::nullopt;
    g.index = idx;
    return g;
}

BracketExpr BracketExpr::leaf(GenRef g) {
    auto node = std::make_shared<Node>();
    node->gen = g;
    return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
    auto node = std::make_shared<Node>();
    node->left = std::make_shared<BracketExpr>(std::move(left));
    node->right = std::make_shared<BracketExpr>(std::move(right));
    return BracketExpr(std::move(node));
}

int BracketExpr::parity(const Shape& shape) const {
    if (is_leaf()) return glmn::parity(shape, gen());
    return (left().parity(shape) + right().parity(shape)) % 2;
}

std::string BracketExpr::to_string() const {
    if (is_leaf()) return glmn::to_string(gen());
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

// ---------------------------------------------------------------------------

namespace {

BracketExpr gen_leaf(GenRef::Kind kind, int index) { return BracketExpr::leaf({kind, index}); }

}  // namespace

std::vector<RelationExpr> presentation_relations(const Shape& shape) {
    using K = GenRef::Kind;
    const int total = shape.total();
    const int m = shape.m;
    std::vector<RelationExpr> rels;
    const auto h = [](int i) { return gen_leaf(K::H, i); };
    const auto e = [](int i) { return gen_leaf(K::E, i); };
    const auto f = [](int i) { return gen_leaf(K::F, i); };
    const auto br = [](BracketExpr a, BracketExpr b) {
        return BracketExpr::bracket(std::move(a), std::move(b));
    };

    // [h_i, h_j] = 0
    for (int i = 1; i <= total; ++i) {
        for (int j = i + 1; j <= total; ++j) {
            rels.push_back({"[h" + std::to_string(i) + ",h" + std::to_string(j) + "]",
                            {{1, br(h(i), h(j))}}});
        }
    }
    // [h_i, e_j] = (d_ij - d_{i,j+1}) e_j and the f mirror
    for (int i = 1; i <= total; ++i) {
        for (int j = 1; j <= total - 1; ++j) {
            const int c = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            RelationExpr re{"[h" + std::to_string(i) + ",e" + std::to_string(j) + "]" +
                                (c ? (c > 0 ? "-e" : "+e") + std::to_string(j) : ""),
                            {{1, br(h(i), e(j))}}};
            if (c != 0) re.terms.push_back({-c, e(j)});
            rels.push_back(std::move(re));

            RelationExpr rf{"[h" + std::to_string(i) + ",f" + std::to_string(j) + "]" +
                                (c ? (c > 0 ? "+f" : "-f") + std::to_string(j) : ""),
                            {{1, br(h(i), f(j))}}};
            if (c != 0) rf.terms.push_back({c, f(j)});
            rels.push_back(std::move(rf));
        }
    }
    // [e_i, f_j] = 0 for i != j
    for (int i = 1; i <= total - 1; ++i) {
        for (int j = 1; j <= total - 1; ++j) {
            if (i == j) continue;
            rels.push_back({"[e" + std::to_string(i) + ",f" + std::to_string(j) + "]",
                            {{1, br(e(i), f(j))}}});
        }
    }
    // [e_i, f_i] = h_i - h_{i+1} away from the odd node, = h_m + h_{m+1} at it
    for (int i = 1; i <= total - 1; ++i) {
        if (i != m) {
            rels.push_back({"[e" + std::to_string(i) + ",f" + std::to_string(i) + "]-h" +
                                std::to_string(i) + "+h" + std::to_string(i + 1),
                            {{1, br(e(i), f(i))}, {-1, h(i)}, {1, h(i + 1)}}});
        } else {
            rels.push_back({"[e" + std::to_string(m) + ",f" + std::to_string(m) + "]-h" +
                                std::to_string(m) + "-h" + std::to_string(m + 1),
                            {{1, br(e(m), f(m))}, {-1, h(m)}, {-1, h(m + 1)}}});
        }
    }
    // [e_i, e_j] = [f_i, f_j] = 0 for |i-j| > 1
    for (int i = 1; i <= total - 1; ++i) {
        for (int j = i + 2; j <= total - 1; ++j) {
            rels.push_back({"[e" + std::to_string(i) + ",e" + std::to_string(j) + "]",
                            {{1, br(e(i), e(j))}}});
            rels.push_back({"[f" + std::to_string(i) + ",f" + std::to_string(j) + "]",
                            {{1, br(f(i), f(j))}}});
        }
    }
    // [e_m, e_m] = [f_m, f_m] = 0
    if (m <= total - 1) {
        rels.push_back({"[e" + std::to_string(m) + ",e" + std::to_string(m) + "]",
                        {{1, br(e(m), e(m))}}});
        rels.push_back({"[f" + std::to_string(m) + ",f" + std::to_string(m) + "]",
                        {{1, br(f(m), f(m))}}});
    }
    // Serre relations [x_i, [x_i, x_{i+-1}]] = 0 for i != m
    for (int i = 1; i <= total - 1; ++i) {
        if (i == m) continue;
        for (int d : {-1, 1}) {
            const int j = i + d;
            if (j < 1 || j > total - 1) continue;
            rels.push_back({"[e" + std::to_string(i) + ",[e" + std::to_string(i) + ",e" +
                                std::to_string(j) + "]]",
                            {{1, br(e(i), br(e(i), e(j)))}}});
            rels.push_back({"[f" + std::to_string(i) + ",[f" + std::to_string(i) + ",f" +
                                std::to_string(j) + "]]",
                            {{1, br(f(i), br(f(i), f(j)))}}});
        }
    }
    // Quartic relations [x_m, [x_{m+-1}, [x_m, x_{m-+1}]]] = 0; need both
    // neighbours of the odd node.
    if (m - 1 >= 1 && m + 1 <= total - 1) {
        for (int d : {-1, 1}) {
            const int a = m + d, b = m - d;
            rels.push_back({"[e" + std::to_string(m) + ",[e" + std::to_string(a) + ",[e" +
                                std::to_string(m) + ",e" + std::to_string(b) + "]]]",
                            {{1, br(e(m), br(e(a), br(e(m), e(b))))}}});
            rels.push_back({"[f" + std::to_string(m) + ",[f" + std::to_string(a) + ",[f" +
                                std::to_string(m) + ",f" + std::to_string(b) + "]]]",
                            {{1, br(f(m), br(f(a), br(f(m), f(b))))}}});
        }
    }
    return rels;
}

// ---------------------------------------------------------------------------

RationalMatrix defining_matrix(const Shape& shape, const BasisElement& e) {
    check_index(shape, e.i);
    check_index(shape, e.j);
    RationalMatrix mat = RationalMatrix::Zero(shape.total(), shape.total());
    mat(e.i - 1, e.j - 1) = 1;
    return mat;
}

RationalMatrix defining_matrix(const Shape& shape, const GenRef& g) {
    return defining_matrix(shape, to_basis_element(g));
}

namespace {

// Evaluate returning the matrix together with its parity.
std::pair<RationalMatrix, int> evaluate_rec(const Shape& shape, const BracketExpr& expr,
                                            const std::function<RationalMatrix(const GenRef&)>& realize) {
    if (expr.is_leaf()) {
        return {realize(expr.gen()), parity(shape, expr.gen())};
    }
    auto [a, pa] = evaluate_rec(shape, expr.left(), realize);
    auto [b, pb] = evaluate_rec(shape, expr.right(), realize);
    RationalMatrix ab = a * b;
    RationalMatrix ba = b * a;
    if (pa == 1 && pb == 1) {
        return {ab + ba, (pa + pb) % 2};
    }
    return {ab - ba, (pa + pb) % 2};
}

}  // namespace

RationalMatrix evaluate_in_matrices(const Shape& shape, const BracketExpr& expr,
                                    const std::function<RationalMatrix(const GenRef&)>& realize,
                                    Eigen::Index dim) {
    (void)dim;
    return evaluate_rec(shape, expr, realize).first;
}

RationalMatrix evaluate_in_matrices(const Shape& shape, const RelationExpr& rel,
                                    const std::function<RationalMatrix(const GenRef&)>& realize,
                                    Eigen::Index dim) {
    RationalMatrix acc = RationalMatrix::Zero(dim, dim);
    for (const auto& [coeff, expr] : rel.terms) {
        acc += coeff * evaluate_in_matrices(shape, expr, realize, dim);
    }
    return acc;
}

}  // namespace glmn
