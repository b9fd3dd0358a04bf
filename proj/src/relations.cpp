#include "glmn/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace glmn {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string to_string(const Relation& r) {
    const char* cls = r.cls == RelationClass::Plus ? "+" : (r.cls == RelationClass::Minus ? "-" : "0");
    return "(" + to_string(r.from) + ";" + to_string(r.to) + ")" + cls;
}

namespace {

bool vertex_in_triangle(const Vertex& v, int rank) {
    return 1 <= v.col && v.col <= v.row && v.row <= rank;
}

int strictness_weight(RelationClass cls, StrictnessConvention conv) {
    switch (cls) {
        case RelationClass::Plus: return 0;
        case RelationClass::Minus: return 1;
        case RelationClass::Zero: return conv == StrictnessConvention::Classical ? 0 : 1;
    }
    return 0;
}

}  // namespace

void RelationSet::insert(const Relation& r) {
    if (!vertex_in_triangle(r.from, rank_) || !vertex_in_triangle(r.to, rank_)) {
        throw std::invalid_argument("relation " + to_string(r) + " leaves the rank-" +
                                    std::to_string(rank_) + " triangle");
    }
    bool ok = false;
    switch (r.cls) {
        case RelationClass::Plus: ok = r.to.row == r.from.row - 1; break;
        case RelationClass::Minus: ok = r.to.row == r.from.row + 1; break;
        case RelationClass::Zero:
            ok = r.from.row == rank_ && r.to.row == rank_ && r.from.col != r.to.col;
            break;
    }
    if (!ok) {
        throw std::invalid_argument("relation " + to_string(r) + " does not match its class shape");
    }
    relations_.insert(r);
}

std::vector<Vertex> RelationSet::involved_vertices() const {
    std::set<Vertex> vs;
    for (const auto& r : relations_) {
        vs.insert(r.from);
        vs.insert(r.to);
    }
    return {vs.begin(), vs.end()};
}

bool RelationSet::involves(const Vertex& v) const {
    return std::any_of(relations_.begin(), relations_.end(),
                       [&](const Relation& r) { return r.from == v || r.to == v; });
}

bool RelationSet::reaches(const Vertex& from, const Vertex& to) const {
    std::set<Vertex> seen;
    std::vector<Vertex> frontier{from};
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (const auto& v : frontier) {
            for (const auto& r : relations_) {
                if (r.from == v && seen.insert(r.to).second) {
                    if (r.to == to) return true;
                    next.push_back(r.to);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

bool RelationSet::same_component(const Vertex& a, const Vertex& b) const {
    if (a == b) return true;
    std::set<Vertex> seen{a};
    std::vector<Vertex> frontier{a};
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (const auto& v : frontier) {
            for (const auto& r : relations_) {
                Vertex other;
                if (r.from == v) other = r.to;
                else if (r.to == v) other = r.from;
                else continue;
                if (seen.insert(other).second) {
                    if (other == b) return true;
                    next.push_back(other);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

std::vector<RelationSet> RelationSet::indecomposable_components() const {
    std::map<Vertex, int> comp;
    int next_id = 0;
    for (const auto& v : involved_vertices()) {
        if (comp.count(v)) continue;
        const int id = next_id++;
        std::vector<Vertex> frontier{v};
        comp[v] = id;
        while (!frontier.empty()) {
            std::vector<Vertex> grow;
            for (const auto& u : frontier) {
                for (const auto& r : relations_) {
                    Vertex other;
                    if (r.from == u) other = r.to;
                    else if (r.to == u) other = r.from;
                    else continue;
                    if (!comp.count(other)) {
                        comp[other] = id;
                        grow.push_back(other);
                    }
                }
            }
            frontier = std::move(grow);
        }
    }
    std::vector<RelationSet> parts(static_cast<std::size_t>(next_id), RelationSet(rank_));
    for (const auto& r : relations_) {
        parts[static_cast<std::size_t>(comp.at(r.from))].insert(r);
    }
    return parts;
}

std::optional<int> max_path_strictness(const RelationSet& c, const Vertex& from, const Vertex& to,
                                       StrictnessConvention conv) {
    // Longest path by weight with >= 1 edge; Bellman-Ford rounds plus one
    // extra pass for strict-cycle detection.
    std::map<Vertex, int> dist;
    for (const auto& r : c.relations()) {
        if (r.from == from) {
            const int w = strictness_weight(r.cls, conv);
            auto [it, fresh] = dist.try_emplace(r.to, w);
            if (!fresh) it->second = std::max(it->second, w);
        }
    }
    const std::size_t rounds = c.involved_vertices().size() + 1;
    for (std::size_t round = 0; round < rounds; ++round) {
        bool changed = false;
        for (const auto& r : c.relations()) {
            auto it = dist.find(r.from);
            if (it == dist.end()) continue;
            const int cand = it->second + strictness_weight(r.cls, conv);
            auto [jt, fresh] = dist.try_emplace(r.to, cand);
            if (!fresh && jt->second < cand) {
                jt->second = cand;
                changed = true;
            } else if (fresh) {
                changed = true;
            }
        }
        if (!changed) break;
        if (round + 1 == rounds && changed) {
            // Still relaxing: a strict cycle is reachable. Everything it can
            // reach is unbounded.
            std::set<Vertex> unbounded;
            for (const auto& r : c.relations()) {
                auto it = dist.find(r.from);
                if (it == dist.end()) continue;
                const int cand = it->second + strictness_weight(r.cls, conv);
                auto jt = dist.find(r.to);
                if (jt == dist.end() || jt->second < cand) unbounded.insert(r.to);
            }
            bool grow = true;
            while (grow) {
                grow = false;
                for (const auto& r : c.relations()) {
                    if (unbounded.count(r.from) && !unbounded.count(r.to)) {
                        unbounded.insert(r.to);
                        grow = true;
                    }
                }
            }
            if (unbounded.count(to)) return kUnboundedStrictness;
        }
    }
    auto it = dist.find(to);
    if (it == dist.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------

namespace {

bool has_strict_cycle(const RelationSet& c) {
    for (const auto& v : c.involved_vertices()) {
        const auto s = max_path_strictness(c, v, v, StrictnessConvention::Classical);
        if (s && *s >= 1) return true;
    }
    return false;
}

}  // namespace

bool is_noncritical(const RelationSet& c) {
    if (has_strict_cycle(c)) return true;  // unsatisfiable, vacuously noncritical
    const auto verts = c.involved_vertices();
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const Vertex &u = verts[a], &v = verts[b];
            if (u.row != v.row || u.row > c.rank() - 1) continue;
            if (!c.same_component(u, v)) continue;
            const auto uv = max_path_strictness(c, u, v, StrictnessConvention::Classical);
            const auto vu = max_path_strictness(c, v, u, StrictnessConvention::Classical);
            if (!((uv && *uv >= 1) || (vu && *vu >= 1))) return false;
        }
    }
    return true;
}

bool is_reduced(const RelationSet& c) {
    for (const auto& v : c.involved_vertices()) {
        int up_out = 0, up_in = 0, down_out = 0, down_in = 0;
        for (const auto& r : c.relations()) {
            if (r.from == v && r.to.row == v.row + 1) ++up_out;
            if (r.to == v && r.from.row == v.row + 1) ++down_in;
            if (r.from == v && r.to.row == v.row - 1) ++down_out;
            if (r.to == v && r.from.row == v.row - 1) ++up_in;
        }
        if (up_out > 1 || up_in > 1 || down_out > 1 || down_in > 1) return false;
    }
    // No top-row relation may follow from the rest.
    for (const auto& r : c.relations()) {
        if (r.cls != RelationClass::Zero) continue;
        RelationSet rest = c;
        rest.erase(r);
        if (rest.reaches(r.from, r.to)) return false;
    }
    return true;
}

FamilyCheck family_check(const RelationSet& c) {
    if (!is_noncritical(c)) return {false, "noncritical", "a same-row pair is not strictly ordered"};
    if (!is_reduced(c)) return {false, "reduced", "duplicate arrows or an implied top-row relation"};

    // forbidden cross pattern
    for (const auto& up : c.relations()) {
        if (up.cls != RelationClass::Minus) continue;
        for (const auto& down : c.relations()) {
            if (down.cls != RelationClass::Plus) continue;
            if (down.from.row != up.from.row + 1) continue;
            const int i = up.from.col, t = up.to.col;
            const int s = down.from.col, j = down.to.col;
            if (i < j && s < t) {
                return {false, "cross",
                        "cross pattern " + to_string(up) + ", " + to_string(down)};
            }
        }
    }

    const auto verts = c.involved_vertices();

    // top-row pairs must be comparable
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const Vertex &u = verts[a], &v = verts[b];
            if (u.row != c.rank() || v.row != c.rank()) continue;
            if (!c.same_component(u, v)) continue;
            if (!c.reaches(u, v) && !c.reaches(v, u)) {
                return {false, "top-row",
                        "incomparable top-row pair " + to_string(u) + ", " + to_string(v)};
            }
        }
    }

    // adjoining pairs need the double-interlace or the split pattern
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = 0; b < verts.size(); ++b) {
            if (a == b) continue;
            const Vertex &u = verts[a], &v = verts[b];
            if (u.row != v.row || u.row > c.rank() - 1 || u.col >= v.col) continue;
            if (!c.same_component(u, v)) continue;
            bool interpolated = false;
            for (const auto& w : verts) {
                if (w.row == u.row && w.col != u.col && w.col != v.col && c.reaches(u, w) &&
                    c.reaches(w, v)) {
                    interpolated = true;
                    break;
                }
            }
            if (interpolated) continue;
            const int k = u.row;
            bool diamond_up = false, diamond_down = false;
            for (int p = 1; p <= k + 1; ++p) {
                if (c.contains({u, {k + 1, p}, RelationClass::Minus}) &&
                    c.contains({{k + 1, p}, v, RelationClass::Plus})) {
                    diamond_up = true;
                    break;
                }
            }
            for (int q = 1; q <= k - 1; ++q) {
                if (c.contains({u, {k - 1, q}, RelationClass::Plus}) &&
                    c.contains({{k - 1, q}, v, RelationClass::Minus})) {
                    diamond_down = true;
                    break;
                }
            }
            bool split = false;
            for (int s = 1; s <= k + 1 && !split; ++s) {
                for (int t = s + 1; t <= k + 1; ++t) {
                    if (c.contains({u, {k + 1, s}, RelationClass::Minus}) &&
                        c.contains({{k + 1, t}, v, RelationClass::Plus})) {
                        split = true;
                        break;
                    }
                }
            }
            if (!((diamond_up && diamond_down) || split)) {
                return {false, "adjoining",
                        "adjoining pair " + to_string(u) + ", " + to_string(v) +
                            " has neither interlacing pattern"};
            }
        }
    }
    return {};
}

bool is_indecomposable_admissible(const RelationSet& c) { return family_check(c).ok; }

FamilyCheck admissible_check(const RelationSet& c) {
    for (const auto& part : c.indecomposable_components()) {
        const FamilyCheck f = family_check(part);
        if (!f.ok) return f;
    }
    return {};
}

bool is_admissible(const RelationSet& c) { return admissible_check(c).ok; }

// ---------------------------------------------------------------------------

bool is_removal_extremal(const RelationSet& c, const Vertex& v, TriangleSide side) {
    bool has_in = false, has_out = false;
    for (const auto& r : c.relations()) {
        if (r.to == v) has_in = true;
        if (r.from == v) has_out = true;
    }
    if (side == TriangleSide::Even) {
        // maximal: no arrows in; minimal: no arrows out
        return !has_in || !has_out;
    }
    // Odd side mirrors the convention.
    return !has_out || !has_in;
}

RelationSet remove_extremal_vertex(const RelationSet& c, const Vertex& v, TriangleSide side) {
    if (!c.involves(v)) {
        throw std::invalid_argument("vertex " + to_string(v) + " is not involved in the set");
    }
    if (!is_removal_extremal(c, v, side)) {
        throw std::invalid_argument("vertex " + to_string(v) + " is neither maximal nor minimal");
    }
    RelationSet out(c.rank());
    for (const auto& r : c.relations()) {
        if (r.from != v && r.to != v) out.insert(r);
    }
    if (!is_admissible(out)) {
        throw std::logic_error("removal at " + to_string(v) + " produced a non-admissible set");
    }
    return out;
}

// ---------------------------------------------------------------------------

SuperRelationSet::SuperRelationSet(Shape sh, RelationSet c1, RelationSet c2)
    : shape(sh), even(std::move(c1)), odd(std::move(c2)) {
    if (even.rank() != shape.m || odd.rank() != shape.n) {
        throw std::invalid_argument("triangle ranks do not match the shape");
    }
}

RelationSet interlacing_triangle(int rank) {
    RelationSet c(rank);
    for (int r = 1; r <= rank - 1; ++r) {
        for (int i = 1; i <= r; ++i) {
            c.insert({{r + 1, i}, {r, i}, RelationClass::Plus});
            c.insert({{r, i}, {r + 1, i + 1}, RelationClass::Minus});
        }
    }
    return c;
}

SuperRelationSet standard_interlacing(const Shape& shape) {
    return SuperRelationSet(shape, interlacing_triangle(shape.m), interlacing_triangle(shape.n));
}

SuperRelationSet remove_extremal_vertex(const SuperRelationSet& c, TriangleSide side,
                                        const Vertex& local_vertex) {
    if (side == TriangleSide::Even) {
        return SuperRelationSet(c.shape, remove_extremal_vertex(c.even, local_vertex, side), c.odd);
    }
    return SuperRelationSet(c.shape, c.even, remove_extremal_vertex(c.odd, local_vertex, side));
}

// ---------------------------------------------------------------------------
// Classical satisfaction

bool satisfies(const std::vector<std::vector<Rational>>& l_rows, const RelationSet& c) {
    const int n = c.rank();
    if (static_cast<int>(l_rows.size()) != n) {
        throw std::invalid_argument("pattern rank does not match the relation set");
    }
    for (int k = 1; k <= n; ++k) {
        if (static_cast<int>(l_rows[static_cast<std::size_t>(k - 1)].size()) != k) {
            throw std::invalid_argument("row " + std::to_string(k) + " must have " +
                                        std::to_string(k) + " entries");
        }
    }
    const auto at = [&](const Vertex& v) -> const Rational& {
        return l_rows[static_cast<std::size_t>(v.row - 1)][static_cast<std::size_t>(v.col - 1)];
    };
    for (const auto& r : c.relations()) {
        const Rational d = at(r.from) - at(r.to);
        if (r.cls == RelationClass::Minus) {
            if (!is_pos_integer(d)) return false;
        } else {
            if (!is_nonneg_integer(d)) return false;
        }
    }
    for (int k = 1; k <= n - 1; ++k) {
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                const bool integral = is_integer(at({k, i}) - at({k, j}));
                if (integral != c.same_component({k, i}, {k, j})) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Super satisfaction

namespace {

// Global l-value of an even-triangle vertex (rows 1..m) or a local odd vertex
// (mapped to rows m+1..m+n).
Rational even_l(const Tableau& t, const Vertex& v) { return t.l_value(v.row, v.col); }
Rational odd_l(const Tableau& t, const Shape& sh, const Vertex& local) {
    return t.l_value(sh.m + local.row, sh.m + local.col);
}

// required l(from) - l(to) >= w, with w per the super convention
int super_weight(RelationClass cls) {
    return strictness_weight(cls, StrictnessConvention::Super);
}

SatisfactionReport fail(std::string detail) {
    return {Satisfaction::No, std::move(detail)};
}

// Single relations plus the integral-iff-connected rule on one triangle; the
// odd side reads its inequalities with the flipped sign convention.
std::optional<std::string> check_triangle(const Tableau& t, const SuperRelationSet& c,
                                          TriangleSide side) {
    const Shape& sh = c.shape;
    const RelationSet& set = side == TriangleSide::Even ? c.even : c.odd;
    const auto lv = [&](const Vertex& v) {
        return side == TriangleSide::Even ? even_l(t, v) : odd_l(t, sh, v);
    };
    for (const auto& r : set.relations()) {
        Rational d = lv(r.from) - lv(r.to);
        if (side == TriangleSide::Odd) d = -d;
        const int w = super_weight(r.cls);
        if (!(is_integer(d) && d >= w)) {
            return "relation " + to_string(r) + " violated";
        }
    }
    for (int k = 1; k <= set.rank(); ++k) {
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                const bool integral = is_integer(lv({k, i}) - lv({k, j}));
                if (integral != set.same_component({k, i}, {k, j})) {
                    return "integrality/component mismatch at row " + std::to_string(k) +
                           " columns " + std::to_string(i) + "," + std::to_string(j);
                }
            }
        }
    }
    return std::nullopt;
}

// Implied strict order between top-triangle columns, replicated across the
// rows above the even triangle. Returns pairs (i, j, d): l(k,i) - l(k,j) >= d.
std::vector<std::tuple<int, int, int>> band_constraints(const SuperRelationSet& c) {
    std::vector<std::tuple<int, int, int>> out;
    const int m = c.shape.m;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            if (!c.even.same_component({m, i}, {m, j})) continue;
            const auto d =
                max_path_strictness(c.even, {m, i}, {m, j}, StrictnessConvention::Super);
            if (d && *d >= 0 && *d < kUnboundedStrictness) out.emplace_back(i, j, *d);
        }
    }
    return out;
}

std::optional<std::string> check_bands(const Tableau& t, const SuperRelationSet& c) {
    // The implied order must persist all the way to the fixed top row; a top
    // row that breaks it admits corner patterns on which the bracket
    // relations fail.
    const Shape& sh = c.shape;
    for (const auto& [i, j, d] : band_constraints(c)) {
        for (int k = sh.m + 1; k <= sh.total(); ++k) {
            if (!(t.l_value(k, i) - t.l_value(k, j) >= d)) {
                return "row " + std::to_string(k) + " breaks the implied order of columns " +
                       std::to_string(i) + "," + std::to_string(j);
            }
        }
    }
    return std::nullopt;
}

// Integer difference-constraint system x_u - x_v >= c with optional pins.
// Feasibility by Bellman-Ford over the pinned/reachable part.
class DiffSystem {
public:
    void add(int u, int v, long long w) { edges_.push_back({u, v, w}); max_id_ = std::max({max_id_, u, v}); }
    void pin(int v, long long value) { pins_.emplace_back(v, value); max_id_ = std::max(max_id_, v); }

    bool feasible() const {
        // x_u - x_v >= w  <=>  x_v <= x_u - w: relax upper bounds from pins.
        // Variables without any pin on their constraint component are free.
        const std::size_t n = static_cast<std::size_t>(max_id_ + 1);
        std::vector<long long> ub(n, kInf), lb(n, -kInf);
        for (const auto& [v, value] : pins_) {
            if (ub[static_cast<std::size_t>(v)] != kInf && ub[static_cast<std::size_t>(v)] != value)
                return false;
            ub[static_cast<std::size_t>(v)] = value;
            lb[static_cast<std::size_t>(v)] = value;
        }
        for (std::size_t round = 0; round <= n + 1; ++round) {
            bool changed = false;
            for (const auto& e : edges_) {
                const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
                // upper bounds propagate downward: x_v <= x_u - w
                if (ub[u] != kInf && ub[u] - e.w < ub[v]) {
                    ub[v] = ub[u] - e.w;
                    changed = true;
                }
                // lower bounds propagate upward: x_u >= x_v + w
                if (lb[v] != -kInf && lb[v] + e.w > lb[u]) {
                    lb[u] = lb[v] + e.w;
                    changed = true;
                }
            }
            if (!changed) break;
            if (round == n + 1) return false;  // strict cycle
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (lb[v] != -kInf && ub[v] != kInf && lb[v] > ub[v]) return false;
        }
        return true;
    }

private:
    static constexpr long long kInf = static_cast<long long>(1) << 60;
    struct Edge {
        int u, v;
        long long w;
    };
    std::vector<Edge> edges_;
    std::vector<std::pair<int, long long>> pins_;
    int max_id_ = 0;
};

int triangle_id(const Vertex& v) { return v.row * 16 + v.col; }

// Offsets z with l' = l + z: constraints of a triangle in offset space.
// Within a component the seed's differences are integral, so the offset
// constraints stay integral.
void add_triangle_constraints(DiffSystem& sys, const Tableau& t, const SuperRelationSet& c,
                              TriangleSide side) {
    const Shape& sh = c.shape;
    const RelationSet& set = side == TriangleSide::Even ? c.even : c.odd;
    const auto lv = [&](const Vertex& v) {
        return side == TriangleSide::Even ? even_l(t, v) : odd_l(t, sh, v);
    };
    for (const auto& r : set.relations()) {
        // even: l'(from) - l'(to) >= w ; odd: l'(to) - l'(from) >= w
        Rational base = lv(r.from) - lv(r.to);
        if (side == TriangleSide::Odd) base = -base;
        const Rational rhs = super_weight(r.cls) - base;
        // rhs is integral whenever the seed satisfies the set
        const long long w = static_cast<long long>(integer_value(rhs));
        if (side == TriangleSide::Even) {
            sys.add(triangle_id(r.from), triangle_id(r.to), w);
        } else {
            sys.add(triangle_id(r.to), triangle_id(r.from), w);
        }
    }
}

// All theta matrices (values in {0,1} for rows m..m+n-1, columns 1..m) that
// give a pointwise-valid even part; reports the reachable l-value at (k, i)
// for each. The triangle rows below m are checked for a consistent
// completion, not enumerated.
std::vector<Rational> reachable_even_values(const Tableau& t, const SuperRelationSet& c, int k,
                                            int i) {
    const Shape& sh = c.shape;
    const int m = sh.m, n = sh.n;
    const int cells = m * n;
    std::set<Rational> values;
    const auto bands = band_constraints(c);
    for (int mask = 0; mask < (1 << cells); ++mask) {
        // theta(r, col) for r = m..m+n-1
        const auto theta = [&](int r, int col) -> int {
            return (mask >> ((r - m) * m + (col - 1))) & 1;
        };
        // lambda'(r, col) going down from the fixed top row
        std::vector<std::vector<Rational>> lam(static_cast<std::size_t>(n + 1),
                                               std::vector<Rational>(static_cast<std::size_t>(m)));
        for (int col = 1; col <= m; ++col) {
            lam[static_cast<std::size_t>(n)][static_cast<std::size_t>(col - 1)] =
                t.lambda(sh.total(), col);
        }
        for (int r = sh.total() - 1; r >= m; --r) {
            for (int col = 1; col <= m; ++col) {
                lam[static_cast<std::size_t>(r - m)][static_cast<std::size_t>(col - 1)] =
                    lam[static_cast<std::size_t>(r - m + 1)][static_cast<std::size_t>(col - 1)] -
                    theta(r, col);
            }
        }
        const auto lval = [&](int r, int col) {
            return lam[static_cast<std::size_t>(r - m)][static_cast<std::size_t>(col - 1)] - col + 1;
        };
        bool ok = true;
        for (const auto& [a, b, d] : bands) {
            for (int r = m + 1; r <= sh.total() - 1 && ok; ++r) {
                if (!(lval(r, a) - lval(r, b) >= d)) ok = false;
            }
        }
        if (!ok) continue;
        // completion of the triangle below row m with row-m values pinned
        DiffSystem sys;
        add_triangle_constraints(sys, t, c, TriangleSide::Even);
        for (int col = 1; col <= m; ++col) {
            const Rational offset = lval(m, col) - t.l_value(m, col);
            sys.pin(triangle_id({m, col}), static_cast<long long>(integer_value(offset)));
        }
        if (!sys.feasible()) continue;
        values.insert(lval(k, i));
    }
    return {values.begin(), values.end()};
}

// Can the odd vertex at global (k, j) take the value `target` in some
// pointwise-valid shift? Exact: pins the offset and solves the odd
// difference system with the top row fixed.
bool odd_value_reachable(const Tableau& t, const SuperRelationSet& c, int k, int j,
                         const Rational& target) {
    const Shape& sh = c.shape;
    const Rational offset = target - t.l_value(k, j);
    if (!is_integer(offset)) return false;
    DiffSystem sys;
    add_triangle_constraints(sys, t, c, TriangleSide::Odd);
    for (int col = 1; col <= sh.n; ++col) {
        sys.pin(triangle_id({sh.n, col}), 0);
    }
    sys.pin(triangle_id({k - sh.m, j - sh.m}), static_cast<long long>(integer_value(offset)));
    return sys.feasible();
}

}  // namespace

SatisfactionReport satisfies_pointwise(const Tableau& t, const SuperRelationSet& c) {
    const Shape& sh = c.shape;
    if (!(t.shape() == sh)) return fail("shape mismatch");
    if (auto err = check_triangle(t, c, TriangleSide::Even)) return fail("even " + *err);
    if (auto err = check_triangle(t, c, TriangleSide::Odd)) return fail("odd " + *err);
    for (int k = sh.m; k <= sh.total() - 1; ++k) {
        for (int i = 1; i <= sh.m; ++i) {
            const Rational th = t.theta(k, i);
            if (th != 0 && th != 1) {
                return fail("theta(" + std::to_string(k) + "," + std::to_string(i) +
                            ") = " + to_string(th) + " outside {0,1}");
            }
        }
    }
    if (auto err = check_bands(t, c)) return fail(*err);
    for (int k = sh.m + 1; k <= sh.total() - 1; ++k) {
        for (int i = 1; i <= sh.m; ++i) {
            for (int j = sh.m + 1; j <= k; ++j) {
                if (t.l_value(k, i) == t.l_value(k, j)) {
                    return fail("mixed l-values collide at row " + std::to_string(k) +
                                " columns " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    }
    return {};
}

SatisfactionReport satisfies(const Tableau& t, const SuperRelationSet& c) {
    SatisfactionReport point = satisfies_pointwise(t, c);
    if (point.status != Satisfaction::Yes) return point;
    const Shape& sh = c.shape;
    if (sh.m * sh.n > 20) {
        return {Satisfaction::Undecided,
                "shift-closure check capped: theta configuration space too large"};
    }
    for (int k = sh.m + 1; k <= sh.total() - 1; ++k) {
        for (int i = 1; i <= sh.m; ++i) {
            for (int j = sh.m + 1; j <= k; ++j) {
                if (!is_integer(t.l_value(k, i) - t.l_value(k, j))) continue;
                for (const Rational& v : reachable_even_values(t, c, k, i)) {
                    if (odd_value_reachable(t, c, k, j, v)) {
                        return fail("a shift collides the mixed pair at row " + std::to_string(k) +
                                    " columns " + std::to_string(i) + "," + std::to_string(j) +
                                    " at value " + to_string(v));
                    }
                }
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Maximality

RelationSet satisfied_relations(const Tableau& t, TriangleSide side) {
    const Shape& sh = t.shape();
    const int rank = side == TriangleSide::Even ? sh.m : sh.n;
    const auto lval = [&](const Vertex& v) {
        return side == TriangleSide::Even ? t.l_value(v.row, v.col)
                                          : t.l_value(sh.m + v.row, sh.m + v.col);
    };
    RelationSet out(rank);
    const auto ok = [&](const Vertex& from, const Vertex& to, RelationClass cls) {
        Rational d = lval(from) - lval(to);
        if (side == TriangleSide::Odd) d = -d;
        return is_integer(d) && d >= super_weight(cls);
    };
    for (int r = 2; r <= rank; ++r) {
        for (int a = 1; a <= r; ++a) {
            for (int b = 1; b <= r - 1; ++b) {
                if (ok({r, a}, {r - 1, b}, RelationClass::Plus)) {
                    out.insert({{r, a}, {r - 1, b}, RelationClass::Plus});
                }
                if (ok({r - 1, b}, {r, a}, RelationClass::Minus)) {
                    out.insert({{r - 1, b}, {r, a}, RelationClass::Minus});
                }
            }
        }
    }
    for (int a = 1; a <= rank; ++a) {
        for (int b = 1; b <= rank; ++b) {
            if (a == b) continue;
            if (ok({rank, a}, {rank, b}, RelationClass::Zero)) {
                out.insert({{rank, a}, {rank, b}, RelationClass::Zero});
            }
        }
    }
    return out;
}

namespace {

bool implies_relation(const RelationSet& c, const Relation& r) {
    if (c.contains(r)) return true;
    const auto s = max_path_strictness(c, r.from, r.to, StrictnessConvention::Super);
    return s && *s >= super_weight(r.cls);
}

bool covers(const RelationSet& c, const RelationSet& satisfied, MaximalityMode mode) {
    for (const auto& r : satisfied.relations()) {
        if (mode == MaximalityMode::SetInclusion) {
            if (!c.contains(r)) return false;
        } else if (!implies_relation(c, r)) {
            return false;
        }
    }
    return true;
}

// Smallest generating subset (greedy, canonical order) whose closure still
// implies every input relation.
RelationSet prune_implied(const RelationSet& full) {
    RelationSet out = full;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : std::vector<Relation>(out.relations().begin(), out.relations().end())) {
            RelationSet rest = out;
            rest.erase(r);
            if (implies_relation(rest, r)) {
                out = rest;
                changed = true;
            }
        }
    }
    return out;
}

}  // namespace

bool is_maximal_for(const SuperRelationSet& c, const Tableau& t, MaximalityMode mode) {
    return covers(c.even, satisfied_relations(t, TriangleSide::Even), mode) &&
           covers(c.odd, satisfied_relations(t, TriangleSide::Odd), mode);
}

SuperRelationSet maximal_satisfied_set(const Tableau& t) {
    const Shape& sh = t.shape();
    const RelationSet even_full = satisfied_relations(t, TriangleSide::Even);
    const RelationSet odd_full = satisfied_relations(t, TriangleSide::Odd);
    SuperRelationSet c(sh, prune_implied(even_full), prune_implied(odd_full));
    if (!is_admissible(c.even) || !is_admissible(c.odd)) {
        throw std::domain_error("no admissible maximal relation set for this pattern");
    }
    if (!covers(c.even, even_full, MaximalityMode::ConstraintClosure) ||
        !covers(c.odd, odd_full, MaximalityMode::ConstraintClosure)) {
        throw std::domain_error("pruning lost satisfied relations");
    }
    if (satisfies(t, c).status != Satisfaction::Yes) {
        throw std::domain_error("pattern does not satisfy its own maximal relation set");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Covariant sets

std::set<Vertex> covariant_component(const RelationSet& odd) {
    const Vertex corner{odd.rank(), odd.rank()};
    std::set<Vertex> comp{corner};
    bool grow = true;
    while (grow) {
        grow = false;
        for (const auto& r : odd.relations()) {
            const bool f = comp.count(r.from) > 0, t = comp.count(r.to) > 0;
            if (f != t) {
                comp.insert(f ? r.to : r.from);
                grow = true;
            }
        }
    }
    return comp;
}

bool is_covariant_admissible(const SuperRelationSet& c) {
    if (!c.admissible()) return false;
    const int n = c.shape.n;
    for (int p = 1; p <= n; ++p) {
        bool chain = true;
        for (int r = p; r <= n - 1; ++r) {
            if (!c.odd.contains({{r, r}, {r + 1, r + 1}, RelationClass::Minus})) {
                chain = false;
                break;
            }
        }
        if (!chain) continue;
        bool attached = false;
        if (p >= 2) {
            for (int i = 1; i <= p - 1; ++i) {
                if (c.odd.contains({{p, p}, {p - 1, i}, RelationClass::Plus}) ||
                    c.odd.contains({{p - 1, i}, {p, p}, RelationClass::Minus})) {
                    attached = true;
                    break;
                }
            }
        }
        if (attached) continue;
        const auto comp = covariant_component(c.odd);
        bool saturated = true;
        for (const auto& v : comp) {
            for (int j = v.col; j <= v.row && saturated; ++j) {
                if (!comp.count({v.row, j})) saturated = false;
            }
        }
        if (saturated) return true;
    }
    return false;
}

SatisfactionReport covariant_tableau_check(const Tableau& t, const SuperRelationSet& c) {
    const Shape& sh = c.shape;
    if (!(t.shape() == sh)) return fail("shape mismatch");
    if (auto err = check_triangle(t, c, TriangleSide::Even)) return fail("even " + *err);
    if (auto err = check_triangle(t, c, TriangleSide::Odd)) return fail("odd " + *err);
    for (int k = sh.m; k <= sh.total() - 1; ++k) {
        for (int i = 1; i <= sh.m; ++i) {
            const Rational th = t.theta(k, i);
            if (th != 0 && th != 1) {
                return fail("theta(" + std::to_string(k) + "," + std::to_string(i) +
                            ") outside {0,1}");
            }
        }
    }
    if (auto err = check_bands(t, c)) return fail(*err);

    const int total = sh.total();
    const Rational corner = t.l_value(total, total);
    if (!is_integer(t.l_value(total, sh.n) - corner)) {
        return fail("top-row column " + std::to_string(sh.n) +
                    " is not integrally tied to the corner");
    }
    const auto comp = covariant_component(c.odd);
    for (int k = sh.m + 1; k <= total; ++k) {
        for (int j = sh.m + 1; j <= k; ++j) {
            if (comp.count({k - sh.m, j - sh.m})) continue;
            for (int i = 1; i <= sh.m; ++i) {
                if (is_integer(t.l_value(k, i) - t.l_value(k, j))) {
                    return fail("integral mixed pair off the diagonal component at row " +
                                std::to_string(k));
                }
            }
        }
    }
    if (t.l_value(total, sh.n) - corner <= 0) {
        for (int k = sh.m + 1; k <= total; ++k) {
            int p_k = 0;
            for (int p = sh.m + 1; p <= k; ++p) {
                if (t.l_value(k, p) - corner == p - sh.m - sh.n) {
                    p_k = p;
                    break;
                }
            }
            const int shift = (p_k > 0 ? p_k : k + 1);
            if (!(t.l_value(k, sh.m) >= corner - sh.m - sh.n + shift)) {
                return fail("row " + std::to_string(k) + " violates the diagonal bound");
            }
        }
    }
    if (t.l_value(sh.m + 1, sh.m) - corner == 1 - sh.n) {
        if (t.theta(sh.m, sh.m) != 0) {
            return fail("boundary rule: theta(m,m) must vanish");
        }
    }
    return {};
}

bool is_covariant_tableau(const Tableau& t, const SuperRelationSet& c) {
    return covariant_tableau_check(t, c).status == Satisfaction::Yes;
}

// ---------------------------------------------------------------------------
// Randomized generation

RelationSet random_admissible_set(int rank, std::mt19937_64& rng, int max_relations) {
    // The pool is the interlacing family: same-column lower bounds and
    // diagonal upper bounds. Outside this family the corner action formulas
    // lose their boundary cancellations (a raising move can hit a constraint
    // that no coefficient factor sees), so module structures only exist over
    // its subsets.
    std::vector<Relation> pool;
    for (int r = 1; r <= rank - 1; ++r) {
        for (int i = 1; i <= r; ++i) {
            pool.push_back({{r + 1, i}, {r, i}, RelationClass::Plus});
            pool.push_back({{r, i}, {r + 1, i + 1}, RelationClass::Minus});
        }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    RelationSet out(rank);
    for (const auto& r : pool) {
        if (static_cast<int>(out.size()) >= max_relations) break;
        RelationSet trial = out;
        trial.insert(r);
        if (is_admissible(trial)) out = trial;
    }
    return out;
}

SuperRelationSet random_admissible_pair(const Shape& shape, std::mt19937_64& rng,
                                        int max_relations_per_side) {
    return SuperRelationSet(shape, random_admissible_set(shape.m, rng, max_relations_per_side),
                            random_admissible_set(shape.n, rng, max_relations_per_side));
}

namespace {

// Least solution of x_u - x_v >= w above zero, per component.
std::map<Vertex, long long> solve_triangle(const RelationSet& set, TriangleSide side) {
    std::map<Vertex, long long> x;
    for (int r = 1; r <= set.rank(); ++r) {
        for (int i = 1; i <= r; ++i) x[{r, i}] = 0;
    }
    for (int round = 0; round < 4 * set.rank() * set.rank() + 8; ++round) {
        bool changed = false;
        for (const auto& rel : set.relations()) {
            const long long w = super_weight(rel.cls);
            Vertex hi = rel.from, lo = rel.to;
            if (side == TriangleSide::Odd) std::swap(hi, lo);
            if (x[hi] < x[lo] + w) {
                x[hi] = x[lo] + w;
                changed = true;
            }
        }
        if (!changed) return x;
    }
    throw std::domain_error("relation set admits no pattern (strict cycle)");
}

}  // namespace

Tableau random_satisfying_tableau(const SuperRelationSet& c, std::mt19937_64& rng) {
    const Shape& sh = c.shape;
    const int m = sh.m, n = sh.n, total = sh.total();
    std::uniform_int_distribution<int> small(-4, 4);
    const int frac_den = 97;
    int next_frac = 1;

    // Even triangle l-values: solved base + per-component integer jitter +
    // per-component fractional offset.
    const auto even_base = solve_triangle(c.even, TriangleSide::Even);
    std::map<Vertex, Rational> even_l_val;
    {
        std::map<Vertex, int> comp;
        int cid = 0;
        for (int r = 1; r <= m; ++r) {
            for (int i = 1; i <= r; ++i) {
                const Vertex v{r, i};
                if (comp.count(v)) continue;
                const int id = cid++;
                comp[v] = id;
                if (c.even.involves(v)) {
                    for (int r2 = 1; r2 <= m; ++r2) {
                        for (int i2 = 1; i2 <= r2; ++i2) {
                            const Vertex u{r2, i2};
                            if (!comp.count(u) && c.even.same_component(v, u)) comp[u] = id;
                        }
                    }
                }
            }
        }
        std::map<int, Rational> offset;
        for (const auto& [v, id] : comp) {
            auto it = offset.find(id);
            if (it == offset.end()) {
                it = offset.emplace(id, Rational(small(rng)) + Rational(next_frac++, frac_den)).first;
            }
            even_l_val[v] = Rational(even_base.at(v)) + it->second;
        }
    }
    // Odd triangle likewise, with fresh fractional parts so no mixed or
    // cross-component difference is ever integral.
    const auto odd_base = solve_triangle(c.odd, TriangleSide::Odd);
    std::map<Vertex, Rational> odd_l_val;
    {
        std::map<Vertex, int> comp;
        int cid = 0;
        for (int r = 1; r <= n; ++r) {
            for (int i = 1; i <= r; ++i) {
                const Vertex v{r, i};
                if (comp.count(v)) continue;
                const int id = cid++;
                comp[v] = id;
                if (c.odd.involves(v)) {
                    for (int r2 = 1; r2 <= n; ++r2) {
                        for (int i2 = 1; i2 <= r2; ++i2) {
                            const Vertex u{r2, i2};
                            if (!comp.count(u) && c.odd.same_component(v, u)) comp[u] = id;
                        }
                    }
                }
            }
        }
        std::map<int, Rational> offset;
        for (const auto& [v, id] : comp) {
            auto it = offset.find(id);
            if (it == offset.end()) {
                it = offset.emplace(id, Rational(small(rng)) + Rational(next_frac++, frac_den)).first;
            }
            odd_l_val[v] = Rational(odd_base.at(v)) + it->second;
        }
    }

    // Assemble lambda rows. Even columns above row m follow a band-valid
    // theta matrix chosen uniformly among the valid ones.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(total));
    for (int k = 1; k <= total; ++k) rows[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k));
    const auto set_lambda = [&](int k, int i, const Rational& lam) {
        rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = lam;
    };
    for (int r = 1; r <= m; ++r) {
        for (int i = 1; i <= r; ++i) set_lambda(r, i, even_l_val.at({r, i}) + i - 1);
    }
    for (int r = 1; r <= n; ++r) {
        for (int i = 1; i <= r; ++i) {
            set_lambda(m + r, m + i, -odd_l_val.at({r, i}) + (m + i) - 2 * m);
        }
    }
    const auto bands = band_constraints(c);
    const int cells = m * n;
    std::vector<int> valid_masks;
    for (int mask = 0; mask < (1 << cells); ++mask) {
        const auto theta = [&](int r, int col) { return (mask >> ((r - m) * m + (col - 1))) & 1; };
        bool ok = true;
        for (const auto& [a, b, d] : bands) {
            Rational da = even_l_val.at({m, a}) - even_l_val.at({m, b});
            for (int r = m + 1; r <= total && ok; ++r) {
                da += theta(r - 1, a) - theta(r - 1, b);
                if (!(da >= d)) ok = false;
            }
        }
        if (ok) valid_masks.push_back(mask);
    }
    // mask 0 keeps band differences constant, so the list is never empty
    std::uniform_int_distribution<std::size_t> pick(0, valid_masks.size() - 1);
    const int mask = valid_masks[pick(rng)];
    const auto theta = [&](int r, int col) { return (mask >> ((r - m) * m + (col - 1))) & 1; };
    for (int r = m + 1; r <= total; ++r) {
        for (int col = 1; col <= m; ++col) {
            const Rational below = rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(col - 1)];
            set_lambda(r, col, below + theta(r - 1, col));
        }
    }
    Tableau t(sh, std::move(rows));
    if (satisfies(t, c).status != Satisfaction::Yes) {
        throw std::logic_error("random pattern generation produced a non-satisfying pattern");
    }
    return t;
}

}  // namespace glmn
