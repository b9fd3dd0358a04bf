#pragma once

#include "glmn/rational.hpp"
#include "glmn/tableau.hpp"

#include <compare>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace glmn {

// Vertex of a rank-k relation triangle, 1 <= col <= row <= rank.
struct Vertex {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

enum class RelationClass { Plus, Minus, Zero };

// Ordered pair of vertices tagged by its class. Shape constraints:
//   Plus:  to.row == from.row - 1
//   Minus: to.row == from.row + 1
//   Zero:  from.row == to.row == rank, from.col != to.col
struct Relation {
    Vertex from, to;
    RelationClass cls = RelationClass::Plus;

    friend auto operator<=>(const Relation&, const Relation&) = default;
};

std::string to_string(const Relation& r);

// A set of relations over the rank-k triangle, with a directed-graph view.
class RelationSet {
public:
    explicit RelationSet(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::set<Relation>& relations() const { return relations_; }
    bool empty() const { return relations_.empty(); }
    std::size_t size() const { return relations_.size(); }
    bool contains(const Relation& r) const { return relations_.count(r) > 0; }

    // Validates the class shape; throws std::invalid_argument.
    void insert(const Relation& r);
    void erase(const Relation& r) { relations_.erase(r); }

    std::vector<Vertex> involved_vertices() const;
    bool involves(const Vertex& v) const;

    // Directed path of length >= 1 (no reflexive closure).
    bool reaches(const Vertex& from, const Vertex& to) const;

    // Same weakly connected component of the graph. Uninvolved vertices are
    // singleton components.
    bool same_component(const Vertex& a, const Vertex& b) const;

    // Partition of the relations by weak component; empty set gives an empty
    // list.
    std::vector<RelationSet> indecomposable_components() const;

    friend bool operator==(const RelationSet&, const RelationSet&) = default;

private:
    int rank_;
    std::set<Relation> relations_;
};

// Edge weights for strictness accounting. The classical triangle convention
// keeps Zero non-strict; inside a super pair both components make Zero
// strict.
enum class StrictnessConvention { Classical, Super };

// Maximum total strictness over directed paths from `from` to `to`;
// std::nullopt when no path exists. A reachable strict cycle yields a huge
// sentinel value (the constraint system is then unsatisfiable).
std::optional<int> max_path_strictness(const RelationSet& c, const Vertex& from, const Vertex& to,
                                       StrictnessConvention conv);

constexpr int kUnboundedStrictness = 1 << 20;

// ---------------------------------------------------------------------------
// Admissibility (always judged in the classical single-triangle sense)

// No tableau satisfying C can carry equal l-values inside one row below the
// top: every same-row, same-component pair must be strictly comparable.
bool is_noncritical(const RelationSet& c);

// Uniqueness of the four arrow types per vertex plus no top-row relation
// implied by the rest.
bool is_reduced(const RelationSet& c);

struct FamilyCheck {
    bool ok = true;
    std::string failed_condition;  // "noncritical", "reduced", "cross", "top-row", "adjoining"
    std::string detail;
};

// The four conditions an indecomposable set must pass.
FamilyCheck family_check(const RelationSet& c);
bool is_indecomposable_admissible(const RelationSet& c);

bool is_admissible(const RelationSet& c);
FamilyCheck admissible_check(const RelationSet& c);  // first failure across components

// ---------------------------------------------------------------------------
// Vertex removal

// Which side of a super pair a triangle lives on; arrow conventions for
// extremal vertices are mirrored on the odd side.
enum class TriangleSide { Even, Odd };

bool is_removal_extremal(const RelationSet& c, const Vertex& v, TriangleSide side);

// Deletes every relation through v. Preconditions: v involved and extremal.
// The result of removing an extremal vertex from an admissible set is again
// admissible; this is asserted.
RelationSet remove_extremal_vertex(const RelationSet& c, const Vertex& v, TriangleSide side);

// ---------------------------------------------------------------------------
// Super relation sets

// Pair of triangles: `even` over rows 1..m (global coordinates equal local),
// `odd` over the gl(n) triangle with local (r, s) at global (m+r, m+s).
struct SuperRelationSet {
    Shape shape;
    RelationSet even;
    RelationSet odd;

    SuperRelationSet(Shape sh, RelationSet c1, RelationSet c2);

    bool admissible() const { return is_admissible(even) && is_admissible(odd); }

    friend bool operator==(const SuperRelationSet&, const SuperRelationSet&) = default;
};

// Full interlacing pair: ((r+1,i);(r,i)) non-strict and ((r,i);(r+1,i+1))
// strict on both triangles. Satisfied by every dominant essentially typical
// integral pattern.
SuperRelationSet standard_interlacing(const Shape& shape);
RelationSet interlacing_triangle(int rank);

SuperRelationSet remove_extremal_vertex(const SuperRelationSet& c, TriangleSide side,
                                        const Vertex& local_vertex);

// ---------------------------------------------------------------------------
// Satisfaction

// Classical single-triangle satisfaction: rows are l-values of a rank-n
// pattern (row k holds k entries).
bool satisfies(const std::vector<std::vector<Rational>>& l_rows, const RelationSet& c);

enum class Satisfaction { No, Yes, Undecided };

struct SatisfactionReport {
    Satisfaction status = Satisfaction::Yes;
    std::string detail;  // failing condition and witness, empty on Yes
};

// Per-member conditions: the two triangle satisfactions, theta in {0,1}, the
// even-band order condition, and mixed-row nonvanishing. These are exactly
// the conditions a basis member must carry; the shift-closure condition is a
// property of the whole family and is checked once by `satisfies`.
SatisfactionReport satisfies_pointwise(const Tableau& t, const SuperRelationSet& c);

// Pointwise conditions plus closure of the mixed nonvanishing under every
// integer shift that keeps the pointwise conditions. Decided exactly by
// interval propagation over the relation graph together with enumeration of
// the bounded theta configurations; Undecided is reserved for the capped
// fallback and is not expected at supported scales.
SatisfactionReport satisfies(const Tableau& t, const SuperRelationSet& c);

// ---------------------------------------------------------------------------
// Maximality

// All single relations the pattern satisfies, as a (generally non-reduced)
// relation set per triangle.
RelationSet satisfied_relations(const Tableau& t, TriangleSide side);

enum class MaximalityMode { ConstraintClosure, SetInclusion };

// True iff every relation satisfied by t is implied by c (with its
// strictness) via directed paths; SetInclusion instead demands literal
// membership.
bool is_maximal_for(const SuperRelationSet& c, const Tableau& t,
                    MaximalityMode mode = MaximalityMode::ConstraintClosure);

// Reduced admissible pair whose constraint closure covers every relation the
// pattern satisfies. Throws std::domain_error when none exists (degenerate
// pattern, e.g. equal l-values in one row).
SuperRelationSet maximal_satisfied_set(const Tableau& t);

// ---------------------------------------------------------------------------
// Covariant sets

// Admissible + the odd triangle carries the diagonal chain from some p with
// nothing attaching the chain head to the row below, and rows meeting the
// chain component are saturated to the right.
bool is_covariant_admissible(const SuperRelationSet& c);

// Local odd vertices weakly connected to the triangle corner (n, n).
std::set<Vertex> covariant_component(const RelationSet& odd);

// The five covariant pattern conditions plus the even-band condition.
SatisfactionReport covariant_tableau_check(const Tableau& t, const SuperRelationSet& c);
bool is_covariant_tableau(const Tableau& t, const SuperRelationSet& c);

// ---------------------------------------------------------------------------
// Randomized generation (seeds recorded by callers)

// Grow from the empty set, keeping only admissibility-preserving additions.
RelationSet random_admissible_set(int rank, std::mt19937_64& rng, int max_relations);
SuperRelationSet random_admissible_pair(const Shape& shape, std::mt19937_64& rng,
                                        int max_relations_per_side);

// Random rational pattern satisfying c: every component gets its own
// fractional offset, so mixed and cross-component pairs are never integral.
Tableau random_satisfying_tableau(const SuperRelationSet& c, std::mt19937_64& rng);

}  // namespace glmn
