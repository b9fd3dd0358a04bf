#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glmn/io.hpp"
#include "glmn/relations.hpp"
#include "support.hpp"

#include <random>

using namespace glmn;

namespace {

RelationSet set_of(int rank, std::initializer_list<Relation> rels) {
    RelationSet c(rank);
    for (const auto& r : rels) c.insert(r);
    return c;
}

constexpr auto Plus = RelationClass::Plus;
constexpr auto Minus = RelationClass::Minus;
constexpr auto Zero = RelationClass::Zero;

}  // namespace

TEST_CASE("reachability is the non-reflexive path relation") {
    const RelationSet empty(3);
    CHECK_FALSE(empty.reaches({2, 1}, {2, 1}));
    const RelationSet one = set_of(2, {{{2, 1}, {1, 1}, Plus}});
    CHECK(one.reaches({2, 1}, {1, 1}));
    CHECK_FALSE(one.reaches({1, 1}, {2, 1}));
    const RelationSet chain =
        set_of(3, {{{3, 1}, {2, 1}, Plus}, {{2, 1}, {1, 1}, Plus}});
    CHECK(chain.reaches({3, 1}, {1, 1}));
}

TEST_CASE("relation shape validation") {
    RelationSet c(3);
    CHECK_THROWS_AS(c.insert({{2, 1}, {2, 2}, Zero}), std::invalid_argument);  // not top row
    CHECK_THROWS_AS(c.insert({{2, 1}, {1, 1}, Minus}), std::invalid_argument);
    CHECK_THROWS_AS(c.insert({{3, 4}, {2, 1}, Plus}), std::invalid_argument);
}

TEST_CASE("classical satisfaction") {
    SUBCASE("standard interlacing accepts a monotone integral pattern") {
        const RelationSet std3 = interlacing_triangle(3);
        const std::vector<std::vector<Rational>> rows{{4}, {5, 2}, {6, 3, 1}};
        CHECK(satisfies(rows, std3));
    }
    SUBCASE("non-integral difference inside one component fails") {
        const RelationSet std2 = interlacing_triangle(2);
        const std::vector<std::vector<Rational>> rows{{Rational(7, 2)}, {4, 1}};
        CHECK_FALSE(satisfies(rows, std2));
    }
    SUBCASE("empty set on pairwise non-integral rows") {
        const RelationSet none(3);
        CHECK(satisfies({{Rational(1, 2)}, {Rational(1, 3), 0}, {1, Rational(1, 5), Rational(2, 7)}},
                        none));
        // a same-row integral pair must be connected
        CHECK_FALSE(satisfies({{Rational(1, 2)}, {Rational(5, 2), Rational(3, 2)},
                               {1, Rational(1, 5), Rational(2, 7)}},
                              none));
    }
    SUBCASE("zero relations are non-strict classically") {
        const RelationSet top = set_of(2, {{{2, 1}, {2, 2}, Zero}, {{2, 1}, {1, 1}, Plus},
                                           {{1, 1}, {2, 2}, Minus}});
        CHECK(satisfies({{1}, {1, 0}}, top));
        // equality across a top-row relation is allowed in this convention
        const RelationSet just_zero = set_of(2, {{{2, 1}, {2, 2}, Zero}});
        CHECK(satisfies({{Rational(1, 2)}, {0, 0}}, just_zero));
    }
}

TEST_CASE("noncritical sets") {
    CHECK(is_noncritical(RelationSet(3)));
    CHECK(is_noncritical(interlacing_triangle(3)));
    // same component, order-incomparable same-row pair: the equality is
    // realizable, so the set is critical
    const RelationSet bad = set_of(3, {{{3, 1}, {2, 1}, Plus}, {{3, 1}, {2, 2}, Plus}});
    CHECK_FALSE(is_noncritical(bad));
    CHECK(satisfies({{Rational(7, 3)}, {0, 0}, {1, Rational(1, 2), Rational(1, 3)}}, bad));
}

TEST_CASE("reduced sets") {
    CHECK(is_reduced(interlacing_triangle(2)));
    const RelationSet twin =
        set_of(3, {{{2, 1}, {3, 1}, Minus}, {{2, 1}, {3, 2}, Minus}});
    CHECK_FALSE(is_reduced(twin));
    // top-row relation implied through lower rows
    const RelationSet implied =
        set_of(2, {{{2, 1}, {1, 1}, Plus}, {{1, 1}, {2, 2}, Minus}, {{2, 1}, {2, 2}, Zero}});
    CHECK_FALSE(is_reduced(implied));
}

TEST_CASE("component partition") {
    CHECK(RelationSet(3).indecomposable_components().empty());
    const RelationSet two =
        set_of(3, {{{2, 1}, {1, 1}, Plus}, {{2, 2}, {3, 3}, Minus}});
    CHECK(two.indecomposable_components().size() == 2);
    const RelationSet std3 = interlacing_triangle(3);
    CHECK(std3.indecomposable_components().size() == 1);
}

TEST_CASE("family membership") {
    SUBCASE("standard interlacing components qualify") {
        for (int rank : {1, 2, 3, 4}) {
            CHECK(is_admissible(interlacing_triangle(rank)));
        }
    }
    SUBCASE("single relation qualifies") {
        CHECK(is_indecomposable_admissible(set_of(3, {{{2, 1}, {3, 2}, Minus}})));
    }
    SUBCASE("cross pattern is rejected") {
        // one component carrying the forbidden cross; the lower diamond keeps
        // the earlier conditions satisfied
        const RelationSet cross =
            set_of(3, {{{2, 1}, {3, 2}, Minus}, {{3, 1}, {2, 2}, Plus},
                       {{2, 1}, {1, 1}, Plus}, {{1, 1}, {2, 2}, Minus}});
        const FamilyCheck f = admissible_check(cross);
        CHECK_FALSE(f.ok);
        CHECK(f.failed_condition == "cross");
    }
    SUBCASE("a cross split over two components is two admissible pieces") {
        const RelationSet split =
            set_of(3, {{{2, 1}, {3, 2}, Minus}, {{3, 1}, {2, 2}, Plus}});
        CHECK(is_admissible(split));
    }
    SUBCASE("adjoining pair without either pattern is rejected") {
        // connects (2,1) and (2,2) through (3,2) only
        const RelationSet vee =
            set_of(3, {{{2, 1}, {3, 2}, Minus}, {{3, 2}, {2, 2}, Plus}});
        const FamilyCheck f = admissible_check(vee);
        CHECK_FALSE(f.ok);
        CHECK(f.failed_condition == "adjoining");
    }
    SUBCASE("empty set is admissible") { CHECK(is_admissible(RelationSet(4))); }
    SUBCASE("anything failing reducedness fails admissibility") {
        const RelationSet twin =
            set_of(3, {{{2, 1}, {3, 1}, Minus}, {{2, 1}, {3, 2}, Minus}});
        CHECK_FALSE(is_admissible(twin));
    }
}

TEST_CASE("extremal vertex removal") {
    const RelationSet std2 = interlacing_triangle(2);
    SUBCASE("removing an extremal vertex keeps admissibility") {
        const RelationSet removed = remove_extremal_vertex(std2, {2, 1}, TriangleSide::Even);
        CHECK(is_admissible(removed));
        CHECK(removed.size() == 1);
        CHECK(removed.contains({{1, 1}, {2, 2}, Minus}));
    }
    SUBCASE("interior vertices are rejected") {
        const RelationSet std3 = interlacing_triangle(3);
        CHECK_THROWS_AS(remove_extremal_vertex(std3, {2, 1}, TriangleSide::Even),
                        std::invalid_argument);
    }
    SUBCASE("uninvolved vertices are rejected") {
        const RelationSet one = set_of(3, {{{2, 1}, {1, 1}, Plus}});
        CHECK_THROWS_AS(remove_extremal_vertex(one, {3, 3}, TriangleSide::Even),
                        std::invalid_argument);
    }
    SUBCASE("iterated removal reaches the empty set") {
        RelationSet c = interlacing_triangle(3);
        int guard = 0;
        while (!c.empty() && guard++ < 32) {
            bool removed = false;
            for (const auto& v : c.involved_vertices()) {
                if (is_removal_extremal(c, v, TriangleSide::Even)) {
                    c = remove_extremal_vertex(c, v, TriangleSide::Even);
                    removed = true;
                    break;
                }
            }
            REQUIRE(removed);
        }
        CHECK(c.empty());
    }
}

TEST_CASE("super satisfaction on the standard pair") {
    SUBCASE("essentially typical highest weight pattern") {
        const Shape sh{1, 1};
        const SuperRelationSet std_pair = standard_interlacing(sh);
        const Tableau hw = Tableau::highest_weight(sh, Weight{{1, 0}});
        CHECK(satisfies(hw, std_pair).status == Satisfaction::Yes);
        // cross-validated against the direct enumeration of the classical
        // conditions
        const auto oracle = glmn::testing::classical_basis(sh, Weight{{1, 0}});
        for (const auto& t : oracle) {
            CHECK(satisfies_pointwise(t, std_pair).status == Satisfaction::Yes);
        }
    }
    SUBCASE("theta outside {0,1} fails") {
        const SuperRelationSet std_pair = standard_interlacing(Shape{1, 1});
        const Tableau bad(Shape{1, 1}, {{-1}, {1, 0}});
        CHECK(satisfies_pointwise(bad, std_pair).status == Satisfaction::No);
    }
    SUBCASE("shift-closure rejects a reachable mixed collision") {
        // gl(1|2), empty pair: the odd entry is unconstrained, so an integral
        // mixed difference can always be slid to zero
        const Shape sh{1, 2};
        const SuperRelationSet none(sh, RelationSet(1), RelationSet(2));
        const Tableau seed(sh, {{3}, {3, 1}, {3, Rational(1, 2), Rational(1, 3)}});
        CHECK(satisfies_pointwise(seed, none).status == Satisfaction::Yes);
        const SatisfactionReport full = satisfies(seed, none);
        CHECK(full.status == Satisfaction::No);
        CHECK(full.detail.find("collides") != std::string::npos);
    }
    SUBCASE("non-integral mixed classes keep the closure condition vacuous") {
        const Shape sh{1, 2};
        const SuperRelationSet none(sh, RelationSet(1), RelationSet(2));
        const Tableau seed(sh,
                           {{Rational(7, 2)}, {Rational(7, 2), 1}, {Rational(7, 2), Rational(1, 2), Rational(1, 3)}});
        CHECK(satisfies(seed, none).status == Satisfaction::Yes);
    }
}

TEST_CASE("maximal satisfied relation sets") {
    SUBCASE("pairwise non-integral pattern gives the empty pair") {
        const Shape sh{2, 1};
        const Tableau t(sh, {{Rational(1, 2)}, {4, Rational(-1, 7)}, {4, Rational(-1, 7), 0}});
        const SuperRelationSet c = maximal_satisfied_set(t);
        CHECK(c.even.empty());
        CHECK(c.odd.empty());
    }
    SUBCASE("standard finite-dimensional pattern recovers the interlacing pair") {
        const Shape sh{2, 1};
        const Tableau hw = Tableau::highest_weight(sh, Weight{{3, 1, -5}});
        const SuperRelationSet c = maximal_satisfied_set(hw);
        CHECK(c.even == interlacing_triangle(2));
        CHECK(c.odd.empty());  // rank-1 triangle carries no relations
        CHECK(is_maximal_for(c, hw));
    }
    SUBCASE("dropping a relation loses maximality") {
        const Shape sh{2, 1};
        const Tableau hw = Tableau::highest_weight(sh, Weight{{3, 1, -5}});
        SuperRelationSet weaker = standard_interlacing(sh);
        weaker.even.erase({{2, 1}, {1, 1}, Plus});
        CHECK_FALSE(is_maximal_for(weaker, hw));
        CHECK(is_maximal_for(standard_interlacing(sh), hw));
    }
    SUBCASE("degenerate pattern with equal row values has no admissible set") {
        const Shape sh{2, 1};
        // l(2,1) = l(2,2): lambda(2,1) = a, lambda(2,2) = a+1
        const Tableau t(sh, {{3}, {3, 4}, {3, 4, Rational(1, 2)}});
        CHECK_THROWS_AS(maximal_satisfied_set(t), std::domain_error);
    }
}

TEST_CASE("maximality modes") {
    const Shape sh{2, 1};
    const Tableau hw = Tableau::highest_weight(sh, Weight{{3, 1, -5}});
    const SuperRelationSet std_pair = standard_interlacing(sh);
    CHECK(is_maximal_for(std_pair, hw, MaximalityMode::ConstraintClosure));
    // literal inclusion fails: the satisfied top-row relation is implied, not
    // stored
    CHECK_FALSE(is_maximal_for(std_pair, hw, MaximalityMode::SetInclusion));
}

TEST_CASE("covariant admissibility") {
    SUBCASE("standard interlacing pair is covariant admissible") {
        for (const Shape sh : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}, Shape{2, 2}}) {
            CHECK(is_covariant_admissible(standard_interlacing(sh)));
        }
    }
    SUBCASE("chain head attached to the row below is rejected") {
        const Shape sh{1, 2};
        RelationSet odd(2);
        odd.insert({{2, 2}, {1, 1}, Plus});
        REQUIRE(is_admissible(odd));
        CHECK_FALSE(is_covariant_admissible(SuperRelationSet(sh, RelationSet(1), odd)));
    }
    SUBCASE("unsaturated component is rejected") {
        // ties (3,1) to the corner component but skips (3,2)
        const Shape sh{1, 3};
        RelationSet odd(3);
        odd.insert({{3, 1}, {3, 3}, Zero});
        REQUIRE(is_admissible(odd));
        CHECK_FALSE(is_covariant_admissible(SuperRelationSet(sh, RelationSet(1), odd)));
    }
}

TEST_CASE("covariant patterns at gl(1|1)") {
    const Shape sh{1, 1};
    const SuperRelationSet c = standard_interlacing(sh);
    REQUIRE(is_covariant_admissible(c));
    SUBCASE("lambda = (1,1) enumerates two covariant patterns") {
        const Weight w{{1, 1}};
        REQUIRE(glmn::testing::covariant_weight(sh, w));
        const auto oracle = glmn::testing::covariant_basis(sh, w);
        CHECK(oracle.size() == 2);
        for (const auto& t : oracle) CHECK(is_covariant_tableau(t, c));
    }
    SUBCASE("boundary rule forces theta to vanish at lambda = (0,0)") {
        const Weight w{{0, 0}};
        const auto oracle = glmn::testing::covariant_basis(sh, w);
        CHECK(oracle.size() == 1);
        const Tableau kept(sh, {{0}, {0, 0}});
        const Tableau dropped(sh, {{-1}, {0, 0}});
        CHECK(is_covariant_tableau(kept, c));
        CHECK_FALSE(is_covariant_tableau(dropped, c));
        CHECK(covariant_tableau_check(dropped, c).detail.find("theta(m,m)") != std::string::npos);
    }
}

TEST_CASE("covariant enumeration matches the direct oracle when the chain is nonempty") {
    // odd rank 2 puts a genuine diagonal chain into the standard pair
    for (const auto& [sh, w] :
         std::vector<std::pair<Shape, Weight>>{{Shape{1, 2}, Weight{{1, 1, 0}}},
                                               {Shape{1, 2}, Weight{{2, 2, 1}}},
                                               {Shape{1, 2}, Weight{{2, 1, 0}}},
                                               {Shape{2, 2}, Weight{{2, 1, 1, 0}}},
                                               {Shape{2, 2}, Weight{{2, 2, 1, 1}}}}) {
        REQUIRE(glmn::testing::covariant_weight(sh, w));
        const ModuleSpace mod =
            ModuleSpace::build(Tableau::highest_weight(sh, w), standard_interlacing(sh),
                               ModuleMode::QuasiCovariant);
        const auto oracle = glmn::testing::covariant_basis(sh, w);
        CHECK_MESSAGE(mod.basis() == oracle, "gl(", sh.m, "|", sh.n, ") enumerated ",
                      mod.dimension(), " vs oracle ", oracle.size());
    }
}

TEST_CASE("covariant diagonal bound probe at gl(1|2)") {
    const Shape sh{1, 2};
    const SuperRelationSet c = standard_interlacing(sh);
    const Weight w{{1, 1, 0}};
    REQUIRE(glmn::testing::covariant_weight(sh, w));
    const auto oracle = glmn::testing::covariant_basis(sh, w);
    REQUIRE(!oracle.empty());
    for (const auto& t : oracle) CHECK(is_covariant_tableau(t, c));
    // probe one step below the diagonal bound: lambda(2,1) = 0 with
    // lambda(2,2) = 1 violates the counting bound
    const Tableau below(sh, {{0}, {0, 1}, {1, 1, 0}});
    CHECK_FALSE(is_covariant_tableau(below, c));
}

TEST_CASE("randomized admissible generation") {
    std::mt19937_64 rng(20240811);
    for (const Shape sh : {Shape{2, 2}, Shape{1, 3}, Shape{3, 1}}) {
        for (int trial = 0; trial < 8; ++trial) {
            const SuperRelationSet c = random_admissible_pair(sh, rng, 6);
            CHECK(is_admissible(c.even));
            CHECK(is_admissible(c.odd));
            // removal keeps admissibility at every extremal vertex
            for (const auto side : {TriangleSide::Even, TriangleSide::Odd}) {
                const RelationSet& tri = side == TriangleSide::Even ? c.even : c.odd;
                for (const auto& v : tri.involved_vertices()) {
                    if (is_removal_extremal(tri, v, side)) {
                        CHECK(is_admissible(remove_extremal_vertex(tri, v, side)));
                    }
                }
            }
            const Tableau t = random_satisfying_tableau(c, rng);
            CHECK(satisfies(t, c).status == Satisfaction::Yes);
            // path relation is transitive and respects the weak components
            const auto verts = c.even.involved_vertices();
            for (const auto& u : verts) {
                for (const auto& v : verts) {
                    if (c.even.reaches(u, v)) CHECK(c.even.same_component(u, v));
                    for (const auto& w : verts) {
                        if (c.even.reaches(u, v) && c.even.reaches(v, w)) {
                            CHECK(c.even.reaches(u, w));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("relation set JSON round trip") {
    const SuperRelationSet c = standard_interlacing(Shape{2, 2});
    const Json j = to_json(c);
    const SuperRelationSet back = super_set_from_json(j);
    CHECK(back == c);
    CHECK(canonical_dump(j) == canonical_dump(to_json(back)));
}

TEST_CASE("the shift-closure check reports undecided beyond its cap") {
    // 25 theta cells exceed the enumeration cap, and the weight is integral,
    // so the closure question is genuinely posed
    const Shape sh{5, 5};
    Weight w{{20, 19, 18, 17, 16, -30, -31, -32, -33, -34}};
    REQUIRE(is_essentially_typical(sh, w));
    const Tableau hw = Tableau::highest_weight(sh, w);
    const SuperRelationSet std_pair = standard_interlacing(sh);
    REQUIRE(satisfies_pointwise(hw, std_pair).status == Satisfaction::Yes);
    CHECK(satisfies(hw, std_pair).status == Satisfaction::Undecided);
}

TEST_CASE("weight JSON round trip") {
    const Shape sh{2, 1};
    const Weight w{{3, Rational(1, 2), -5}};
    const Json j = to_json(sh, w);
    CHECK(j["lambda"][1] == "1/2");
    const auto [sh2, w2] = weight_from_json(j);
    CHECK(sh2 == sh);
    CHECK(w2.entries == w.entries);
}
