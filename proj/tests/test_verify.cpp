#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glmn/io.hpp"
#include "glmn/verify.hpp"
#include "support.hpp"

#include <random>

using namespace glmn;

namespace {

ModuleSpace standard_module(const Shape& sh, const Weight& w) {
    return ModuleSpace::build(Tableau::highest_weight(sh, w), standard_interlacing(sh),
                              ModuleMode::QuasiTypical);
}

}  // namespace

TEST_CASE("defining relations hold on small standard modules") {
    for (const auto& [sh, w] :
         std::vector<std::pair<Shape, Weight>>{{Shape{1, 1}, Weight{{1, 0}}},
                                               {Shape{1, 1}, Weight{{0, 0}}},
                                               {Shape{2, 1}, Weight{{3, 1, -5}}},
                                               {Shape{1, 2}, Weight{{5, 1, 0}}}}) {
        const ModuleSpace mod = standard_module(sh, w);
        const VerificationReport report = check_defining_relations(mod, mod.basis());
        CHECK_MESSAGE(report.passed(), report.witness);
    }
}

TEST_CASE("relation suite on randomized admissible pairs") {
    std::mt19937_64 rng(424242);
    for (const Shape sh : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}, Shape{2, 2}}) {
        for (int trial = 0; trial < 3; ++trial) {
            const SuperRelationSet c = random_admissible_pair(sh, rng, 5);
            const Tableau seed = random_satisfying_tableau(c, rng);
            const ModuleSpace mod =
                ModuleSpace::build(seed, c, ModuleMode::QuasiTypical, 100000, 2);
            const VerificationReport report = check_defining_relations(mod, mod.basis());
            CHECK_MESSAGE(report.passed(), "shape gl(", sh.m, "|", sh.n, "): ", report.witness);
        }
    }
}

TEST_CASE("mutation self-test: a corrupted relation is detected") {
    const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{1, 0}});
    ActionEvaluator eval(mod);
    // wrong sign on the Cartan part: [e1,f1] - h1 + h2 is NOT a relation here
    RelationExpr wrong{"[e1,f1]-h1+h2",
                       {{1, BracketExpr::bracket(BracketExpr::leaf({GenRef::Kind::E, 1}),
                                                 BracketExpr::leaf({GenRef::Kind::F, 1}))},
                        {-1, BracketExpr::leaf({GenRef::Kind::H, 1})},
                        {1, BracketExpr::leaf({GenRef::Kind::H, 2})}}};
    bool nonzero_somewhere = false;
    for (const auto& t : mod.basis()) {
        if (!eval.apply(wrong, eval.intern(t)).empty()) nonzero_somewhere = true;
    }
    CHECK(nonzero_somewhere);
}

TEST_CASE("irreducibility: criterion vs brute force") {
    SUBCASE("typical gl(1|1) module is irreducible") {
        const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{1, 0}});
        CHECK(irreducibility_criterion(mod));
        CHECK(brute_force_irreducible(mod));
    }
    SUBCASE("atypical gl(1|1) module splits") {
        const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{0, 0}});
        CHECK_FALSE(irreducibility_criterion(mod));
        CHECK_FALSE(brute_force_irreducible(mod));
    }
    SUBCASE("gl(2|1) with colliding mixed top-row values splits") {
        // l = (3, 0, 3): the first and last top-row l-values agree
        const ModuleSpace mod = standard_module(Shape{2, 1}, Weight{{3, 1, -4}});
        CHECK(mod.finite());
        CHECK_FALSE(irreducibility_criterion(mod));
        CHECK_FALSE(brute_force_irreducible(mod));
    }
    SUBCASE("essentially typical gl(2|1) module is irreducible") {
        const ModuleSpace mod = standard_module(Shape{2, 1}, Weight{{3, 1, -5}});
        CHECK(irreducibility_criterion(mod));
        CHECK(brute_force_irreducible(mod));
    }
}

TEST_CASE("raising-part invariants") {
    SUBCASE("typical gl(1|1): the theta-zero pattern spans the kernel") {
        const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{1, 0}});
        const InvariantSubspace inv = g1_invariants(mod);
        CHECK(inv.kernel.cols() == 1);
        CHECK(inv.theta_zero_ids.size() == 1);
        CHECK(inv.equals_theta_zero_span);
    }
    SUBCASE("reducible gl(1|1): the kernel is reported as-is") {
        // here the raising operator still moves the theta = 1 pattern, so the
        // kernel happens to coincide with the theta-zero span even though the
        // module splits
        const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{0, 0}});
        const InvariantSubspace inv = g1_invariants(mod);
        CHECK(inv.kernel.cols() == 1);
        CHECK(inv.theta_zero_ids.size() == 1);
        CHECK(inv.equals_theta_zero_span);
    }
}

TEST_CASE("Kac structure comparison") {
    SUBCASE("gl(1|1), lambda = (1,0): 2 = 2 * 1 with matching weights") {
        const VerificationReport report = kac_compare(standard_module(Shape{1, 1}, Weight{{1, 0}}));
        CHECK_MESSAGE(report.passed(), report.witness);
    }
    SUBCASE("gl(2|1), lambda = (3,1,-5): 12 = 4 * 3 with matching weights") {
        const VerificationReport report =
            kac_compare(standard_module(Shape{2, 1}, Weight{{3, 1, -5}}));
        CHECK_MESSAGE(report.passed(), report.witness);
    }
    SUBCASE("mutated weight multiset is detected") {
        // replicate the comparison with one model weight perturbed
        const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{1, 0}});
        std::vector<std::vector<Rational>> module_weights;
        for (const auto& t : mod.basis()) {
            module_weights.push_back({t.h_eigenvalue(1), t.h_eigenvalue(2)});
        }
        auto corrupted = module_weights;
        corrupted[0][0] += 1;
        std::sort(module_weights.begin(), module_weights.end());
        std::sort(corrupted.begin(), corrupted.end());
        CHECK(module_weights != corrupted);
    }
    SUBCASE("precondition: reducible input is rejected") {
        CHECK_THROWS_AS(kac_compare(standard_module(Shape{1, 1}, Weight{{0, 0}})),
                        std::invalid_argument);
    }
}

TEST_CASE("enveloping-algebra identity on gl(1|1) modules") {
    for (const Weight& w : {Weight{{1, 0}}, Weight{{0, 0}}, Weight{{Rational(7, 3), Rational(1, 2)}}}) {
        const VerificationReport report = check_gl11_identity(standard_module(Shape{1, 1}, w));
        CHECK_MESSAGE(report.passed(), report.witness);
    }
}

TEST_CASE("enveloping-algebra commutator on gl(1|2) modules") {
    const ModuleSpace mod = standard_module(Shape{1, 2}, Weight{{5, 1, 0}});
    const VerificationReport report = check_gl12_commutator(mod);
    CHECK_MESSAGE(report.passed(), report.witness);
    CHECK(gl12_commutator_nonzero(mod));
    // the trivial covariant module keeps both sides at zero
    const ModuleSpace trivial =
        ModuleSpace::build(Tableau::highest_weight(Shape{1, 2}, Weight{{0, 0, 0}}),
                           standard_interlacing(Shape{1, 2}), ModuleMode::QuasiCovariant);
    REQUIRE(trivial.dimension() == 1);
    CHECK(check_gl12_commutator(trivial).passed());
    CHECK_FALSE(gl12_commutator_nonzero(trivial));
}

TEST_CASE("eigenvalue tuples separate every enumerated basis") {
    for (const auto& [sh, w] :
         std::vector<std::pair<Shape, Weight>>{{Shape{1, 1}, Weight{{1, 0}}},
                                               {Shape{1, 1}, Weight{{0, 0}}},
                                               {Shape{2, 1}, Weight{{3, 1, -5}}},
                                               {Shape{1, 2}, Weight{{5, 1, 0}}}}) {
        const VerificationReport report = check_separation(standard_module(sh, w));
        CHECK_MESSAGE(report.passed(), report.witness);
    }
}

TEST_CASE("covariant modules carry the same structure as quasi-typical ones") {
    for (const auto& [sh, w] :
         std::vector<std::pair<Shape, Weight>>{{Shape{1, 2}, Weight{{2, 1, 0}}},
                                               {Shape{2, 2}, Weight{{2, 1, 1, 0}}}}) {
        const ModuleSpace mod =
            ModuleSpace::build(Tableau::highest_weight(sh, w), standard_interlacing(sh),
                               ModuleMode::QuasiCovariant);
        const VerificationReport rep = check_defining_relations(mod, mod.basis());
        CHECK_MESSAGE(rep.passed(), rep.witness);
        CHECK(check_separation(mod).passed());
        // the Berezinian stays diagonal with the factored eigenvalues
        const auto coeffs = berezinian_truncated(mod, 2);
        const auto dim = static_cast<Eigen::Index>(mod.dimension());
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto series =
                gt_eigenvalue(mod.basis()[static_cast<std::size_t>(col)], sh.total()).series(2);
            for (int d = 0; d <= 2; ++d) {
                for (Eigen::Index row = 0; row < dim; ++row) {
                    const Rational expected =
                        row == col ? series[static_cast<std::size_t>(d)] : Rational(0);
                    CHECK(coeffs[static_cast<std::size_t>(d)](row, col) == expected);
                }
            }
        }
    }
}

TEST_CASE("module files with a stale basis are rejected") {
    const ModuleSpace mod = standard_module(Shape{1, 1}, Weight{{1, 0}});
    Json j = module_to_json(mod);
    j["basis"].push_back(j["basis"][0]);
    CHECK_THROWS_AS(module_from_json(j), std::invalid_argument);
    j["basis"].erase(j["basis"].size() - 1);
    CHECK(module_from_json(j).dimension() == mod.dimension());
}

TEST_CASE("report serialization is canonical") {
    const VerificationReport report = check_separation(standard_module(Shape{1, 1}, Weight{{1, 0}}));
    const Json j = to_json(report);
    CHECK(j["check"] == "gt-separation");
    CHECK(j["status"] == "pass");
    CHECK(canonical_dump(j) == canonical_dump(to_json(report)));
}
