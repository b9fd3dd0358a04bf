#pragma once

#include "glmn/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace glmn {

struct VerificationReport {
    std::string check;
    Shape shape;
    std::string module_desc;
    enum class Status { Pass, Fail, Undecided } status = Status::Pass;
    std::string witness;  // non-empty whenever status != Pass
    double wall_ms = 0.0;
    std::optional<std::uint64_t> seed;

    bool passed() const { return status == Status::Pass; }
};

std::string to_string(VerificationReport::Status s);

// ---------------------------------------------------------------------------
// Relation suite

// Caches generator applications per pattern so nested bracket words reuse
// work across relations and sample vectors.
class ActionEvaluator {
public:
    explicit ActionEvaluator(const ModuleSpace& mod) : mod_(&mod) {}

    // Sparse vector keyed by interned pattern id, sorted by id.
    using IdVector = std::vector<std::pair<int, Rational>>;

    int intern(const Tableau& t);
    const Tableau& tableau(int id) const { return tableaux_[static_cast<std::size_t>(id)]; }

    IdVector apply(const GenRef& g, int id);
    IdVector apply(const GenRef& g, const IdVector& v);
    IdVector apply(const BracketExpr& expr, const IdVector& v);
    IdVector apply(const RelationExpr& rel, int id);

    const DropDiagnostics& diagnostics() const { return diag_; }

private:
    const ModuleSpace* mod_;
    std::map<Tableau, int> ids_;
    std::vector<Tableau> tableaux_;
    std::map<std::pair<int, int>, IdVector> cache_;  // (generator key, pattern id)
    DropDiagnostics diag_;
};

// Applies every presentation relation to every sample pattern; passes iff all
// results vanish exactly. Failures carry the relation name and pattern.
VerificationReport check_defining_relations(const ModuleSpace& mod,
                                            const std::vector<Tableau>& sample);

// ---------------------------------------------------------------------------
// Irreducibility

// Quasi-typical: relations maximal for the seed and mixed top-row l-values
// pairwise distinct. Covariant: maximality only.
bool irreducibility_criterion(const ModuleSpace& mod);

// Exact oracle: each basis vector generates the whole space under the
// generator matrices (iterated images, fraction-free row reduction). Finite
// modules only.
bool brute_force_irreducible(const ModuleSpace& mod);

// ---------------------------------------------------------------------------
// Structure checks

struct InvariantSubspace {
    RationalMatrix kernel;            // columns span the joint kernel of the
                                      // odd raising operators
    std::vector<int> theta_zero_ids;  // basis indices of all-theta-zero patterns
    bool equals_theta_zero_span = false;
};

// Joint kernel of E_{ij}, i <= m < j, on a finite module.
InvariantSubspace g1_invariants(const ModuleSpace& mod);

// Structural Kac-module comparison: dim = 2^{mn} * dim W with W the
// g1-invariants, W equals the theta-zero span, and the h-weight multiset
// matches the exterior-algebra model built on W.
VerificationReport kac_compare(const ModuleSpace& mod);

// x(x - E11 - E22) = 0 with x = E21 E12, on any finite gl(1|1) module.
VerificationReport check_gl11_identity(const ModuleSpace& mod);

// [x, y] with x = E21 E12, y = E32 E23 on a finite gl(1|2) module equals
// E21 E32 E13 - E31 E23 E12 (the sign is fixed by the commutation relations;
// see the report detail for the evaluation of both orientations). Also
// reports whether the commutator is nonzero on this module.
VerificationReport check_gl12_commutator(const ModuleSpace& mod);
bool gl12_commutator_nonzero(const ModuleSpace& mod);

// Injectivity of the per-row eigenvalue tuple on the enumerated basis.
VerificationReport check_separation(const ModuleSpace& mod);

}  // namespace glmn
