#pragma once

#include "glmn/linalg.hpp"
#include "glmn/relations.hpp"
#include "glmn/superalgebra.hpp"
#include "glmn/tableau.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glmn {

enum class ModuleMode { QuasiTypical, QuasiCovariant };

// Finite rational combination of patterns. No explicit zeros.
using SparseVector = std::map<Tableau, Rational>;

void add_scaled(SparseVector& target, const Rational& coeff, const Tableau& t);
void add_scaled(SparseVector& target, const Rational& coeff, const SparseVector& v);

// A coefficient denominator vanished on a target inside the basis. Always a
// bug or an inadmissible relation set; never silently dropped.
struct MemberPoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counters for targets dropped by the out-of-basis convention. A nonzero
// coefficient pointing outside the basis is legal but suspicious, so it is
// counted separately.
struct DropDiagnostics {
    long zero_prefactor = 0;        // theta indicator killed the term
    long outside_zero_coeff = 0;    // non-member, coefficient was zero anyway
    long outside_nonzero_coeff = 0; // non-member, coefficient nonzero
    long outside_pole = 0;          // non-member, coefficient had a pole
};

// The span of all integer shifts of a seed that satisfy a relation pair (or
// its covariant variant). Immutable after construction.
class ModuleSpace {
public:
    // Enumerates the basis by breadth-first closure under single shifts.
    // finite() is true iff the closure completed within `cap` patterns;
    // otherwise basis() holds the ball discovered up to `radius` shift steps.
    static ModuleSpace build(Tableau seed, SuperRelationSet relations, ModuleMode mode,
                             std::size_t cap = 200000, int radius = -1);

    const Shape& shape() const { return relations_.shape; }
    const Tableau& seed() const { return seed_; }
    const SuperRelationSet& relations() const { return relations_; }
    ModuleMode mode() const { return mode_; }
    bool finite() const { return finite_; }
    int sample_radius() const { return radius_; }

    // Canonical order; complete iff finite().
    const std::vector<Tableau>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    std::optional<int> index_of(const Tableau& t) const;

    // True basis membership (predicate, independent of the enumerated list).
    bool member(const Tableau& t) const;

    std::string describe() const;

private:
    ModuleSpace(Tableau seed, SuperRelationSet relations, ModuleMode mode);

    Tableau seed_;
    SuperRelationSet relations_;
    ModuleMode mode_;
    bool finite_ = true;
    int radius_ = 0;
    std::vector<Tableau> basis_;
    std::map<Tableau, int> index_;
};

// Generator actions. Preconditions: t is a member. Coefficients are exact;
// targets outside the basis are dropped (diagnostics optional); a vanishing
// denominator on a member target throws MemberPoleError.
SparseVector act_h(const ModuleSpace& mod, int k, const Tableau& t);
SparseVector act_e(const ModuleSpace& mod, int k, const Tableau& t, DropDiagnostics* diag = nullptr);
SparseVector act_f(const ModuleSpace& mod, int k, const Tableau& t, DropDiagnostics* diag = nullptr);
SparseVector act(const ModuleSpace& mod, const GenRef& g, const Tableau& t,
                 DropDiagnostics* diag = nullptr);

// Composite matrix units via the generator ladder: E_{ij} = [E_{i,j-1}, E_{j-1,j}]
// for i < j and E_{ij} = [E_{i,j+1}, E_{j+1,j}] for i > j, with super signs.
SparseVector act(const ModuleSpace& mod, const BasisElement& e, const Tableau& t,
                 DropDiagnostics* diag = nullptr);
SparseVector act(const ModuleSpace& mod, const BasisElement& e, const SparseVector& v,
                 DropDiagnostics* diag = nullptr);

// Matrix in the canonical basis (columns are act images). Finite modules only.
RationalMatrix operator_matrix(const ModuleSpace& mod, const BasisElement& e);
RationalMatrix operator_matrix(const ModuleSpace& mod, const GenRef& g);

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin eigenvalues

// Factored rational function prod (1 + t c_num) / prod (1 + t c_den).
struct GtEigenvalue {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;

    // Cancel common factors, drop zero roots, sort. Two factored forms are
    // equal as rational functions iff their reduced forms are equal.
    void reduce();
    bool equivalent(const GtEigenvalue& other) const;

    // Power series coefficients 0..order of the reduced function.
    std::vector<Rational> series(int order) const;
};

// Row-k eigenvalue: (1+t l_{k1})...(1+t l_{kk}) for k <= m, and the even/odd
// quotient for k > m.
GtEigenvalue gt_eigenvalue(const Tableau& t, int k);
std::vector<GtEigenvalue> gt_eigenvalue_tuple(const Tableau& t);

// Coefficient matrices (powers 0..order) of the quantum Berezinian evaluated
// on a finite module, by expanding the defining double sum with every inverse
// entry as a truncated geometric series of operator matrices.
std::vector<RationalMatrix> berezinian_truncated(const ModuleSpace& mod, int order);

// ---------------------------------------------------------------------------
// Normalization bookkeeping (the action formulas are already rescaled; these
// are provided for cross-reference against the unnormalized basis).

// The three-branch generalized factorial; throws on non-integer input.
Rational shifted_factorial(const Rational& a);
Rational normalization_factor_row(const Tableau& t, int k);
Rational normalization_factor(const Tableau& t);

}  // namespace glmn
