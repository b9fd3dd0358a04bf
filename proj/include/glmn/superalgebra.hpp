#pragma once

#include "glmn/linalg.hpp"
#include "glmn/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glmn {

// Block sizes of gl(m|n). Indices run 1..m+n; 1..m is the even range.
struct Shape {
    int m = 1;
    int n = 1;

    int total() const { return m + n; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

// 0 for indices in the even block, 1 in the odd block.
int parity(const Shape& shape, int index);

// Matrix unit E_{ij}, 1-based.
struct BasisElement {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

int parity(const Shape& shape, const BasisElement& e);

// Sparse linear combination of matrix units, keyed by (i, j).
using GlCombination = std::map<std::pair<int, int>, Rational>;

// Super commutator of two matrix units as structure constants.
GlCombination bracket(const Shape& shape, const BasisElement& a, const BasisElement& b);

// ---------------------------------------------------------------------------
// Weights

struct Weight {
    std::vector<Rational> entries;  // size m+n
};

struct LVector {
    std::vector<Rational> entries;  // size m+n
};

// l_i = lambda_i - i + 1 on the even range, l_j = -lambda_j + j - 2m on the odd
// range. The two maps are mutually inverse affine bijections.
LVector weight_to_l(const Shape& shape, const Weight& w);
Weight l_to_weight(const Shape& shape, const LVector& l);

bool is_dominant(const Shape& shape, const Weight& w);

// l_i != l_j for every even i, odd j.
bool is_typical(const Shape& shape, const Weight& w);

// No even l-value lies in the integer-step interval from l_{m+1} to l_{m+n}.
// When l_{m+n} - l_{m+1} is not a nonnegative integer the interval is empty
// (this only happens for non-dominant input).
bool is_essentially_typical(const Shape& shape, const Weight& w);

// ---------------------------------------------------------------------------
// Generator presentation

struct GenRef {
    enum class Kind { H, E, F };
    Kind kind = Kind::H;
    int index = 1;

    friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

int parity(const Shape& shape, const GenRef& g);
BasisElement to_basis_element(const GenRef& g);
std::string to_string(const GenRef& g);  // "h1", "e2", "f3"
std::optional<GenRef> parse_gen(std::string_view s);

// Immutable nested-bracket word over the generators. Relations are kept as
// trees and expanded recursively against a concrete realization; there is no
// normal-form rewriting.
class BracketExpr {
public:
    static BracketExpr leaf(GenRef g);
    static BracketExpr bracket(BracketExpr left, BracketExpr right);

    bool is_leaf() const { return node_->gen.has_value(); }
    const GenRef& gen() const { return *node_->gen; }
    const BracketExpr& left() const { return *node_->left; }
    const BracketExpr& right() const { return *node_->right; }

    int parity(const Shape& shape) const;
    std::string to_string() const;

private:
    struct Node {
        std::optional<GenRef> gen;
        std::shared_ptr<const BracketExpr> left, right;
    };
    explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// A kernel element of the presentation: sum of scalar-weighted bracket words
// that must act as zero in every realization.
struct RelationExpr {
    std::string name;
    std::vector<std::pair<Rational, BracketExpr>> terms;
};

// Every instance of the ten defining relation families for the given shape.
std::vector<RelationExpr> presentation_relations(const Shape& shape);

// ---------------------------------------------------------------------------
// Matrix realizations

// Matrix unit in the defining (m+n)-dimensional representation.
RationalMatrix defining_matrix(const Shape& shape, const BasisElement& e);
RationalMatrix defining_matrix(const Shape& shape, const GenRef& g);

// Recursive evaluation of a bracket word, tracking parity so the super sign
// is applied at every level. `realize` must map generators to square
// matrices of size `dim`.
RationalMatrix evaluate_in_matrices(const Shape& shape, const BracketExpr& expr,
                                    const std::function<RationalMatrix(const GenRef&)>& realize,
                                    Eigen::Index dim);
RationalMatrix evaluate_in_matrices(const Shape& shape, const RelationExpr& rel,
                                    const std::function<RationalMatrix(const GenRef&)>& realize,
                                    Eigen::Index dim);

}  // namespace glmn
