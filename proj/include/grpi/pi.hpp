#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpi/algebra.hpp"
#include "grpi/haction.hpp"

namespace grpi {

/// Degree wildcard: the variable ranges over the whole algebra, not a single
/// homogeneous component. Used by the plain (grading-blind) mode.
inline constexpr LabelId any_degree = std::numeric_limits<LabelId>::max();

/// Binary multiplication tree over n ordered slots. steps run bottom-up; an
/// operand below `leaves` is a slot, otherwise it is `leaves + step index`.
struct Shape {
    std::size_t leaves = 0;
    std::vector<std::pair<std::size_t, std::size_t>> steps;

    bool operator==(const Shape&) const = default;
};

/// All bracketings of n slots (the (n-1)-th Catalan number of them), in a fixed
/// order. Index 0 multiplies left to right, the shape associative mode uses.
const std::vector<Shape>& shapes(std::size_t n);

/// One multilinear word: each of the variables 0..n-1 appears exactly once, at
/// position p the variable order[p], carrying a per-variable degree constraint
/// and a per-variable decoration drawn from an operator span.
struct Monomial {
    std::size_t n = 0;
    std::vector<std::size_t> order;        // position -> variable, a bijection
    std::vector<LabelId> degrees;          // per variable; any_degree = unconstrained
    std::vector<std::size_t> decorations;  // per variable, an index into the span
    std::size_t shape = 0;                 // index into shapes(n)

    bool operator==(const Monomial&) const = default;
};

/// Display form, e.g. "(x1^{(1)}.s x2^{(0)}) x3^{(1)}". Degree suffixes and
/// decoration names are dropped when trivial.
std::string format_monomial(const Monomial& m, const OperatorSpan& h,
                            const std::vector<std::string>& label_names);

/// Throws InputError when the monomial is internally inconsistent or does not
/// fit the given algebra and span.
void validate_monomial(const GradedAlgebra& a, const OperatorSpan& h, const Monomial& m);

/// Variable substitution x_v -> x_{perm[v]}; the word, degrees and decorations
/// follow the variables.
Monomial relabel_variables(const Monomial& m, const std::vector<std::size_t>& perm);

/// Deterministic stream over (order, degrees, decorations, shape), the last
/// coordinate fastest. Associative mode emits only shape 0.
std::vector<Monomial> enumerate_monomials(std::size_t n, const std::vector<LabelId>& degree_choices,
                                          std::size_t span_size, bool associative);

/// Applies each variable's decoration to its assigned value, then multiplies
/// along the bracketing. Assigned values must match the degree constraints.
Vec evaluate_monomial(const GradedAlgebra& a, const OperatorSpan& h, const Monomial& m,
                      const std::vector<Vec>& assignment);

struct IdentityWitness {
    std::vector<LabelId> tuple;            // degree constraints of the failing part
    std::vector<std::size_t> assignment;   // basis index substituted per variable
    Vec value;                             // the nonzero evaluation
};

struct IdentityReport {
    bool identity = true;
    std::optional<IdentityWitness> witness;
};

/// Whether the linear combination vanishes under every basis substitution.
/// Parts with different degree tuples are checked independently; see the lemma
/// at `codimension`.
IdentityReport is_identity(const GradedAlgebra& a, const OperatorSpan& h,
                           const std::vector<std::pair<Rational, Monomial>>& f);

struct BlockStat {
    std::vector<LabelId> tuple;  // empty in plain mode
    std::size_t rows = 0;        // monomials
    std::size_t cols = 0;        // substitutions x output coordinates
    std::size_t rank = 0;
};

struct CodimResult {
    std::size_t n = 0;
    bool graded = false;
    bool decorated = false;    // span larger than {id}
    bool associative = true;
    std::vector<BlockStat> blocks;
    std::size_t c_n = 0;
};

/// Hard cap on rows*cols of any single evaluation matrix. Exceeding it raises
/// BudgetError before any heavy work; results are never truncated silently.
inline constexpr std::size_t evaluation_budget = 5'000'000;

/// n-th codimension: the dimension of the span of multilinear words modulo the
/// ones vanishing identically, computed as an exact rank per degree block.
///
/// Lemma (block decomposition). Variables with different degree constraints
/// are different free symbols, so a multilinear element f splits as a sum of
/// parts f_t, one per degree tuple t, over disjoint variable sets. For a fixed
/// t, substituting zero for every variable outside t's constraints kills all
/// other parts, so f vanishes identically iff each f_t does. Hence identities
/// split blockwise and the codimension is the sum of per-block ranks.
///
/// graded = false ignores the grading: a single block whose variables range
/// over the full basis. Blocks are independent and may be ranked in parallel;
/// `threads` > 1 only changes timing, never the result.
CodimResult codimension(const GradedAlgebra& a, const OperatorSpan& h, std::size_t n, bool graded,
                        bool associative = true, std::size_t threads = 1,
                        std::size_t budget = evaluation_budget);

struct CodimEqualityReport {
    CodimResult graded_side;  // graded mode with the span itself
    CodimResult tensor_side;  // plain mode with the projector-composed span
    bool equal = false;
};

/// The graded codimension with span H equals the plain codimension with the
/// span of all projector-composed operators. Both sides are computed
/// independently; disagreement is a CheckError.
CodimEqualityReport codim_equality_check(const GradedAlgebra& a, const OperatorSpan& h,
                                         std::size_t n);

/// Working model of the span of words modulo identities: per block, the pivot
/// monomials form a basis and any word's class has coordinates over them.
struct QuotientModel {
    struct Block {
        std::vector<LabelId> tuple;
        std::vector<Monomial> monomials;     // full enumeration, row order
        std::vector<std::size_t> pivots;     // indices into monomials, basis order
        RowBasis row_space;                  // built from the pivot rows
    };

    AlgebraPtr algebra;
    OperatorSpan span;
    std::size_t n = 0;
    bool graded = false;
    bool associative = true;
    std::vector<Block> blocks;

    /// Evaluation row of an arbitrary monomial over this block's columns.
    [[nodiscard]] Vec evaluation_row(const Block& b, const Monomial& m) const;

    /// Coordinates of the monomial's class over the block's pivot basis.
    [[nodiscard]] Vec coordinates(const Block& b, const Monomial& m) const;

    [[nodiscard]] std::size_t dimension() const;  // sum of block ranks
};

QuotientModel quotient_model(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                             bool associative = true, std::size_t budget = evaluation_budget);

}
