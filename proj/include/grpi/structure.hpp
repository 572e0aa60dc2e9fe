#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpi/algebra.hpp"

namespace grpi {

/// Largest nilpotent two-sided ideal, computed as the kernel of the trace form
/// of the left regular representation on the unitalization. Base field Q only;
/// the result is verified nilpotent before returning.
Subspace radical(const GradedAlgebra& a);

struct RadicalGradedReport {
    bool graded = false;
    std::vector<std::pair<LabelId, Vec>> homogeneous_basis;  // filled when graded
};
RadicalGradedReport check_radical_graded(const GradedAlgebra& a, const Subspace& j);

struct InvarianceReport {
    bool all_invariant = true;
    struct PerOp {
        std::string name;
        bool invariant = false;
    };
    std::vector<PerOp> operators;
};
InvarianceReport check_subspace_invariant(const Subspace& s,
                                          const std::vector<std::pair<std::string, Matrix>>& ops);

/// Quotient by a graded two-sided ideal. The carrier is the set of standard
/// coordinates complementary to the ideal's pivot columns, so basis vectors of
/// the quotient stay homogeneous.
struct QuotientAlgebra {
    AlgebraPtr algebra;
    Matrix projection;  // quotient-dim x original-dim
    Matrix section;     // original-dim x quotient-dim, projection * section = id
    std::vector<std::size_t> kept;  // original coordinate of each quotient basis vector

    /// Operator induced on the quotient; the caller must know the original
    /// operator preserves the ideal.
    [[nodiscard]] Matrix induce(const Matrix& op) const;
};
QuotientAlgebra quotient_by_graded_ideal(const GradedAlgebra& a, const Subspace& ideal);

struct WedderburnComponent {
    Subspace basis{0};
    std::vector<LabelId> labels_present;
    std::vector<std::size_t> members;  // fused minimal-ideal indices
    bool nonsplit = false;             // contains a factor whose center exceeds Q
};

struct WedderburnReport {
    std::vector<WedderburnComponent> components;
    std::vector<Subspace> minimal_ideals;
    bool nonsplit = false;
    unsigned retries = 0;
    std::string note;
};

/// Decomposes a semisimple algebra into the smallest graded ideals invariant
/// under the given operators. Grading projectors participate automatically.
/// Components whose center is a proper extension of Q stay fused and are
/// flagged rather than split.
WedderburnReport wedderburn_invariant(const GradedAlgebra& b,
                                      const std::vector<std::pair<std::string, Matrix>>& ops,
                                      unsigned seed = 0);

struct StructureReport {
    Subspace radical{0};
    RadicalGradedReport radical_graded;
    InvarianceReport radical_invariance;
    QuotientAlgebra quotient;
    std::vector<std::pair<std::string, Matrix>> induced_ops;
    WedderburnReport wedderburn;
};

/// Full pipeline: radical, gradedness, invariance under the named operators,
/// semisimple quotient, and its invariant decomposition. Every operator must
/// preserve the radical.
StructureReport analyze(const GradedAlgebra& a,
                        const std::vector<std::pair<std::string, Matrix>>& ops,
                        unsigned seed = 0);

}
