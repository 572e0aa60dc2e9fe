#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grpi/algebra.hpp"

namespace grpi {

/// Labeled spanning list of linear operators on the algebra carrier. The list
/// may be linearly dependent; the slot at unit_index must hold the identity.
struct OperatorSpan {
    struct Op {
        std::string name;
        Matrix matrix;
    };
    std::vector<Op> ops;
    std::size_t unit_index = 0;

    [[nodiscard]] std::size_t size() const { return ops.size(); }
    [[nodiscard]] const Matrix& unit() const { return ops[unit_index].matrix; }
};

/// Validates that the named unit slot carries the identity matrix.
OperatorSpan make_span(std::vector<std::pair<std::string, Matrix>> ops,
                       const std::string& unit_name);

OperatorSpan identity_span(std::size_t dim);

/// Certificate that every operator h in the span acts by
///   h(a b) = sum_{u,v} x[u][v] (u a)(v b) + sum_{u,v} y[u][v] (u b)(v a)
/// with u, v drawn from the span itself.
struct GeneralizedActionWitness {
    struct Decomposition {
        Matrix x, y;  // coefficient grids indexed by (u, v)
    };
    std::vector<std::string> names;
    std::vector<Decomposition> decomps;
};

struct GeneralizedActionReport {
    bool ok = false;
    std::string offending;  // operator that admits no decomposition
    GeneralizedActionWitness witness;
};

GeneralizedActionReport verify_generalized_action(const GradedAlgebra& a, const OperatorSpan& h);

/// Homogeneous component projectors with the identity in front.
OperatorSpan projection_action(const GradedAlgebra& a);

/// Projector-composed span {p_t h}: identity adjoined first, then a greedy
/// linearly independent sublist in input order. Every operator of h must
/// preserve degrees.
OperatorSpan tensor_action(const GradedAlgebra& a, const OperatorSpan& h);

/// Left side: v invariant under the projector-composed span. Right side:
/// v graded and invariant under the original span. The two are equivalent.
struct InvarianceComparison {
    bool tensor_invariant = false;
    bool graded_and_invariant = false;
    [[nodiscard]] bool agree() const { return tensor_invariant == graded_and_invariant; }
};
InvarianceComparison invariant_subspaces_coincide(const GradedAlgebra& a, const OperatorSpan& h,
                                                  const Subspace& v);

}
