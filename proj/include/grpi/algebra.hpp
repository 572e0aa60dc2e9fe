#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpi/linalg.hpp"

namespace grpi {

using LabelId = std::size_t;

/// Finite dimensional algebra over Q given by structure constants, with every
/// basis vector homogeneous of some label. The label product table may be
/// partial (set gradings) or total (group gradings).
class GradedAlgebra {
public:
    struct Flags {
        bool associative = true;
        bool group_grading = false;
    };

    GradedAlgebra(std::vector<std::string> basis_names,
                  std::vector<std::string> labels,
                  std::vector<LabelId> degrees,
                  Flags flags);

    /// Build phase: c is the coefficient of basis k in the product e_i e_j.
    void set_product(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    void set_label_product(LabelId s, LabelId t, LabelId r);

    [[nodiscard]] std::size_t dim() const { return basis_names_.size(); }
    [[nodiscard]] const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }
    [[nodiscard]] std::size_t label_count() const { return labels_.size(); }
    [[nodiscard]] const std::string& label_name(LabelId t) const { return labels_[t]; }
    [[nodiscard]] std::optional<LabelId> find_label(const std::string& name) const;
    [[nodiscard]] LabelId degree(std::size_t i) const { return degrees_[i]; }
    [[nodiscard]] const Flags& flags() const { return flags_; }

    [[nodiscard]] const Vec& basis_product(std::size_t i, std::size_t j) const {
        return products_[i * dim() + j];
    }
    [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const;

    /// Basis indices of the homogeneous component of label t.
    [[nodiscard]] const std::vector<std::size_t>& component(LabelId t) const {
        return components_[t];
    }
    /// Labels whose component is nonzero, in label order.
    [[nodiscard]] const std::vector<LabelId>& supp() const { return supp_; }

    [[nodiscard]] std::optional<LabelId> label_product(LabelId s, LabelId t) const;

    /// True when every basis product of the two components vanishes.
    [[nodiscard]] bool component_product_zero(LabelId s, LabelId t) const;

    /// Diagonal projector onto the component of label t.
    [[nodiscard]] Matrix projector(LabelId t) const;

private:
    std::vector<std::string> basis_names_;
    std::vector<std::string> labels_;
    std::vector<LabelId> degrees_;
    Flags flags_;
    std::vector<Vec> products_;  // dim*dim columns
    std::vector<std::vector<std::size_t>> components_;
    std::vector<LabelId> supp_;
    std::vector<std::optional<LabelId>> label_products_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Grading audit: is each pairwise component product contained in a single
/// component, and does it match the label product when a group law is claimed.
struct GradingReport {
    bool valid = false;
    bool group_law_ok = false;  // meaningful only when a group grading is claimed
    struct Violation {
        std::size_t i, j;       // offending basis pair
        std::string message;
    };
    std::vector<Violation> violations;
    /// Induced partial product on labels: (s,t) present iff the component
    /// product is nonzero, mapped to the label that contains it.
    std::map<std::pair<LabelId, LabelId>, LabelId> star;
};
GradingReport verify_grading(const GradedAlgebra& a);

struct AssocReport {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0;  // witness triple when not associative
};
AssocReport verify_associative(const GradedAlgebra& a);

/// Subspace of Q^n in canonical form: the basis rows form a reduced row
/// echelon matrix, so equal subspaces compare equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
    [[nodiscard]] bool contains(const Vec& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// Smallest two-sided ideal containing the given vectors.
Subspace ideal_generated(const GradedAlgebra& a, const std::vector<Vec>& gens);

/// Elements x with x m = m x = 0 for every m in the subspace.
Subspace annihilator_lr(const GradedAlgebra& a, const Subspace& m);

/// Homogeneous parts of v, keyed by label, zero parts omitted.
std::map<LabelId, Vec> homogeneous_parts(const GradedAlgebra& a, const Vec& v);

/// True when the subspace contains the homogeneous parts of all its vectors.
bool is_graded_subspace(const GradedAlgebra& a, const Subspace& s);

/// Homogeneous basis (label, vector) of a graded subspace; nullopt otherwise.
std::optional<std::vector<std::pair<LabelId, Vec>>> graded_subspace_basis(const GradedAlgebra& a,
                                                                          const Subspace& s);

/// Two-sided unit, when the algebra has one.
std::optional<Vec> find_unit(const GradedAlgebra& a);

bool is_commutative(const GradedAlgebra& a);

/// Product span {u w : u in U basis, w in W basis} as a subspace.
Subspace product_span(const GradedAlgebra& a, const Subspace& u, const Subspace& w);

/// Smallest k >= 1 with S^k = 0, or nullopt when powers stabilize nonzero.
std::optional<std::size_t> nilpotency_index(const GradedAlgebra& a, const Subspace& s);

}
