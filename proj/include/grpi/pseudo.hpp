#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpi/algebra.hpp"

namespace grpi {

/// How a pair of support labels {s,t} constrains the twisted product rule.
/// The six kinds are mutually exclusive and exhaustive:
///  - ZeroProducts: both component products vanish.
///  - OneSided: exactly one of the two component products vanishes.
///  - BoundPair / BoundDiagonal: both products nonzero, and the component pair
///    satisfies an identity x y = -mu y x with mu != 0 (distinct labels / s = t).
///  - FreePair / FreeDiagonal: both products nonzero, no such identity.
enum class PairCase { ZeroProducts, OneSided, BoundPair, BoundDiagonal, FreePair, FreeDiagonal };

const char* pair_case_name(PairCase c);

struct PairClass {
    PairCase kind = PairCase::ZeroProducts;
    /// Canonical orientation: for OneSided, (s,t) is the side with nonzero
    /// product; otherwise s <= t.
    LabelId s = 0, t = 0;
    /// For Bound kinds, the ratio mu with x y + mu y x = 0 on the pair, taken
    /// in the (s,t) orientation and scaled to leading coefficient 1.
    std::optional<Rational> mu;
};

PairClass classify_pair(const GradedAlgebra& a, LabelId s, LabelId t);

struct PairCoeffs {
    Rational alpha, beta;
    bool operator==(const PairCoeffs&) const = default;
};

/// One component of the invariant attached to a certified map.
/// Payload layout by kind:
///   OneSided       data = [alpha(s,t)]                     (s,t) oriented
///   BoundPair      data = [alpha(s,t), alpha(t,s)]         s < t
///   BoundDiagonal  data = [alpha(s,s)]
///   FreePair       data = [alpha(s,t), beta(t,s), beta(s,t), alpha(t,s)]  (2x2 row major)
///   FreeDiagonal   data = [alpha(s,s), beta(s,s)]
struct TauComponent {
    PairCase kind;
    LabelId s, t;
    std::vector<Rational> data;
    bool operator==(const TauComponent&) const = default;
};

/// A certified degree-preserving bijection phi with, for every ordered support
/// pair (s,t), coefficients (alpha, beta) satisfying
///   phi(a b) = alpha phi(a) phi(b) + beta phi(b) phi(a)
/// for all a in the s component and b in the t component. Coefficients are
/// stored in canonical form: whenever the solution set is affine of positive
/// dimension, the representative with beta = 0 (or alpha = 0 where beta is the
/// determined one) is chosen.
struct PseudoAutoCertificate {
    AlgebraPtr algebra;
    Matrix phi;
    std::map<std::pair<LabelId, LabelId>, PairCoeffs> coeffs;        // ordered supp pairs
    std::map<std::pair<LabelId, LabelId>, PairClass> cases;          // key (min,max)
    std::map<std::pair<LabelId, LabelId>, std::vector<Vec>> slack;   // per-pair solution kernel
    std::vector<TauComponent> tau;

    [[nodiscard]] const PairCoeffs& at(LabelId s, LabelId t) const { return coeffs.at({s, t}); }
    [[nodiscard]] const PairClass& pair_class(LabelId s, LabelId t) const;
};

struct Refusal {
    std::string reason;
    std::string witness;
};

struct CertifyResult {
    std::optional<PseudoAutoCertificate> cert;
    Refusal refusal;
    [[nodiscard]] bool ok() const { return cert.has_value(); }
};

CertifyResult certify(AlgebraPtr a, const Matrix& phi);

/// Certificate of f after g (g applied first). Cross-checks the composed
/// coefficients against the closed composition law before returning.
CertifyResult compose(const PseudoAutoCertificate& f, const PseudoAutoCertificate& g);

/// Certificate of the inverse map, cross-checked against the closed inversion
/// formulas for every pair kind.
CertifyResult invert(const PseudoAutoCertificate& f);

/// Componentwise product of two invariants under the fixed convention
/// tau(compose(f,g)) = tau(f) tau(g).
std::vector<TauComponent> tau_multiply(const std::vector<TauComponent>& f,
                                       const std::vector<TauComponent>& g);

/// The six-term degree-three consequence of the twisted product rule on labels
/// (g,h,t) of a group grading. Coefficient order follows the word order
/// xyz, xzy, yxz, yzx, zxy, zyx.
struct ForcedIdentityReport {
    bool holds = false;
    std::vector<Rational> word_coeffs;               // size 6
    std::optional<std::array<std::size_t, 3>> witness;  // basis triple when violated
};
ForcedIdentityReport forced_identity(const PseudoAutoCertificate& c, LabelId g, LabelId h,
                                     LabelId t);

/// For a unital noncommutative algebra with trivial grading, the unit must map
/// to unit / (alpha + beta).
struct UnitImageReport {
    bool applicable = false;
    std::string skip_reason;   // set when not applicable
    bool ok = false;
    Vec expected, actual;      // filled when applicable
};
UnitImageReport unit_image_check(const PseudoAutoCertificate& c);

struct GradedGroupAction {
    AlgebraPtr algebra;
    std::vector<std::pair<std::string, PseudoAutoCertificate>> generators;
};

struct ActionResult {
    std::optional<GradedGroupAction> action;
    Refusal refusal;
    [[nodiscard]] bool ok() const { return action.has_value(); }
};

/// Certifies every generator and verifies the relation words (each word, read
/// left to right, multiplies to the identity map).
ActionResult certify_action(AlgebraPtr a,
                            const std::vector<std::pair<std::string, Matrix>>& generators,
                            const std::vector<std::vector<std::string>>& relations);

/// For group gradings: beta(s,t) must vanish whenever the reversed component
/// product is nonzero and the two labels do not commute in the label group.
bool noncommuting_pairs_beta_vanishes(const PseudoAutoCertificate& c);

}
