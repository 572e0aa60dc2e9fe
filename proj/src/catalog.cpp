#include "grpi/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

Rational rpow(const Rational& x, long e) {
    if (e < 0) return rpow(x.inv(), -e);
    Rational acc(1);
    for (long i = 0; i < e; ++i) acc *= x;
    return acc;
}

Matrix diag_matrix(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

GradedAlgebra::Flags assoc_group_flags() {
    GradedAlgebra::Flags f;
    f.associative = true;
    f.group_grading = true;
    return f;
}

void set_trivial_label(GradedAlgebra& a) { a.set_label_product(0, 0, 0); }

void set_mod2_labels(GradedAlgebra& a) {
    a.set_label_product(0, 0, 0);
    a.set_label_product(0, 1, 1);
    a.set_label_product(1, 0, 1);
    a.set_label_product(1, 1, 0);
}

/// Basis of matrix units e_{ij} (1-based pairs) inside n x n matrices.
struct UnitBasis {
    std::size_t n = 0;
    std::vector<std::pair<int, int>> units;
    std::map<std::pair<int, int>, std::size_t> index;

    void push(int i, int j) {
        index[{i, j}] = units.size();
        units.push_back({i, j});
    }
    [[nodiscard]] std::string name(std::size_t p) const {
        return "e" + std::to_string(units[p].first) + std::to_string(units[p].second);
    }
};

void fill_unit_products(GradedAlgebra& a, const UnitBasis& ub, std::size_t offset = 0) {
    for (std::size_t p = 0; p < ub.units.size(); ++p)
        for (std::size_t q = 0; q < ub.units.size(); ++q) {
            const auto [i, j] = ub.units[p];
            const auto [k, l] = ub.units[q];
            if (j != k) continue;
            auto it = ub.index.find({i, l});
            if (it == ub.index.end()) throw CheckError("unit basis not closed under products");
            a.set_product(offset + p, offset + q, offset + it->second, Rational(1));
        }
}

/// Conjugation x -> g x g^{-1} expressed on the unit basis.
Matrix conj_units(const UnitBasis& ub, const Matrix& g) {
    auto gi = g.inverse();
    if (!gi) throw InputError("conjugating matrix is singular");
    const std::size_t d = ub.units.size();
    Matrix out(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        const auto [i, j] = ub.units[c];
        // g e_ij g^{-1} = (column i of g) (row j of g^{-1})
        for (std::size_t k = 1; k <= ub.n; ++k)
            for (std::size_t l = 1; l <= ub.n; ++l) {
                Rational v = g.at(k - 1, i - 1) * gi->at(j - 1, l - 1);
                if (v.is_zero()) continue;
                auto it = ub.index.find({int(k), int(l)});
                if (it == ub.index.end()) throw CheckError("conjugation leaves the unit span");
                out.at(it->second, c) = v;
            }
    }
    return out;
}

UnitBasis full_units(std::size_t n) {
    UnitBasis ub;
    ub.n = n;
    for (int i = 1; i <= int(n); ++i)
        for (int j = 1; j <= int(n); ++j) ub.push(i, j);
    return ub;
}

UnitBasis upper_units(std::size_t n) {
    UnitBasis ub;
    ub.n = n;
    for (int i = 1; i <= int(n); ++i) ub.push(i, i);
    for (int gap = 1; gap < int(n); ++gap)
        for (int i = 1; i + gap <= int(n); ++i) ub.push(i, i + gap);
    return ub;
}

}  // namespace

AlgebraPtr build_upper_triangular(std::size_t n, bool mod2_graded) {
    const UnitBasis ub = upper_units(n);
    std::vector<std::string> names;
    std::vector<LabelId> degrees;
    for (std::size_t p = 0; p < ub.units.size(); ++p) {
        names.push_back(ub.name(p));
        degrees.push_back(mod2_graded && ub.units[p].first != ub.units[p].second ? 1 : 0);
    }
    std::vector<std::string> labels = mod2_graded ? std::vector<std::string>{"0", "1"}
                                                  : std::vector<std::string>{"e"};
    auto a = std::make_shared<GradedAlgebra>(names, labels, degrees, assoc_group_flags());
    if (mod2_graded)
        set_mod2_labels(*a);
    else
        set_trivial_label(*a);
    fill_unit_products(*a, ub);
    return a;
}

AlgebraPtr build_matrix_algebra(std::size_t n) {
    const UnitBasis ub = full_units(n);
    std::vector<std::string> names;
    for (std::size_t p = 0; p < ub.units.size(); ++p) names.push_back(ub.name(p));
    auto a = std::make_shared<GradedAlgebra>(names, std::vector<std::string>{"e"},
                                             std::vector<LabelId>(names.size(), 0),
                                             assoc_group_flags());
    set_trivial_label(*a);
    fill_unit_products(*a, ub);
    return a;
}

AlgebraPtr build_m11() {
    UnitBasis ub;
    ub.n = 2;
    ub.push(1, 1);
    ub.push(2, 2);
    ub.push(1, 2);
    ub.push(2, 1);
    std::vector<std::string> names;
    for (std::size_t p = 0; p < 4; ++p) names.push_back(ub.name(p));
    auto a = std::make_shared<GradedAlgebra>(names, std::vector<std::string>{"0", "1"},
                                             std::vector<LabelId>{0, 0, 1, 1},
                                             assoc_group_flags());
    set_mod2_labels(*a);
    fill_unit_products(*a, ub);
    return a;
}

AlgebraPtr build_grassmann(std::size_t m) {
    if (m < 1 || m > 4) throw InputError("generator count out of range");
    std::vector<unsigned> masks;
    for (unsigned s = 0; s < (1u << m); ++s) masks.push_back(s);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::map<unsigned, std::size_t> slot;
    std::vector<std::string> names;
    for (std::size_t p = 0; p < masks.size(); ++p) {
        slot[masks[p]] = p;
        std::string nm;
        for (unsigned b = 0; b < m; ++b)
            if (masks[p] >> b & 1u) nm += "e" + std::to_string(b + 1);
        names.push_back(nm.empty() ? "1" : nm);
    }
    auto a = std::make_shared<GradedAlgebra>(names, std::vector<std::string>{"e"},
                                             std::vector<LabelId>(names.size(), 0),
                                             assoc_group_flags());
    set_trivial_label(*a);
    for (std::size_t p = 0; p < masks.size(); ++p)
        for (std::size_t q = 0; q < masks.size(); ++q) {
            const unsigned s = masks[p], t = masks[q];
            if (s & t) continue;
            int inversions = 0;
            for (unsigned sb = 0; sb < m; ++sb)
                if (s >> sb & 1u)
                    for (unsigned tb = 0; tb < sb; ++tb)
                        if (t >> tb & 1u) ++inversions;
            a->set_product(p, q, slot[s | t], Rational(inversions % 2 == 0 ? 1 : -1));
        }
    return a;
}

AlgebraPtr build_a0() {
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"1", "u", "v", "w"},
                                             std::vector<std::string>{"e"},
                                             std::vector<LabelId>(4, 0), assoc_group_flags());
    set_trivial_label(*a);
    for (std::size_t k = 0; k < 4; ++k) {
        a->set_product(0, k, k, Rational(1));
        if (k > 0) a->set_product(k, 0, k, Rational(1));
    }
    a->set_product(1, 1, 3, Rational(1));
    a->set_product(1, 2, 3, Rational(1));
    a->set_product(2, 1, 3, Rational(-1));
    return a;
}

AlgebraPtr build_qq() {
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"u1", "u2"},
                                             std::vector<std::string>{"e"},
                                             std::vector<LabelId>(2, 0), assoc_group_flags());
    set_trivial_label(*a);
    a->set_product(0, 0, 0, Rational(1));
    a->set_product(1, 1, 1, Rational(1));
    return a;
}

AlgebraPtr build_qc2() {
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"g0", "g1"},
                                             std::vector<std::string>{"0", "1"},
                                             std::vector<LabelId>{0, 1}, assoc_group_flags());
    set_mod2_labels(*a);
    a->set_product(0, 0, 0, Rational(1));
    a->set_product(0, 1, 1, Rational(1));
    a->set_product(1, 0, 1, Rational(1));
    a->set_product(1, 1, 0, Rational(1));
    return a;
}

AlgebraPtr build_m2_plus_m3() {
    const UnitBasis u2 = full_units(2);
    const UnitBasis u3 = full_units(3);
    std::vector<std::string> names;
    for (std::size_t p = 0; p < u2.units.size(); ++p) names.push_back("a." + u2.name(p));
    for (std::size_t p = 0; p < u3.units.size(); ++p) names.push_back("b." + u3.name(p));
    auto a = std::make_shared<GradedAlgebra>(names, std::vector<std::string>{"e"},
                                             std::vector<LabelId>(names.size(), 0),
                                             assoc_group_flags());
    set_trivial_label(*a);
    fill_unit_products(*a, u2, 0);
    fill_unit_products(*a, u3, u2.units.size());
    return a;
}

namespace {

using Params = std::vector<Rational>;
using CoeffTable = FamilyDef::CoeffTable;

bool all_nonzero(const Params& p) {
    return std::none_of(p.begin(), p.end(), [](const Rational& r) { return r.is_zero(); });
}

CoeffTable uniform_table(const std::vector<std::pair<LabelId, LabelId>>& keys, Rational alpha,
                         Rational beta) {
    CoeffTable t;
    for (auto k : keys) t[k] = PairCoeffs{alpha, beta};
    return t;
}

const std::vector<std::pair<LabelId, LabelId>> kTrivialKey = {{0, 0}};
const std::vector<std::pair<LabelId, LabelId>> kMod2Keys = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

Matrix permutation_like(std::size_t dim, const std::vector<std::pair<std::size_t, Rational>>& cols) {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.at(cols[j].first, j) = cols[j].second;
    return m;
}

FamilyDef scalar_family(std::size_t dim) {
    FamilyDef f;
    f.name = "scalar";
    f.arity = 1;
    f.valid = all_nonzero;
    f.make = [dim](const Params& p) {
        Vec d(dim, p[0]);
        return diag_matrix(d);
    };
    f.expected = [](const Params& p) { return uniform_table(kTrivialKey, p[0].inv(), Rational(0)); };
    return f;
}

CatalogEntry make_ut2() {
    CatalogEntry e;
    e.name = "ut2";
    e.description = "upper triangular 2x2 matrices, trivial grading";
    e.algebra = build_upper_triangular(2, false);
    const UnitBasis ub = upper_units(2);

    FamilyDef conj;
    conj.name = "conj";
    conj.arity = 3;
    conj.valid = [](const Params& p) { return !p[0].is_zero() && !p[2].is_zero(); };
    conj.make = [ub](const Params& p) {
        Matrix g(2, 2);
        g.at(0, 0) = p[0];
        g.at(0, 1) = p[1];
        g.at(1, 1) = p[2];
        return conj_units(ub, g);
    };
    conj.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(conj);

    FamilyDef flip;
    flip.name = "flip";
    flip.arity = 0;
    flip.valid = [](const Params&) { return true; };
    flip.make = [](const Params&) {
        return permutation_like(3, {{1, Rational(1)}, {0, Rational(1)}, {2, Rational(1)}});
    };
    flip.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(0), Rational(1)); };
    e.families.push_back(flip);

    FamilyDef flip_scaled;
    flip_scaled.name = "flip_scaled";
    flip_scaled.arity = 1;
    flip_scaled.valid = all_nonzero;
    flip_scaled.make = [](const Params& p) {
        return permutation_like(3, {{1, p[0]}, {0, p[0]}, {2, p[0]}});
    };
    flip_scaled.expected = [](const Params& p) {
        return uniform_table(kTrivialKey, Rational(0), p[0].inv());
    };
    e.families.push_back(flip_scaled);

    e.families.push_back(scalar_family(3));

    ActionDef flip_action;
    flip_action.name = "flip";
    flip_action.generators = {{"f", flip.make({})}};
    flip_action.relations = {{"f", "f"}};
    e.actions.push_back(flip_action);

    e.expected.case_table[{0, 0}] = PairCase::FreeDiagonal;
    Vec rad(3, Rational(0));
    rad[2] = Rational(1);
    e.expected.radical_spanning = {rad};
    e.expected.wedderburn = {{"", 2}, {"flip", 1}};
    e.expected.plain_codims = {1, 2, 6, 18};
    return e;
}

CatalogEntry make_ut2_graded() {
    CatalogEntry e;
    e.name = "ut2_graded";
    e.description = "upper triangular 2x2 matrices, diagonal/off-diagonal Z2 grading";
    e.algebra = build_upper_triangular(2, true);

    FamilyDef scale;
    scale.name = "scale_offdiag";
    scale.arity = 1;
    scale.valid = all_nonzero;
    scale.make = [](const Params& p) { return diag_matrix({Rational(1), Rational(1), p[0]}); };
    scale.expected = [](const Params&) {
        CoeffTable t = uniform_table(kMod2Keys, Rational(1), Rational(0));
        t[{1, 1}] = PairCoeffs{Rational(0), Rational(0)};
        return t;
    };
    e.families.push_back(scale);

    FamilyDef swap;
    swap.name = "swap_offdiag";
    swap.arity = 1;
    swap.valid = all_nonzero;
    swap.make = [](const Params& p) {
        return permutation_like(3, {{1, Rational(1)}, {0, Rational(1)}, {2, p[0]}});
    };
    swap.expected = [](const Params&) {
        CoeffTable t;
        t[{0, 0}] = PairCoeffs{Rational(1), Rational(0)};
        t[{0, 1}] = PairCoeffs{Rational(0), Rational(1)};
        t[{1, 0}] = PairCoeffs{Rational(0), Rational(1)};
        t[{1, 1}] = PairCoeffs{Rational(0), Rational(0)};
        return t;
    };
    e.families.push_back(swap);

    e.spans.push_back({"flip_span", make_span({{"1", Matrix::identity(3)},
                                               {"s", swap.make({Rational(1)})}},
                                              "1")});

    ActionDef sign;
    sign.name = "sign";
    sign.generators = {{"s", scale.make({Rational(-1)})}};
    sign.relations = {{"s", "s"}};
    e.actions.push_back(sign);

    ActionDef swap_action;
    swap_action.name = "swap";
    swap_action.generators = {{"w", swap.make({Rational(1)})}};
    swap_action.relations = {{"w", "w"}};
    e.actions.push_back(swap_action);

    e.expected.case_table[{0, 0}] = PairCase::BoundDiagonal;
    e.expected.case_table[{0, 1}] = PairCase::FreePair;
    e.expected.case_table[{1, 1}] = PairCase::ZeroProducts;
    Vec rad(3, Rational(0));
    rad[2] = Rational(1);
    e.expected.radical_spanning = {rad};
    e.expected.wedderburn = {{"", 2}, {"sign", 2}, {"swap", 1}};
    return e;
}

CatalogEntry make_ut3() {
    CatalogEntry e;
    e.name = "ut3";
    e.description = "upper triangular 3x3 matrices, trivial grading";
    e.algebra = build_upper_triangular(3, false);
    const UnitBasis ub = upper_units(3);

    FamilyDef conj;
    conj.name = "conj";
    conj.arity = 6;
    conj.valid = [](const Params& p) {
        return !p[0].is_zero() && !p[1].is_zero() && !p[2].is_zero();
    };
    conj.make = [ub](const Params& p) {
        Matrix g(3, 3);
        g.at(0, 0) = p[0];
        g.at(1, 1) = p[1];
        g.at(2, 2) = p[2];
        g.at(0, 1) = p[3];
        g.at(1, 2) = p[4];
        g.at(0, 2) = p[5];
        return conj_units(ub, g);
    };
    conj.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(conj);

    FamilyDef flip;
    flip.name = "flip";
    flip.arity = 0;
    flip.valid = [](const Params&) { return true; };
    flip.make = [](const Params&) {
        return permutation_like(6, {{2, Rational(1)},
                                    {1, Rational(1)},
                                    {0, Rational(1)},
                                    {4, Rational(1)},
                                    {3, Rational(1)},
                                    {5, Rational(1)}});
    };
    flip.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(0), Rational(1)); };
    e.families.push_back(flip);

    e.families.push_back(scalar_family(6));

    ActionDef flip_action;
    flip_action.name = "flip";
    flip_action.generators = {{"f", flip.make({})}};
    flip_action.relations = {{"f", "f"}};
    e.actions.push_back(flip_action);

    e.expected.case_table[{0, 0}] = PairCase::FreeDiagonal;
    std::vector<Vec> rad;
    for (std::size_t i = 3; i < 6; ++i) {
        Vec v(6, Rational(0));
        v[i] = Rational(1);
        rad.push_back(v);
    }
    e.expected.radical_spanning = rad;
    e.expected.wedderburn = {{"", 3}, {"flip", 2}};
    return e;
}

CatalogEntry make_m2() {
    CatalogEntry e;
    e.name = "m2";
    e.description = "full 2x2 matrix algebra, trivial grading";
    e.algebra = build_matrix_algebra(2);
    const UnitBasis ub = full_units(2);

    FamilyDef conj;
    conj.name = "conj";
    conj.arity = 4;
    conj.valid = [](const Params& p) { return p[0] * p[3] != p[1] * p[2]; };
    conj.make = [ub](const Params& p) {
        Matrix g(2, 2);
        g.at(0, 0) = p[0];
        g.at(0, 1) = p[1];
        g.at(1, 0) = p[2];
        g.at(1, 1) = p[3];
        return conj_units(ub, g);
    };
    conj.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(conj);

    FamilyDef tscaled;
    tscaled.name = "transpose_scaled";
    tscaled.arity = 1;
    tscaled.valid = all_nonzero;
    tscaled.make = [](const Params& p) {
        return permutation_like(4, {{0, p[0]}, {2, p[0]}, {1, p[0]}, {3, p[0]}});
    };
    tscaled.expected = [](const Params& p) {
        return uniform_table(kTrivialKey, Rational(0), p[0].inv());
    };
    e.families.push_back(tscaled);

    e.families.push_back(scalar_family(4));

    e.spans.push_back({"transpose_span", make_span({{"1", Matrix::identity(4)},
                                                    {"t", tscaled.make({Rational(1)})}},
                                                   "1")});

    ActionDef t_action;
    t_action.name = "transpose";
    t_action.generators = {{"t", tscaled.make({Rational(1)})}};
    t_action.relations = {{"t", "t"}};
    e.actions.push_back(t_action);

    e.expected.case_table[{0, 0}] = PairCase::FreeDiagonal;
    e.expected.wedderburn = {{"", 1}, {"transpose", 1}};
    e.expected.plain_codims = {1, 2, 6};
    return e;
}

CatalogEntry make_m11() {
    CatalogEntry e;
    e.name = "m11";
    e.description = "2x2 matrices with the diagonal/antidiagonal Z2 grading";
    e.algebra = build_m11();

    FamilyDef scale;
    scale.name = "scale";
    scale.arity = 3;
    scale.valid = all_nonzero;
    scale.make = [](const Params& p) { return diag_matrix({p[0], p[0], p[1], p[2]}); };
    scale.expected = [](const Params& p) {
        CoeffTable t = uniform_table(kMod2Keys, p[0].inv(), Rational(0));
        t[{1, 1}] = PairCoeffs{p[0] / (p[1] * p[2]), Rational(0)};
        return t;
    };
    e.families.push_back(scale);

    const auto anti_table = [](Rational diag_beta) {
        CoeffTable t;
        t[{0, 0}] = PairCoeffs{Rational(1), Rational(0)};
        t[{0, 1}] = PairCoeffs{Rational(0), Rational(1)};
        t[{1, 0}] = PairCoeffs{Rational(0), Rational(1)};
        t[{1, 1}] = PairCoeffs{Rational(0), diag_beta};
        return t;
    };

    FamilyDef transpose;
    transpose.name = "transpose";
    transpose.arity = 0;
    transpose.valid = [](const Params&) { return true; };
    transpose.make = [](const Params&) {
        return permutation_like(4, {{0, Rational(1)}, {1, Rational(1)}, {3, Rational(1)}, {2, Rational(1)}});
    };
    transpose.expected = [anti_table](const Params&) { return anti_table(Rational(1)); };
    e.families.push_back(transpose);

    FamilyDef super;
    super.name = "superinvolution";
    super.arity = 0;
    super.valid = [](const Params&) { return true; };
    super.make = [](const Params&) {
        return permutation_like(4, {{1, Rational(1)}, {0, Rational(1)}, {2, Rational(1)}, {3, Rational(-1)}});
    };
    super.expected = [anti_table](const Params&) { return anti_table(Rational(-1)); };
    e.families.push_back(super);

    FamilyDef pseudo;
    pseudo.name = "pseudoinvolution";
    pseudo.arity = 0;
    pseudo.valid = [](const Params&) { return true; };
    pseudo.make = [](const Params&) {
        return permutation_like(4, {{0, Rational(1)}, {1, Rational(1)}, {3, Rational(1)}, {2, Rational(-1)}});
    };
    pseudo.expected = [anti_table](const Params&) { return anti_table(Rational(-1)); };
    e.families.push_back(pseudo);

    FamilyDef swap;
    swap.name = "swap_diag";
    swap.arity = 1;
    swap.valid = all_nonzero;
    swap.make = [](const Params& p) {
        return permutation_like(4, {{1, Rational(1)}, {0, Rational(1)}, {3, p[0].inv()}, {2, p[0]}});
    };
    swap.expected = [](const Params&) { return uniform_table(kMod2Keys, Rational(1), Rational(0)); };
    e.families.push_back(swap);

    // the sign rule of the superinvolution needs the parity operator in the span
    const Matrix par = diag_matrix({Rational(1), Rational(1), Rational(-1), Rational(-1)});
    e.spans.push_back({"sigma_span", make_span({{"1", Matrix::identity(4)},
                                                {"p", par},
                                                {"s", super.make({})},
                                                {"ps", par * super.make({})}},
                                               "1")});

    ActionDef s_action;
    s_action.name = "superinvolution";
    s_action.generators = {{"s", super.make({})}};
    s_action.relations = {{"s", "s"}};
    e.actions.push_back(s_action);

    ActionDef j_action;
    j_action.name = "pseudoinvolution";
    j_action.generators = {{"j", pseudo.make({})}};
    j_action.relations = {{"j", "j", "j", "j"}};
    e.actions.push_back(j_action);

    e.expected.case_table[{0, 0}] = PairCase::BoundDiagonal;
    e.expected.case_table[{0, 1}] = PairCase::FreePair;
    e.expected.case_table[{1, 1}] = PairCase::FreeDiagonal;
    e.expected.wedderburn = {{"", 1}, {"superinvolution", 1}, {"pseudoinvolution", 1}};
    e.expected.plain_codims = {1, 2, 6};
    return e;
}

CatalogEntry make_grassmann(std::size_t m) {
    CatalogEntry e;
    e.name = "grassmann" + std::to_string(m);
    e.description = "unital exterior algebra on " + std::to_string(m) +
                    " generators, trivial grading";
    e.algebra = build_grassmann(m);
    const std::size_t dim = e.algebra->dim();

    std::vector<int> grade(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string& nm = e.algebra->basis_name(i);
        grade[i] = int(std::count(nm.begin(), nm.end(), 'e'));
    }

    FamilyDef q;
    q.name = "q_scale";
    q.arity = 2;
    q.valid = [](const Params& p) {
        return p[0] + p[1] != Rational(0) && p[0] - p[1] != Rational(0);
    };
    q.make = [grade, dim](const Params& p) {
        const Rational ratio = (p[0] - p[1]) / (p[0] + p[1]);
        Vec d(dim);
        for (std::size_t i = 0; i < dim; ++i)
            d[i] = rpow(ratio, grade[i] / 2) * rpow(p[0] + p[1], grade[i] - 1);
        return diag_matrix(d);
    };
    if (m == 1)
        q.expected = [](const Params& p) {
            return uniform_table(kTrivialKey, p[0] + p[1], Rational(0));
        };
    else
        q.expected = [](const Params& p) { return uniform_table(kTrivialKey, p[0], p[1]); };
    e.families.push_back(q);

    FamilyDef parity;
    parity.name = "parity";
    parity.arity = 0;
    parity.valid = [](const Params&) { return true; };
    parity.make = [grade, dim](const Params&) {
        Vec d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = Rational(grade[i] % 2 == 0 ? 1 : -1);
        return diag_matrix(d);
    };
    parity.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(parity);

    e.spans.push_back({"parity_span", make_span({{"1", Matrix::identity(dim)},
                                                 {"p", parity.make({})}},
                                                "1")});

    ActionDef p_action;
    p_action.name = "parity";
    p_action.generators = {{"p", parity.make({})}};
    p_action.relations = {{"p", "p"}};
    e.actions.push_back(p_action);

    e.expected.case_table[{0, 0}] = m == 1 ? PairCase::BoundDiagonal : PairCase::FreeDiagonal;
    std::vector<Vec> rad;
    for (std::size_t i = 1; i < dim; ++i) {
        Vec v(dim, Rational(0));
        v[i] = Rational(1);
        rad.push_back(v);
    }
    e.expected.radical_spanning = rad;
    e.expected.wedderburn = {{"", 1}, {"parity", 1}};
    if (m == 1) e.expected.plain_codims = {1, 1, 1, 1};
    return e;
}

CatalogEntry make_a0() {
    CatalogEntry e;
    e.name = "a0";
    e.description = "4-dimensional unital algebra with 3-step nilpotent radical";
    e.algebra = build_a0();

    FamilyDef c;
    c.name = "c_family";
    c.arity = 6;  // c22, c32, c33, c42, c43, c44
    c.valid = [](const Params& p) {
        return !p[0].is_zero() && !p[2].is_zero() && !p[5].is_zero();
    };
    c.make = [](const Params& p) {
        Matrix m(4, 4);
        m.at(0, 0) = p[0] * p[0] / p[5];
        m.at(1, 1) = p[0];
        m.at(2, 1) = p[1];
        m.at(2, 2) = p[2];
        m.at(3, 1) = p[3];
        m.at(3, 2) = p[4];
        m.at(3, 3) = p[5];
        return m;
    };
    c.expected = [](const Params& p) {
        const Rational lead = p[5] / (Rational(2) * p[0] * p[0]);
        const Rational alpha = lead * (p[2] + p[0]) / p[2];
        const Rational beta = lead * (p[2] - p[0]) / p[2];
        return uniform_table(kTrivialKey, alpha, beta);
    };
    e.families.push_back(c);

    FamilyDef q;
    q.name = "q_embed";
    q.arity = 2;
    q.valid = [](const Params& p) {
        return p[0] + p[1] != Rational(0) && p[0] - p[1] != Rational(0);
    };
    q.make = [](const Params& p) {
        const Rational a = p[0], b = p[1];
        return diag_matrix({(a + b).inv(), a - b, a + b, (a * a - b * b) * (a - b)});
    };
    q.expected = [](const Params& p) { return uniform_table(kTrivialKey, p[0], p[1]); };
    e.families.push_back(q);

    ActionDef flip_u;
    flip_u.name = "flip_u";
    flip_u.generators = {{"s", q.make({Rational(0), Rational(1)})}};
    flip_u.relations = {{"s", "s"}};
    e.actions.push_back(flip_u);

    e.expected.case_table[{0, 0}] = PairCase::FreeDiagonal;
    std::vector<Vec> rad;
    for (std::size_t i = 1; i < 4; ++i) {
        Vec v(4, Rational(0));
        v[i] = Rational(1);
        rad.push_back(v);
    }
    e.expected.radical_spanning = rad;
    e.expected.wedderburn = {{"", 1}, {"flip_u", 1}};
    return e;
}

CatalogEntry make_qq_swap() {
    CatalogEntry e;
    e.name = "qq_swap";
    e.description = "Q x Q with the coordinate swap, trivial grading";
    e.algebra = build_qq();

    FamilyDef swap;
    swap.name = "swap";
    swap.arity = 0;
    swap.valid = [](const Params&) { return true; };
    swap.make = [](const Params&) {
        return permutation_like(2, {{1, Rational(1)}, {0, Rational(1)}});
    };
    swap.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(swap);

    e.families.push_back(scalar_family(2));

    ActionDef s_action;
    s_action.name = "swap";
    s_action.generators = {{"s", swap.make({})}};
    s_action.relations = {{"s", "s"}};
    e.actions.push_back(s_action);

    e.expected.case_table[{0, 0}] = PairCase::BoundDiagonal;
    e.expected.wedderburn = {{"", 2}, {"swap", 1}};
    e.expected.plain_codims = {1, 1, 1, 1};
    return e;
}

CatalogEntry make_qc2() {
    CatalogEntry e;
    e.name = "qc2";
    e.description = "group algebra of the order-2 group with its canonical Z2 grading";
    e.algebra = build_qc2();

    FamilyDef scale;
    scale.name = "scale_odd";
    scale.arity = 1;
    scale.valid = all_nonzero;
    scale.make = [](const Params& p) { return diag_matrix({Rational(1), p[0]}); };
    scale.expected = [](const Params& p) {
        CoeffTable t = uniform_table(kMod2Keys, Rational(1), Rational(0));
        t[{1, 1}] = PairCoeffs{(p[0] * p[0]).inv(), Rational(0)};
        return t;
    };
    e.families.push_back(scale);

    ActionDef sign;
    sign.name = "sign";
    sign.generators = {{"s", scale.make({Rational(-1)})}};
    sign.relations = {{"s", "s"}};
    e.actions.push_back(sign);

    e.expected.case_table[{0, 0}] = PairCase::BoundDiagonal;
    e.expected.case_table[{0, 1}] = PairCase::BoundPair;
    e.expected.case_table[{1, 1}] = PairCase::BoundDiagonal;
    e.expected.wedderburn = {{"", 1}, {"sign", 1}};
    e.expected.plain_codims = {1, 1, 1, 1};
    return e;
}

CatalogEntry make_m2_plus_m3() {
    CatalogEntry e;
    e.name = "m2_plus_m3";
    e.description = "direct sum of the 2x2 and 3x3 matrix algebras, trivial grading";
    e.algebra = build_m2_plus_m3();
    const UnitBasis u2 = full_units(2);

    FamilyDef conj2;
    conj2.name = "conj_first";
    conj2.arity = 4;
    conj2.valid = [](const Params& p) { return p[0] * p[3] != p[1] * p[2]; };
    conj2.make = [u2](const Params& p) {
        Matrix g(2, 2);
        g.at(0, 0) = p[0];
        g.at(0, 1) = p[1];
        g.at(1, 0) = p[2];
        g.at(1, 1) = p[3];
        const Matrix c2 = conj_units(u2, g);
        Matrix out = Matrix::identity(13);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) out.at(i, j) = c2.at(i, j);
        return out;
    };
    conj2.expected = [](const Params&) { return uniform_table(kTrivialKey, Rational(1), Rational(0)); };
    e.families.push_back(conj2);

    e.families.push_back(scalar_family(13));

    e.expected.case_table[{0, 0}] = PairCase::FreeDiagonal;
    e.expected.wedderburn = {{"", 2}};
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_ut2());
    entries.push_back(make_ut2_graded());
    entries.push_back(make_ut3());
    entries.push_back(make_m2());
    entries.push_back(make_m11());
    entries.push_back(make_m2_plus_m3());
    for (std::size_t m = 1; m <= 4; ++m) entries.push_back(make_grassmann(m));
    entries.push_back(make_a0());
    entries.push_back(make_qq_swap());
    entries.push_back(make_qc2());
    return entries;
}

}  // namespace

const FamilyDef& CatalogEntry::family(const std::string& fname) const {
    for (const auto& f : families)
        if (f.name == fname) return f;
    throw InputError("entry '" + name + "' has no family '" + fname + "'");
}

const OperatorSpan& CatalogEntry::span(const std::string& sname) const {
    for (const auto& s : spans)
        if (s.first == sname) return s.second;
    throw InputError("entry '" + name + "' has no span '" + sname + "'");
}

const ActionDef& CatalogEntry::action(const std::string& aname) const {
    for (const auto& a : actions)
        if (a.name == aname) return a;
    throw InputError("entry '" + name + "' has no action '" + aname + "'");
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw InputError("no catalog entry named '" + name + "'");
}

const std::vector<Rational>& parameter_grid() {
    static const std::vector<Rational> grid = {Rational(1),     Rational(-1), Rational(2),
                                               Rational(-2),    Rational(1, 2), Rational(-1, 2),
                                               Rational(3),     Rational(-1, 3)};
    return grid;
}

std::vector<std::vector<Rational>> sample_params(const FamilyDef& f, std::size_t count) {
    const auto& grid = parameter_grid();
    const std::uint64_t base = grid.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < f.arity; ++i) total *= base;

    std::vector<std::vector<Rational>> out;
    // odd multiplier, bijective modulo the power-of-two tuple count
    const std::uint64_t stride = 2654435761u;
    for (std::uint64_t j = 0; j < total && out.size() < count; ++j) {
        std::uint64_t idx = (j * stride) % total;
        std::vector<Rational> tuple;
        for (std::size_t i = 0; i < f.arity; ++i) {
            tuple.push_back(grid[idx % base]);
            idx /= base;
        }
        if (f.valid(tuple)) out.push_back(std::move(tuple));
    }
    if (out.size() < count && f.arity > 0)
        throw CheckError("family '" + f.name + "' has fewer valid tuples than requested");
    return out;
}

}
