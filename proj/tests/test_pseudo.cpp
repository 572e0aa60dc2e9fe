#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grpi/catalog.hpp>
#include <grpi/errors.hpp>
#include <grpi/pseudo.hpp>

using namespace grpi;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

GradedAlgebra::Flags mod2_flags() {
    GradedAlgebra::Flags f;
    f.associative = true;
    f.group_grading = true;
    return f;
}

void mod2_labels(GradedAlgebra& a) {
    a.set_label_product(0, 0, 0);
    a.set_label_product(0, 1, 1);
    a.set_label_product(1, 0, 1);
    a.set_label_product(1, 1, 0);
}

// x idempotent of degree 0, y of degree 1 with xy = y but yx = 0
AlgebraPtr one_sided_algebra() {
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"x", "y"},
                                             std::vector<std::string>{"0", "1"},
                                             std::vector<LabelId>{0, 1}, mod2_flags());
    mod2_labels(*a);
    a->set_product(0, 0, 0, q(1));
    a->set_product(0, 1, 1, q(1));
    return a;
}

// ab = c = -ba, everything else zero; trivial grading
AlgebraPtr anticommutative_algebra() {
    GradedAlgebra::Flags f;
    f.associative = true;
    f.group_grading = true;
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"a", "b", "c"},
                                             std::vector<std::string>{"e"},
                                             std::vector<LabelId>(3, 0), f);
    a->set_label_product(0, 0, 0);
    a->set_product(0, 1, 2, q(1));
    a->set_product(1, 0, 2, q(-1));
    return a;
}

PseudoAutoCertificate must_certify(AlgebraPtr a, const Matrix& phi) {
    auto res = certify(std::move(a), phi);
    REQUIRE_MESSAGE(res.ok(), res.refusal.reason, " ", res.refusal.witness);
    return *res.cert;
}

Matrix family_matrix(const CatalogEntry& e, const std::string& fam,
                     const std::vector<Rational>& params) {
    return e.family(fam).make(params);
}

}  // namespace

TEST_CASE("pair classification covers all six kinds") {
    const auto& ut2g = catalog_entry("ut2_graded");
    CHECK(classify_pair(*ut2g.algebra, 1, 1).kind == PairCase::ZeroProducts);
    CHECK(classify_pair(*ut2g.algebra, 0, 1).kind == PairCase::FreePair);
    CHECK(classify_pair(*ut2g.algebra, 1, 0).kind == PairCase::FreePair);

    auto ones = one_sided_algebra();
    auto cls = classify_pair(*ones, 0, 1);
    CHECK(cls.kind == PairCase::OneSided);
    CHECK(cls.s == 0);  // nonzero side first
    CHECK(cls.t == 1);
    CHECK(classify_pair(*ones, 1, 0).s == 0);  // orientation independent of argument order

    const auto& qc2 = catalog_entry("qc2");
    auto bp = classify_pair(*qc2.algebra, 0, 1);
    CHECK(bp.kind == PairCase::BoundPair);
    REQUIRE(bp.mu.has_value());
    CHECK(*bp.mu == q(-1));  // commuting components

    auto bd = classify_pair(*catalog_entry("qq_swap").algebra, 0, 0);
    CHECK(bd.kind == PairCase::BoundDiagonal);
    CHECK(*bd.mu == q(-1));

    auto anti = classify_pair(*anticommutative_algebra(), 0, 0);
    CHECK(anti.kind == PairCase::BoundDiagonal);
    CHECK(*anti.mu == q(1));  // xy + yx = 0

    CHECK(classify_pair(*catalog_entry("m2").algebra, 0, 0).kind == PairCase::FreeDiagonal);
    CHECK(classify_pair(*catalog_entry("a0").algebra, 0, 0).kind == PairCase::FreeDiagonal);
    CHECK(classify_pair(*catalog_entry("m11").algebra, 1, 1).kind == PairCase::FreeDiagonal);
    CHECK(classify_pair(*catalog_entry("m11").algebra, 0, 1).kind == PairCase::FreePair);
}

TEST_CASE("off-diagonal scaling on graded upper triangular matrices") {
    const auto& e = catalog_entry("ut2_graded");
    for (Rational alpha : {q(2), q(-1), q(1, 2), q(-1, 3)}) {
        auto cert = must_certify(e.algebra, family_matrix(e, "scale_offdiag", {alpha}));
        CHECK(cert.at(0, 0) == PairCoeffs{q(1), q(0)});
        CHECK(cert.at(0, 1) == PairCoeffs{q(1), q(0)});
        CHECK(cert.at(1, 0) == PairCoeffs{q(1), q(0)});
        CHECK(cert.at(1, 1) == PairCoeffs{q(0), q(0)});

        CHECK(cert.pair_class(0, 0).kind == PairCase::BoundDiagonal);
        CHECK(cert.pair_class(0, 1).kind == PairCase::FreePair);
        CHECK(cert.pair_class(1, 1).kind == PairCase::ZeroProducts);

        // slack dimensions by kind: free 0, bound 1, zero 2
        CHECK(cert.slack.at({0, 0}).size() == 1);
        CHECK(cert.slack.at({0, 1}).empty());
        CHECK(cert.slack.at({1, 0}).empty());
        CHECK(cert.slack.at({1, 1}).size() == 2);

        // tau skips the zero-product pair and stores the 2x2 block
        REQUIRE(cert.tau.size() == 2);
        CHECK(cert.tau[0].kind == PairCase::BoundDiagonal);
        CHECK(cert.tau[0].data == std::vector<Rational>{q(1)});
        CHECK(cert.tau[1].kind == PairCase::FreePair);
        CHECK(cert.tau[1].data == std::vector<Rational>{q(1), q(0), q(0), q(1)});
    }
}

TEST_CASE("one sided pair forces the coefficient on the nonzero side only") {
    auto a = one_sided_algebra();
    Matrix phi(2, 2);
    phi.at(0, 0) = q(1);
    phi.at(1, 1) = q(5);
    auto cert = must_certify(a, phi);
    CHECK(cert.at(0, 1) == PairCoeffs{q(1), q(0)});  // alpha forced, beta normalized away
    CHECK(cert.at(1, 0) == PairCoeffs{q(0), q(0)});  // beta forced to zero, alpha normalized
    CHECK(cert.at(0, 0) == PairCoeffs{q(1), q(0)});
    CHECK(cert.at(1, 1) == PairCoeffs{q(0), q(0)});
    CHECK(cert.slack.at({0, 1}).size() == 1);
    CHECK(cert.slack.at({1, 0}).size() == 1);
    REQUIRE(cert.tau.size() == 2);
    CHECK(cert.tau[1].kind == PairCase::OneSided);
    CHECK(cert.tau[1].data == std::vector<Rational>{q(1)});
}

TEST_CASE("matrix algebra maps certify with the predicted coefficients") {
    const auto& m11 = catalog_entry("m11");

    auto scale = must_certify(m11.algebra, family_matrix(m11, "scale", {q(2), q(3), q(-1, 2)}));
    CHECK(scale.at(0, 0) == PairCoeffs{q(1, 2), q(0)});
    CHECK(scale.at(0, 1) == PairCoeffs{q(1, 2), q(0)});
    CHECK(scale.at(1, 0) == PairCoeffs{q(1, 2), q(0)});
    CHECK(scale.at(1, 1) == PairCoeffs{q(2) / (q(3) * q(-1, 2)), q(0)});

    auto transpose = must_certify(m11.algebra, family_matrix(m11, "transpose", {}));
    CHECK(transpose.at(0, 0) == PairCoeffs{q(1), q(0)});
    CHECK(transpose.at(0, 1) == PairCoeffs{q(0), q(1)});
    CHECK(transpose.at(1, 0) == PairCoeffs{q(0), q(1)});
    CHECK(transpose.at(1, 1) == PairCoeffs{q(0), q(1)});

    auto super = must_certify(m11.algebra, family_matrix(m11, "superinvolution", {}));
    CHECK(super.at(0, 1) == PairCoeffs{q(0), q(1)});
    CHECK(super.at(1, 1) == PairCoeffs{q(0), q(-1)});

    auto pseudo = must_certify(m11.algebra, family_matrix(m11, "pseudoinvolution", {}));
    CHECK(pseudo.at(0, 1) == PairCoeffs{q(0), q(1)});
    CHECK(pseudo.at(1, 1) == PairCoeffs{q(0), q(-1)});

    // whenever the even part is fixed pointwise, alpha(0,1) + beta(0,1) = 1;
    // in general the sum is the reciprocal of the even scale
    auto unit_scale = must_certify(m11.algebra, family_matrix(m11, "scale", {q(1), q(3), q(7)}));
    for (const auto* c : {&unit_scale, &transpose, &super, &pseudo})
        CHECK(c->at(0, 1).alpha + c->at(0, 1).beta == q(1));
    CHECK(scale.at(0, 1).alpha + scale.at(0, 1).beta == q(1, 2));
    for (const auto* c : {&scale, &unit_scale, &transpose, &super, &pseudo})
        for (const auto& [key, pc] : c->coeffs) CHECK((pc.alpha * pc.beta).is_zero());
}

TEST_CASE("exterior algebra family certifies with its defining parameters") {
    const auto& e = catalog_entry("grassmann3");
    auto cert = must_certify(e.algebra, family_matrix(e, "q_scale", {q(2), q(1)}));
    CHECK(cert.at(0, 0) == PairCoeffs{q(2), q(1)});
    REQUIRE(cert.tau.size() == 1);
    CHECK(cert.tau[0].kind == PairCase::FreeDiagonal);
    CHECK(cert.tau[0].data == std::vector<Rational>{q(2), q(1)});

    auto anti = must_certify(e.algebra, family_matrix(e, "q_scale", {q(0), q(1)}));
    CHECK(anti.at(0, 0) == PairCoeffs{q(0), q(1)});
}

TEST_CASE("nilpotent radical family matches its closed coefficient formulas") {
    const auto& e = catalog_entry("a0");
    const std::vector<Rational> p = {q(2), q(5), q(-1, 2), q(7), q(0), q(3)};
    auto cert = must_certify(e.algebra, family_matrix(e, "c_family", p));
    const Rational lead = p[5] / (q(2) * p[0] * p[0]);  // c44 / (2 c22^2)
    CHECK(cert.at(0, 0).alpha == lead * (p[2] + p[0]) / p[2]);
    CHECK(cert.at(0, 0).beta == lead * (p[2] - p[0]) / p[2]);
}

TEST_CASE("certification refuses bad candidates with a stated reason") {
    const auto& m2 = catalog_entry("m2");

    auto singular = certify(m2.algebra, Matrix(4, 4));
    CHECK_FALSE(singular.ok());
    CHECK(singular.refusal.reason.find("invertible") != std::string::npos);

    const auto& m11 = catalog_entry("m11");
    Matrix mix = Matrix::identity(4);
    mix.at(0, 0) = q(0);
    mix.at(2, 0) = q(1);  // e11 -> e12 crosses components
    mix.at(0, 2) = q(1);
    mix.at(2, 2) = q(0);
    auto degree = certify(m11.algebra, mix);
    CHECK_FALSE(degree.ok());
    CHECK(degree.refusal.reason.find("degree") != std::string::npos);
    CHECK_FALSE(degree.refusal.witness.empty());

    Matrix skew = Matrix::identity(4);
    skew.at(3, 3) = q(2);  // scales e22 only; no (alpha, beta) fits both diagonal idempotents
    auto infeasible = certify(m2.algebra, skew);
    CHECK_FALSE(infeasible.ok());
    CHECK(infeasible.refusal.reason.find("no coefficient") != std::string::npos);
}

TEST_CASE("composition certifies and multiplies the invariants") {
    const auto& g3 = catalog_entry("grassmann3");
    const auto& fam = g3.family("q_scale");
    const auto tuples = sample_params(fam, 6);
    for (std::size_t i = 0; i + 1 < tuples.size(); ++i) {
        auto f = must_certify(g3.algebra, fam.make(tuples[i]));
        auto g = must_certify(g3.algebra, fam.make(tuples[i + 1]));
        auto fg = compose(f, g);
        REQUIRE(fg.ok());
        CHECK(fg.cert->tau == tau_multiply(f.tau, g.tau));
        CHECK(tau_multiply(f.tau, g.tau) == tau_multiply(g.tau, f.tau));

        // explicit product law in Q: (a1,b1)(a2,b2) = (a1 a2 + b1 b2, a1 b2 + b1 a2)
        const Rational a1 = f.at(0, 0).alpha, b1 = f.at(0, 0).beta;
        const Rational a2 = g.at(0, 0).alpha, b2 = g.at(0, 0).beta;
        CHECK(fg.cert->at(0, 0).alpha == a1 * a2 + b1 * b2);
        CHECK(fg.cert->at(0, 0).beta == a1 * b2 + b1 * a2);
    }

    const auto& m2 = catalog_entry("m2");
    auto conj = must_certify(m2.algebra, family_matrix(m2, "conj", {q(1), q(2), q(0), q(-1)}));
    auto tsc = must_certify(m2.algebra, family_matrix(m2, "transpose_scaled", {q(3)}));
    auto both = compose(conj, tsc);
    REQUIRE(both.ok());
    CHECK(both.cert->at(0, 0) == PairCoeffs{q(0), q(1, 3)});
    CHECK(both.cert->tau == tau_multiply(conj.tau, tsc.tau));
}

TEST_CASE("semidirect shape of graded matrix maps under composition") {
    const auto& m11 = catalog_entry("m11");
    const auto S = [&](Rational l, Rational m, Rational n) {
        return must_certify(m11.algebra, family_matrix(m11, "scale", {l, m, n}));
    };
    auto T = must_certify(m11.algebra, family_matrix(m11, "transpose", {}));

    auto st1 = compose(S(q(2), q(3), q(5)), T);
    auto st2 = compose(S(q(-1), q(1, 2), q(7)), T);
    REQUIRE(st1.ok());
    REQUIRE(st2.ok());
    auto prod = compose(*st1.cert, *st2.cert);
    REQUIRE(prod.ok());

    // (S1 T)(S2 T) = S1 twist(S2) where twist swaps the two off-diagonal scales
    auto expect = S(q(2) * q(-1), q(3) * q(7), q(5) * q(1, 2));
    CHECK(prod.cert->phi == expect.phi);
    CHECK(prod.cert->coeffs == expect.coeffs);
}

TEST_CASE("inversion matches the closed formulas") {
    const auto& g3 = catalog_entry("grassmann3");
    auto f = must_certify(g3.algebra, family_matrix(g3, "q_scale", {q(2), q(1)}));
    auto finv = invert(f);
    REQUIRE(finv.ok());
    // inverse of (2 1; 1 2) in Q is (2/3 -1/3; -1/3 2/3)
    CHECK(finv.cert->at(0, 0) == PairCoeffs{q(2, 3), q(-1, 3)});

    auto round = compose(f, *finv.cert);
    REQUIRE(round.ok());
    CHECK(round.cert->phi.is_identity());
    CHECK(round.cert->at(0, 0) == PairCoeffs{q(1), q(0)});

    const auto& m11 = catalog_entry("m11");
    auto super = must_certify(m11.algebra, family_matrix(m11, "superinvolution", {}));
    auto sinv = invert(super);
    REQUIRE(sinv.ok());
    CHECK(sinv.cert->phi == super.phi);  // an involution
    CHECK(sinv.cert->coeffs == super.coeffs);

    auto one_sided = must_certify(one_sided_algebra(), [] {
        Matrix m(2, 2);
        m.at(0, 0) = q(1);
        m.at(1, 1) = q(4);
        return m;
    }());
    auto oinv = invert(one_sided);
    REQUIRE(oinv.ok());
    CHECK(oinv.cert->at(0, 1) == PairCoeffs{q(1), q(0)});
}

TEST_CASE("forced degree three identity of a certified map") {
    const auto& ut2g = catalog_entry("ut2_graded");
    auto cert = must_certify(ut2g.algebra, family_matrix(ut2g, "scale_offdiag", {q(2)}));
    for (LabelId g : {0, 1})
        for (LabelId h : {0, 1})
            for (LabelId t : {0, 1}) {
                auto rep = forced_identity(cert, g, h, t);
                CHECK_MESSAGE(rep.holds, "labels ", g, h, t);
            }

    // trivial grading: coefficients collapse to the alpha beta commutator pattern
    const auto& g3 = catalog_entry("grassmann3");
    auto qcert = must_certify(g3.algebra, family_matrix(g3, "q_scale", {q(2), q(1)}));
    auto rep = forced_identity(qcert, 0, 0, 0);
    CHECK(rep.holds);
    const Rational ab = q(2) * q(1);
    CHECK(rep.word_coeffs == std::vector<Rational>{q(0), -ab, ab, -ab, ab, q(0)});

    auto auto_rep = forced_identity(
        must_certify(g3.algebra, family_matrix(g3, "parity", {})), 0, 0, 0);
    CHECK(auto_rep.holds);
    for (const auto& c : auto_rep.word_coeffs) CHECK(c.is_zero());
}

TEST_CASE("forced identity requires a group grading") {
    GradedAlgebra::Flags f;
    f.associative = true;
    f.group_grading = false;
    auto a = std::make_shared<GradedAlgebra>(std::vector<std::string>{"x"},
                                             std::vector<std::string>{"s"},
                                             std::vector<LabelId>{0}, f);
    auto cert = must_certify(a, Matrix::identity(1));
    CHECK_THROWS_AS((void)forced_identity(cert, 0, 0, 0), InputError);
}

TEST_CASE("unit image is pinned by the coefficient sum") {
    const auto& m2 = catalog_entry("m2");
    auto tsc = must_certify(m2.algebra, family_matrix(m2, "transpose_scaled", {q(2)}));
    auto rep = unit_image_check(tsc);
    REQUIRE(rep.applicable);
    CHECK(rep.ok);
    CHECK(rep.expected == rep.actual);

    const auto& a0 = catalog_entry("a0");
    const std::vector<Rational> p = {q(3), q(1), q(2), q(0), q(-1), q(5)};
    auto crep = unit_image_check(must_certify(a0.algebra, family_matrix(a0, "c_family", p)));
    REQUIRE(crep.applicable);
    CHECK(crep.ok);
    CHECK(crep.actual[0] == p[0] * p[0] / p[5]);  // c22^2 / c44 times the unit

    auto comm = unit_image_check(must_certify(catalog_entry("qq_swap").algebra,
                                              Matrix::identity(2)));
    CHECK_FALSE(comm.applicable);
    CHECK(comm.skip_reason.find("commutative") != std::string::npos);

    auto graded = unit_image_check(must_certify(catalog_entry("m11").algebra,
                                                Matrix::identity(4)));
    CHECK_FALSE(graded.applicable);
    CHECK(graded.skip_reason.find("grading") != std::string::npos);

    auto no_unit = unit_image_check(must_certify(anticommutative_algebra(), Matrix::identity(3)));
    CHECK_FALSE(no_unit.applicable);
    CHECK(no_unit.skip_reason.find("unit") != std::string::npos);
}

TEST_CASE("group actions by certified maps verify their relations") {
    const auto& m11 = catalog_entry("m11");
    const auto& super = m11.action("superinvolution");
    auto ok = certify_action(m11.algebra, super.generators, super.relations);
    REQUIRE(ok.ok());
    CHECK(ok.action->generators.size() == 1);
    CHECK(noncommuting_pairs_beta_vanishes(ok.action->generators[0].second));

    const auto& pseudo = m11.action("pseudoinvolution");
    CHECK(certify_action(m11.algebra, pseudo.generators, pseudo.relations).ok());

    // order four, not two
    auto wrong = certify_action(m11.algebra, pseudo.generators, {{"j", "j"}});
    CHECK_FALSE(wrong.ok());
    CHECK(wrong.refusal.reason.find("relation") != std::string::npos);

    CHECK_THROWS_AS((void)certify_action(m11.algebra, pseudo.generators, {{"nope"}}), InputError);

    Matrix skew = Matrix::identity(4);
    skew.at(3, 3) = q(2);
    auto bad_gen = certify_action(catalog_entry("m2").algebra, {{"g", skew}}, {});
    CHECK_FALSE(bad_gen.ok());
    CHECK(bad_gen.refusal.reason.find("g") != std::string::npos);
}
