#include "grpi/pseudo.hpp"

#include <algorithm>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

/// Canonical coset representative of (alpha0, beta0) + span(slack).
/// With one slack direction, beta is zeroed when possible, otherwise alpha
/// (beta is then the uniquely determined coefficient). With two directions
/// everything collapses to (0, 0).
PairCoeffs canonical_coeffs(const Rational& alpha0, const Rational& beta0,
                            const std::vector<Vec>& slack) {
    if (slack.empty()) return {alpha0, beta0};
    if (slack.size() >= 2) return {0, 0};
    const Vec& g = slack[0];
    if (!g[1].is_zero()) {
        Rational c = -beta0 / g[1];
        return {alpha0 + c * g[0], 0};
    }
    return {0, beta0};  // g = (g1, 0): alpha is free, beta is pinned
}

std::pair<LabelId, LabelId> unordered_key(LabelId s, LabelId t) {
    return {std::min(s, t), std::max(s, t)};
}

}  // namespace

const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::ZeroProducts: return "zero_products";
        case PairCase::OneSided: return "one_sided";
        case PairCase::BoundPair: return "bound_pair";
        case PairCase::BoundDiagonal: return "bound_diagonal";
        case PairCase::FreePair: return "free_pair";
        case PairCase::FreeDiagonal: return "free_diagonal";
    }
    return "?";
}

const PairClass& PseudoAutoCertificate::pair_class(LabelId s, LabelId t) const {
    return cases.at(unordered_key(s, t));
}

PairClass classify_pair(const GradedAlgebra& a, LabelId s, LabelId t) {
    PairClass out;
    bool st_zero = a.component_product_zero(s, t);
    bool ts_zero = a.component_product_zero(t, s);
    if (st_zero && ts_zero) {
        out.kind = PairCase::ZeroProducts;
        out.s = std::min(s, t);
        out.t = std::max(s, t);
        return out;
    }
    if (st_zero != ts_zero) {
        out.kind = PairCase::OneSided;
        out.s = st_zero ? t : s;
        out.t = st_zero ? s : t;
        return out;
    }
    // Both products nonzero: look for an identity x y + mu y x = 0 on the pair.
    std::vector<Vec> rows;
    for (std::size_t i : a.component(s))
        for (std::size_t j : a.component(t)) {
            const Vec& ij = a.basis_product(i, j);
            const Vec& ji = a.basis_product(j, i);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!ij[k].is_zero() || !ji[k].is_zero()) rows.push_back({ij[k], ji[k]});
        }
    std::vector<Vec> ker = kernel(Matrix::from_rows(rows));
    out.s = std::min(s, t);
    out.t = std::max(s, t);
    if (ker.empty()) {
        out.kind = s == t ? PairCase::FreeDiagonal : PairCase::FreePair;
        return out;
    }
    if (ker.size() > 1) throw CheckError("identity space too large for nonzero products");
    const Vec& g = ker[0];
    if (g[0].is_zero() || g[1].is_zero())
        throw CheckError("degenerate identity on a pair with nonzero products");
    out.kind = s == t ? PairCase::BoundDiagonal : PairCase::BoundPair;
    Rational mu = g[1] / g[0];
    if (s > t) mu = mu.inv();  // reorient the identity to the canonical (s,t)
    out.mu = mu;
    return out;
}

CertifyResult certify(AlgebraPtr a, const Matrix& phi) {
    CertifyResult out;
    const std::size_t n = a->dim();
    if (phi.rows() != n || phi.cols() != n) throw InputError("map has wrong dimensions");
    if (rank(phi) != n) {
        out.refusal = {"map is not invertible", ""};
        return out;
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!phi.at(k, j).is_zero() && a->degree(k) != a->degree(j)) {
                out.refusal = {"map does not preserve degrees",
                               "image of " + a->basis_name(j) + " meets the " +
                                   a->label_name(a->degree(k)) + " component"};
                return out;
            }

    PseudoAutoCertificate cert;
    cert.algebra = a;
    cert.phi = phi;

    std::vector<Vec> image;  // phi(e_i)
    image.reserve(n);
    for (std::size_t i = 0; i < n; ++i) image.push_back(phi.col(i));

    const auto& supp = a->supp();
    for (std::size_t si = 0; si < supp.size(); ++si)
        for (std::size_t ti = si; ti < supp.size(); ++ti)
            cert.cases[{supp[si], supp[ti]}] = classify_pair(*a, supp[si], supp[ti]);

    for (LabelId s : supp) {
        for (LabelId t : supp) {
            std::vector<Vec> rows;
            std::vector<Vec> rhs_rows;
            for (std::size_t i : a->component(s))
                for (std::size_t j : a->component(t)) {
                    Vec fwd = a->multiply(image[i], image[j]);
                    Vec rev = a->multiply(image[j], image[i]);
                    Vec target = phi.apply(a->basis_product(i, j));
                    for (std::size_t k = 0; k < n; ++k) {
                        if (fwd[k].is_zero() && rev[k].is_zero() && target[k].is_zero()) continue;
                        rows.push_back({fwd[k], rev[k]});
                        rhs_rows.push_back({target[k]});
                    }
                }
            std::vector<Vec> slack;
            Rational alpha0, beta0;
            if (!rows.empty()) {
                SolveResult sol = solve(Matrix::from_rows(rows), Matrix::from_rows(rhs_rows));
                if (!sol.feasible) {
                    out.refusal = {"no coefficients satisfy the twisted product rule",
                                   "pair (" + a->label_name(s) + ", " + a->label_name(t) + ")"};
                    return out;
                }
                alpha0 = sol.particular.at(0, 0);
                beta0 = sol.particular.at(1, 0);
                slack = std::move(sol.kernel);
            } else {
                slack = {{1, 0}, {0, 1}};
            }
            cert.coeffs[{s, t}] = canonical_coeffs(alpha0, beta0, slack);
            cert.slack[{s, t}] = std::move(slack);
        }
    }

    // Consistency between the pair classification and the solved systems.
    for (const auto& [key, cls] : cert.cases) {
        auto dim_st = cert.slack.at({cls.s, cls.t}).size();
        auto dim_ts = cert.slack.at({cls.t, cls.s}).size();
        const PairCoeffs& fwd = cert.coeffs.at({cls.s, cls.t});
        const PairCoeffs& rev = cert.coeffs.at({cls.t, cls.s});
        switch (cls.kind) {
            case PairCase::ZeroProducts:
                if (dim_st != 2 || dim_ts != 2)
                    throw CheckError("slack mismatch on a zero-products pair");
                break;
            case PairCase::OneSided:
                if (dim_st != 1 || (cls.s != cls.t && dim_ts != 1))
                    throw CheckError("slack mismatch on a one-sided pair");
                if (fwd.alpha.is_zero() || !fwd.beta.is_zero())
                    throw CheckError("one-sided coefficients not in canonical form");
                if (!rev.alpha.is_zero() || !rev.beta.is_zero())
                    throw CheckError("vanishing side must carry zero coefficients");
                break;
            case PairCase::BoundPair:
            case PairCase::BoundDiagonal:
                if (dim_st != 1 || dim_ts != 1) throw CheckError("slack mismatch on a bound pair");
                if (fwd.alpha.is_zero() || rev.alpha.is_zero())
                    throw CheckError("bound pair alpha must be nonzero");
                if (!fwd.beta.is_zero() || !rev.beta.is_zero())
                    throw CheckError("bound pair coefficients not in canonical form");
                break;
            case PairCase::FreePair: {
                if (dim_st != 0 || dim_ts != 0) throw CheckError("slack mismatch on a free pair");
                Rational det = fwd.alpha * rev.alpha - fwd.beta * rev.beta;
                if (det.is_zero()) throw CheckError("free pair matrix is singular");
                break;
            }
            case PairCase::FreeDiagonal: {
                if (dim_st != 0) throw CheckError("slack mismatch on a free diagonal");
                Rational det = fwd.alpha * fwd.alpha - fwd.beta * fwd.beta;
                if (det.is_zero()) throw CheckError("diagonal coefficients with alpha^2 = beta^2");
                break;
            }
        }
    }

    // Invariant assembly, one component per constrained pair.
    for (const auto& [key, cls] : cert.cases) {
        TauComponent comp;
        comp.kind = cls.kind;
        comp.s = cls.s;
        comp.t = cls.t;
        const PairCoeffs& fwd = cert.coeffs.at({cls.s, cls.t});
        const PairCoeffs& rev = cert.coeffs.at({cls.t, cls.s});
        switch (cls.kind) {
            case PairCase::ZeroProducts: continue;
            case PairCase::OneSided:
            case PairCase::BoundDiagonal: comp.data = {fwd.alpha}; break;
            case PairCase::BoundPair: comp.data = {fwd.alpha, rev.alpha}; break;
            case PairCase::FreePair:
                comp.data = {fwd.alpha, rev.beta, fwd.beta, rev.alpha};
                break;
            case PairCase::FreeDiagonal: comp.data = {fwd.alpha, fwd.beta}; break;
        }
        cert.tau.push_back(std::move(comp));
    }

    out.cert = std::move(cert);
    return out;
}

CertifyResult compose(const PseudoAutoCertificate& f, const PseudoAutoCertificate& g) {
    if (f.algebra != g.algebra) throw InputError("compose: certificates over different algebras");
    CertifyResult out = certify(f.algebra, f.phi * g.phi);
    if (!out.ok()) throw CheckError("composition of certified maps failed to certify");
    const PseudoAutoCertificate& c = *out.cert;
    for (const auto& [key, cc] : c.coeffs) {
        auto [s, t] = key;
        const PairCoeffs& gf = g.coeffs.at({s, t});
        const PairCoeffs& ff = f.coeffs.at({s, t});
        const PairCoeffs& fr = f.coeffs.at({t, s});
        // g acts first: its coefficients multiply f's taken at both orientations.
        Rational raw_alpha = gf.alpha * ff.alpha + gf.beta * fr.beta;
        Rational raw_beta = gf.alpha * ff.beta + gf.beta * fr.alpha;
        PairCoeffs expect = canonical_coeffs(raw_alpha, raw_beta, c.slack.at(key));
        if (expect.alpha != cc.alpha || expect.beta != cc.beta)
            throw CheckError("composition law mismatch on pair (" +
                             f.algebra->label_name(s) + ", " + f.algebra->label_name(t) + ")");
    }
    return out;
}

CertifyResult invert(const PseudoAutoCertificate& f) {
    auto inv = f.phi.inverse();
    if (!inv) throw CheckError("certified map is not invertible");
    CertifyResult out = certify(f.algebra, *inv);
    if (!out.ok()) throw CheckError("inverse of a certified map failed to certify");
    const PseudoAutoCertificate& c = *out.cert;
    for (const auto& [key, cls] : f.cases) {
        LabelId s = cls.s, t = cls.t;
        const PairCoeffs& fwd = f.coeffs.at({s, t});
        const PairCoeffs& rev = f.coeffs.at({t, s});
        const PairCoeffs& ifwd = c.coeffs.at({s, t});
        const PairCoeffs& irev = c.coeffs.at({t, s});
        switch (cls.kind) {
            case PairCase::ZeroProducts:
                if (!ifwd.alpha.is_zero() || !ifwd.beta.is_zero() || !irev.alpha.is_zero() ||
                    !irev.beta.is_zero())
                    throw CheckError("inverse nonzero on a zero-products pair");
                break;
            case PairCase::OneSided:
                if (ifwd.alpha != fwd.alpha.inv() || !ifwd.beta.is_zero())
                    throw CheckError("inverse mismatch on a one-sided pair");
                break;
            case PairCase::BoundPair:
            case PairCase::BoundDiagonal:
                if (ifwd.alpha != fwd.alpha.inv() || irev.alpha != rev.alpha.inv() ||
                    !ifwd.beta.is_zero() || !irev.beta.is_zero())
                    throw CheckError("inverse mismatch on a bound pair");
                break;
            case PairCase::FreePair:
            case PairCase::FreeDiagonal: {
                // [alpha(s,t) beta(s,t); beta(t,s) alpha(t,s)] inverts entrywise
                // into the same layout for the inverse map.
                Rational det = fwd.alpha * rev.alpha - fwd.beta * rev.beta;
                if (ifwd.alpha != rev.alpha / det || ifwd.beta != -fwd.beta / det ||
                    irev.beta != -rev.beta / det || irev.alpha != fwd.alpha / det)
                    throw CheckError("inverse mismatch on a free pair");
                break;
            }
        }
    }
    return out;
}

std::vector<TauComponent> tau_multiply(const std::vector<TauComponent>& f,
                                       const std::vector<TauComponent>& g) {
    if (f.size() != g.size()) throw InputError("tau size mismatch");
    std::vector<TauComponent> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const TauComponent& x = f[i];
        const TauComponent& y = g[i];
        if (x.kind != y.kind || x.s != y.s || x.t != y.t)
            throw InputError("tau components not aligned");
        TauComponent z{x.kind, x.s, x.t, {}};
        switch (x.kind) {
            case PairCase::ZeroProducts: break;
            case PairCase::OneSided:
            case PairCase::BoundDiagonal: z.data = {x.data[0] * y.data[0]}; break;
            case PairCase::BoundPair:
                z.data = {x.data[0] * y.data[0], x.data[1] * y.data[1]};
                break;
            case PairCase::FreePair:
                z.data = {x.data[0] * y.data[0] + x.data[1] * y.data[2],
                          x.data[0] * y.data[1] + x.data[1] * y.data[3],
                          x.data[2] * y.data[0] + x.data[3] * y.data[2],
                          x.data[2] * y.data[1] + x.data[3] * y.data[3]};
                break;
            case PairCase::FreeDiagonal:
                z.data = {x.data[0] * y.data[0] + x.data[1] * y.data[1],
                          x.data[0] * y.data[1] + x.data[1] * y.data[0]};
                break;
        }
        out.push_back(std::move(z));
    }
    return out;
}

ForcedIdentityReport forced_identity(const PseudoAutoCertificate& c, LabelId g, LabelId h,
                                     LabelId t) {
    const GradedAlgebra& a = *c.algebra;
    if (!a.flags().group_grading)
        throw InputError("the degree-three consequence needs a group grading");
    auto gh = a.label_product(g, h);
    auto ht = a.label_product(h, t);
    if (!gh || !ht) throw InputError("label product undefined on the requested triple");

    auto co = [&](LabelId x, LabelId y) -> PairCoeffs {
        auto it = c.coeffs.find({x, y});
        // Labels with empty components never constrain coefficients; the zero
        // choice is always valid there.
        return it == c.coeffs.end() ? PairCoeffs{0, 0} : it->second;
    };
    PairCoeffs gh_c = co(g, h), ght_c = co(*gh, t), ht_c = co(h, t), ght2_c = co(g, *ht);

    ForcedIdentityReport rep;
    rep.word_coeffs = {
        gh_c.alpha * ght_c.alpha - ht_c.alpha * ght2_c.alpha,  // xyz
        -ht_c.beta * ght2_c.alpha,                             // xzy
        gh_c.beta * ght_c.alpha,                               // yxz
        -ht_c.alpha * ght2_c.beta,                             // yzx
        gh_c.alpha * ght_c.beta,                               // zxy
        gh_c.beta * ght_c.beta - ht_c.beta * ght2_c.beta,      // zyx
    };
    rep.holds = true;
    for (std::size_t i : a.component(g))
        for (std::size_t j : a.component(h))
            for (std::size_t k : a.component(t)) {
                Vec x = basis_vec(a.dim(), i), y = basis_vec(a.dim(), j),
                    z = basis_vec(a.dim(), k);
                auto word = [&](const Vec& p, const Vec& q, const Vec& r) {
                    return a.multiply(a.multiply(p, q), r);
                };
                Vec total(a.dim());
                const std::array<Vec, 6> words = {word(x, y, z), word(x, z, y), word(y, x, z),
                                                  word(y, z, x), word(z, x, y), word(z, y, x)};
                for (std::size_t w = 0; w < 6; ++w) {
                    if (rep.word_coeffs[w].is_zero()) continue;
                    for (std::size_t m = 0; m < a.dim(); ++m)
                        total[m] += rep.word_coeffs[w] * words[w][m];
                }
                bool zero = std::all_of(total.begin(), total.end(),
                                        [](const Rational& v) { return v.is_zero(); });
                if (!zero) {
                    rep.holds = false;
                    rep.witness = {{i, j, k}};
                    return rep;
                }
            }
    return rep;
}

UnitImageReport unit_image_check(const PseudoAutoCertificate& c) {
    const GradedAlgebra& a = *c.algebra;
    UnitImageReport rep;
    auto unit = find_unit(a);
    if (!unit) {
        rep.skip_reason = "algebra has no unit";
        return rep;
    }
    if (is_commutative(a)) {
        rep.skip_reason = "algebra is commutative";
        return rep;
    }
    if (a.supp().size() != 1) {
        rep.skip_reason = "grading is not trivial";
        return rep;
    }
    LabelId t = a.supp()[0];
    const PairCoeffs& pc = c.coeffs.at({t, t});
    Rational s = pc.alpha + pc.beta;
    if (s.is_zero()) throw CheckError("alpha + beta vanishes on a unital algebra");
    rep.applicable = true;
    rep.expected.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) rep.expected[i] = (*unit)[i] / s;
    rep.actual = c.phi.apply(*unit);
    rep.ok = rep.expected == rep.actual;
    return rep;
}

ActionResult certify_action(AlgebraPtr a,
                            const std::vector<std::pair<std::string, Matrix>>& generators,
                            const std::vector<std::vector<std::string>>& relations) {
    ActionResult out;
    GradedGroupAction action;
    action.algebra = a;
    for (const auto& [name, m] : generators) {
        CertifyResult r = certify(a, m);
        if (!r.ok()) {
            out.refusal = {"generator '" + name + "' is not certifiable: " + r.refusal.reason,
                           r.refusal.witness};
            return out;
        }
        if (!noncommuting_pairs_beta_vanishes(*r.cert))
            throw CheckError("beta survives on a noncommuting pair of a group grading");
        action.generators.push_back({name, std::move(*r.cert)});
    }
    auto find = [&](const std::string& name) -> const Matrix* {
        for (const auto& [n, cert] : action.generators)
            if (n == name) return &cert.phi;
        return nullptr;
    };
    for (const auto& word : relations) {
        Matrix m = Matrix::identity(a->dim());
        std::string spelled;
        for (const auto& name : word) {
            const Matrix* gm = find(name);
            if (!gm) throw InputError("relation uses unknown generator '" + name + "'");
            m = m * *gm;
            spelled += spelled.empty() ? name : " " + name;
        }
        if (!m.is_identity()) {
            out.refusal = {"relation does not hold", spelled};
            return out;
        }
    }
    out.action = std::move(action);
    return out;
}

bool noncommuting_pairs_beta_vanishes(const PseudoAutoCertificate& c) {
    const GradedAlgebra& a = *c.algebra;
    if (!a.flags().group_grading) return true;
    for (LabelId s : a.supp())
        for (LabelId t : a.supp()) {
            if (a.component_product_zero(t, s)) continue;
            auto st = a.label_product(s, t), ts = a.label_product(t, s);
            if (!st || !ts || *st == *ts) continue;
            if (!c.coeffs.at({s, t}).beta.is_zero()) return false;
        }
    return true;
}

}
