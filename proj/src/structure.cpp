#include "grpi/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

Rational trace_of_product(const Matrix& a, const Matrix& b) {
    Rational acc(0);
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t l = 0; l < a.cols(); ++l)
            if (!a.at(k, l).is_zero()) acc += a.at(k, l) * b.at(l, k);
    return acc;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

}  // namespace

Subspace radical(const GradedAlgebra& a) {
    if (!a.flags().associative) throw InputError("radical is defined for associative input only");
    const std::size_t n = a.dim();
    const std::size_t m = n + 1;  // slot 0 is the adjoined unit

    std::vector<Matrix> lmul;
    lmul.reserve(m);
    lmul.push_back(Matrix::identity(m));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix L(m, m);
        L.at(i + 1, 0) = Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& p = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero()) L.at(k + 1, j + 1) = p[k];
        }
        lmul.push_back(std::move(L));
    }

    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            gram.at(i, j) = trace_of_product(lmul[i], lmul[j]);
            gram.at(j, i) = gram.at(i, j);
        }

    std::vector<Vec> stripped;
    for (const Vec& v : kernel(gram)) {
        if (!v[0].is_zero())
            throw CheckError("trace form kernel is not contained in the ideal part");
        stripped.emplace_back(v.begin() + 1, v.end());
    }
    const Subspace j = Subspace::span(n, stripped);

    if (!(ideal_generated(a, stripped) == j))
        throw CheckError("trace form kernel is not a two-sided ideal");
    if (j.dim() > 0 && !nilpotency_index(a, j).has_value())
        throw CheckError("trace form kernel is not nilpotent");
    return j;
}

RadicalGradedReport check_radical_graded(const GradedAlgebra& a, const Subspace& j) {
    RadicalGradedReport rep;
    auto basis = graded_subspace_basis(a, j);
    rep.graded = basis.has_value();
    if (basis) rep.homogeneous_basis = std::move(*basis);
    return rep;
}

InvarianceReport check_subspace_invariant(
    const Subspace& s, const std::vector<std::pair<std::string, Matrix>>& ops) {
    InvarianceReport rep;
    for (const auto& [name, op] : ops) {
        bool inv = true;
        for (const Vec& v : s.basis())
            if (!s.contains(op.apply(v))) {
                inv = false;
                break;
            }
        rep.operators.push_back({name, inv});
        rep.all_invariant = rep.all_invariant && inv;
    }
    return rep;
}

Matrix QuotientAlgebra::induce(const Matrix& op) const { return projection * op * section; }

QuotientAlgebra quotient_by_graded_ideal(const GradedAlgebra& a, const Subspace& ideal) {
    const std::size_t n = a.dim();
    if (!is_graded_subspace(a, ideal)) throw InputError("quotient ideal is not graded");
    if (!(ideal_generated(a, ideal.basis()) == ideal))
        throw InputError("quotient requires a two-sided ideal");

    std::vector<std::size_t> pivots;
    for (const Vec& row : ideal.basis()) {
        std::size_t p = 0;
        while (p < n && row[p].is_zero()) ++p;
        pivots.push_back(p);
    }
    QuotientAlgebra out;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) out.kept.push_back(j);
    const std::size_t q = out.kept.size();

    const auto reduce = [&](Vec v) {
        const auto& rows = ideal.basis();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) v[k] -= c * rows[r][k];
        }
        Vec small(q);
        for (std::size_t k = 0; k < q; ++k) small[k] = v[out.kept[k]];
        return small;
    };

    out.projection = Matrix(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, Rational(0));
        e[j] = Rational(1);
        out.projection.set_col(j, reduce(std::move(e)));
    }
    out.section = Matrix(n, q);
    for (std::size_t k = 0; k < q; ++k) out.section.at(out.kept[k], k) = Rational(1);

    std::vector<std::string> names, labels;
    std::vector<LabelId> degrees;
    for (std::size_t k : out.kept) {
        names.push_back(a.basis_name(k));
        degrees.push_back(a.degree(k));
    }
    for (std::size_t t = 0; t < a.label_count(); ++t) labels.push_back(a.label_name(t));
    auto b = std::make_shared<GradedAlgebra>(names, labels, degrees, a.flags());
    for (std::size_t s = 0; s < a.label_count(); ++s)
        for (std::size_t t = 0; t < a.label_count(); ++t)
            if (auto r = a.label_product(s, t)) b->set_label_product(s, t, *r);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const Vec p = reduce(a.basis_product(out.kept[i], out.kept[j]));
            for (std::size_t k = 0; k < q; ++k)
                if (!p[k].is_zero()) b->set_product(i, j, k, p[k]);
        }
    out.algebra = std::move(b);
    return out;
}

namespace {

/// Monic minimal polynomial, ascending coefficients; poly[d] = 1.
std::vector<Rational> minimal_polynomial(const GradedAlgebra& b, const Vec& unit, const Vec& z) {
    RowBasis basis(b.dim());
    std::vector<Vec> pows = {unit};
    basis.add(unit);
    while (true) {
        Vec next = b.multiply(pows.back(), z);
        if (auto c = basis.express(next)) {
            std::vector<Rational> poly(pows.size() + 1, Rational(0));
            for (std::size_t i = 0; i < c->size(); ++i) poly[i] = -(*c)[i];
            poly[pows.size()] = Rational(1);
            return poly;
        }
        basis.add(next);
        pows.push_back(std::move(next));
    }
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

/// Quotient of poly by (x - r); exact division, remainder must vanish.
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& r) {
    std::vector<Rational> out(poly.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * r;
        out[i - 1] = carry;
    }
    if (poly[0] + carry * r != Rational(0)) throw CheckError("deflation by a non-root");
    return out;
}

std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> divs;
    if (v == 0) return divs;
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
        }
    return divs;
}

/// All rational roots, each once (the input is squarefree for our callers).
std::vector<Rational> rational_roots(std::vector<Rational> poly) {
    std::vector<Rational> roots;
    while (poly.size() > 1 && poly[0].is_zero()) {
        roots.push_back(Rational(0));
        poly = deflate(poly, Rational(0));
    }
    if (poly.size() <= 1) return roots;

    mpz_class denom_lcm = 1;
    for (const auto& c : poly) {
        mpz_class d = c.raw().get_den();
        denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }
    const mpz_class a0 = mpq_class(poly.front().raw() * denom_lcm).get_num();
    const mpz_class lead = mpq_class(poly.back().raw() * denom_lcm).get_num();

    std::set<Rational> candidates;
    for (const auto& p : positive_divisors(a0))
        for (const auto& q : positive_divisors(lead)) {
            candidates.insert(Rational(mpq_class(mpq_class(p) / mpq_class(q))));
            candidates.insert(Rational(mpq_class(mpq_class(-p) / mpq_class(q))));
        }
    for (const auto& r : candidates)
        if (poly.size() > 1 && eval_poly(poly, r).is_zero()) {
            roots.push_back(r);
            poly = deflate(poly, r);
        }
    return roots;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

WedderburnReport wedderburn_invariant(const GradedAlgebra& b,
                                      const std::vector<std::pair<std::string, Matrix>>& ops,
                                      unsigned seed) {
    WedderburnReport rep;
    if (radical(b).dim() != 0) throw InputError("decomposition requires zero radical");
    const std::size_t n = b.dim();
    if (n == 0) return rep;

    auto unit = find_unit(b);
    if (!unit) throw CheckError("semisimple algebra without a unit");

    // center = joint kernel of all commutator operators
    Matrix comm(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec diff = b.basis_product(i, j);
            const Vec& rev = b.basis_product(j, i);
            for (std::size_t k = 0; k < n; ++k) {
                diff[k] -= rev[k];
                comm.at(i * n + k, j) = diff[k];
            }
        }
    const std::vector<Vec> center = kernel(comm);
    const std::size_t cdim = center.size();

    std::mt19937 rng(seed);
    std::vector<Rational> minpoly;
    Vec z;
    bool separated = false;
    for (rep.retries = 0; rep.retries < 8; ++rep.retries) {
        z.assign(n, Rational(0));
        for (const Vec& c : center) {
            const long coeff = long(rng() % 19u) - 9;
            for (std::size_t k = 0; k < n; ++k) z[k] += Rational(coeff) * c[k];
        }
        minpoly = minimal_polynomial(b, *unit, z);
        if (minpoly.size() == cdim + 1) {
            separated = true;
            break;
        }
    }
    if (!separated) throw CheckError("no sampled central element separated the center");

    std::vector<Rational> roots = rational_roots(minpoly);
    std::sort(roots.begin(), roots.end());

    // idempotent for root r: (m / (x - r)) evaluated at z, normalized at r
    std::vector<Vec> idems;
    for (const Rational& r : roots) {
        const auto g = deflate(minpoly, r);
        const Rational denom = eval_poly(g, r);
        if (denom.is_zero()) throw CheckError("repeated root in a separable minimal polynomial");
        Vec acc(n, Rational(0));
        for (std::size_t i = g.size(); i-- > 0;) {
            acc = b.multiply(acc, z);
            for (std::size_t k = 0; k < n; ++k) acc[k] += g[i] * (*unit)[k];
        }
        for (auto& c : acc) c /= denom;
        idems.push_back(std::move(acc));
    }
    Vec rest = *unit;
    for (const Vec& e : idems)
        for (std::size_t k = 0; k < n; ++k) rest[k] -= e[k];
    const bool has_rest = !vec_is_zero(rest);
    if (has_rest) {
        rep.nonsplit = true;
        rep.note = "a center factor is a proper field extension; it stays fused";
        idems.push_back(rest);
    }

    for (std::size_t i = 0; i < idems.size(); ++i)
        for (std::size_t j = 0; j < idems.size(); ++j) {
            const Vec p = b.multiply(idems[i], idems[j]);
            Vec expect(n, Rational(0));
            if (i == j) expect = idems[i];
            if (p != expect) throw CheckError("central idempotents fail orthogonality");
        }

    for (const Vec& e : idems) {
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < n; ++j) {
            Vec basis_j(n, Rational(0));
            basis_j[j] = Rational(1);
            gens.push_back(b.multiply(basis_j, e));
        }
        rep.minimal_ideals.push_back(Subspace::span(n, gens));
    }

    std::vector<std::pair<std::string, Matrix>> fusion_ops;
    for (LabelId t : b.supp()) fusion_ops.push_back({"p_" + b.label_name(t), b.projector(t)});
    for (const auto& op : ops) fusion_ops.push_back(op);

    const std::size_t count = rep.minimal_ideals.size();
    UnionFind uf(count);
    for (std::size_t i = 0; i < count; ++i)
        for (const auto& [name, op] : fusion_ops)
            for (const Vec& v : rep.minimal_ideals[i].basis()) {
                const Vec w = op.apply(v);
                for (std::size_t j = 0; j < count; ++j)
                    if (!vec_is_zero(b.multiply(w, idems[j]))) uf.unite(i, j);
            }

    std::map<std::size_t, WedderburnComponent> grouped;
    for (std::size_t i = 0; i < count; ++i) grouped[uf.find(i)].members.push_back(i);
    for (auto& [root_idx, comp] : grouped) {
        std::vector<Vec> gens;
        for (std::size_t i : comp.members) {
            const auto& basis = rep.minimal_ideals[i].basis();
            gens.insert(gens.end(), basis.begin(), basis.end());
            if (has_rest && i + 1 == count) comp.nonsplit = true;
        }
        comp.basis = Subspace::span(n, gens);
        for (LabelId t : b.supp()) {
            const Matrix p = b.projector(t);
            const bool present = std::any_of(
                comp.basis.basis().begin(), comp.basis.basis().end(),
                [&](const Vec& v) { return !vec_is_zero(p.apply(v)); });
            if (present) comp.labels_present.push_back(t);
        }
        rep.components.push_back(std::move(comp));
    }
    std::sort(rep.components.begin(), rep.components.end(),
              [](const auto& a, const auto& c) { return a.members.front() < c.members.front(); });

    // each member ideal must generate its whole component under the operators
    for (const auto& comp : rep.components)
        for (std::size_t i : comp.members) {
            Subspace cl = rep.minimal_ideals[i];
            while (true) {
                std::vector<Vec> vecs = cl.basis();
                for (const auto& [name, op] : fusion_ops)
                    for (const Vec& v : cl.basis()) vecs.push_back(op.apply(v));
                Subspace next = ideal_generated(b, vecs);
                if (next == cl) break;
                cl = std::move(next);
            }
            if (!(cl == comp.basis))
                throw CheckError("a fused component is not minimal over its members");
        }

    // components pairwise annihilate and fill the algebra
    std::size_t total = 0;
    for (const auto& comp : rep.components) total += comp.basis.dim();
    if (total != n) throw CheckError("component dimensions do not fill the algebra");
    for (std::size_t i = 0; i < rep.components.size(); ++i)
        for (std::size_t j = 0; j < rep.components.size(); ++j) {
            if (i == j) continue;
            for (const Vec& x : rep.components[i].basis.basis())
                for (const Vec& y : rep.components[j].basis.basis())
                    if (!vec_is_zero(b.multiply(x, y)))
                        throw CheckError("distinct components fail to annihilate");
        }
    return rep;
}

StructureReport analyze(const GradedAlgebra& a,
                        const std::vector<std::pair<std::string, Matrix>>& ops, unsigned seed) {
    StructureReport rep;
    rep.radical = radical(a);
    rep.radical_graded = check_radical_graded(a, rep.radical);
    if (!rep.radical_graded.graded)
        throw InputError("radical is not graded; no graded quotient exists");
    rep.radical_invariance = check_subspace_invariant(rep.radical, ops);
    for (const auto& po : rep.radical_invariance.operators)
        if (!po.invariant)
            throw InputError("operator '" + po.name + "' does not preserve the radical");
    rep.quotient = quotient_by_graded_ideal(a, rep.radical);
    for (const auto& [name, op] : ops) rep.induced_ops.push_back({name, rep.quotient.induce(op)});
    if (radical(*rep.quotient.algebra).dim() != 0)
        throw CheckError("quotient by the radical still has a radical");
    rep.wedderburn = wedderburn_invariant(*rep.quotient.algebra, rep.induced_ops, seed);
    return rep;
}

}
