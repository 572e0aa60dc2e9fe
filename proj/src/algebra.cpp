#include "grpi/algebra.hpp"

#include <algorithm>

#include "grpi/errors.hpp"

namespace grpi {

GradedAlgebra::GradedAlgebra(std::vector<std::string> basis_names,
                             std::vector<std::string> labels,
                             std::vector<LabelId> degrees,
                             Flags flags)
    : basis_names_(std::move(basis_names)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      flags_(flags) {
    if (basis_names_.empty()) throw InputError("algebra needs at least one basis vector");
    if (labels_.empty()) throw InputError("algebra needs at least one label");
    if (degrees_.size() != basis_names_.size())
        throw InputError("degree list length must match basis length");
    for (LabelId t : degrees_)
        if (t >= labels_.size()) throw InputError("degree refers to an unknown label");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw InputError("duplicate label '" + labels_[i] + "'");
    products_.assign(dim() * dim(), Vec(dim()));
    components_.resize(labels_.size());
    for (std::size_t i = 0; i < dim(); ++i) components_[degrees_[i]].push_back(i);
    for (LabelId t = 0; t < labels_.size(); ++t)
        if (!components_[t].empty()) supp_.push_back(t);
    label_products_.assign(labels_.size() * labels_.size(), std::nullopt);
}

void GradedAlgebra::set_product(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= dim() || j >= dim() || k >= dim())
        throw InputError("structure constant index out of range");
    products_[i * dim() + j][k] = c;
}

void GradedAlgebra::set_label_product(LabelId s, LabelId t, LabelId r) {
    if (s >= labels_.size() || t >= labels_.size() || r >= labels_.size())
        throw InputError("label product entry out of range");
    label_products_[s * labels_.size() + t] = r;
}

std::optional<LabelId> GradedAlgebra::find_label(const std::string& name) const {
    for (LabelId t = 0; t < labels_.size(); ++t)
        if (labels_[t] == name) return t;
    return std::nullopt;
}

Vec GradedAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw InputError("multiply length mismatch");
    Vec z(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Vec& p = basis_product(i, j);
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!p[k].is_zero()) z[k] += f * p[k];
        }
    }
    return z;
}

std::optional<LabelId> GradedAlgebra::label_product(LabelId s, LabelId t) const {
    return label_products_[s * labels_.size() + t];
}

bool GradedAlgebra::component_product_zero(LabelId s, LabelId t) const {
    for (std::size_t i : components_[s])
        for (std::size_t j : components_[t]) {
            const Vec& p = basis_product(i, j);
            for (const auto& c : p)
                if (!c.is_zero()) return false;
        }
    return true;
}

Matrix GradedAlgebra::projector(LabelId t) const {
    Matrix m(dim(), dim());
    for (std::size_t i : components_[t]) m.at(i, i) = 1;
    return m;
}

GradingReport verify_grading(const GradedAlgebra& a) {
    GradingReport rep;
    rep.valid = true;
    rep.group_law_ok = true;
    for (LabelId s : a.supp()) {
        for (LabelId t : a.supp()) {
            std::optional<LabelId> target;
            for (std::size_t i : a.component(s)) {
                for (std::size_t j : a.component(t)) {
                    const Vec& p = a.basis_product(i, j);
                    std::optional<LabelId> this_label;
                    bool homogeneous = true;
                    for (std::size_t k = 0; k < a.dim(); ++k) {
                        if (p[k].is_zero()) continue;
                        if (!this_label)
                            this_label = a.degree(k);
                        else if (*this_label != a.degree(k))
                            homogeneous = false;
                    }
                    if (!this_label) continue;  // zero product constrains nothing
                    if (!homogeneous) {
                        rep.valid = false;
                        rep.violations.push_back({i, j, "product is not homogeneous"});
                        continue;
                    }
                    if (!target)
                        target = this_label;
                    else if (*target != *this_label) {
                        rep.valid = false;
                        rep.violations.push_back(
                            {i, j, "component products land in different components"});
                    }
                }
            }
            if (target) {
                rep.star[{s, t}] = *target;
                if (a.flags().group_grading) {
                    auto claimed = a.label_product(s, t);
                    if (!claimed) {
                        rep.group_law_ok = false;
                        rep.valid = false;
                        rep.violations.push_back(
                            {a.component(s)[0], a.component(t)[0],
                             "group grading claimed but the label product is undefined here"});
                    } else if (*claimed != *target) {
                        rep.group_law_ok = false;
                        rep.valid = false;
                        rep.violations.push_back({a.component(s)[0], a.component(t)[0],
                                                  "product lands outside the claimed label"});
                    }
                }
            }
        }
    }
    return rep;
}

AssocReport verify_associative(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    Vec ek(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                // (e_i e_j) e_k versus e_i (e_j e_k)
                std::fill(ek.begin(), ek.end(), Rational(0));
                ek[k] = 1;
                Vec left = a.multiply(ij, ek);
                Vec right(n);
                const Vec& jk = a.basis_product(j, k);
                for (std::size_t m = 0; m < n; ++m) {
                    if (jk[m].is_zero()) continue;
                    const Vec& im = a.basis_product(i, m);
                    for (std::size_t q = 0; q < n; ++q)
                        if (!im[q].is_zero()) right[q] += jk[m] * im[q];
                }
                if (left != right) return {false, i, j, k};
            }
        }
    return {};
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors)
        if (v.size() != ambient) throw InputError("span vector has wrong length");
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(Matrix::from_rows(vectors));
    for (std::size_t r = 0; r < rr.rank(); ++r) s.basis_.push_back(rr.reduced.row(r));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
    }
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw InputError("contains: wrong ambient dimension");
    Vec w = v;
    for (const Vec& b : basis_) {
        std::size_t p = 0;
        while (p < ambient_ && b[p].is_zero()) ++p;
        if (p == ambient_ || w[p].is_zero()) continue;
        Rational f = w[p];  // basis pivots are normalized to 1
        for (std::size_t c = p; c < ambient_; ++c)
            if (!b[c].is_zero()) w[c] -= f * b[c];
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw InputError("sum: ambient mismatch");
    std::vector<Vec> all = u.basis();
    all.insert(all.end(), w.basis().begin(), w.basis().end());
    return Subspace::span(u.ambient(), all);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw InputError("intersect: ambient mismatch");
    if (u.dim() == 0 || w.dim() == 0) return Subspace(u.ambient());
    // Solve sum x_i u_i = sum y_j w_j; the u-part of each kernel vector spans the
    // intersection.
    const std::size_t n = u.ambient();
    Matrix m(n, u.dim() + w.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = u.basis()[i][r];
    for (std::size_t j = 0; j < w.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) m.at(r, u.dim() + j) = -w.basis()[j][r];
    std::vector<Vec> gens;
    for (const Vec& k : kernel(m)) {
        Vec v(n);
        for (std::size_t i = 0; i < u.dim(); ++i)
            for (std::size_t r = 0; r < n; ++r) v[r] += k[i] * u.basis()[i][r];
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace ideal_generated(const GradedAlgebra& a, const std::vector<Vec>& gens) {
    Subspace current = Subspace::span(a.dim(), gens);
    for (;;) {
        std::vector<Vec> next = current.basis();
        Vec ej(a.dim());
        for (const Vec& v : current.basis()) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                std::fill(ej.begin(), ej.end(), Rational(0));
                ej[j] = 1;
                next.push_back(a.multiply(v, ej));
                next.push_back(a.multiply(ej, v));
            }
        }
        Subspace grown = Subspace::span(a.dim(), next);
        if (grown.dim() == current.dim()) return grown;
        current = std::move(grown);
    }
}

Subspace annihilator_lr(const GradedAlgebra& a, const Subspace& m) {
    if (m.ambient() != a.dim()) throw InputError("annihilator: ambient mismatch");
    const std::size_t n = a.dim();
    // Rows: for each subspace basis vector w and coordinate k, the constraints
    // (x w)_k = 0 and (w x)_k = 0, linear in x.
    std::vector<Vec> rows;
    for (const Vec& w : m.basis()) {
        Matrix right(n, n), left(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei(n);
            ei[i] = 1;
            right.set_col(i, a.multiply(ei, w));
            left.set_col(i, a.multiply(w, ei));
        }
        for (std::size_t k = 0; k < n; ++k) {
            rows.push_back(right.row(k));
            rows.push_back(left.row(k));
        }
    }
    if (rows.empty()) return Subspace::full(n);
    return Subspace::span(n, kernel(Matrix::from_rows(rows)));
}

std::map<LabelId, Vec> homogeneous_parts(const GradedAlgebra& a, const Vec& v) {
    std::map<LabelId, Vec> parts;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (v[i].is_zero()) continue;
        auto [it, fresh] = parts.try_emplace(a.degree(i), Vec(a.dim()));
        it->second[i] = v[i];
    }
    return parts;
}

bool is_graded_subspace(const GradedAlgebra& a, const Subspace& s) {
    for (const Vec& v : s.basis())
        for (const auto& [t, part] : homogeneous_parts(a, v))
            if (!s.contains(part)) return false;
    return true;
}

std::optional<std::vector<std::pair<LabelId, Vec>>> graded_subspace_basis(const GradedAlgebra& a,
                                                                          const Subspace& s) {
    if (!is_graded_subspace(a, s)) return std::nullopt;
    std::vector<std::pair<LabelId, Vec>> out;
    RowBasis seen(a.dim());
    for (const Vec& v : s.basis())
        for (const auto& [t, part] : homogeneous_parts(a, v))
            if (seen.add(part)) out.push_back({t, part});
    return out;
}

std::optional<Vec> find_unit(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    // u e_j = e_j and e_j u = e_j for all j, linear in u.
    Matrix sys(2 * n * n, n);
    Matrix rhs(2 * n * n, 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at((2 * j) * n + k, i) = a.basis_product(i, j)[k];
                sys.at((2 * j + 1) * n + k, i) = a.basis_product(j, i)[k];
            }
            if (j == k) {
                rhs.at((2 * j) * n + k, 0) = 1;
                rhs.at((2 * j + 1) * n + k, 0) = 1;
            }
        }
    SolveResult s = solve(sys, rhs);
    if (!s.feasible) return std::nullopt;
    return s.particular.col(0);
}

bool is_commutative(const GradedAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
    return true;
}

Subspace product_span(const GradedAlgebra& a, const Subspace& u, const Subspace& w) {
    std::vector<Vec> prods;
    for (const Vec& x : u.basis())
        for (const Vec& y : w.basis()) prods.push_back(a.multiply(x, y));
    return Subspace::span(a.dim(), prods);
}

std::optional<std::size_t> nilpotency_index(const GradedAlgebra& a, const Subspace& s) {
    if (s.dim() == 0) return 1;
    Subspace power = s;
    std::size_t k = 1;
    for (;;) {
        Subspace next = product_span(a, power, s);
        ++k;
        if (next.dim() == 0) return k;
        if (next.dim() == power.dim() && power.contains(next)) return std::nullopt;
        if (k > a.dim() + 1) return std::nullopt;  // an ideal chain would have stabilized by now
        power = std::move(next);
    }
}

}
