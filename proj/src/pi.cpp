#include "grpi/pi.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
        return std::numeric_limits<std::size_t>::max();
    return a * b;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Vec matrix_col(const Matrix& m, std::size_t c) {
    Vec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
    return v;
}

}  // namespace

const std::vector<Shape>& shapes(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<Shape>> cache;
    if (n == 0) throw InputError("a bracketing needs at least one slot");

    std::scoped_lock lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // build bottom-up so every recursive lookup is already present
    for (std::size_t m = 1; m <= n; ++m) {
        if (cache.count(m)) continue;
        std::vector<Shape> out;
        if (m == 1) {
            out.push_back(Shape{1, {}});
        } else {
            for (std::size_t k = m - 1; k >= 1; --k) {
                for (const Shape& left : cache.at(k))
                    for (const Shape& right : cache.at(m - k)) {
                        Shape s{m, {}};
                        const auto map_left = [&](std::size_t o) {
                            return o < k ? o : m + (o - k);
                        };
                        const auto map_right = [&](std::size_t o) {
                            return o < m - k ? k + o : m + left.steps.size() + (o - (m - k));
                        };
                        for (const auto& [a, b] : left.steps)
                            s.steps.emplace_back(map_left(a), map_left(b));
                        for (const auto& [a, b] : right.steps)
                            s.steps.emplace_back(map_right(a), map_right(b));
                        const std::size_t root_l = k == 1 ? 0 : m + left.steps.size() - 1;
                        const std::size_t root_r = m - k == 1
                                                       ? k
                                                       : m + left.steps.size() +
                                                             right.steps.size() - 1;
                        s.steps.emplace_back(root_l, root_r);
                        out.push_back(std::move(s));
                    }
            }
        }
        cache.emplace(m, std::move(out));
    }
    return cache.at(n);
}

std::string format_monomial(const Monomial& m, const OperatorSpan& h,
                            const std::vector<std::string>& label_names) {
    const Shape& s = shapes(m.n).at(m.shape);
    std::vector<std::string> text(m.n + s.steps.size());
    for (std::size_t p = 0; p < m.n; ++p) {
        const std::size_t v = m.order[p];
        std::string t = "x" + std::to_string(v + 1);
        if (m.degrees[v] != any_degree && label_names.size() > 1)
            t += "^{(" + label_names.at(m.degrees[v]) + ")}";
        if (m.decorations[v] != h.unit_index) t += "." + h.ops.at(m.decorations[v]).name;
        text[p] = std::move(t);
    }
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const auto& [a, b] = s.steps[i];
        const bool outer = i + 1 == s.steps.size();
        text[m.n + i] =
            (outer ? "" : "(") + text[a] + " " + text[b] + (outer ? "" : ")");
    }
    return text.back().empty() ? text[0] : text.back();
}

void validate_monomial(const GradedAlgebra& a, const OperatorSpan& h, const Monomial& m) {
    if (m.n == 0) throw InputError("a monomial needs at least one variable");
    if (m.order.size() != m.n || m.degrees.size() != m.n || m.decorations.size() != m.n)
        throw InputError("monomial field sizes disagree with its variable count");
    std::vector<bool> seen(m.n, false);
    for (std::size_t v : m.order) {
        if (v >= m.n || seen[v]) throw InputError("monomial order is not a permutation");
        seen[v] = true;
    }
    for (LabelId t : m.degrees)
        if (t != any_degree && t >= a.label_count())
            throw InputError("monomial degree refers to an unknown label");
    for (std::size_t d : m.decorations)
        if (d >= h.size()) throw InputError("monomial decoration is outside the span");
    if (m.shape >= shapes(m.n).size()) throw InputError("monomial bracketing index out of range");
    if (h.size() > 0 && h.ops.front().matrix.rows() != a.dim())
        throw InputError("operator span does not act on this algebra");
}

Monomial relabel_variables(const Monomial& m, const std::vector<std::size_t>& perm) {
    if (perm.size() != m.n) throw InputError("relabeling permutation has the wrong size");
    std::vector<bool> seen(m.n, false);
    for (std::size_t v : perm) {
        if (v >= m.n || seen[v]) throw InputError("relabeling is not a permutation");
        seen[v] = true;
    }
    Monomial out = m;
    for (std::size_t p = 0; p < m.n; ++p) out.order[p] = perm[m.order[p]];
    for (std::size_t v = 0; v < m.n; ++v) {
        out.degrees[perm[v]] = m.degrees[v];
        out.decorations[perm[v]] = m.decorations[v];
    }
    return out;
}

std::vector<Monomial> enumerate_monomials(std::size_t n, const std::vector<LabelId>& degree_choices,
                                          std::size_t span_size, bool associative) {
    if (n == 0) throw InputError("monomial streams start at one variable");
    if (degree_choices.empty()) throw InputError("monomial stream needs at least one degree");
    if (span_size == 0) throw InputError("monomial stream needs at least one operator");

    const std::size_t shape_count = associative ? 1 : shapes(n).size();
    std::vector<Monomial> out;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<std::size_t> dsel(n, 0);
        while (true) {
            std::vector<std::size_t> dec(n, 0);
            while (true) {
                for (std::size_t s = 0; s < shape_count; ++s) {
                    Monomial m;
                    m.n = n;
                    m.order = order;
                    m.degrees.resize(n);
                    for (std::size_t v = 0; v < n; ++v) m.degrees[v] = degree_choices[dsel[v]];
                    m.decorations = dec;
                    m.shape = s;
                    out.push_back(std::move(m));
                }
                std::size_t i = n;
                while (i > 0 && ++dec[i - 1] == span_size) dec[--i] = 0;
                if (i == 0) break;
            }
            std::size_t i = n;
            while (i > 0 && ++dsel[i - 1] == degree_choices.size()) dsel[--i] = 0;
            if (i == 0) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

Vec evaluate_monomial(const GradedAlgebra& a, const OperatorSpan& h, const Monomial& m,
                      const std::vector<Vec>& assignment) {
    validate_monomial(a, h, m);
    if (assignment.size() != m.n) throw InputError("assignment size disagrees with the monomial");
    for (std::size_t v = 0; v < m.n; ++v) {
        if (assignment[v].size() != a.dim())
            throw InputError("assigned value has the wrong dimension");
        if (m.degrees[v] == any_degree) continue;
        if (a.projector(m.degrees[v]).apply(assignment[v]) != assignment[v])
            throw InputError("assigned value misses the degree of variable x" +
                             std::to_string(v + 1));
    }
    const Shape& s = shapes(m.n).at(m.shape);
    std::vector<Vec> vals(m.n + s.steps.size());
    for (std::size_t p = 0; p < m.n; ++p) {
        const std::size_t v = m.order[p];
        vals[p] = h.ops[m.decorations[v]].matrix.apply(assignment[v]);
    }
    for (std::size_t i = 0; i < s.steps.size(); ++i)
        vals[m.n + i] = a.multiply(vals[s.steps[i].first], vals[s.steps[i].second]);
    return vals.back();
}

namespace {

/// Basis indices each variable may take under the given per-variable degrees.
std::vector<std::vector<std::size_t>> block_candidates(const GradedAlgebra& a,
                                                       const std::vector<LabelId>& tuple) {
    std::vector<std::vector<std::size_t>> cand;
    for (LabelId t : tuple) {
        if (t == any_degree) {
            std::vector<std::size_t> all(a.dim());
            std::iota(all.begin(), all.end(), 0);
            cand.push_back(std::move(all));
        } else {
            cand.push_back(a.component(t));
        }
    }
    return cand;
}

std::size_t product_of_sizes(const std::vector<std::vector<std::size_t>>& cand) {
    std::size_t p = 1;
    for (const auto& c : cand) p = saturating_mul(p, c.size());
    return p;
}

/// Monomials of one block in engine row order: orders, then decorations, then
/// bracketings, innermost fastest. Degrees are pinned to the tuple.
std::vector<Monomial> block_monomials(std::size_t n, const std::vector<LabelId>& tuple,
                                      std::size_t span_size, bool associative) {
    const std::size_t shape_count = associative ? 1 : shapes(n).size();
    std::vector<Monomial> out;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<std::size_t> dec(n, 0);
        while (true) {
            for (std::size_t s = 0; s < shape_count; ++s) {
                Monomial m;
                m.n = n;
                m.order = order;
                m.degrees = tuple;
                m.decorations = dec;
                m.shape = s;
                out.push_back(std::move(m));
            }
            std::size_t i = n;
            while (i > 0 && ++dec[i - 1] == span_size) dec[--i] = 0;
            if (i == 0) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::string tuple_text(const GradedAlgebra& a, const std::vector<LabelId>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += tuple[i] == any_degree ? "*" : a.label_name(tuple[i]);
    }
    return s + ")";
}

void check_budget(const GradedAlgebra& a, const std::vector<LabelId>& tuple, std::size_t rows,
                  std::size_t cols, std::size_t budget) {
    const std::size_t entries = saturating_mul(rows, cols);
    if (entries > budget)
        throw BudgetError("evaluation matrix for block " + tuple_text(a, tuple) + " needs " +
                          std::to_string(rows) + " x " + std::to_string(cols) + " = " +
                          std::to_string(entries) + " entries; the budget is " +
                          std::to_string(budget));
}

/// One evaluation per (monomial, candidate assignment), written via `emit`.
/// Assignments iterate in odometer order, last variable fastest; per
/// assignment the monomials come in `block_monomials` order.
template <typename Emit>
void for_each_evaluation(const GradedAlgebra& a, const OperatorSpan& h,
                         const std::vector<Monomial>& monomials,
                         const std::vector<std::vector<std::size_t>>& cand, Emit&& emit) {
    const std::size_t n = cand.size();
    const std::vector<Shape>& all_shapes = shapes(n);
    // decorated basis columns: value of op s applied to basis vector i
    std::vector<std::vector<Vec>> dec_col(h.size(), std::vector<Vec>(a.dim()));
    for (std::size_t s = 0; s < h.size(); ++s)
        for (std::size_t i = 0; i < a.dim(); ++i) dec_col[s][i] = matrix_col(h.ops[s].matrix, i);

    std::vector<std::size_t> sel(n, 0);
    std::size_t aidx = 0;
    while (true) {
        for (std::size_t r = 0; r < monomials.size(); ++r) {
            const Monomial& m = monomials[r];
            const Shape& sh = all_shapes.at(m.shape);
            std::vector<Vec> vals(n + sh.steps.size());
            for (std::size_t p = 0; p < n; ++p) {
                const std::size_t v = m.order[p];
                vals[p] = dec_col[m.decorations[v]][cand[v][sel[v]]];
            }
            for (std::size_t i = 0; i < sh.steps.size(); ++i)
                vals[n + i] = a.multiply(vals[sh.steps[i].first], vals[sh.steps[i].second]);
            if (!emit(r, aidx, vals.back())) return;
        }
        std::size_t i = n;
        while (i > 0 && ++sel[i - 1] == cand[i - 1].size()) sel[--i] = 0;
        if (i == 0) break;
        ++aidx;
    }
}

/// Rank of the block's evaluation matrix, streamed column by column so the
/// dense matrix never materializes. Ranking the transpose is the same rank.
BlockStat ranked_block(const GradedAlgebra& a, const OperatorSpan& h, std::size_t n,
                       const std::vector<LabelId>& tuple, bool associative,
                       std::size_t budget) {
    BlockStat st;
    st.tuple = tuple;
    const auto monomials = block_monomials(n, tuple, h.size(), associative);
    const auto cand = block_candidates(a, tuple);
    st.rows = monomials.size();
    st.cols = saturating_mul(product_of_sizes(cand), a.dim());
    check_budget(a, tuple, st.rows, st.cols, budget);

    RowBasis basis(st.rows);
    std::vector<Vec> tile(a.dim(), Vec(st.rows, Rational(0)));
    std::size_t tile_of = 0;
    const auto flush = [&] {
        for (Vec& col : tile) {
            if (!vec_is_zero(col) && basis.add(col)) {
                if (basis.size() == st.rows) return false;
            }
            std::fill(col.begin(), col.end(), Rational(0));
        }
        return true;
    };
    bool full = false;
    for_each_evaluation(a, h, monomials, cand, [&](std::size_t r, std::size_t aidx, const Vec& v) {
        if (aidx != tile_of) {
            if (!flush()) {
                full = true;
                return false;
            }
            tile_of = aidx;
        }
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (!v[k].is_zero()) tile[k][r] = v[k];
        return true;
    });
    if (!full) flush();
    st.rank = basis.size();
    return st;
}

std::vector<std::vector<LabelId>> block_tuples(const GradedAlgebra& a, std::size_t n,
                                               bool graded) {
    if (!graded) return {std::vector<LabelId>(n, any_degree)};
    std::vector<LabelId> labels = a.supp();
    std::sort(labels.begin(), labels.end());
    std::vector<std::vector<LabelId>> tuples;
    std::vector<std::size_t> sel(n, 0);
    while (true) {
        std::vector<LabelId> t(n);
        for (std::size_t v = 0; v < n; ++v) t[v] = labels[sel[v]];
        tuples.push_back(std::move(t));
        std::size_t i = n;
        while (i > 0 && ++sel[i - 1] == labels.size()) sel[--i] = 0;
        if (i == 0) break;
    }
    return tuples;
}

}  // namespace

CodimResult codimension(const GradedAlgebra& a, const OperatorSpan& h, std::size_t n, bool graded,
                        bool associative, std::size_t threads, std::size_t budget) {
    if (n == 0) throw InputError("codimensions start at n = 1");
    if (h.size() == 0 || h.ops.front().matrix.rows() != a.dim())
        throw InputError("operator span does not act on this algebra");

    CodimResult res;
    res.n = n;
    res.graded = graded;
    res.decorated = h.size() > 1;
    res.associative = associative;
    const auto tuples = block_tuples(a, n, graded);
    res.blocks.resize(tuples.size());
    shapes(n);  // warm the cache before any worker thread reads it

    const auto run = [&](std::size_t i) {
        res.blocks[i] = ranked_block(a, h, n, tuples[i], associative, budget);
    };
    if (threads <= 1 || tuples.size() <= 1) {
        for (std::size_t i = 0; i < tuples.size(); ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        const std::size_t workers = std::min(threads, tuples.size());
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tuples.size(); i = next++) {
                    try {
                        run(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mu);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    for (const auto& b : res.blocks) res.c_n += b.rank;
    return res;
}

IdentityReport is_identity(const GradedAlgebra& a, const OperatorSpan& h,
                           const std::vector<std::pair<Rational, Monomial>>& f) {
    if (f.empty()) throw InputError("an identity candidate needs at least one monomial");
    const std::size_t n = f.front().second.n;
    for (const auto& [c, m] : f) {
        validate_monomial(a, h, m);
        if (m.n != n) throw InputError("all monomials of a candidate must share one arity");
    }

    std::map<std::vector<LabelId>, std::vector<std::size_t>> parts;
    for (std::size_t i = 0; i < f.size(); ++i) parts[f[i].second.degrees].push_back(i);

    IdentityReport rep;
    for (const auto& [tuple, members] : parts) {
        const auto cand = block_candidates(a, tuple);
        for (const auto& c : cand)
            if (c.empty()) throw InputError("a degree constraint has an empty component");
        std::vector<std::size_t> sel(n, 0);
        while (true) {
            std::vector<Vec> assignment(n);
            for (std::size_t v = 0; v < n; ++v) {
                assignment[v] = Vec(a.dim(), Rational(0));
                assignment[v][cand[v][sel[v]]] = Rational(1);
            }
            Vec total(a.dim(), Rational(0));
            for (std::size_t i : members) {
                const Vec val = evaluate_monomial(a, h, f[i].second, assignment);
                for (std::size_t k = 0; k < a.dim(); ++k) total[k] += f[i].first * val[k];
            }
            if (!vec_is_zero(total)) {
                rep.identity = false;
                IdentityWitness w;
                w.tuple = tuple;
                for (std::size_t v = 0; v < n; ++v) w.assignment.push_back(cand[v][sel[v]]);
                w.value = std::move(total);
                rep.witness = std::move(w);
                return rep;
            }
            std::size_t i = n;
            while (i > 0 && ++sel[i - 1] == cand[i - 1].size()) sel[--i] = 0;
            if (i == 0) break;
        }
    }
    return rep;
}

CodimEqualityReport codim_equality_check(const GradedAlgebra& a, const OperatorSpan& h,
                                         std::size_t n) {
    CodimEqualityReport rep;
    rep.graded_side = codimension(a, h, n, true);
    rep.tensor_side = codimension(a, tensor_action(a, h), n, false);
    if (rep.graded_side.c_n != rep.tensor_side.c_n)
        throw CheckError("graded codimension " + std::to_string(rep.graded_side.c_n) +
                         " disagrees with the projector-composed plain codimension " +
                         std::to_string(rep.tensor_side.c_n));
    rep.equal = true;
    return rep;
}

Vec QuotientModel::evaluation_row(const Block& b, const Monomial& m) const {
    validate_monomial(*algebra, span, m);
    if (m.degrees != b.tuple)
        throw InputError("monomial degrees do not match the block tuple");
    const auto cand = block_candidates(*algebra, b.tuple);
    Vec row(saturating_mul(product_of_sizes(cand), algebra->dim()), Rational(0));
    for_each_evaluation(*algebra, span, {m}, cand,
                        [&](std::size_t, std::size_t aidx, const Vec& v) {
                            for (std::size_t k = 0; k < algebra->dim(); ++k)
                                if (!v[k].is_zero()) row[aidx * algebra->dim() + k] = v[k];
                            return true;
                        });
    return row;
}

Vec QuotientModel::coordinates(const Block& b, const Monomial& m) const {
    const auto c = b.row_space.express(evaluation_row(b, m));
    if (!c) throw CheckError("monomial evaluation escapes its block's row space");
    return *c;
}

std::size_t QuotientModel::dimension() const {
    std::size_t d = 0;
    for (const auto& b : blocks) d += b.pivots.size();
    return d;
}

QuotientModel quotient_model(AlgebraPtr a, const OperatorSpan& h, std::size_t n, bool graded,
                             bool associative, std::size_t budget) {
    if (!a) throw InputError("quotient model needs an algebra");
    if (n == 0) throw InputError("quotient models start at n = 1");
    if (h.size() == 0 || h.ops.front().matrix.rows() != a->dim())
        throw InputError("operator span does not act on this algebra");

    QuotientModel model;
    model.algebra = a;
    model.span = h;
    model.n = n;
    model.graded = graded;
    model.associative = associative;

    for (const auto& tuple : block_tuples(*a, n, graded)) {
        QuotientModel::Block blk{tuple, block_monomials(n, tuple, h.size(), associative), {},
                                 RowBasis(0)};
        const auto cand = block_candidates(*a, tuple);
        const std::size_t cols = saturating_mul(product_of_sizes(cand), a->dim());
        check_budget(*a, tuple, blk.monomials.size(), cols, budget);

        std::vector<Vec> rows(blk.monomials.size(), Vec(cols, Rational(0)));
        for_each_evaluation(*a, h, blk.monomials, cand,
                            [&](std::size_t r, std::size_t aidx, const Vec& v) {
                                for (std::size_t k = 0; k < a->dim(); ++k)
                                    if (!v[k].is_zero())
                                        rows[r][aidx * a->dim() + k] = v[k];
                                return true;
                            });
        blk.row_space = RowBasis(cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (blk.row_space.add(rows[r])) blk.pivots.push_back(r);
        model.blocks.push_back(std::move(blk));
    }
    return model;
}

}
