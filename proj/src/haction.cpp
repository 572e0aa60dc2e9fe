#include "grpi/haction.hpp"

#include <cassert>
#include <sstream>

#include "grpi/errors.hpp"

namespace grpi {

OperatorSpan make_span(std::vector<std::pair<std::string, Matrix>> ops,
                       const std::string& unit_name) {
    OperatorSpan span;
    std::size_t unit = ops.size();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].first == unit_name) unit = i;
        span.ops.push_back({std::move(ops[i].first), std::move(ops[i].second)});
    }
    if (unit == ops.size()) throw InputError("span has no operator named '" + unit_name + "'");
    if (!span.ops[unit].matrix.is_identity())
        throw InputError("span unit '" + unit_name + "' is not the identity operator");
    span.unit_index = unit;
    for (const auto& op : span.ops)
        if (op.matrix.rows() != span.unit().rows() || op.matrix.cols() != span.unit().cols())
            throw InputError("span operator '" + op.name + "' has mismatched shape");
    return span;
}

OperatorSpan identity_span(std::size_t dim) {
    OperatorSpan span;
    span.ops.push_back({"1", Matrix::identity(dim)});
    span.unit_index = 0;
    return span;
}

GeneralizedActionReport verify_generalized_action(const GradedAlgebra& a, const OperatorSpan& h) {
    const std::size_t n = a.dim();
    const std::size_t m = h.size();
    for (const auto& op : h.ops)
        if (op.matrix.rows() != n || op.matrix.cols() != n)
            throw InputError("span operator '" + op.name + "' does not act on this algebra");

    // images[u][i] = u applied to basis vector i
    std::vector<std::vector<Vec>> images(m, std::vector<Vec>(n));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t i = 0; i < n; ++i) images[u][i] = h.ops[u].matrix.col(i);

    // prod[u][v] laid out over basis pairs: (u e_i)(v e_j)
    std::vector<std::vector<std::vector<Vec>>> prod(m, std::vector<std::vector<Vec>>(m));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            auto& cell = prod[u][v];
            cell.resize(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    cell[i * n + j] = a.multiply(images[u][i], images[v][j]);
        }

    GeneralizedActionReport rep;
    const std::size_t cols = 2 * m * m;
    for (const auto& op : h.ops) {
        Matrix sys(n * n * n, cols);
        Matrix rhs(n * n * n, 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec target = op.matrix.apply(a.basis_product(i, j));
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t r = (i * n + j) * n + k;
                    for (std::size_t u = 0; u < m; ++u)
                        for (std::size_t v = 0; v < m; ++v) {
                            sys.at(r, u * m + v) = prod[u][v][i * n + j][k];
                            sys.at(r, m * m + u * m + v) = prod[u][v][j * n + i][k];
                        }
                    rhs.at(r, 0) = target[k];
                }
            }
        auto sol = solve(sys, rhs);
        if (!sol.feasible) {
            rep.ok = false;
            rep.offending = op.name;
            return rep;
        }
        GeneralizedActionWitness::Decomposition dec{Matrix(m, m), Matrix(m, m)};
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v) {
                dec.x.at(u, v) = sol.particular.at(u * m + v, 0);
                dec.y.at(u, v) = sol.particular.at(m * m + u * m + v, 0);
            }
        // re-verify the witness directly against the product table
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec acc(n, Rational(0));
                for (std::size_t u = 0; u < m; ++u)
                    for (std::size_t v = 0; v < m; ++v) {
                        const Vec& fwd = prod[u][v][i * n + j];
                        const Vec& rev = prod[u][v][j * n + i];
                        for (std::size_t k = 0; k < n; ++k) {
                            acc[k] += dec.x.at(u, v) * fwd[k];
                            acc[k] += dec.y.at(u, v) * rev[k];
                        }
                    }
                if (acc != op.matrix.apply(a.basis_product(i, j)))
                    throw CheckError("generalized action witness failed re-verification");
            }
        rep.witness.names.push_back(op.name);
        rep.witness.decomps.push_back(std::move(dec));
    }
    rep.ok = true;
    return rep;
}

OperatorSpan projection_action(const GradedAlgebra& a) {
    OperatorSpan span;
    span.ops.push_back({"1", Matrix::identity(a.dim())});
    span.unit_index = 0;
    for (LabelId t : a.supp())
        span.ops.push_back({"p_" + a.label_name(t), a.projector(t)});
    return span;
}

OperatorSpan tensor_action(const GradedAlgebra& a, const OperatorSpan& h) {
    const std::size_t n = a.dim();
    for (const auto& op : h.ops) {
        if (op.matrix.rows() != n || op.matrix.cols() != n)
            throw InputError("span operator '" + op.name + "' does not act on this algebra");
        for (std::size_t j = 0; j < n; ++j) {
            const LabelId d = a.degree(j);
            const Vec img = op.matrix.col(j);
            for (std::size_t k = 0; k < n; ++k)
                if (!img[k].is_zero() && a.degree(k) != d) {
                    std::ostringstream msg;
                    msg << "operator '" << op.name << "' moves basis vector " << j
                        << " (degree " << a.label_name(d) << ") into degree "
                        << a.label_name(a.degree(k));
                    throw InputError(msg.str());
                }
        }
    }

    OperatorSpan out;
    out.ops.push_back({"1", Matrix::identity(n)});
    out.unit_index = 0;
    RowBasis basis(n * n);
    basis.add(Matrix::identity(n).flatten());
    for (LabelId t : a.supp()) {
        const Matrix p = a.projector(t);
        for (const auto& op : h.ops) {
            Matrix cand = p * op.matrix;
            if (!basis.add(cand.flatten())) continue;
            out.ops.push_back({"p_" + a.label_name(t) + "*" + op.name, std::move(cand)});
        }
    }
    return out;
}

namespace {

bool invariant_under(const Subspace& v, const Matrix& op) {
    for (const auto& row : v.basis())
        if (!v.contains(op.apply(row))) return false;
    return true;
}

}

InvarianceComparison invariant_subspaces_coincide(const GradedAlgebra& a, const OperatorSpan& h,
                                                  const Subspace& v) {
    InvarianceComparison cmp;
    const OperatorSpan tensor = tensor_action(a, h);
    cmp.tensor_invariant = true;
    for (const auto& op : tensor.ops)
        if (!invariant_under(v, op.matrix)) {
            cmp.tensor_invariant = false;
            break;
        }
    cmp.graded_and_invariant = is_graded_subspace(a, v);
    if (cmp.graded_and_invariant)
        for (const auto& op : h.ops)
            if (!invariant_under(v, op.matrix)) {
                cmp.graded_and_invariant = false;
                break;
            }
    return cmp;
}

}
