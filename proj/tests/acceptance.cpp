// Acceptance harness: one pass/fail line per criterion, with timing against
// the limit pinned next to each entry. All arithmetic is exact; the only
// tolerances are the wall-clock limits. Exits 0 iff every criterion passes.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "grpi/catalog.hpp"
#include "grpi/cochar.hpp"
#include "grpi/pi.hpp"
#include "grpi/pseudo.hpp"
#include "grpi/structure.hpp"

using namespace grpi;
namespace fs = std::filesystem;

namespace {

#define ACC_CHECK(cond)                                                              \
    do {                                                                             \
        if (!(cond)) throw std::runtime_error("check failed: " #cond);               \
    } while (0)

using Report = std::vector<std::string>;

// ---- tool invocation (criterion 1 drives the installed binary) -------------

int run_tool(const std::string& args) {
    const std::string cmd = std::string(GRPI_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string export_entry(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "grpi_acceptance";
    fs::create_directories(dir);
    const fs::path file = dir / (name + ".json");
    const std::string cmd =
        std::string(GRPI_TOOL_PATH) + " catalog export " + name + " > " + file.string();
    ACC_CHECK(std::system(cmd.c_str()) == 0);
    return file.string();
}

// ---- small exact helpers ---------------------------------------------------

Vec unit_vec(std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v[i] = Rational(1);
    return v;
}

bool subspace_equal(const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return false;
    for (const Vec& v : x.basis())
        if (!y.contains(v)) return false;
    return true;
}

PseudoAutoCertificate must_certify(const AlgebraPtr& a, const Matrix& phi) {
    CertifyResult r = certify(a, phi);
    if (!r.ok()) throw std::runtime_error("certification refused: " + r.refusal.reason);
    return *r.cert;
}

// Four-term multilinear expansion of [[x1,x2],x3], left-to-right bracketing.
std::vector<std::pair<Rational, Monomial>> triple_commutator() {
    const auto mono = [](std::vector<std::size_t> order) {
        Monomial m;
        m.n = 3;
        m.order = std::move(order);
        m.degrees.assign(3, any_degree);
        m.decorations.assign(3, 0);
        return m;
    };
    return {{Rational(1), mono({0, 1, 2})},
            {Rational(-1), mono({1, 0, 2})},
            {Rational(-1), mono({2, 0, 1})},
            {Rational(1), mono({2, 1, 0})}};
}

// ---- independent codimension oracle (criterion 8) --------------------------
// Straight re-derivation: list the n! left-bracketed products, evaluate them
// on every basis assignment, and row-reduce the dense matrix. Shares nothing
// with the block/streaming engine.

std::size_t dense_rank(std::vector<Vec> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t oracle_codim(const GradedAlgebra& a, std::size_t n) {
    const std::size_t dim = a.dim();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<Vec> rows;
    do {
        Vec row;
        std::vector<std::size_t> assign(n, 0);
        while (true) {
            Vec value = unit_vec(dim, assign[order[0]]);
            for (std::size_t p = 1; p < n; ++p)
                value = a.multiply(value, unit_vec(dim, assign[order[p]]));
            row.insert(row.end(), value.begin(), value.end());
            std::size_t v = n;
            while (v > 0 && ++assign[v - 1] == dim) assign[--v] = 0;
            if (v == 0) break;
        }
        rows.push_back(std::move(row));
    } while (std::next_permutation(order.begin(), order.end()));
    return dense_rank(std::move(rows));
}

// Hook length formula, used as the character-free dimension source.
std::size_t hook_dimension(const Partition& lambda) {
    std::size_t n = 0;
    for (std::size_t part : lambda) n += part;
    std::vector<std::size_t> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (std::size_t row = 0; row < lambda.size(); ++row)
        for (std::size_t col = 0; col < lambda[row]; ++col) ++conj[col];
    Rational result(1);
    for (std::size_t k = 1; k <= n; ++k) result *= Rational(long(k));
    for (std::size_t row = 0; row < lambda.size(); ++row)
        for (std::size_t col = 0; col < lambda[row]; ++col) {
            const long hook = long(lambda[row] - col) + long(conj[col] - row) - 1;
            result /= Rational(hook);
        }
    ACC_CHECK(result.is_integer());
    return std::size_t(result.to_long());
}

// ---- criteria --------------------------------------------------------------

void criterion_identity_laws(Report&) {
    const std::string file = export_entry("ut2_graded");
    ACC_CHECK(run_tool("identity " + file + " '[x^{(0)}, y^{(0)}]'") == 0);
    ACC_CHECK(run_tool("identity " + file + " 'x^{(1)} y^{(1)}'") == 0);
}

void criterion_a0_formulas(Report& report) {
    const CatalogEntry& e = catalog_entry("a0");
    const FamilyDef& f = e.family("c_family");
    const auto samples = sample_params(f, 24);
    ACC_CHECK(samples.size() >= 20);
    for (const auto& p : samples) {
        const PseudoAutoCertificate cert = must_certify(e.algebra, f.make(p));
        const Rational lead = p[5] / (Rational(2) * p[0] * p[0] * p[2]);
        ACC_CHECK(cert.at(0, 0).alpha == lead * (p[2] + p[0]));
        ACC_CHECK(cert.at(0, 0).beta == lead * (p[2] - p[0]));
    }
    const Subspace j = radical(*e.algebra);
    ACC_CHECK(j.dim() == 3);
    for (std::size_t i = 1; i < 4; ++i) ACC_CHECK(j.contains(unit_vec(4, i)));
    report.push_back("coefficient formulas verified on " + std::to_string(samples.size()) +
                     " parameter tuples; radical is the span of the three nilpotents");
}

void criterion_grassmann_family(Report& report) {
    const CatalogEntry& e = catalog_entry("grassmann3");
    const FamilyDef& f = e.family("q_scale");
    const auto samples = sample_params(f, 12);
    ACC_CHECK(samples.size() >= 10);
    std::vector<PseudoAutoCertificate> certs;
    for (const auto& p : samples) {
        ACC_CHECK(p[0] * p[0] != p[1] * p[1]);
        certs.push_back(must_certify(e.algebra, f.make(p)));
        ACC_CHECK(certs.back().at(0, 0).alpha == p[0]);
        ACC_CHECK(certs.back().at(0, 0).beta == p[1]);
    }
    std::size_t compositions = 0;
    for (std::size_t i = 0; i + 1 < certs.size(); i += 2) {
        const CertifyResult c = compose(certs[i], certs[i + 1]);
        ACC_CHECK(c.ok());
        ACC_CHECK(c.cert->tau == tau_multiply(certs[i].tau, certs[i + 1].tau));
        ++compositions;
    }
    report.push_back(std::to_string(certs.size()) + " certified members, " +
                     std::to_string(compositions) + " compositions with multiplicative invariant");
}

void criterion_m11_classification(Report&) {
    const CatalogEntry& e = catalog_entry("m11");
    ACC_CHECK(classify_pair(*e.algebra, 0, 1).kind == PairCase::FreePair);

    std::vector<PseudoAutoCertificate> certs;
    for (const auto& p : sample_params(e.family("scale"), 6))
        certs.push_back(must_certify(e.algebra, e.family("scale").make(p)));
    certs.push_back(must_certify(e.algebra, e.family("transpose").make({})));
    certs.push_back(must_certify(e.algebra, e.family("pseudoinvolution").make({})));
    certs.push_back(must_certify(e.algebra, e.family("superinvolution").make({})));

    const Vec unit = *find_unit(*e.algebra);
    for (const auto& cert : certs) {
        for (const auto& [key, pc] : cert.coeffs) ACC_CHECK((pc.alpha * pc.beta).is_zero());
        if (cert.phi.apply(unit) == unit)
            ACC_CHECK(cert.at(0, 1).alpha + cert.at(0, 1).beta == Rational(1));
    }

    // Composition law of the scale/transpose semidirect product: conjugating a
    // scale tuple by the transpose swaps its two off-diagonal parameters.
    const auto S = [&](const std::vector<Rational>& p) {
        return must_certify(e.algebra, e.family("scale").make(p));
    };
    const PseudoAutoCertificate T = must_certify(e.algebra, e.family("transpose").make({}));
    const auto pairs = sample_params(e.family("scale"), 4);
    for (std::size_t i = 0; i + 1 < pairs.size(); i += 2) {
        const auto &p = pairs[i], &q = pairs[i + 1];
        const CertifyResult st1 = compose(S(p), T);
        const CertifyResult st2 = compose(S(q), T);
        ACC_CHECK(st1.ok() && st2.ok());
        const CertifyResult prod = compose(*st1.cert, *st2.cert);
        ACC_CHECK(prod.ok());
        const PseudoAutoCertificate expect = S({p[0] * q[0], p[1] * q[2], p[2] * q[1]});
        ACC_CHECK(prod.cert->phi == expect.phi);
        ACC_CHECK(prod.cert->coeffs == expect.coeffs);
    }
}

void criterion_rigidity(Report& report) {
    const auto f = triple_commutator();
    std::size_t maps = 0;
    std::mt19937 rng(2026);
    const auto draw = [&rng] {
        return Rational(long(rng() % 13) - 6) / Rational(long(rng() % 3) + 1);
    };
    const struct {
        const char* name;
        std::size_t count;
    } targets[] = {{"m2", 34}, {"ut2", 33}, {"ut3", 33}};
    for (const auto& target : targets) {
        const CatalogEntry& e = catalog_entry(target.name);
        const IdentityReport rep = is_identity(*e.algebra, identity_span(e.algebra->dim()), f);
        ACC_CHECK(!rep.identity);
        ACC_CHECK(rep.witness.has_value());
        for (std::size_t done = 0; done < target.count;) {
            const FamilyDef& fam = e.families[rng() % e.families.size()];
            std::vector<Rational> p(fam.arity);
            for (auto& x : p) x = draw();
            if (!fam.valid(p)) continue;
            const PseudoAutoCertificate cert = must_certify(e.algebra, fam.make(p));
            for (const auto& [key, pc] : cert.coeffs)
                ACC_CHECK((pc.alpha * pc.beta).is_zero());
            ++done;
            ++maps;
        }
    }
    ACC_CHECK(maps >= 100);
    report.push_back("nonmembership witnessed on all three algebras; " + std::to_string(maps) +
                     " random certified maps all one-sided");
}

void criterion_radical_invariance(Report& report) {
    std::size_t checked = 0;
    for (const CatalogEntry& e : catalog()) {
        const Subspace j = radical(*e.algebra);
        for (const ActionDef& act : e.actions) {
            const ActionResult res = certify_action(e.algebra, act.generators, act.relations);
            ACC_CHECK(res.ok());
            for (const auto& [name, cert] : res.action->generators) {
                std::vector<Vec> img;
                for (const Vec& v : j.basis()) img.push_back(cert.phi.apply(v));
                ACC_CHECK(subspace_equal(Subspace::span(e.algebra->dim(), img), j));
                (void)name;
            }
            ++checked;
        }
    }
    report.push_back(std::to_string(checked) + " certified actions carry the radical onto itself");
}

void criterion_invariant_decomposition(Report&) {
    const CatalogEntry& qq = catalog_entry("qq_swap");
    const StructureReport swapped =
        analyze(*qq.algebra, qq.action("swap").generators, 0);
    ACC_CHECK(swapped.wedderburn.components.size() == 1);

    const CatalogEntry& mm = catalog_entry("m2_plus_m3");
    const StructureReport two = analyze(*mm.algebra, {}, 0);
    ACC_CHECK(two.wedderburn.components.size() == 2);

    for (const StructureReport* rep : {&swapped, &two}) {
        const GradedAlgebra& b = *rep->quotient.algebra;
        std::size_t total = 0;
        std::vector<Vec> all;
        for (const auto& comp : rep->wedderburn.components) {
            total += comp.basis.dim();
            for (const Vec& v : comp.basis.basis()) all.push_back(v);
        }
        ACC_CHECK(total == b.dim());
        ACC_CHECK(Subspace::span(b.dim(), all).dim() == b.dim());
        const auto& comps = rep->wedderburn.components;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (i == k) continue;
                for (const Vec& x : comps[i].basis.basis())
                    for (const Vec& y : comps[k].basis.basis()) {
                        Vec prod = b.multiply(x, y);
                        for (const Rational& c : prod) ACC_CHECK(c.is_zero());
                    }
            }
    }
}

void criterion_codim_oracle(Report& report) {
    const AlgebraPtr ut2 = catalog_entry("ut2").algebra;
    const OperatorSpan id = identity_span(3);
    const std::array<std::size_t, 4> expected = {1, 2, 6, 18};
    std::string line = "upper triangular 2x2, plain codimensions";
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t engine = codimension(*ut2, id, n, false).c_n;
        const std::size_t oracle = oracle_codim(*ut2, n);
        ACC_CHECK(engine == expected[n - 1]);
        ACC_CHECK(oracle == expected[n - 1]);
        line += " " + std::to_string(engine);
    }
    report.push_back(line + " (engine == dense oracle)");
}

void criterion_codim_equality(Report&) {
    const struct {
        const char* entry;
        const char* span;
    } runs[] = {{"ut2_graded", ""}, {"ut2_graded", "flip_span"}, {"m11", ""}, {"m11", "sigma_span"}};
    for (const auto& run : runs) {
        const CatalogEntry& e = catalog_entry(run.entry);
        const OperatorSpan h = *run.span ? e.span(run.span) : identity_span(e.algebra->dim());
        for (std::size_t n = 1; n <= 3; ++n) {
            const CodimEqualityReport rep = codim_equality_check(*e.algebra, h, n);
            ACC_CHECK(rep.equal);
        }
    }
}

void criterion_cocharacter_consistency(Report& report) {
    // Entries whose evaluation matrices exceed the fixed budget at n = 4 run
    // up to n = 3 instead (the two largest algebras); nothing is sampled.
    std::size_t runs = 0;
    for (const CatalogEntry& e : catalog()) {
        const std::size_t dim = e.algebra->dim();
        const OperatorSpan id = identity_span(dim);
        for (std::size_t n = 1; n <= 4; ++n) {
            std::size_t entries = 1;
            for (std::size_t k = 2; k <= n; ++k) entries *= k;
            for (std::size_t k = 0; k <= n; ++k) entries *= dim;
            if (entries > evaluation_budget) break;
            for (const bool graded : {false, true}) {
                if (graded && e.algebra->supp().size() < 2) continue;
                const CocharacterResult res = cocharacter(
                    quotient_model(e.algebra, id, n, graded));
                const std::size_t c_n = codimension(*e.algebra, id, n, graded).c_n;
                std::size_t weighted = 0;
                for (const auto& [lambda, mult] : res.multiplicities) {
                    ACC_CHECK(mult >= 1);
                    weighted += mult * hook_dimension(lambda);
                }
                ACC_CHECK(weighted == c_n);
                ACC_CHECK(res.colength <= c_n);
                ++runs;
            }
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        const auto mus = parts;
        std::size_t nfact = 1;
        for (std::size_t k = 2; k <= n; ++k) nfact *= k;
        std::size_t dim_sq = 0;
        for (const auto& lambda : parts) {
            const std::size_t d = hook_dimension(lambda);
            ACC_CHECK(d == std::size_t(sn_character(lambda, Partition(n, 1))));
            dim_sq += d * d;
            for (const auto& rho : parts) {
                long long dot = 0;
                for (const auto& mu : mus)
                    dot += static_cast<long long>(class_size(mu)) * sn_character(lambda, mu) *
                           sn_character(rho, mu);
                ACC_CHECK(dot == static_cast<long long>(lambda == rho ? nfact : 0));
            }
        }
        ACC_CHECK(dim_sq == nfact);
    }
    report.push_back(std::to_string(runs) +
                     " cocharacter runs consistent; character table orthogonal through n = 6");
}

void criterion_growth_prefix(Report& report) {
    for (const char* name : {"ut2", "m2"}) {
        const CatalogEntry& e = catalog_entry(name);
        const OperatorSpan id = identity_span(e.algebra->dim());
        std::vector<std::size_t> c;
        for (std::size_t n = 1; n <= 4; ++n)
            c.push_back(codimension(*e.algebra, id, n, false).c_n);
        for (std::size_t n = 1; n <= 3; ++n)
            ACC_CHECK(c[n] <= e.algebra->dim() * (n + 1) * c[n - 1]);
        std::ostringstream line;
        line << name << " root growth c_n^(1/n):";
        for (std::size_t n = 1; n <= 4; ++n) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.3f", std::pow(double(c[n - 1]), 1.0 / double(n)));
            line << buf;
        }
        report.push_back(line.str());
    }
}

struct Criterion {
    int id;
    const char* description;
    double limit_seconds;
    std::function<void(Report&)> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "graded identity laws of upper triangular 2x2 confirmed by the tool", 1.0,
         criterion_identity_laws},
        {2, "closed coefficient formulas and radical of the 4-dimensional unital algebra", 1.0,
         criterion_a0_formulas},
        {3, "two-parameter family on the rank-3 exterior algebra with multiplicative invariant",
         5.0, criterion_grassmann_family},
        {4, "graded 2x2 matrix maps: free pair, one-sided coefficients, semidirect composition",
         5.0, criterion_m11_classification},
        {5, "double commutator non-identity forces one-sided coefficients on 100 random maps",
         10.0, criterion_rigidity},
        {6, "every certified catalog action maps the radical onto itself", 5.0,
         criterion_radical_invariance},
        {7, "invariant decomposition: swap fuses QxQ, matrix sum splits in two", 5.0,
         criterion_invariant_decomposition},
        {8, "codimension engine matches an independent dense oracle (1, 2, 6, 18)", 60.0,
         criterion_codim_oracle},
        {9, "graded and projector-composed codimensions agree for n <= 3", 120.0,
         criterion_codim_equality},
        {10, "cocharacter multiplicities integral, dimension-exact, orthogonality through n = 6",
         120.0, criterion_cocharacter_consistency},
        {11, "finite growth prefix: roots reported, coarse ratio bound holds", 120.0,
         criterion_growth_prefix},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        Report report;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.fn(report);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && secs <= c.limit_seconds;
        all_ok = all_ok && ok;
        std::printf("%s %2d [%6.2fs <= %.0fs] %s\n", ok ? "PASS" : "FAIL", c.id, secs,
                    c.limit_seconds, c.description);
        for (const auto& line : report) std::printf("        %s\n", line.c_str());
        if (!error.empty()) std::printf("        error: %s\n", error.c_str());
    }
    return all_ok ? 0 : 1;
}
