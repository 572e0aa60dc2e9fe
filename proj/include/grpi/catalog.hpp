#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpi/haction.hpp"
#include "grpi/pseudo.hpp"

namespace grpi {

/// Parametric family of candidate maps on a catalog algebra. valid() cuts out
/// the parameter tuples where the map degenerates; expected() pins the
/// canonical per-pair coefficients when they have a closed form.
struct FamilyDef {
    using CoeffTable = std::map<std::pair<LabelId, LabelId>, PairCoeffs>;

    std::string name;
    std::size_t arity = 0;
    std::function<bool(const std::vector<Rational>&)> valid;
    std::function<Matrix(const std::vector<Rational>&)> make;
    std::function<CoeffTable(const std::vector<Rational>&)> expected;  // may be empty
};

struct ActionDef {
    std::string name;
    std::vector<std::pair<std::string, Matrix>> generators;
    std::vector<std::vector<std::string>> relations;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    AlgebraPtr algebra;

    std::vector<FamilyDef> families;
    std::vector<std::pair<std::string, OperatorSpan>> spans;
    std::vector<ActionDef> actions;

    struct ExpectedFacts {
        /// Pair kinds keyed by unordered label pair (min,max).
        std::map<std::pair<LabelId, LabelId>, PairCase> case_table;
        /// Spanning vectors of the largest nilpotent ideal (empty = zero).
        std::vector<Vec> radical_spanning;
        /// Component counts of the semisimple quotient decomposition, keyed by
        /// action name; "" means no action beyond grading projectors.
        std::vector<std::pair<std::string, std::size_t>> wedderburn;
        /// Leading multilinear codimensions c_1, c_2, ... (plain mode) when
        /// they are pinned independently of the computation below.
        std::vector<std::size_t> plain_codims;
    } expected;

    [[nodiscard]] const FamilyDef& family(const std::string& fname) const;
    [[nodiscard]] const OperatorSpan& span(const std::string& sname) const;
    [[nodiscard]] const ActionDef& action(const std::string& aname) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Fixed sampling grid for family parameters.
const std::vector<Rational>& parameter_grid();

/// First `count` valid parameter tuples of the family, enumerated over the
/// grid in mixed radix order (last coordinate fastest). Deterministic.
std::vector<std::vector<Rational>> sample_params(const FamilyDef& f, std::size_t count);

/// Standalone builders, also used outside the catalog.
AlgebraPtr build_upper_triangular(std::size_t n, bool mod2_graded);
AlgebraPtr build_matrix_algebra(std::size_t n);
AlgebraPtr build_m11();
AlgebraPtr build_grassmann(std::size_t m);
AlgebraPtr build_a0();
AlgebraPtr build_qq();
AlgebraPtr build_qc2();
AlgebraPtr build_m2_plus_m3();

}
