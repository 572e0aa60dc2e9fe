#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "grpi/algebra.hpp"

namespace grpi {

using nlohmann::json;

/// Algebra file schema:
/// {
///   "dim": 3,
///   "basis": ["e11", "e22", "e12"],
///   "labels": ["0", "1"],
///   "degrees": ["0", "0", "1"],                  // one label name per basis vector
///   "label_product": [["0","0","0"], ...],       // optional partial table
///   "sc": [[i, j, k, "p/q"], ...],               // e_i e_j = sum_k c e_k, zero entries omitted
///   "flags": {"associative": true, "group_grading": true}
/// }
AlgebraPtr algebra_from_json(const json& j);
json algebra_to_json(const GradedAlgebra& a);

/// Matrices are 2d arrays of "p/q" strings (integers may appear as numbers).
/// Column j holds the image of basis vector j.
Matrix matrix_from_json(const json& j);
json matrix_to_json(const Matrix& m);

struct NamedMatrix {
    std::string name;
    Matrix matrix;
};

/// Operator span file: {"operators": [{"name": n, "matrix": m}, ...], "unit": "name"}.
struct SpanInput {
    std::vector<NamedMatrix> operators;
    std::string unit_name;
};
SpanInput span_from_json(const json& j);
json span_to_json(const SpanInput& s);

/// Action file: {"generators": [{"name": n, "matrix": m}, ...],
///               "relations": [["s","s"], ...]}  (each word multiplies to the identity)
struct ActionInput {
    std::vector<NamedMatrix> generators;
    std::vector<std::vector<std::string>> relations;
};
ActionInput action_from_json(const json& j);
json action_to_json(const ActionInput& a);

json load_json_file(const std::string& path);

}
