#include "grpi/json_io.hpp"

#include <fstream>

#include "grpi/errors.hpp"

namespace grpi {

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw InputError("expected a rational as \"p/q\" string or integer, got " + v.dump());
}

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing required key '") + key + "'");
    return *it;
}

}  // namespace

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object()) throw InputError("algebra file must be a JSON object");
    auto basis = need(j, "basis").get<std::vector<std::string>>();
    auto labels = need(j, "labels").get<std::vector<std::string>>();
    auto degree_names = need(j, "degrees").get<std::vector<std::string>>();
    if (j.contains("dim") && j["dim"].get<std::size_t>() != basis.size())
        throw InputError("dim does not match basis length");
    if (degree_names.size() != basis.size())
        throw InputError("degrees length does not match basis length");

    GradedAlgebra::Flags flags;
    if (j.contains("flags")) {
        const json& f = j["flags"];
        flags.associative = f.value("associative", true);
        flags.group_grading = f.value("group_grading", false);
    }

    auto label_index = [&](const std::string& name) -> LabelId {
        for (LabelId t = 0; t < labels.size(); ++t)
            if (labels[t] == name) return t;
        throw InputError("unknown label '" + name + "'");
    };

    std::vector<LabelId> degrees;
    degrees.reserve(degree_names.size());
    for (const auto& d : degree_names) degrees.push_back(label_index(d));

    auto a = std::make_shared<GradedAlgebra>(basis, labels, degrees, flags);

    for (const json& entry : need(j, "sc")) {
        if (!entry.is_array() || entry.size() != 4)
            throw InputError("sc entries must be [i, j, k, value]");
        a->set_product(entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                       entry[2].get<std::size_t>(), rational_from_json(entry[3]));
    }

    if (j.contains("label_product")) {
        for (const json& entry : j["label_product"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw InputError("label_product entries must be [s, t, r]");
            a->set_label_product(label_index(entry[0].get<std::string>()),
                                 label_index(entry[1].get<std::string>()),
                                 label_index(entry[2].get<std::string>()));
        }
    }
    return a;
}

json algebra_to_json(const GradedAlgebra& a) {
    json j;
    j["dim"] = a.dim();
    json basis = json::array(), labels = json::array(), degrees = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        basis.push_back(a.basis_name(i));
        degrees.push_back(a.label_name(a.degree(i)));
    }
    for (LabelId t = 0; t < a.label_count(); ++t) labels.push_back(a.label_name(t));
    j["basis"] = basis;
    j["labels"] = labels;
    j["degrees"] = degrees;
    json sc = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            const Vec& p = a.basis_product(i, jj);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!p[k].is_zero()) sc.push_back(json::array({i, jj, k, p[k].str()}));
        }
    j["sc"] = sc;
    json lp = json::array();
    for (LabelId s = 0; s < a.label_count(); ++s)
        for (LabelId t = 0; t < a.label_count(); ++t)
            if (auto r = a.label_product(s, t))
                lp.push_back(json::array({a.label_name(s), a.label_name(t), a.label_name(*r)}));
    if (!lp.empty()) j["label_product"] = lp;
    j["flags"] = {{"associative", a.flags().associative},
                  {"group_grading", a.flags().group_grading}};
    return j;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty 2d array");
    std::vector<Vec> rows;
    for (const json& row : j) {
        if (!row.is_array()) throw InputError("matrix rows must be arrays");
        Vec r;
        for (const json& v : row) r.push_back(rational_from_json(v));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

SpanInput span_from_json(const json& j) {
    SpanInput s;
    for (const json& op : need(j, "operators")) {
        s.operators.push_back(
            {need(op, "name").get<std::string>(), matrix_from_json(need(op, "matrix"))});
    }
    s.unit_name = need(j, "unit").get<std::string>();
    return s;
}

json span_to_json(const SpanInput& s) {
    json ops = json::array();
    for (const auto& op : s.operators)
        ops.push_back({{"name", op.name}, {"matrix", matrix_to_json(op.matrix)}});
    return {{"operators", ops}, {"unit", s.unit_name}};
}

ActionInput action_from_json(const json& j) {
    ActionInput a;
    for (const json& g : need(j, "generators")) {
        a.generators.push_back(
            {need(g, "name").get<std::string>(), matrix_from_json(need(g, "matrix"))});
    }
    if (j.contains("relations"))
        a.relations = j["relations"].get<std::vector<std::vector<std::string>>>();
    return a;
}

json action_to_json(const ActionInput& a) {
    json gens = json::array();
    for (const auto& g : a.generators)
        gens.push_back({{"name", g.name}, {"matrix", matrix_to_json(g.matrix)}});
    return {{"generators", gens}, {"relations", a.relations}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

}
