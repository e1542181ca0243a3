#include "volrig/json_io.hpp"

#include <algorithm>

namespace volrig {

namespace {

// Wrap nlohmann lookups so malformed input reports the offending field.
const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* key) {
    const json& arr = field(j, key);
    if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& x : arr) {
        if (!x.is_string()) throw ParseError(std::string("field '") + key + "' must hold strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<std::vector<std::string>> string_list_list(const json& j, const char* key) {
    const json& arr = field(j, key);
    if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<std::vector<std::string>> out;
    for (const auto& x : arr) {
        if (!x.is_array()) throw ParseError(std::string("field '") + key + "' must hold arrays");
        std::vector<std::string> inner;
        for (const auto& y : x) {
            if (!y.is_string())
                throw ParseError(std::string("field '") + key + "' must hold string arrays");
            inner.push_back(y.get<std::string>());
        }
        out.push_back(std::move(inner));
    }
    return out;
}

} // namespace

json to_json(const Hypergraph& h) {
    json j;
    j["vertices"] = h.vertices();
    j["edges"] = h.edges();
    if (h.uniformity()) j["uniformity"] = *h.uniformity();
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    std::optional<int> unif;
    if (j.is_object() && j.contains("uniformity")) {
        if (!j.at("uniformity").is_number_integer())
            throw ParseError("field 'uniformity' must be an integer");
        unif = j.at("uniformity").get<int>();
    }
    return Hypergraph(string_list(j, "vertices"), string_list_list(j, "edges"), unif);
}

json to_json(const SimplicialComplex& s) {
    json j;
    j["vertices"] = s.vertices();
    j["facets"] = s.facets();
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    auto facets = string_list_list(j, "facets");
    SimplicialComplex s(std::move(facets));
    // "vertices" is part of the schema but redundant; verify consistency when present
    if (j.contains("vertices")) {
        const auto verts = string_list(j, "vertices");
        for (const auto& v : s.vertices())
            if (std::find(verts.begin(), verts.end(), v) == verts.end())
                throw ParseError("field 'vertices' omits facet vertex '" + v + "'");
    }
    return s;
}

json to_json(const Realisation<Rational>& p) {
    json coords = json::object();
    for (const auto& [v, x] : p.coords) {
        json arr = json::array();
        for (const Rational& c : x) arr.push_back(c.to_string());
        coords[v] = std::move(arr);
    }
    json j;
    j["dim"] = p.dim;
    j["coords"] = std::move(coords);
    return j;
}

json to_json(const Realisation<Fp>& p) {
    json coords = json::object();
    for (const auto& [v, x] : p.coords) {
        json arr = json::array();
        for (const Fp& c : x) arr.push_back(c.to_string());
        coords[v] = std::move(arr);
    }
    json j;
    j["dim"] = p.dim;
    j["prime"] = std::to_string(Fp::modulus());
    j["coords"] = std::move(coords);
    return j;
}

bool realisation_json_is_prime(const json& j) { return j.is_object() && j.contains("prime"); }

namespace {

template <class F, class Parse>
Realisation<F> realisation_from_json_impl(const json& j, Parse parse) {
    Realisation<F> p;
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer()) throw ParseError("field 'dim' must be an integer");
    p.dim = dim.get<int>();
    const json& coords = field(j, "coords");
    if (!coords.is_object()) throw ParseError("field 'coords' must be an object");
    for (auto it = coords.begin(); it != coords.end(); ++it) {
        if (!it.value().is_array() || static_cast<int>(it.value().size()) != p.dim)
            throw ParseError("coords for vertex '" + it.key() + "' must be an array of length dim");
        std::vector<F> x;
        for (const auto& c : it.value()) {
            if (!c.is_string())
                throw ParseError("coords for vertex '" + it.key() + "' must be strings");
            x.push_back(parse(c.template get<std::string>()));
        }
        p.coords.emplace(it.key(), std::move(x));
    }
    return p;
}

} // namespace

Realisation<Rational> realisation_rational_from_json(const json& j) {
    return realisation_from_json_impl<Rational>(j, &Rational::from_string);
}

Realisation<Fp> realisation_prime_from_json(const json& j) {
    if (j.contains("prime")) {
        const json& pr = field(j, "prime");
        if (!pr.is_string()) throw ParseError("field 'prime' must be a string");
        if (pr.get<std::string>() != std::to_string(Fp::modulus()))
            throw ParseError("realisation prime " + pr.get<std::string>() +
                             " differs from active modulus " + std::to_string(Fp::modulus()));
    }
    return realisation_from_json_impl<Fp>(j, &Fp::from_string);
}

namespace {

template <class F>
json matrix_to_json_impl(const Matrix<F>& m, bool prime) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["field"] = prime ? "prime" : "rational";
    if (prime) j["prime"] = std::to_string(Fp::modulus());
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    if (!m.row_labels().empty()) j["row_labels"] = m.row_labels();
    if (!m.col_labels().empty()) j["col_labels"] = m.col_labels();
    return j;
}

template <class F, class Parse>
Matrix<F> matrix_from_json_impl(const json& j, Parse parse) {
    const json& rows = field(j, "rows");
    const json& cols = field(j, "cols");
    if (!rows.is_number_integer() || !cols.is_number_integer())
        throw ParseError("fields 'rows'/'cols' must be integers");
    Matrix<F> m(rows.get<std::size_t>(), cols.get<std::size_t>());
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != m.rows())
        throw ParseError("field 'entries' must be an array of `rows` rows");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != m.cols())
            throw ParseError("entries row " + std::to_string(i) + " must have `cols` entries");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const json& x = row.at(c);
            if (!x.is_string())
                throw ParseError("matrix entries must be strings (row " + std::to_string(i) + ")");
            m(i, c) = parse(x.template get<std::string>());
        }
    }
    if (j.contains("row_labels")) m.set_row_labels(string_list(j, "row_labels"));
    if (j.contains("col_labels")) m.set_col_labels(string_list(j, "col_labels"));
    return m;
}

} // namespace

json to_json(const Matrix<Rational>& m) { return matrix_to_json_impl(m, false); }
json to_json(const Matrix<Fp>& m) { return matrix_to_json_impl(m, true); }

bool matrix_json_is_prime(const json& j) {
    if (j.is_object() && j.contains("field")) {
        const json& f = j.at("field");
        if (!f.is_string()) throw ParseError("field 'field' must be a string");
        return f.get<std::string>() == "prime";
    }
    return false;
}

Matrix<Rational> matrix_rational_from_json(const json& j) {
    return matrix_from_json_impl<Rational>(j, &Rational::from_string);
}

Matrix<Fp> matrix_prime_from_json(const json& j) {
    return matrix_from_json_impl<Fp>(j, &Fp::from_string);
}

json to_json(const RankCertificate& c) {
    json j;
    j["rank"] = c.rank;
    j["field_kind"] = c.field_kind;
    if (c.seed) j["seed"] = *c.seed;
    json pivots = json::array();
    for (const auto& [r, col] : c.pivot_trace) pivots.push_back(json::array({r, col}));
    j["pivot_trace"] = std::move(pivots);
    return j;
}

json to_json(const RigidityReport& r) {
    json j;
    j["rank"] = r.rank;
    j["kernel_dim"] = r.kernel_dim;
    j["trivial_dim"] = r.trivial_dim;
    j["target_rank"] = r.target_rank;
    j["dof"] = r.dof;
    j["verdict"] = r.verdict;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    if (r.verdict == "flexible-evidence") j["sz_bound"] = r.sz_bound;
    return j;
}

json to_json(const SplitCheckResult& r) {
    json j;
    j["ok"] = r.ok;
    j["rank"] = r.rank;
    j["dim"] = r.d;
    j["rows"] = r.rows;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    return j;
}

json to_json(const ConingCheckResult& r) {
    json j;
    j["ok"] = r.ok;
    j["rank"] = r.rank;
    j["target"] = r.target;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    return j;
}

json to_json(const PaperInstance& i) {
    json j;
    j["case"] = i.id;
    j["target_rank"] = i.target_rank;
    j["achieved_rank"] = i.achieved_rank;
    j["field"] = i.field;
    j["seed"] = i.seed;
    j["pass"] = i.pass;
    return j;
}

json to_json(const PaperCaseReport& r) {
    json j;
    j["case"] = r.case_id;
    j["description"] = r.description;
    j["pass"] = r.pass;
    json instances = json::array();
    for (const PaperInstance& i : r.instances) instances.push_back(to_json(i));
    j["instances"] = std::move(instances);
    return j;
}

} // namespace volrig
