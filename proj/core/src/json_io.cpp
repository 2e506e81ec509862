#include "equiknot/json_io.hpp"

#include <json.hpp>

#include "equiknot/error.hpp"

namespace equiknot {
namespace {

using json = nlohmann::ordered_json;

json cell_to_json(const Rat& q) {
    if (is_integer(q)) {
        const Int z = to_int(q);
        if (fits_json_number(z)) return json(static_cast<long long>(z.get_si()));
        return json(int_str(z));
    }
    return json(rat_str(q));
}

Rat cell_from_json(const json& j, const char* where) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return rat_parse(j.dump());
    if (j.is_string())
        return rat_parse(j.get<std::string>());
    fail("InvalidInput", std::string(where) + ": entries must be integers or \"p/q\" strings");
}

json matrix_to_json(const MatQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cell_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const VecQ& v) {
    json out = json::array();
    for (const Rat& q : v) out.push_back(cell_to_json(q));
    return out;
}

MatQ matrix_from_json(const json& j, const char* where) {
    require(j.is_array() && !j.empty(), "InvalidInput",
            std::string(where) + ": expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    require(j[0].is_array() && !j[0].empty(), "InvalidInput",
            std::string(where) + ": rows must be non-empty arrays");
    const int cols = static_cast<int>(j[0].size());
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == cols, "InvalidInput",
                std::string(where) + ": ragged rows");
        for (int k = 0; k < cols; ++k) m.at(i, k) = cell_from_json(j[i][k], where);
    }
    return m;
}

VecQ vector_from_json(const json& j, const char* where) {
    require(j.is_array(), "InvalidInput", std::string(where) + ": expected an array");
    VecQ v;
    v.reserve(j.size());
    for (const auto& cell : j) v.push_back(cell_from_json(cell, where));
    return v;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), "InvalidInput", "malformed JSON");
    require(j.is_object(), "InvalidInput", "top level must be an object");
    return j;
}

// One top-level key per line, values compact. dump(2) would spread matrices
// over one cell per line, which makes the fixtures unreviewable.
std::string dump_flat_object(const json& j) {
    std::string out = "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += "  " + json(key).dump() + ": " + value.dump();
    }
    out += "\n}";
    return out;
}

} // namespace

std::string seifert_to_json(const SeifertData& s) {
    json j;
    j["A"] = matrix_to_json(s.A);
    j["P"] = matrix_to_json(s.P);
    if (!s.h.empty()) j["h"] = vector_to_json(s.h);
    if (!s.lk.empty()) j["lk"] = vector_to_json(s.lk);
    if (!s.name.empty()) j["name"] = s.name;
    return dump_flat_object(j);
}

SeifertData seifert_from_json(const std::string& text) {
    const json j = parse_document(text);
    for (const auto& [key, value] : j.items()) {
        (void)value;
        require(key == "A" || key == "P" || key == "h" || key == "lk" || key == "name",
                "InvalidInput", "unknown key \"" + key + "\"");
    }
    require(j.contains("A") && j.contains("P"), "InvalidInput", "need both \"A\" and \"P\"");
    SeifertData s;
    s.A = matrix_from_json(j["A"], "A");
    s.P = matrix_from_json(j["P"], "P");
    if (j.contains("h")) s.h = vector_from_json(j["h"], "h");
    if (j.contains("lk")) s.lk = vector_from_json(j["lk"], "lk");
    if (j.contains("name")) {
        require(j["name"].is_string(), "InvalidInput", "name must be a string");
        s.name = j["name"].get<std::string>();
    }
    return s;
}

std::string witness_to_json(const MatQ& generators, bool full) {
    json j;
    json gens = json::array();
    for (int c = 0; c < generators.cols(); ++c) gens.push_back(vector_to_json(generators.column(c)));
    j["generators"] = std::move(gens);
    j["full"] = full;
    return dump_flat_object(j);
}

std::pair<MatQ, bool> witness_from_json(const std::string& text) {
    const json j = parse_document(text);
    require(j.contains("generators") && j["generators"].is_array(), "InvalidInput",
            "need a \"generators\" array");
    require(j.contains("full") && j["full"].is_boolean(), "InvalidInput",
            "need a boolean \"full\"");
    std::vector<VecQ> cols;
    for (const auto& g : j["generators"]) cols.push_back(vector_from_json(g, "generators"));
    require(!cols.empty(), "InvalidInput", "generators must be non-empty");
    const int ambient = static_cast<int>(cols[0].size());
    for (const auto& c : cols)
        require(static_cast<int>(c.size()) == ambient, "InvalidInput",
                "generators of unequal length");
    return {MatQ::from_columns(cols, ambient), j["full"].get<bool>()};
}

} // namespace equiknot
