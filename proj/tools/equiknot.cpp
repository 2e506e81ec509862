// equiknot: equivariant algebraic concordance invariants from the command line.
// Reads Seifert systems as JSON, writes JSON documents (CSV for `table`).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equiknot/error.hpp"
#include "equiknot/json_io.hpp"
#include "equiknot/polynomial.hpp"
#include "equiknot/seifert.hpp"
#include "equiknot/signature.hpp"
#include "equiknot/symmetric.hpp"
#include "equiknot/two_bridge.hpp"

using namespace equiknot;
using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    require(f.good(), "InvalidInput", "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

SeifertData load_system(const std::string& path) { return seifert_from_json(slurp(path)); }

json cell(const Rat& q) {
    if (is_integer(q)) {
        const Int z = to_int(q);
        if (fits_json_number(z)) return json(static_cast<long long>(z.get_si()));
        return json(int_str(z));
    }
    return json(rat_str(q));
}

json mat(const MatQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cell(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json enclosure(const RealRoot& r) {
    json j;
    j["poly"] = poly_text(r.poly, 's');
    j["interval"] = json::array({rat_str(r.lo), rat_str(r.hi)});
    return j;
}

// one top-level key per line; matrices stay on one line each
void emit(const json& doc) {
    std::string out = "{\n";
    bool first = true;
    for (const auto& [key, value] : doc.items()) {
        if (!first) out += ",\n";
        first = false;
        out += "  " + json(key).dump() + ": " + value.dump();
    }
    out += "\n}";
    std::cout << out << "\n";
}

// p-primary pieces arrive with p(S)^N = 0; quotient until p(S) = 0 so the
// trace transfer applies.
SymmetricStructure reduce_fully(SymmetricStructure st, const RatPoly& p) {
    while (!eval_poly(p, st.S).is_zero()) st = exponent_reduce(st, p);
    return st;
}

json summand_json(const WittSummand& w) {
    json j;
    j["p"] = poly_text(w.p, 's');
    j["rank_over_F"] = w.rank_over_F;
    j["dim_ambient"] = w.dim_ambient;
    json sigs = json::array();
    for (const auto& [root, sigma] : w.signatures) {
        json s;
        s["root"] = enclosure(root);
        s["sigma"] = sigma;
        sigs.push_back(std::move(s));
    }
    j["signatures"] = std::move(sigs);
    j["discriminant_class"] = cell(w.discriminant_class);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"equivariant algebraic concordance invariants of strongly invertible knots"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string witness_path, catalog_path, poly_arg;
    long p_arg = 0, q_arg = 0;
    int rank_arg = 1;
    long coeff_bound = 3;
    bool as_csv = false, as_json = false;

    auto* c_validate = app.add_subcommand("validate", "check the axioms of a Seifert system");
    c_validate->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_sum = app.add_subcommand("sum", "orthogonal sum of two or more systems");
    std::vector<std::string> sum_inputs;
    c_sum->add_option("inputs", sum_inputs, "system JSON files")->expected(2, -1);

    auto* c_inverse = app.add_subcommand("inverse", "concordance inverse (-A^t, P, h, -lk)");
    c_inverse->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_verify = app.add_subcommand("metabolizer-verify", "check a metabolizer witness");
    c_verify->add_option("input", input, "system JSON file, or - for stdin");
    c_verify->add_option("--witness", witness_path, "witness JSON file ({\"generators\", \"full\"})")
        ->required();

    auto* c_search = app.add_subcommand("metabolizer-search", "bounded partial-metabolizer search");
    c_search->add_option("input", input, "system JSON file, or - for stdin");
    c_search->add_option("--rank", rank_arg, "target rank")->check(CLI::PositiveNumber);
    c_search->add_option("--coeff-bound", coeff_bound, "coefficient bound for generators");

    auto* c_complexity = app.add_subcommand("complexity", "bounds on the algebraic complexity ac");
    c_complexity->add_option("input", input, "system JSON file, or - for stdin");
    c_complexity->add_option("--coeff-bound", coeff_bound, "search bound for the witness side");

    auto* c_structure = app.add_subcommand("structure", "symmetric structure (B, S) on the +1 eigenspace");
    c_structure->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_witt = app.add_subcommand("witt", "equivariant Witt invariants and trace-form summands");
    c_witt->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_profile = app.add_subcommand("profile", "signature function of the Hermitian pencil");
    c_profile->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_jumps = app.add_subcommand("jumps", "signature jumps at the breakpoints");
    c_jumps->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_genus = app.add_subcommand("genus-bound", "slice-genus lower bounds from the maximal jump");
    c_genus->add_option("input", input, "system JSON file, or - for stdin");

    auto* c_delta = app.add_subcommand("delta", "delta-transform of a symmetric Laurent polynomial");
    c_delta->add_option("--poly", poly_arg, "Laurent polynomial in t, e.g. \"-t + 3 - t^-1\"")
        ->required();

    auto* c_delta_inv = app.add_subcommand("delta-inverse", "inverse delta-transform");
    c_delta_inv->add_option("--poly", poly_arg, "polynomial in s, e.g. \"s - 10\"")->required();

    auto* c_fox = app.add_subcommand("fox-milnor", "is the Alexander polynomial of b(p,q) a square");
    c_fox->add_option("--p", p_arg, "2-bridge p (odd)")->required();
    c_fox->add_option("--q", q_arg, "2-bridge q, coprime to p")->required();

    auto* c_2b = app.add_subcommand("two-bridge", "even CF, Seifert matrix and invariants of b(p,q)");
    c_2b->add_option("--p", p_arg, "2-bridge p (odd)")->required();
    c_2b->add_option("--q", q_arg, "2-bridge q, coprime to p")->required();

    auto* c_table = app.add_subcommand("table", "recompute a 2-bridge catalog and compare");
    c_table->add_option("--catalog", catalog_path, "CSV catalog (name,p,q,order,J)")->required();
    c_table->add_flag("--csv", as_csv, "emit CSV instead of JSON");
    c_table->add_flag("--json", as_json, "emit JSON (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err;
        err["error"] = "UsageError";
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }

    if (c_validate->parsed()) {
        const std::vector<std::string> violations = validate(load_system(input));
        json doc;
        doc["valid"] = violations.empty();
        doc["violations"] = violations;
        emit(doc);
        return 0;
    }
    if (c_sum->parsed()) {
        SeifertData acc = load_system(sum_inputs[0]);
        for (size_t i = 1; i < sum_inputs.size(); ++i)
            acc = orthogonal_sum(acc, load_system(sum_inputs[i]));
        std::cout << seifert_to_json(acc) << "\n";
        return 0;
    }
    if (c_inverse->parsed()) {
        std::cout << seifert_to_json(inverse(load_system(input))) << "\n";
        return 0;
    }
    if (c_verify->parsed()) {
        const SeifertData s = load_system(input);
        const auto [generators, full] = witness_from_json(slurp(witness_path));
        std::vector<std::string> reasons;
        const bool ok = verify_metabolizer(s, generators, full, &reasons);
        json doc;
        doc["verified"] = ok;
        doc["full"] = full;
        doc["reasons"] = reasons;
        emit(doc);
        return 0;
    }
    if (c_search->parsed()) {
        const SearchOutcome out = search_partial_metabolizer(load_system(input), rank_arg, coeff_bound);
        json doc;
        doc["found"] = out.witness.has_value();
        doc["witness"] = out.witness ? json::parse(witness_to_json(*out.witness, false)) : json(nullptr);
        doc["exhaustive"] = out.exhaustive;
        doc["steps"] = out.steps;
        emit(doc);
        return 0;
    }
    if (c_complexity->parsed()) {
        const ComplexityReport r = complexity_report(load_system(input), coeff_bound);
        json doc;
        doc["m"] = r.m;
        doc["partial_rank_lower"] = r.partial_rank_lower;
        doc["partial_rank_upper"] = r.partial_rank_upper;
        doc["ac_lower"] = r.ac_lower;
        doc["ac_upper"] = r.ac_upper;
        doc["method"] = r.method;
        emit(doc);
        return 0;
    }
    if (c_structure->parsed()) {
        const SymmetricStructure st = symmetric_structure_of(load_system(input));
        json doc;
        doc["B"] = mat(st.B);
        doc["S"] = mat(st.S);
        emit(doc);
        return 0;
    }
    if (c_witt->parsed()) {
        const SeifertData s = load_system(input);
        const EquivariantWittClass cls = equivariant_witt_class(s);
        const PDecomposition dec = p_decompose(symmetric_structure_of(s));
        json doc;
        doc["q_plus"] = mat(cls.q_plus);
        doc["q_minus"] = mat(cls.q_minus);
        doc["sigma_tilde"] = equivariant_signature(s);
        json summands = json::array();
        for (const auto& [p, piece] : dec.pieces)
            summands.push_back(summand_json(trace_form_invariants(reduce_fully(piece, p), p)));
        doc["summands"] = std::move(summands);
        emit(doc);
        return 0;
    }
    if (c_profile->parsed()) {
        const SeifertData s = load_system(input);
        const SignatureProfile pr = profile(s);
        const GenusBoundReport gb = genus_bounds(s);
        json doc;
        json bps = json::array();
        for (const RealRoot& r : pr.breakpoints) bps.push_back(enclosure(r));
        doc["breakpoints"] = std::move(bps);
        doc["interval_values"] = pr.interval_values;
        doc["jumps"] = pr.jumps;
        doc["sigma"] = pr.sigma();
        doc["sigma_tilde"] = pr.sigma_tilde();
        doc["max_jump"] = gb.max_jump;
        doc["g4_lower"] = rat_str(gb.g4_lower);
        emit(doc);
        return 0;
    }
    if (c_jumps->parsed()) {
        const SignatureProfile pr = profile(load_system(input));
        json doc;
        json bps = json::array();
        for (const RealRoot& r : pr.breakpoints) bps.push_back(enclosure(r));
        doc["breakpoints"] = std::move(bps);
        doc["jumps"] = pr.jumps;
        doc["values_at"] = pr.values_at;
        emit(doc);
        return 0;
    }
    if (c_genus->parsed()) {
        const GenusBoundReport gb = genus_bounds(load_system(input));
        json doc;
        doc["max_jump"] = gb.max_jump;
        doc["g4_lower"] = rat_str(gb.g4_lower);
        doc["sc_lower"] = rat_str(gb.sc_lower);
        json per = json::array();
        for (const auto& [root, jump] : gb.per_lambda) {
            json e = enclosure(root);
            e["jump"] = jump;
            per.push_back(std::move(e));
        }
        doc["per_lambda"] = std::move(per);
        emit(doc);
        return 0;
    }
    if (c_delta->parsed()) {
        const LaurentPoly f = parse_laurent_text(poly_arg);
        json doc;
        doc["input"] = poly_text(f, 't');
        doc["delta"] = poly_text(delta_transform(f), 's');
        emit(doc);
        return 0;
    }
    if (c_delta_inv->parsed()) {
        const RatPoly q = parse_poly_text(poly_arg);
        json doc;
        doc["input"] = poly_text(q, 's');
        doc["laurent"] = poly_text(delta_inverse(q), 't');
        emit(doc);
        return 0;
    }
    if (c_fox->parsed()) {
        json doc;
        doc["is_square"] = fox_milnor_square(p_arg, q_arg);
        emit(doc);
        return 0;
    }
    if (c_2b->parsed()) {
        const EvenCF cf = even_cf(p_arg, q_arg);
        const MatQ v = two_bridge_seifert_matrix(cf);
        json doc;
        doc["p"] = p_arg;
        doc["q"] = q_arg;
        doc["q_even"] = cf.q_used;
        json entries = json::array();
        for (long a : cf.entries) entries.push_back(2 * a);
        doc["cf"] = std::move(entries);
        doc["seifert"] = mat(v);
        doc["alexander"] = poly_text(alexander_from_matrix(v), 't');
        doc["determinant"] = static_cast<long long>(to_int(abs((v + v.transposed()).det())).get_si());
        doc["max_jump"] = two_bridge_max_jump(p_arg, q_arg);
        doc["fox_milnor_square"] = fox_milnor_square(p_arg, q_arg);
        emit(doc);
        return 0;
    }
    if (c_table->parsed()) {
        require(!(as_csv && as_json), "InvalidInput", "--csv and --json are mutually exclusive");
        const TableReport report = table_run(load_catalog_file(catalog_path));
        if (as_csv) {
            std::cout << "name,p,q,order,catalog_J,computed_J,match,alexander,determinant\n";
            for (const TableRow& r : report.rows)
                std::cout << r.knot.name << "," << r.knot.p << "," << r.knot.q << ","
                          << r.knot.catalog_order << "," << r.knot.catalog_J << "," << r.computed_J
                          << "," << (r.match ? "yes" : "no") << "," << r.alexander << ","
                          << r.determinant << "\n";
            std::cout << "# mismatches: " << report.mismatches << "\n";
        } else {
            json doc;
            json rows = json::array();
            for (const TableRow& r : report.rows) {
                json e;
                e["name"] = r.knot.name;
                e["p"] = r.knot.p;
                e["q"] = r.knot.q;
                e["order"] = r.knot.catalog_order;
                e["catalog_J"] = r.knot.catalog_J;
                e["computed_J"] = r.computed_J;
                e["match"] = r.match;
                e["alexander"] = r.alexander;
                e["determinant"] = r.determinant;
                rows.push_back(std::move(e));
            }
            doc["rows"] = std::move(rows);
            doc["mismatches"] = report.mismatches;
            emit(doc);
        }
        return report.mismatches == 0 ? 0 : 3;
    }
    return 2; // unreachable: require_subcommand
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        const std::string what = e.what(); // "name: detail"
        json err;
        err["error"] = e.name();
        err["detail"] = what.substr(e.name().size() + 2);
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
