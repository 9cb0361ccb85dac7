#include "qclaw/seedio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qclaw/errors.hpp"

namespace qclaw {

namespace {

using nlohmann::json;

IntMat parse_matrix(const json& j, const std::string& field, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("field '" + field + "' must be an array of " + std::to_string(rows) +
                         " rows");
    IntMat out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("field '" + field + "', row " + std::to_string(r + 1) + ": expected " +
                             std::to_string(cols) + " integer entries");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer())
                throw ParseError("field '" + field + "', entry (" + std::to_string(r + 1) + "," +
                                 std::to_string(c + 1) + ") is not an integer");
            out.at(r, c) = row[c].get<long long>();
        }
    }
    return out;
}

long long require_int(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError("field '" + field + "' must be an integer");
    return j[field].get<long long>();
}

}  // namespace

SeedFile parse_seed_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("seed file must be a JSON object");

    const long long m = require_int(j, "m");
    const long long n_ex = require_int(j, "n_ex");
    if (m <= 0 || n_ex <= 0 || n_ex > m)
        throw ParseError("need 0 < n_ex <= m");
    if (!j.contains("lambda")) throw ParseError("missing field 'lambda'");
    if (!j.contains("b_tilde")) throw ParseError("missing field 'b_tilde'");

    SeedFile seed;
    const IntMat lambda = parse_matrix(j["lambda"], "lambda", static_cast<int>(m),
                                       static_cast<int>(m));
    const IntMat b_tilde = parse_matrix(j["b_tilde"], "b_tilde", static_cast<int>(m),
                                        static_cast<int>(n_ex));
    seed.pair = check_compatible(lambda, b_tilde);

    if (j.contains("names")) {
        const json& names = j["names"];
        if (!names.is_array() || static_cast<long long>(names.size()) != m)
            throw ParseError("field 'names' must list exactly m strings");
        for (const json& n : names) {
            if (!n.is_string()) throw ParseError("field 'names' must list exactly m strings");
            seed.names.push_back(n.get<std::string>());
        }
    }
    if (j.contains("grading")) {
        const json& g = j["grading"];
        if (!g.is_array() || static_cast<long long>(g.size()) != m)
            throw ParseError("field 'grading' must list exactly m integers");
        GradingVector d;
        for (const json& v : g) {
            if (!v.is_number_integer())
                throw ParseError("field 'grading' must list exactly m integers");
            d.push_back(v.get<long long>());
        }
        if (!in_grading_lattice(seed.pair.b_tilde, d))
            throw NotInLatticeError("field 'grading' is not in the grading lattice of b_tilde");
        seed.grading = std::move(d);
    }
    if (j.contains("description")) {
        if (!j["description"].is_string())
            throw ParseError("field 'description' must be a string");
        seed.description = j["description"].get<std::string>();
    }
    return seed;
}

SeedFile load_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open seed file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_seed_json(buf.str());
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string seed_to_json(const SeedFile& seed) {
    nlohmann::ordered_json j;
    j["m"] = seed.pair.m;
    j["n_ex"] = seed.pair.n_ex;
    auto matrix = [](const IntMat& mat) {
        json rows = json::array();
        for (int r = 0; r < mat.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["lambda"] = matrix(seed.pair.lambda);
    j["b_tilde"] = matrix(seed.pair.b_tilde);
    if (!seed.names.empty()) j["names"] = seed.names;
    if (seed.grading) j["grading"] = *seed.grading;
    if (!seed.description.empty()) j["description"] = seed.description;
    return j.dump(2);
}

}  // namespace qclaw
