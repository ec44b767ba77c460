#pragma once

// JSON encodings
//
//   matrix   {"n": 2, "entries": [[3, 4], [8, "7/2"]]}
//   unipoly  {"coeffs": [-2, 0, 1]}            lowest degree first
//   witness  {"n": 2, "domain": "nat", "assignment": {"A": <matrix>, ...}}
//
// Integers that fit in 64 bits are written as JSON numbers, everything else
// as a numeral string ("123456789012345678901234", "p/q"). Readers accept
// either form, and a bare array of rows wherever a matrix is expected.

#include <nlohmann/json.hpp>

#include <string>

#include "error.hpp"
#include "eval.hpp"
#include "matrix.hpp"
#include "number.hpp"
#include "unipoly.hpp"

namespace matdioph {

using json = nlohmann::json;

inline json numeral_to_json(const Rational& x) {
    if (is_integer(x)) {
        const BigInt v = numerator(x);
        if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
            return static_cast<std::int64_t>(v);
    }
    return to_string(x);
}

inline Rational numeral_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
        return Rational(BigInt(j.get<std::int64_t>()));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected an integer or a numeral string, got " + j.dump());
}

inline json to_json(const ExactMatrix& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.n(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.n(); ++c) row.push_back(numeral_to_json(a.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"n", a.n()}, {"entries", std::move(rows)}};
}

inline ExactMatrix matrix_from_json(const json& j) {
    const json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("entries")) throw Error("matrix object needs an \"entries\" field");
        rows = &j.at("entries");
    }
    if (!rows->is_array() || rows->empty()) throw Error("matrix entries must be a non-empty array of rows");
    std::vector<std::vector<Rational>> data;
    for (const auto& row : *rows) {
        if (!row.is_array()) throw Error("matrix row must be an array");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(numeral_from_json(x));
        data.push_back(std::move(r));
    }
    ExactMatrix m = ExactMatrix::from_rows(data);
    if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != m.n())
        throw DimensionError("matrix declares n = " + j.at("n").dump() + " but has " + std::to_string(m.n()) + " rows");
    return m;
}

inline json to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(numeral_to_json(c));
    return json{{"coeffs", std::move(coeffs)}};
}

inline UniPoly unipoly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(numeral_from_json(x));
    return UniPoly(std::move(c));
}

inline json to_json(const Witness& w) {
    json assignment = json::object();
    for (const auto& [v, m] : w.assignment) assignment[v.name()] = to_json(m);
    return json{{"n", w.n}, {"domain", std::string(to_string(w.domain))}, {"assignment", std::move(assignment)}};
}

inline Witness witness_from_json(const json& j) {
    Witness w;
    w.domain = j.contains("domain") ? parse_domain(j.at("domain").get<std::string>()) : Domain::Nat;
    const json& assignment = j.at("assignment");
    if (!assignment.is_object()) throw Error("witness \"assignment\" must be an object");
    for (const auto& [name, value] : assignment.items()) w.assignment.insert_or_assign(VarSymbol(name), matrix_from_json(value));
    if (j.contains("n")) {
        w.n = j.at("n").get<std::size_t>();
    } else if (!w.assignment.empty()) {
        w.n = w.assignment.begin()->second.n();
    }
    for (const auto& [v, m] : w.assignment)
        if (m.n() != w.n)
            throw DimensionError("matrix for '" + v.name() + "' is " + std::to_string(m.n()) + "x" + std::to_string(m.n()) +
                                 " in a witness of dimension " + std::to_string(w.n));
    return w;
}

}  // namespace matdioph
