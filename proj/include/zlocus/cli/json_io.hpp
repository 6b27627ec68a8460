#pragma once

// JSON file formats. Polynomials are strings in the poly_text grammar.
//
//   cells:        {"variables": [...], "cells": [{"f": "<poly>", "ideal": ["<poly>", ...]}, ...]}
//   presentation: {"variables": [...], "A": [["<poly>", ...], ...], "y": ["<poly>", ...]}
//   chart:        {"n": int, "p": int, "q": int, "a": [[["<poly in x>"]]], "f": [["<poly in x>"]]}

#include <string>
#include <vector>

#include "json.hpp"
#include "zlocus/cli/poly_text.hpp"
#include "zlocus/constructible/constructible_set.hpp"
#include "zlocus/error.hpp"
#include "zlocus/infinitesimal/tangent_system.hpp"
#include "zlocus/zerolocus/zero_locus.hpp"

namespace zlocus {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw input_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing field \"") + key + "\"");
    return *it;
}

inline const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw input_error(std::string("field \"") + key + "\" must be an array");
    return v;
}

inline Poly poly_from_json(const Json& j, const RingPtr& ring, const std::string& where) {
    if (!j.is_string()) throw input_error(where + ": polynomial must be a string");
    try {
        return parse_poly(j.get<std::string>(), ring);
    } catch (const parse_error& e) {
        throw parse_error(where + ": " + e.what(), e.offset());
    }
}

inline std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw input_error(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace detail

inline RingPtr ring_from_json(const Json& variables) {
    if (!variables.is_array()) throw input_error("\"variables\" must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : variables) {
        if (!v.is_string()) throw input_error("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    return PolyRing::make(std::move(names));
}

inline Json ring_to_json(const PolyRing& ring) { return Json(ring.names()); }

inline Json to_json(const ConstructibleSet& s) {
    Json cells = Json::array();
    for (const auto& c : s.cells()) {
        Json ideal = Json::array();
        for (const auto& g : c.ideal().generators()) ideal.push_back(format_poly(g));
        cells.push_back(Json{{"f", format_poly(c.f())}, {"ideal", std::move(ideal)}});
    }
    return Json{{"variables", ring_to_json(*s.ring())}, {"cells", std::move(cells)}};
}

inline ConstructibleSet constructible_from_json(const Json& j) {
    RingPtr ring = ring_from_json(detail::field(j, "variables"));
    std::vector<Cell> cells;
    std::size_t idx = 0;
    for (const auto& c : detail::array_field(j, "cells")) {
        std::string where = "cells[" + std::to_string(idx++) + "]";
        Poly f = detail::poly_from_json(detail::field(c, "f"), ring, where + ".f");
        if (f.is_zero()) throw input_error(where + ": open part f must be nonzero");
        std::vector<Poly> gens;
        for (const auto& g : detail::array_field(c, "ideal")) gens.push_back(detail::poly_from_json(g, ring, where + ".ideal"));
        cells.emplace_back(std::move(f), Ideal(ring, std::move(gens)));
    }
    return {ring, std::move(cells)};
}

inline Json to_json(const ModulePresentation& pres) {
    Json A = Json::array();
    for (std::size_t r = 0; r < pres.p(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < pres.q(); ++c) row.push_back(format_poly(pres.matrix()(r, c)));
        A.push_back(std::move(row));
    }
    Json y = Json::array();
    for (const auto& v : pres.lift()) y.push_back(format_poly(v));
    return Json{{"variables", ring_to_json(*pres.ring())}, {"A", std::move(A)}, {"y", std::move(y)}};
}

inline ModulePresentation presentation_from_json(const Json& j) {
    RingPtr ring = ring_from_json(detail::field(j, "variables"));
    std::vector<Poly> y;
    for (const auto& v : detail::array_field(j, "y")) y.push_back(detail::poly_from_json(v, ring, "y"));
    const Json& rows = detail::array_field(j, "A");
    const std::size_t p = y.size();
    if (!rows.empty() && rows.size() != p)
        throw input_error("A has " + std::to_string(rows.size()) + " rows but y has " + std::to_string(p) + " entries");
    const std::size_t q = rows.empty() ? 0 : rows.at(0).size();
    std::vector<Poly> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != q) throw input_error("A must be rectangular (row " + std::to_string(r) + ")");
        for (std::size_t c = 0; c < q; ++c)
            entries.push_back(detail::poly_from_json(rows[r][c], ring, "A[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return {PolyMatrix(ring, p, q, std::move(entries)), std::move(y)};
}

inline Json to_json(const ChartConnection& c) {
    Json a = Json::array();
    for (std::size_t k = 0; k < c.n(); ++k) {
        Json slice = Json::array();
        for (std::size_t i = 0; i < c.q(); ++i) {
            Json row = Json::array();
            for (std::size_t jj = 0; jj < c.p(); ++jj) row.push_back(format_poly(c.a(k, i, jj)));
            slice.push_back(std::move(row));
        }
        a.push_back(std::move(slice));
    }
    Json f = Json::array();
    for (std::size_t k = 0; k < c.n(); ++k) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < c.p(); ++jj) row.push_back(format_poly(c.f(k, jj)));
        f.push_back(std::move(row));
    }
    return Json{{"n", c.n()}, {"p", c.p()}, {"q", c.q()}, {"a", std::move(a)}, {"f", std::move(f)}};
}

inline ChartConnection chart_from_json(const Json& j) {
    const std::size_t n = detail::size_field(j, "n");
    const std::size_t p = detail::size_field(j, "p");
    const std::size_t q = detail::size_field(j, "q");
    if (n == 0) throw input_error("chart needs n >= 1");
    RingPtr ring = chart_ring(n);
    ChartConnection::Connection a;
    for (const auto& slice : detail::array_field(j, "a")) {
        if (!slice.is_array()) throw input_error("\"a\" must be a three-level array");
        auto& s = a.emplace_back();
        for (const auto& row : slice) {
            if (!row.is_array()) throw input_error("\"a\" must be a three-level array");
            auto& r = s.emplace_back();
            for (const auto& e : row) r.push_back(detail::poly_from_json(e, ring, "a"));
        }
    }
    ChartConnection::Derivative f;
    for (const auto& row : detail::array_field(j, "f")) {
        if (!row.is_array()) throw input_error("\"f\" must be a two-level array");
        auto& r = f.emplace_back();
        for (const auto& e : row) r.push_back(detail::poly_from_json(e, ring, "f"));
    }
    return {n, p, q, std::move(a), std::move(f)};
}

}  // namespace zlocus
