#pragma once

// Reading triangulation documents from JSON and rendering results (Laurent
// expansions, Grassmann numbers, friezes) as deterministic text or JSON.
//
// Document shape:
//   {"n": 6,
//    "diagonals": [[2,6],[3,6],[3,5]],
//    "orientation": [[2,6],[6,3],[5,3]]}          // optional, tail/head pairs
//
// Arc indexing: boundary arc (i-1, i) is x_i (so x_1 = (n,1)), and the j-th
// diagonal of the input list is x_{n+j}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superpath/frieze.hpp"
#include "superpath/grassmann.hpp"
#include "superpath/superring.hpp"
#include "superpath/tpaths.hpp"
#include "superpath/triangulation.hpp"

namespace superpath::io {

using nlohmann::json;
using grassmann::GrassmannNumber;
using superring::HalfExponents;
using superring::Rational;
using superring::SuperPolynomial;
using tpaths::Expansion;
using triangulation::Arc;
using triangulation::arc_key;
using triangulation::SpinStructure;
using triangulation::Triangulation;

// --- parsing --------------------------------------------------------------------

struct TriangulationDoc {
    Triangulation tri;
    std::optional<SpinStructure> spin;
};

namespace detail {

inline std::pair<int, int> parse_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be a pair of integers");
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace detail

inline TriangulationDoc parse_triangulation_doc(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("document needs an integer field \"n\"");
    const int n = j.at("n").get<int>();
    std::vector<Arc> diagonals;
    if (j.contains("diagonals")) {
        if (!j.at("diagonals").is_array())
            throw std::invalid_argument("\"diagonals\" must be an array of pairs");
        for (const json& d : j.at("diagonals")) {
            const auto [u, v] = detail::parse_pair(d, "diagonal");
            diagonals.emplace_back(u, v);
        }
    }
    TriangulationDoc doc{Triangulation::build(n, diagonals), std::nullopt};
    if (j.contains("orientation")) {
        if (!j.at("orientation").is_array())
            throw std::invalid_argument("\"orientation\" must be an array of tail/head pairs");
        SpinStructure s;
        for (const json& o : j.at("orientation")) {
            const auto [tail, head] = detail::parse_pair(o, "orientation entry");
            if (!doc.tri.is_diagonal(arc_key(tail, head)))
                throw std::invalid_argument("orientation entry is not a diagonal");
            s.orient(arc_key(tail, head), tail, head);
        }
        for (const Arc& d : doc.tri.diagonals())
            if (!s.has_orientation(d))
                throw std::invalid_argument("orientation must cover every diagonal");
        doc.spin = std::move(s);
    }
    return doc;
}

// Every diagonal oriented from its smaller to its larger label; a simple
// deterministic fallback when the document does not fix directions.
inline SpinStructure min_max_spin(const Triangulation& t) {
    SpinStructure s;
    for (const Arc& d : t.diagonals()) s.orient(d, d.first, d.second);
    return s;
}

// The canonical orientation of the region crossed by (a,b) — the one under
// which every term of the expansion displays with coefficient +1 — mapped
// back to ambient labels; uncrossed diagonals are oriented min -> max.
inline SpinStructure canonical_chord_spin(const Triangulation& t, int a, int b) {
    SpinStructure s = min_max_spin(t);
    const Expansion probe = tpaths::expand_lambda(t, s, a, b);
    if (probe.trivial) return s;
    for (const Arc& d : probe.restriction.sub.diagonals()) {
        const auto [dt, dh] = probe.default_spin.direction(d);
        const Arc od = probe.restriction.old_arc(d);
        s.erase(od);
        s.orient(od, probe.restriction.old_label[dt], probe.restriction.old_label[dh]);
    }
    return s;
}

// --- deterministic number and exponent formatting ---------------------------------

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

// Exponent stored in half units -> "2", "-1", "3/2", ...
inline std::string half_exponent_string(int h) {
    if (h % 2 == 0) return std::to_string(h / 2);
    return std::to_string(h) + "/2";
}

// --- Grassmann numbers ------------------------------------------------------------

// "(1.5) + (-0.25) g1g2": terms in stored (ascending mask) order.
inline std::string render_grassmann(const GrassmannNumber& g,
                                    const std::string& symbol = "g") {
    std::string out;
    for (const auto& [mask, coeff] : g.terms()) {
        if (coeff == 0.0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format_double(coeff) + ")";
        std::uint32_t w = mask;
        if (w != 0) out += " ";
        while (w != 0) {
            out += symbol + std::to_string(std::countr_zero(w) + 1);
            w &= w - 1;
        }
    }
    return out.empty() ? "(0)" : out;
}

inline json grassmann_json(const GrassmannNumber& g) {
    json terms = json::array();
    for (const auto& [mask, coeff] : g.terms()) {
        if (coeff == 0.0) continue;
        json word = json::array();
        std::uint32_t w = mask;
        while (w != 0) {
            word.push_back(std::countr_zero(w) + 1);
            w &= w - 1;
        }
        terms.push_back(json{{"word", std::move(word)}, {"coefficient", coeff}});
    }
    return json{{"terms", std::move(terms)}};
}

// --- expansions -------------------------------------------------------------------

// One line per term in storage order, generator words in the display order
// (the sign of the reordering is folded into the printed coefficient).
inline std::vector<std::string> render_term_lines(const SuperPolynomial& p,
                                                  const std::vector<int>& display_order,
                                                  const std::string& theta_symbol = "θ") {
    const std::string joined = superring::render_ordered(p, display_order, theta_symbol);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = joined.find(" + ", start);
        if (pos == std::string::npos) {
            lines.push_back(joined.substr(start));
            break;
        }
        lines.push_back(joined.substr(start, pos - start));
        start = pos + 3;
    }
    return lines;
}

inline json superpolynomial_json(const SuperPolynomial& p) {
    json terms = json::array();
    for (const auto& [key, coeff] : p.terms()) {
        json exps = json::object();
        for (std::size_t i = 0; i < key.exps.size(); ++i)
            if (key.exps[i] != 0)
                exps["x" + std::to_string(i + 1)] = half_exponent_string(key.exps[i]);
        json word = json::array();
        std::uint32_t w = key.theta;
        while (w != 0) {
            word.push_back(std::countr_zero(w) + 1);
            w &= w - 1;
        }
        terms.push_back(json{{"coefficient", coeff.str()},
                             {"exponents", std::move(exps)},
                             {"thetas", std::move(word)}});
    }
    return terms;
}

// --- friezes ----------------------------------------------------------------------

inline json frieze_json(const frieze::SuperFrieze& fz) {
    json diagonals = json::array();
    for (const auto& d : fz.diagonals) {
        json even = json::array(), odd = json::array();
        for (const auto& g : d.even) even.push_back(grassmann_json(g));
        for (const auto& g : d.odd) odd.push_back(grassmann_json(g));
        diagonals.push_back(json{{"even", std::move(even)}, {"odd", std::move(odd)}});
    }
    double residual = 0.0;
    for (const auto& dm : fz.diamonds)
        residual = std::max(residual, frieze::diamond_residual(dm) / frieze::diamond_scale(dm));
    return json{{"width", fz.width},
                {"polygon", fz.polygon},
                {"diagonals", std::move(diagonals)},
                {"max_diamond_residual", residual}};
}

}  // namespace superpath::io
