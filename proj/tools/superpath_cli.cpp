// superpath: exact chord expansions, exchange moves, and super-friezes on
// triangulated polygons.
//
// Exit codes: 0 success, 1 a numeric cross-check failed, 2 bad usage/input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "superpath/classical.hpp"
#include "superpath/frieze.hpp"
#include "superpath/io.hpp"
#include "superpath/ptolemy.hpp"
#include "superpath/rng.hpp"
#include "superpath/tpaths.hpp"
#include "superpath/triangulation.hpp"

namespace {

using superpath::Rng;
using superpath::frieze::build_frieze;
using superpath::frieze::SuperFrieze;
using superpath::grassmann::gmul;
using superpath::grassmann::GrassmannNumber;
using superpath::grassmann::gsqrt;
using superpath::grassmann::max_abs_diff;
using superpath::grassmann::relative_deviation;
using superpath::io::format_double;
using superpath::io::grassmann_json;
using superpath::io::json;
using superpath::io::render_grassmann;
using superpath::io::TriangulationDoc;
using superpath::ptolemy::DecoratedState;
using superpath::ptolemy::flip;
using superpath::ptolemy::flip_sequence_lambda;
using superpath::ptolemy::FlipResult;
using superpath::ptolemy::FlipStrategy;
using superpath::ptolemy::standard_state;
using superpath::superring::SuperPolynomial;
using superpath::tpaths::Expansion;
using superpath::triangulation::Arc;
using superpath::triangulation::arc_key;
using superpath::triangulation::Face;
using superpath::triangulation::face_key;
using superpath::triangulation::SpinStructure;
using superpath::triangulation::Triangulation;

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    f >> j;
    return j;
}

std::pair<int, int> parse_arc_text(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--arc expects two labels like \"2,6\"");
    std::size_t usedA = 0, usedB = 0;
    const std::string sa = text.substr(0, comma), sb = text.substr(comma + 1);
    const int a = std::stoi(sa, &usedA);
    const int b = std::stoi(sb, &usedB);
    if (usedA != sa.size() || usedB != sb.size())
        throw std::invalid_argument("--arc expects two labels like \"2,6\"");
    return {a, b};
}

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad number in list: " + item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> random_lengths(int count, Rng& rng) {
    std::vector<double> x(count);
    for (double& v : x) v = rng.uniform(0.5, 2.0);
    return x;
}

SpinStructure random_spin(const Triangulation& t, Rng& rng) {
    SpinStructure s;
    for (const Arc& d : t.diagonals()) {
        if (rng.below(2))
            s.orient(d, d.first, d.second);
        else
            s.orient(d, d.second, d.first);
    }
    return s;
}

// Orientation selection shared by expand/tpaths/flip: the document's
// orientation when present (or demanded), otherwise the canonical
// orientation of the crossed region.
SpinStructure resolve_spin(const TriangulationDoc& doc, const std::string& mode, int a, int b) {
    if (mode == "file") {
        if (!doc.spin) throw std::invalid_argument("--orientation file, but the document has none");
        return *doc.spin;
    }
    if (mode == "default") return superpath::io::canonical_chord_spin(doc.tri, a, b);
    if (doc.spin) return *doc.spin;
    return superpath::io::canonical_chord_spin(doc.tri, a, b);
}

// Odd images of the expansion's generators, read off a decorated state over
// the same triangulation.
std::vector<GrassmannNumber> face_images(const Expansion& e, const DecoratedState& st) {
    std::vector<GrassmannNumber> images;
    for (int i = 1; i <= e.fd.q(); ++i) {
        const Face& f = e.fd.tris[static_cast<std::size_t>(i) - 1];
        images.push_back(st.mu.at(face_key(e.restriction.old_label[f[0]],
                                           e.restriction.old_label[f[1]],
                                           e.restriction.old_label[f[2]])));
    }
    return images;
}

double flip_identity_residual(const FlipResult& r) {
    const auto sqrt4 = gmul(gmul(gsqrt(r.a), gsqrt(r.b)), gmul(gsqrt(r.c), gsqrt(r.d)));
    const auto ef = gmul(r.e, r.f);
    const auto rhs = gmul(r.a, r.c) + gmul(r.b, r.d) + gmul(sqrt4, gmul(r.sigma, r.theta));
    const auto sq_ef = gsqrt(ef);
    double res = relative_deviation(ef, rhs);
    res = std::max(res, relative_deviation(gmul(r.theta_new, sq_ef),
                                           gmul(r.theta, gsqrt(gmul(r.b, r.d))) +
                                               gmul(r.sigma, gsqrt(gmul(r.a, r.c)))));
    res = std::max(res, relative_deviation(gmul(r.sigma_new, sq_ef),
                                           gmul(r.sigma, gsqrt(gmul(r.b, r.d))) -
                                               gmul(r.theta, gsqrt(gmul(r.a, r.c)))));
    res = std::max(res, relative_deviation(gmul(r.sigma_new, r.theta_new),
                                           gmul(r.sigma, r.theta)));
    return res;
}

// --- expand ---------------------------------------------------------------------

struct ExpandOptions {
    std::string input, arc, orientation = "auto", basis = "rescaled", format = "text";
};

int run_expand(const ExpandOptions& opt) {
    const TriangulationDoc doc =
        superpath::io::parse_triangulation_doc(load_json_file(opt.input));
    const auto [a, b] = parse_arc_text(opt.arc);
    const SpinStructure s = resolve_spin(doc, opt.orientation, a, b);
    const Expansion e = superpath::tpaths::expand_lambda(doc.tri, s, a, b);
    SuperPolynomial shown = e.value;
    if (opt.basis == "rescaled" && !e.trivial)
        shown = superpath::superring::rescale_thetas(
            e.value, superpath::tpaths::sigma_scalings(e, doc.tri));
    const std::vector<int> order = superpath::tpaths::display_order(e);
    int ordinary = 0, odd = 0;
    for (const auto& p : e.paths) (p.is_super() ? odd : ordinary) += 1;

    if (opt.format == "json") {
        json out{{"n", doc.tri.n()},
                 {"arc", json::array({a, b})},
                 {"trivial", e.trivial},
                 {"basis", opt.basis},
                 {"crossed_triangles", e.trivial ? 0 : e.fd.q()},
                 {"ordinary_paths", e.trivial ? 1 : ordinary},
                 {"odd_paths", odd},
                 {"display_order", order},
                 {"integer_exponents", superpath::superring::all_exponents_integer(shown)},
                 {"terms", superpath::io::superpolynomial_json(shown)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "chord (" << a << "," << b << ") of a " << doc.tri.n() << "-gon";
    if (e.trivial) {
        std::cout << " is the arc x" << doc.tri.arc_index(a, b) << "\n";
    } else {
        std::cout << ", crossing " << e.fd.q() - 1 << " diagonal(s) / " << e.fd.q()
                  << " triangle(s)\n";
        std::cout << "paths: " << e.paths.size() << " (ordinary " << ordinary << ", odd " << odd
                  << ")\n";
    }
    std::cout << "basis: "
              << (opt.basis == "rescaled" ? "rescaled generators (integer exponents)"
                                          : "raw generators (half-integer exponents)")
              << "\n";
    for (const std::string& line : superpath::io::render_term_lines(shown, order))
        std::cout << line << "\n";
    return 0;
}

// --- tpaths ---------------------------------------------------------------------

struct TPathsOptions {
    std::string input, arc, orientation = "auto", only = "all", format = "text";
};

int run_tpaths(const TPathsOptions& opt) {
    const TriangulationDoc doc =
        superpath::io::parse_triangulation_doc(load_json_file(opt.input));
    const auto [a, b] = parse_arc_text(opt.arc);
    const SpinStructure s = resolve_spin(doc, opt.orientation, a, b);
    const Expansion e = superpath::tpaths::expand_lambda(doc.tri, s, a, b);

    std::vector<std::pair<std::string, bool>> rows;
    if (e.trivial) {
        rows.emplace_back("(" + std::to_string(a) + "," + std::to_string(b) + " | x" +
                              std::to_string(doc.tri.arc_index(a, b)) + ")",
                          false);
    } else {
        for (const auto& p : e.paths)
            rows.emplace_back(superpath::tpaths::render_path(p, e, doc.tri), p.is_super());
    }
    if (opt.only == "ordinary")
        std::erase_if(rows, [](const auto& r) { return r.second; });
    else if (opt.only == "odd")
        std::erase_if(rows, [](const auto& r) { return !r.second; });

    if (opt.format == "json") {
        json paths = json::array();
        for (const auto& [text, super_flag] : rows)
            paths.push_back(json{{"rendered", text}, {"odd", super_flag}});
        json out{{"n", doc.tri.n()},
                 {"arc", json::array({a, b})},
                 {"count", rows.size()},
                 {"paths", std::move(paths)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& [text, super_flag] : rows) std::cout << text << "\n";
    return 0;
}

// --- flip -----------------------------------------------------------------------

struct FlipOptions {
    std::string input, arc, orientation = "auto", strategy = "from-a", format = "text";
    std::uint64_t seed = 12345;
    double tol = 1e-9;
};

int run_flip(const FlipOptions& opt) {
    const TriangulationDoc doc =
        superpath::io::parse_triangulation_doc(load_json_file(opt.input));
    const auto [a, b] = parse_arc_text(opt.arc);
    const SpinStructure s = resolve_spin(doc, opt.orientation, a, b);
    FlipStrategy strategy = FlipStrategy::kFromA;
    if (opt.strategy == "from-b")
        strategy = FlipStrategy::kFromB;
    else if (opt.strategy == "alternate")
        strategy = FlipStrategy::kAlternate;
    else if (opt.strategy != "from-a")
        throw std::invalid_argument("--strategy must be from-a, from-b, or alternate");

    Rng rng(opt.seed);
    const auto x = random_lengths(doc.tri.arc_count(), rng);
    const DecoratedState st = standard_state(doc.tri, s, x);
    const auto seq = flip_sequence_lambda(st, a, b, strategy);

    const Expansion e = superpath::tpaths::expand_lambda(doc.tri, s, a, b);
    const auto evaluated = superpath::superring::evaluate(e.value, x, face_images(e, st));
    const double deviation = relative_deviation(evaluated, seq.value);

    if (opt.format == "json") {
        json flips = json::array();
        for (const Arc& d : seq.flipped) flips.push_back(json::array({d.first, d.second}));
        json out{{"arc", json::array({a, b})},
                 {"seed", opt.seed},
                 {"lengths", x},
                 {"flips", std::move(flips)},
                 {"value", grassmann_json(seq.value)},
                 {"expansion_value", grassmann_json(evaluated)},
                 {"deviation", deviation},
                 {"ok", deviation < opt.tol}};
        std::cout << out.dump(2) << "\n";
        return deviation < opt.tol ? 0 : 1;
    }
    std::cout << "lengths (seed " << opt.seed << "):";
    for (double v : x) std::cout << " " << format_double(v);
    std::cout << "\n";
    for (const Arc& d : seq.flipped)
        std::cout << "flip (" << d.first << "," << d.second << ")\n";
    std::cout << "length of (" << a << "," << b << ") by moves:     " << render_grassmann(seq.value)
              << "\n";
    std::cout << "length of (" << a << "," << b << ") by expansion: "
              << render_grassmann(evaluated) << "\n";
    std::cout << "relative deviation: " << format_double(deviation) << "\n";
    if (!(deviation < opt.tol)) {
        std::cout << "MISMATCH: deviation exceeds tolerance " << format_double(opt.tol) << "\n";
        return 1;
    }
    return 0;
}

// --- frieze ---------------------------------------------------------------------

struct FriezeOptions {
    int width = 4;
    std::string x_text, xi_text, format = "text";
    std::uint64_t seed = 12345;
    double tol = 1e-10;
};

int run_frieze(const FriezeOptions& opt) {
    std::vector<double> x;
    if (!opt.x_text.empty()) {
        x = parse_csv_doubles(opt.x_text);
    } else {
        Rng rng(opt.seed);
        x = random_lengths(opt.width, rng);
    }
    std::vector<double> xi;
    if (!opt.xi_text.empty()) xi = parse_csv_doubles(opt.xi_text);
    const SuperFrieze fz = build_frieze(x, xi);

    double residual = 0.0;
    for (const auto& dm : fz.diamonds)
        residual = std::max(residual, superpath::frieze::diamond_residual(dm) /
                                          superpath::frieze::diamond_scale(dm));
    double glide = 0.0;
    const auto& first = fz.diagonals.front();
    const auto& last = fz.diagonals.back();
    for (std::size_t r = 0; r < first.even.size(); ++r)
        glide = std::max(glide, max_abs_diff(first.even[r], last.even[r]));
    for (std::size_t r = 0; r < first.odd.size(); ++r)
        glide = std::max(glide, max_abs_diff(-first.odd[r], last.odd[r]));
    const bool ok = residual < opt.tol && glide < opt.tol;

    if (opt.format == "json") {
        json out = superpath::io::frieze_json(fz);
        out["glide_deviation"] = glide;
        out["ok"] = ok;
        std::cout << out.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    std::cout << "frieze of width " << fz.width << " on a " << fz.polygon << "-gon\n";
    for (std::size_t t = 0; t < fz.diagonals.size(); ++t) {
        std::cout << "diagonal " << t << "\n";
        for (std::size_t r = 0; r < fz.diagonals[t].even.size(); ++r) {
            std::cout << "  even[" << r << "] = " << render_grassmann(fz.diagonals[t].even[r])
                      << "\n";
            if (r < fz.diagonals[t].odd.size())
                std::cout << "  odd[" << r << "]  = " << render_grassmann(fz.diagonals[t].odd[r])
                          << "\n";
        }
    }
    std::cout << "diamonds: " << fz.diamonds.size()
              << ", max relation residual: " << format_double(residual) << "\n";
    std::cout << "glide deviation (evens repeat, odds negate): " << format_double(glide) << "\n";
    if (!ok) {
        std::cout << "MISMATCH: residuals exceed tolerance " << format_double(opt.tol) << "\n";
        return 1;
    }
    return 0;
}

// --- verify ---------------------------------------------------------------------

struct VerifyOptions {
    int samples = 0;  // 0 = per-suite default
    int n = 8;
    int width = 4;
    std::uint64_t seed = 12345;
    double tol = 1e-9;
};

int report(const std::string& name, bool ok, const std::string& details) {
    std::cout << (ok ? "ok " : "FAIL ") << name << ": " << details << "\n";
    return ok ? 0 : 1;
}

int verify_pentagon(const VerifyOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 200;
    const Triangulation t = Triangulation::build(5, {arc_key(1, 3), arc_key(1, 4)});
    Rng rng(opt.seed);
    double worst = 0.0;
    for (int rep = 0; rep < samples; ++rep) {
        SpinStructure s;
        s.orient(arc_key(1, 3), 1, 3);
        s.orient(arc_key(1, 4), 1, 4);
        DecoratedState st = standard_state(t, s, random_lengths(7, rng));
        const DecoratedState start = st;
        for (const Arc& d : {arc_key(1, 3), arc_key(1, 4), arc_key(2, 4), arc_key(2, 5),
                             arc_key(3, 5)})
            worst = std::max(worst, flip_identity_residual(flip(st, d)));
        for (const auto& [arc, value] : start.lambda)
            worst = std::max(worst, relative_deviation(st.lambda.at(arc), value));
    }
    return report("pentagon", worst < opt.tol,
                  std::to_string(samples) + " five-move cycles, max residual " +
                      format_double(worst));
}

int verify_double_flip(const VerifyOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 500;
    const Triangulation t = Triangulation::build(4, {arc_key(1, 3)});
    Rng rng(opt.seed);
    double worst = 0.0;
    for (int rep = 0; rep < samples; ++rep) {
        const SpinStructure s = random_spin(t, rng);
        DecoratedState st = standard_state(t, s, random_lengths(5, rng));
        const DecoratedState start = st;
        const auto dir0 = st.spin.direction(arc_key(1, 3));
        const FlipResult r1 = flip(st, arc_key(1, 3));
        const FlipResult r2 = flip(st, arc_key(2, 4));
        worst = std::max(worst, flip_identity_residual(r1));
        worst = std::max(worst, flip_identity_residual(r2));
        // The diagonal's length returns; the left-of-diagonal face invariant
        // returns negated while the right one survives, so their product is
        // preserved (the left/right roles land swapped after the round trip).
        worst = std::max(worst,
                         relative_deviation(st.lambda.at(arc_key(1, 3)),
                                            start.lambda.at(arc_key(1, 3))));
        const int tail = dir0.first, head = dir0.second;
        const int apex_r =
            superpath::triangulation::on_right(4, tail, head, 2) ? 2 : 4;
        const int apex_l = apex_r == 2 ? 4 : 2;
        const auto old_theta = start.mu.at(face_key(tail, head, apex_l));
        const auto old_sigma = start.mu.at(face_key(tail, head, apex_r));
        worst = std::max(
            worst, relative_deviation(st.mu.at(face_key(tail, head, apex_l)),
                                      -old_theta));
        worst = std::max(
            worst, relative_deviation(st.mu.at(face_key(tail, head, apex_r)),
                                      old_sigma));
        worst = std::max(
            worst,
            relative_deviation(gmul(st.mu.at(face_key(tail, head, apex_l)),
                                    st.mu.at(face_key(tail, head, apex_r))),
                               gmul(old_sigma, old_theta)));
    }
    return report("double-flip", worst < opt.tol,
                  std::to_string(samples) + " double moves, max residual " +
                      format_double(worst));
}

int verify_sigma_theta(const VerifyOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 100;
    Rng rng(opt.seed);
    double worst = 0.0;
    int flips = 0;
    for (int rep = 0; rep < samples; ++rep) {
        const Triangulation t = superpath::triangulation::random_triangulation(opt.n, rng);
        const SpinStructure s = random_spin(t, rng);
        DecoratedState st = standard_state(t, s, random_lengths(t.arc_count(), rng));
        int a = 0, b = 0;
        for (int tries = 0; tries < 200 && a == 0; ++tries) {
            const int u = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.n)));
            const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.n)));
            if (u != v && !t.is_arc(u, v)) a = u, b = v;
        }
        if (a == 0) continue;
        while (true) {
            const auto crossed =
                superpath::triangulation::crossed_diagonals(st.tri, a, b);
            if (crossed.empty()) break;
            worst = std::max(worst, flip_identity_residual(flip(st, crossed.front())));
            ++flips;
        }
    }
    return report("sigma-theta", worst < opt.tol,
                  std::to_string(flips) + " moves over " + std::to_string(samples) +
                      " straightenings, max residual " + format_double(worst));
}

int verify_oracle(const VerifyOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 40;
    Rng rng(opt.seed);
    double worst = 0.0;
    int exact_failures = 0;
    for (int rep = 0; rep < samples; ++rep) {
        const Triangulation t = superpath::triangulation::random_triangulation(opt.n, rng);
        const SpinStructure s = random_spin(t, rng);
        int a = 0, b = 0;
        for (int tries = 0; tries < 200 && a == 0; ++tries) {
            const int u = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.n)));
            const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.n)));
            if (u != v && !t.is_arc(u, v)) a = u, b = v;
        }
        if (a == 0) continue;
        const Expansion e = superpath::tpaths::expand_lambda(t, s, a, b);
        const auto body = superpath::classical::even_part(e.value);
        if (!(body == superpath::classical::classical_lambda_paths(t, a, b)) ||
            !(body == superpath::classical::classical_lambda_flips(t, a, b)))
            ++exact_failures;
        const auto x = random_lengths(t.arc_count(), rng);
        const DecoratedState st = standard_state(t, s, x);
        const auto evaluated = superpath::superring::evaluate(e.value, x, face_images(e, st));
        worst = std::max(worst,
                         relative_deviation(evaluated, flip_sequence_lambda(st, a, b).value));
    }
    const bool ok = exact_failures == 0 && worst < opt.tol;
    return report("oracle", ok,
                  std::to_string(samples) + " instances at n=" + std::to_string(opt.n) + ", " +
                      std::to_string(exact_failures) +
                      " exact mismatches, max numeric deviation " + format_double(worst));
}

int verify_frieze(const VerifyOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 25;
    Rng rng(opt.seed);
    double worst = 0.0;
    for (int rep = 0; rep < samples; ++rep) {
        const auto x = random_lengths(opt.width, rng);
        std::vector<double> xi(static_cast<std::size_t>(opt.width) + 1);
        for (double& v : xi) v = rng.below(2) ? 1.0 : -1.0;
        const SuperFrieze fz = build_frieze(x, xi);
        for (const auto& dm : fz.diamonds)
            worst = std::max(worst, superpath::frieze::diamond_residual(dm) /
                                        superpath::frieze::diamond_scale(dm));
        const auto& first = fz.diagonals.front();
        const auto& last = fz.diagonals.back();
        for (std::size_t r = 0; r < first.even.size(); ++r)
            worst = std::max(worst, max_abs_diff(first.even[r], last.even[r]));
        for (std::size_t r = 0; r < first.odd.size(); ++r)
            worst = std::max(worst, max_abs_diff(-first.odd[r], last.odd[r]));
    }
    return report("frieze", worst < opt.tol,
                  std::to_string(samples) + " friezes of width " + std::to_string(opt.width) +
                      ", max residual " + format_double(worst));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chord expansions, exchange moves, and super-friezes on "
                 "triangulated polygons"};
    app.require_subcommand(1);

    ExpandOptions expand_opt;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "Laurent expansion of a chord as a sum over paths");
    expand_cmd->add_option("--input", expand_opt.input, "triangulation JSON document")
        ->required();
    expand_cmd->add_option("--arc", expand_opt.arc, "chord endpoints, e.g. 2,6")->required();
    expand_cmd->add_option("--orientation", expand_opt.orientation,
                           "auto (file if present), file, or default (canonical)")
        ->check(CLI::IsMember({"auto", "file", "default"}));
    expand_cmd->add_option("--theta-basis", expand_opt.basis,
                           "rescaled (integer exponents) or raw (half-integer)")
        ->check(CLI::IsMember({"rescaled", "raw"}));
    expand_cmd->add_option("--format", expand_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    TPathsOptions tpaths_opt;
    CLI::App* tpaths_cmd = app.add_subcommand("tpaths", "enumerate the paths behind an expansion");
    tpaths_cmd->add_option("--input", tpaths_opt.input, "triangulation JSON document")
        ->required();
    tpaths_cmd->add_option("--arc", tpaths_opt.arc, "chord endpoints, e.g. 2,6")->required();
    tpaths_cmd->add_option("--orientation", tpaths_opt.orientation,
                           "auto (file if present), file, or default (canonical)")
        ->check(CLI::IsMember({"auto", "file", "default"}));
    tpaths_cmd->add_option("--only", tpaths_opt.only, "all, ordinary, or odd")
        ->check(CLI::IsMember({"all", "ordinary", "odd"}));
    tpaths_cmd->add_option("--format", tpaths_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    FlipOptions flip_opt;
    CLI::App* flip_cmd = app.add_subcommand(
        "flip", "straighten a chord by exchange moves and cross-check the expansion");
    flip_cmd->add_option("--input", flip_opt.input, "triangulation JSON document")->required();
    flip_cmd->add_option("--arc", flip_opt.arc, "chord endpoints, e.g. 2,6")->required();
    flip_cmd->add_option("--orientation", flip_opt.orientation,
                         "auto (file if present), file, or default (canonical)")
        ->check(CLI::IsMember({"auto", "file", "default"}));
    flip_cmd->add_option("--strategy", flip_opt.strategy, "from-a, from-b, or alternate")
        ->check(CLI::IsMember({"from-a", "from-b", "alternate"}));
    flip_cmd->add_option("--seed", flip_opt.seed, "seed for the random arc lengths");
    flip_cmd->add_option("--tol", flip_opt.tol, "tolerance for the cross-check");
    flip_cmd->add_option("--format", flip_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    FriezeOptions frieze_opt;
    CLI::App* frieze_cmd =
        app.add_subcommand("frieze", "build a super-frieze and verify its relations");
    frieze_cmd->add_option("--width", frieze_opt.width, "number of non-trivial even rows")
        ->check(CLI::Range(2, 12));
    frieze_cmd->add_option("--x", frieze_opt.x_text, "even inputs, e.g. 1.5,2,0.75");
    frieze_cmd->add_option("--xi", frieze_opt.xi_text,
                           "odd input coefficients (width+1 of them)");
    frieze_cmd->add_option("--seed", frieze_opt.seed, "seed for random even inputs");
    frieze_cmd->add_option("--tol", frieze_opt.tol, "tolerance for relations and glide");
    frieze_cmd->add_option("--format", frieze_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyOptions verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run randomized cross-checks of the engines");
    std::string suite;
    verify_cmd
        ->add_option("suite", suite,
                     "pentagon, double-flip, sigma-theta, oracle, frieze, or all")
        ->required()
        ->check(CLI::IsMember({"pentagon", "double-flip", "sigma-theta", "oracle", "frieze",
                               "all"}));
    verify_cmd->add_option("--samples", verify_opt.samples, "instances per suite (0 = default)");
    verify_cmd->add_option("--seed", verify_opt.seed, "random seed");
    verify_cmd->add_option("--tol", verify_opt.tol, "largest allowed residual");
    verify_cmd->add_option("--n", verify_opt.n, "polygon size for sigma-theta/oracle")
        ->check(CLI::Range(4, 12));
    verify_cmd->add_option("--width", verify_opt.width, "frieze width")->check(CLI::Range(2, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand_cmd->parsed()) return run_expand(expand_opt);
        if (tpaths_cmd->parsed()) return run_tpaths(tpaths_opt);
        if (flip_cmd->parsed()) return run_flip(flip_opt);
        if (frieze_cmd->parsed()) return run_frieze(frieze_opt);
        if (verify_cmd->parsed()) {
            int rc = 0;
            if (suite == "pentagon" || suite == "all") rc |= verify_pentagon(verify_opt);
            if (suite == "double-flip" || suite == "all") rc |= verify_double_flip(verify_opt);
            if (suite == "sigma-theta" || suite == "all") rc |= verify_sigma_theta(verify_opt);
            if (suite == "oracle" || suite == "all") rc |= verify_oracle(verify_opt);
            if (suite == "frieze" || suite == "all") rc |= verify_frieze(verify_opt);
            return rc;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
