// End-to-end tests for the command-line tool.  Each case spawns the built
// binary, so these cover argument parsing, file handling, output formatting,
// and exit codes in addition to the underlying engines.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct CliResult {
    int status = -1;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SUPERPATH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (const char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

// Hexagon with diagonals (2,6), (3,6), (3,5); indices x7, x8, x9.
const char* kOrientedDoc =
    R"({"n": 6, "diagonals": [[2,6],[3,6],[3,5]], "orientation": [[6,2],[6,3],[5,3]]})";
const char* kPlainDoc = R"({"n": 6, "diagonals": [[2,6],[3,6],[3,5]]})";

// Runs during static initialization, so plain streams only (no assertions).
std::string write_doc(const std::string& name, const char* body) {
    std::ofstream out(name);
    out << body << "\n";
    return name;
}

const std::string kOrientedFile = write_doc("cli_hexagon_oriented.json", kOrientedDoc);
const std::string kPlainFile = write_doc("cli_hexagon_plain.json", kPlainDoc);

}  // namespace

TEST_CASE("expansion of the oriented hexagon is reproduced byte for byte", "[cli]") {
    const CliResult r = run_cli("expand --input " + kOrientedFile + " --arc 1,4");
    REQUIRE(r.status == 0);
    const std::string golden =
        "chord (1,4) of a 6-gon, crossing 3 diagonal(s) / 4 triangle(s)\n"
        "paths: 14 (ordinary 5, odd 9)\n"
        "basis: rescaled generators (integer exponents)\n"
        "(-1) x1 x4 x8 θ1θ2θ4θ3\n"
        "(-1) x1 x3 x4 x7^(-1) θ4θ3\n"
        "(1) x1 x4 x6 x9^(-1) θ1θ2\n"
        "(1) x1 x4 θ1θ3\n"
        "(1) x1 x4 θ2θ3\n"
        "(-1) x1 x4 θ1θ4\n"
        "(-1) x1 x4 θ2θ4\n"
        "(1) x1 x5 x8 x9^(-1) θ1θ2\n"
        "(-1) x2 x4 x7^(-1) x8 θ4θ3\n"
        "(1) x1 x3 x4 x6 x7^(-1) x8^(-1) x9^(-1)\n"
        "(1) x1 x3 x5 x7^(-1) x9^(-1)\n"
        "(1) x1 x4 x8^(-1)\n"
        "(1) x2 x4 x6 x7^(-1) x9^(-1)\n"
        "(1) x2 x5 x7^(-1) x8 x9^(-1)\n";
    CHECK(r.output == golden);
}

TEST_CASE("canonical orientation renders every coefficient positive", "[cli]") {
    for (const std::string arc : {"1,4", "2,4", "2,5", "3,1", "4,6"}) {
        const CliResult r = run_cli("expand --input " + kPlainFile + " --arc " + arc);
        REQUIRE(r.status == 0);
        int terms = 0;
        for (const auto& line : lines_of(r.output)) {
            if (line.empty() || line[0] != '(') continue;
            ++terms;
            CHECK(line.substr(0, 4) == "(1) ");
        }
        CHECK(terms > 0);
    }
    // The oriented file also collapses to all-positive when the canonical
    // orientation is forced.
    const CliResult forced =
        run_cli("expand --input " + kOrientedFile + " --arc 1,4 --orientation default");
    REQUIRE(forced.status == 0);
    for (const auto& line : lines_of(forced.output))
        if (!line.empty() && line[0] == '(') CHECK(line.substr(0, 4) == "(1) ");
}

TEST_CASE("path listing matches the expansion bookkeeping", "[cli]") {
    const CliResult all = run_cli("tpaths --input " + kOrientedFile + " --arc 1,4");
    REQUIRE(all.status == 0);
    CHECK(all.output.find("(1,6,θ1,θ2,6,3,5,4 | x1,σ1,τ12,σ2,x8,x9,x5)") !=
          std::string::npos);
    CHECK(all.output.find("(1,6,3,4 | x1,x8,x4)") != std::string::npos);
    CHECK(lines_of(all.output).size() == 14);

    const CliResult ordinary =
        run_cli("tpaths --input " + kOrientedFile + " --arc 1,4 --only ordinary");
    REQUIRE(ordinary.status == 0);
    CHECK(lines_of(ordinary.output).size() == 5);
    for (const auto& line : lines_of(ordinary.output))
        CHECK(line.find("σ") == std::string::npos);

    const CliResult odd =
        run_cli("tpaths --input " + kOrientedFile + " --arc 1,4 --only odd");
    REQUIRE(odd.status == 0);
    CHECK(lines_of(odd.output).size() == 9);
    for (const auto& line : lines_of(odd.output))
        CHECK(line.find("σ") != std::string::npos);

    // A boundary chord has the one-step path and nothing else.
    const CliResult trivial = run_cli("tpaths --input " + kOrientedFile + " --arc 1,2");
    REQUIRE(trivial.status == 0);
    CHECK(lines_of(trivial.output).size() == 1);
    CHECK(trivial.output.find("(1,2 | x2)") != std::string::npos);
}

TEST_CASE("json output carries the expansion data", "[cli]") {
    const CliResult r =
        run_cli("expand --input " + kOrientedFile + " --arc 1,4 --format json");
    REQUIRE(r.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("n") == 6);
    CHECK(doc.at("arc") == nlohmann::json::array({1, 4}));
    CHECK(doc.at("ordinary_paths") == 5);
    CHECK(doc.at("odd_paths") == 9);
    CHECK(doc.at("crossed_triangles") == 4);
    CHECK(doc.at("display_order") == nlohmann::json::array({1, 2, 4, 3}));
    CHECK(doc.at("integer_exponents") == true);
    REQUIRE(doc.at("terms").size() == 14);
    for (const auto& term : doc.at("terms")) {
        // Coefficients are exact rationals over the ascending generator basis.
        const std::string coeff = term.at("coefficient");
        CHECK((coeff == "1" || coeff == "-1"));
        const auto& thetas = term.at("thetas");
        CHECK(thetas.size() % 2 == 0);
        for (std::size_t i = 1; i < thetas.size(); ++i)
            CHECK(thetas[i - 1].get<int>() < thetas[i].get<int>());
    }
    // The purely even term x1 x4 / x8 keeps coefficient +1 in either basis.
    bool found_even_term = false;
    for (const auto& term : doc.at("terms")) {
        if (!term.at("thetas").empty()) continue;
        const auto& exps = term.at("exponents");
        if (exps.size() == 3 && exps.contains("x1") && exps.contains("x4") &&
            exps.contains("x8") && exps.at("x8") == "-1") {
            CHECK(term.at("coefficient") == "1");
            found_even_term = true;
        }
    }
    CHECK(found_even_term);

    const CliResult paths =
        run_cli("tpaths --input " + kOrientedFile + " --arc 1,4 --format json");
    REQUIRE(paths.status == 0);
    const nlohmann::json pdoc = nlohmann::json::parse(paths.output);
    CHECK(pdoc.at("count") == 14);
    REQUIRE(pdoc.at("paths").size() == 14);
    int odd_count = 0;
    for (const auto& p : pdoc.at("paths")) {
        if (p.at("odd").get<bool>()) ++odd_count;
        CHECK(!p.at("rendered").get<std::string>().empty());
    }
    CHECK(odd_count == 9);

    const CliResult frieze = run_cli("frieze --width 2 --x 1.5,2.0 --format json");
    REQUIRE(frieze.status == 0);
    const nlohmann::json fdoc = nlohmann::json::parse(frieze.output);
    CHECK(fdoc.at("width") == 2);
    CHECK(fdoc.at("polygon") == 5);
    CHECK(fdoc.at("diagonals").size() == 6);
    CHECK(fdoc.at("max_diamond_residual").get<double>() < 1e-10);
    CHECK(fdoc.at("glide_deviation").get<double>() < 1e-10);
    CHECK(fdoc.at("ok") == true);
}

TEST_CASE("seeded commands are deterministic", "[cli]") {
    const std::string flip_args = "flip --input " + kOrientedFile + " --arc 1,4 --seed 7";
    const CliResult flip_a = run_cli(flip_args);
    const CliResult flip_b = run_cli(flip_args);
    REQUIRE(flip_a.status == 0);
    CHECK(flip_a.output == flip_b.output);
    const CliResult flip_c =
        run_cli("flip --input " + kOrientedFile + " --arc 1,4 --seed 8");
    REQUIRE(flip_c.status == 0);
    CHECK(flip_a.output != flip_c.output);

    const CliResult frieze_a = run_cli("frieze --width 3 --seed 9");
    const CliResult frieze_b = run_cli("frieze --width 3 --seed 9");
    REQUIRE(frieze_a.status == 0);
    CHECK(frieze_a.output == frieze_b.output);

    const CliResult verify = run_cli("verify all --samples 5");
    REQUIRE(verify.status == 0);
    CHECK(lines_of(verify.output).size() == 5);
    for (const auto& line : lines_of(verify.output))
        CHECK(line.substr(0, 3) == "ok ");
}

TEST_CASE("invalid inputs exit with status two", "[cli]") {
    CHECK(run_cli("expand --input missing_file.json --arc 1,4").status == 2);
    CHECK(run_cli("expand --input " + kOrientedFile + " --arc 1,1").status == 2);
    CHECK(run_cli("expand --input " + kOrientedFile + " --arc 1,9").status == 2);
    CHECK(run_cli("expand --arc 1,4").status == 2);             // missing --input
    CHECK(run_cli("expand --input " + kOrientedFile).status == 2);  // missing --arc
    CHECK(run_cli("bogus").status == 2);                        // unknown subcommand
    CHECK(run_cli("").status == 2);                             // no subcommand
    CHECK(run_cli("frieze --x 1.5").status == 2);               // width below two
    const std::string bad_doc = write_doc("cli_bad_doc.json", R"({"diagonals": []})");
    CHECK(run_cli("expand --input " + bad_doc + " --arc 1,2").status == 2);
    const std::string bad_orientation = write_doc(
        "cli_bad_orientation.json",
        R"({"n": 6, "diagonals": [[2,6],[3,6],[3,5]], "orientation": [[6,2]]})");
    CHECK(run_cli("expand --input " + bad_orientation + " --arc 1,4 --orientation file")
              .status == 2);
}

TEST_CASE("tolerance failures exit with status one", "[cli]") {
    const CliResult flip =
        run_cli("flip --input " + kOrientedFile + " --arc 1,4 --seed 11 --tol 1e-20");
    CHECK(flip.status == 1);
    CHECK(flip.output.find("deviation") != std::string::npos);
    const CliResult frieze = run_cli("frieze --width 2 --seed 3 --tol 1e-30");
    CHECK(frieze.status == 1);
}
