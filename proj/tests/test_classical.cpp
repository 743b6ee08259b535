#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "superpath/classical.hpp"
#include "superpath/rng.hpp"
#include "superpath/tpaths.hpp"

using superpath::Rng;
using namespace superpath::classical;
using namespace superpath::triangulation;

namespace {

LaurentPoly rand_poly(int m, int max_terms, Rng& rng) {
    LaurentPoly p(m);
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < t; ++i) {
        Exponents e(m);
        for (int j = 0; j < m; ++j) e[j] = static_cast<int>(rng.below(7)) - 3;
        p.add_term(e, static_cast<int>(rng.below(9)) - 4);
    }
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic", "[classical]") {
    const int m = 2;
    const auto x = LaurentPoly::variable(m, 1);
    const auto y = LaurentPoly::variable(m, 2);
    REQUIRE((x + y) * (x - y) == x * x - y * y);
    REQUIRE((x - x).is_zero());
    REQUIRE(LaurentPoly::constant(m, 0).is_zero());

    const auto inv = LaurentPoly::variable(m, 1, -1);
    REQUIRE(x * inv == LaurentPoly::constant(m, 1));

    REQUIRE_THROWS_AS(x + LaurentPoly::variable(3, 1), superpath::dimension_error);
    REQUIRE_THROWS_AS(LaurentPoly::variable(2, 3), superpath::dimension_error);
}

TEST_CASE("exact division", "[classical]") {
    const int m = 2;
    const auto x = LaurentPoly::variable(m, 1);
    const auto y = LaurentPoly::variable(m, 2);
    REQUIRE(divide_exact(x * x - y * y, x - y) == x + y);
    REQUIRE(divide_exact(x * x - y * y, x + y) == x - y);

    Rng rng(2718);
    for (int rep = 0; rep < 60; ++rep) {
        const auto a = rand_poly(3, 6, rng);
        auto b = rand_poly(3, 4, rng);
        if (b.is_zero()) b = LaurentPoly::variable(3, 1);
        REQUIRE(divide_exact(a * b, b) == a);
    }

    REQUIRE_THROWS_AS(divide_exact(x, x + y, 1000), std::runtime_error);
    REQUIRE_THROWS_AS(divide_exact(x, LaurentPoly::zero(m)), std::invalid_argument);
}

TEST_CASE("pentagon exchange golden", "[classical]") {
    const auto t = fan_triangulation(5);
    // One crossing: lambda(2,4) * lambda(1,3) = lambda(1,2) lambda(3,4)
    //                                          + lambda(2,3) lambda(1,4).
    const auto v = classical_lambda_flips(t, 2, 4);
    auto xp = [&](int i, int p) { return LaurentPoly::variable(7, i, p); };
    const auto expected =
        xp(2, 1) * xp(4, 1) * xp(6, -1) + xp(3, 1) * xp(7, 1) * xp(6, -1);
    REQUIRE(v == expected);
    REQUIRE(classical_lambda_paths(t, 2, 4) == expected);
    REQUIRE(classical_lambda_paths(t, 4, 2) == expected);

    // Trivial chord: the arc's own variable.
    REQUIRE(classical_lambda_paths(t, 1, 4) == xp(7, 1));
    REQUIRE(classical_lambda_flips(t, 1, 4) == xp(7, 1));
}

TEST_CASE("running hexagon even part", "[classical]") {
    const auto t = Triangulation::build(6, {{2, 6}, {3, 6}, {3, 5}});
    SpinStructure s;
    s.orient(arc_key(2, 6), 6, 2);
    s.orient(arc_key(3, 6), 6, 3);
    s.orient(arc_key(3, 5), 5, 3);
    const auto e = superpath::tpaths::expand_lambda(t, s, 1, 4);
    const auto body = even_part(e.value);
    REQUIRE(body.term_count() == 5);
    REQUIRE(body == classical_lambda_paths(t, 1, 4));
    REQUIRE(body == classical_lambda_flips(t, 1, 4));
}

TEST_CASE("the two classical engines and the graded body agree", "[classical]") {
    Rng rng(99321);
    for (int n = 4; n <= 7; ++n) {
        for (const auto& t : all_triangulations(n)) {
            const auto s = random_spin(t, rng);
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    if (t.is_arc(a, b)) continue;
                    const auto paths = classical_lambda_paths(t, a, b);
                    const auto flips = classical_lambda_flips(t, a, b);
                    REQUIRE(paths == flips);
                    const auto e = superpath::tpaths::expand_lambda(t, s, a, b);
                    REQUIRE(even_part(e.value) == paths);
                }
            }
        }
    }
}
