#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "superpath/rng.hpp"
#include "superpath/superring.hpp"

using superpath::Rng;
using superpath::dimension_error;
using superpath::parity_error;
using superpath::grassmann::GrassmannNumber;
using superpath::grassmann::gmul;
using superpath::grassmann::max_abs_diff;
using namespace superpath::superring;

namespace {

SuperPolynomial x(int m, int k, int var, int halves = 2) {
    return SuperPolynomial::x_power(m, k, var, halves);
}

SuperPolynomial th(int m, int k, int idx) { return SuperPolynomial::theta(m, k, idx); }

SuperPolynomial random_poly(int m, int k, Rng& rng) {
    SuperPolynomial p(m, k);
    for (int t = 0; t < 6; ++t) {
        HalfExponents e(m, 0);
        for (int i = 0; i < m; ++i) e[i] = static_cast<int>(rng.below(7)) - 3;
        const auto mask = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << k));
        const Rational c(static_cast<int>(rng.below(9)) - 4, 1 + static_cast<int>(rng.below(3)));
        p += SuperPolynomial::monomial(m, k, c, e, mask);
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic is exact", "[superring]") {
    const int m = 2, k = 0;
    const auto sum = x(m, k, 1) + x(m, k, 2);
    const auto sq = sum * sum;
    auto expected = x(m, k, 1, 4) + x(m, k, 2, 4) +
                    Rational(2) * (x(m, k, 1) * x(m, k, 2));
    REQUIRE(sq == expected);
    REQUIRE((sq - sq).is_zero());
    const auto third = SuperPolynomial::constant(m, k, Rational(1, 3));
    REQUIRE(third + third + third == SuperPolynomial::one(m, k));
}

TEST_CASE("thetas anticommute and square to zero", "[superring]") {
    const int m = 1, k = 3;
    REQUIRE((th(m, k, 1) * th(m, k, 2) + th(m, k, 2) * th(m, k, 1)).is_zero());
    REQUIRE((th(m, k, 2) * th(m, k, 2)).is_zero());
    // theta1 theta3 then theta2: one transposition to sort, so coefficient -1.
    const auto p = th(m, k, 1) * th(m, k, 3) * th(m, k, 2);
    REQUIRE(p.term_count() == 1);
    REQUIRE(p.coefficient(TermKey{HalfExponents(m, 0), 0b111u}) == Rational(-1));
}

TEST_CASE("evaluation matches hand computation", "[superring]") {
    const int m = 2, k = 2;
    // 2 x1^{3/2} x2^{-1} theta1 theta2
    auto p = SuperPolynomial::monomial(m, k, 2, HalfExponents{3, -2}, 0b11u);
    const auto g1 = GrassmannNumber::generator(2, 1);
    const auto g2 = GrassmannNumber::generator(2, 2);
    const auto v = evaluate(p, {4.0, 2.0}, {g1, g2});
    REQUIRE(v.coefficient(0b11u) == Catch::Approx(8.0).margin(1e-12));
    REQUIRE(v.terms().size() == 1);
}

TEST_CASE("evaluation is a ring homomorphism", "[superring]") {
    Rng rng(99);
    const int m = 3, k = 4;
    std::vector<GrassmannNumber> images;
    for (int i = 1; i <= k; ++i) {
        auto im = GrassmannNumber::generator(k, i);
        // Generic odd images: mix in another generator.
        im = im + GrassmannNumber::generator(k, (i % k) + 1) * rng.uniform(-0.5, 0.5);
        images.push_back(im);
    }
    for (int rep = 0; rep < 20; ++rep) {
        const auto p = random_poly(m, k, rng);
        const auto q = random_poly(m, k, rng);
        std::vector<double> xs = {rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                  rng.uniform(0.5, 2.0)};
        const auto lhs = evaluate(p * q, xs, images);
        const auto rhs = gmul(evaluate(p, xs, images), evaluate(q, xs, images));
        REQUIRE(max_abs_diff(lhs, rhs) < 1e-9);
        const auto add_lhs = evaluate(p + q, xs, images);
        const auto add_rhs = evaluate(p, xs, images) + evaluate(q, xs, images);
        REQUIRE(max_abs_diff(add_lhs, add_rhs) < 1e-10);
    }
}

TEST_CASE("theta sign substitution and truncation", "[superring]") {
    const int m = 1, k = 2;
    const auto p = x(m, k, 1) + th(m, k, 1) * th(m, k, 2) + th(m, k, 2);
    const auto flipped = substitute_theta_signs(p, {-1, 1});
    REQUIRE(flipped == x(m, k, 1) - th(m, k, 1) * th(m, k, 2) + th(m, k, 2));
    REQUIRE(substitute_theta_signs(flipped, {-1, 1}) == p);
    REQUIRE(truncate_theta(p) == x(m, k, 1));
    REQUIRE_THROWS_AS(substitute_theta_signs(p, {2, 1}), std::invalid_argument);
}

TEST_CASE("theta rescaling shifts exponents per word letter", "[superring]") {
    const int m = 2, k = 2;
    const auto p = SuperPolynomial::monomial(m, k, 1, HalfExponents{2, 0}, 0b11u);
    // theta1 carries x1^{1/2}, theta2 carries x2^{-1/2}.
    const std::vector<HalfExponents> scalings = {{1, 0}, {0, -1}};
    const auto r = rescale_thetas(p, scalings);
    REQUIRE(r == SuperPolynomial::monomial(m, k, 1, HalfExponents{1, 1}, 0b11u));
    REQUIRE_FALSE(all_exponents_integer(r));
    REQUIRE(all_exponents_integer(p));
}

TEST_CASE("canonical text form", "[superring]") {
    const int m = 8, k = 3;
    HalfExponents e(m, 0);
    e[0] = 3;   // x1^{3/2}
    e[7] = -2;  // x8^{-1}
    const auto p = SuperPolynomial::monomial(m, k, -1, e, 0b101u);
    REQUIRE(render(p) == "(-1) x1^(3/2) x8^(-1) θ1θ3");

    REQUIRE(render(SuperPolynomial::zero(2, 0)) == "(0)");
    REQUIRE(render(x(2, 0, 2)) == "(1) x2");
    REQUIRE(render(x(2, 0, 1, 4) * Rational(3, 2)) == "(3/2) x1^(2)");
    const auto sum = x(2, 0, 1) + SuperPolynomial::one(2, 0);
    REQUIRE(render(sum) == "(1) x1 + (1)");
}

TEST_CASE("ordered rendering moves the sign into the coefficient", "[superring]") {
    const int m = 1, k = 4;
    const auto p = th(m, k, 3) * th(m, k, 4);  // stored as +theta3 theta4
    REQUIRE(render_ordered(p, {1, 2, 3, 4}) == "(1) θ3θ4");
    REQUIRE(render_ordered(p, {1, 2, 4, 3}) == "(-1) θ4θ3");
    const auto q = th(m, k, 1) * th(m, k, 2) * th(m, k, 4) * th(m, k, 3);
    REQUIRE(render(q) == "(-1) θ1θ2θ3θ4");
    REQUIRE(render_ordered(q, {1, 2, 4, 3}) == "(1) θ1θ2θ4θ3");
}

TEST_CASE("dimension and domain errors", "[superring]") {
    REQUIRE_THROWS_AS(x(2, 0, 1) + x(3, 0, 1), dimension_error);
    REQUIRE_THROWS_AS(x(2, 0, 3), dimension_error);
    REQUIRE_THROWS_AS(th(2, 1, 2), dimension_error);
    const auto p = th(1, 1, 1);
    REQUIRE_THROWS_AS(evaluate(p, {1.0}, {GrassmannNumber::scalar(2, 1.0)}), parity_error);
    REQUIRE_THROWS_AS(evaluate(p, {-1.0}, {GrassmannNumber::generator(2, 1)}),
                      std::domain_error);
    REQUIRE_THROWS_AS(evaluate(p, {1.0, 2.0}, {GrassmannNumber::generator(2, 1)}),
                      dimension_error);
}

TEST_CASE("storage order is graded and deterministic", "[superring]") {
    const int m = 2, k = 1;
    const auto p = x(m, k, 2) + x(m, k, 1) * x(m, k, 2) + SuperPolynomial::one(m, k) +
                   th(m, k, 1);
    // Highest total degree first; the theta word only breaks ties.
    REQUIRE(render(p) == "(1) x1 x2 + (1) x2 + (1) + (1) θ1");
}
