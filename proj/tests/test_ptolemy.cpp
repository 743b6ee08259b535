#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

#include "superpath/ptolemy.hpp"
#include "superpath/rng.hpp"
#include "superpath/tpaths.hpp"

using superpath::Rng;
using namespace superpath::grassmann;
using namespace superpath::ptolemy;
using namespace superpath::triangulation;

namespace {

// The defining relations every exchange move must satisfy:
//   e f     = a c + b d + sqrt(abcd) sigma theta
//   theta' sqrt(ef) = theta sqrt(bd) + sigma sqrt(ac)
//   sigma' sqrt(ef) = sigma sqrt(bd) - theta sqrt(ac)
//   sigma theta     = sigma' theta'
void check_flip_identities(const FlipResult& r, double tol) {
    const auto ac = gmul(r.a, r.c);
    const auto bd = gmul(r.b, r.d);
    const auto root = gmul(gmul(gsqrt(r.a), gsqrt(r.b)), gmul(gsqrt(r.c), gsqrt(r.d)));
    const auto rhs = ac + bd + gmul(root, gmul(r.sigma, r.theta));
    const auto ef = gmul(r.e, r.f);
    REQUIRE(relative_deviation(ef, rhs) < tol);

    const auto sq_ef = gsqrt(ef);
    REQUIRE(relative_deviation(gmul(r.theta_new, sq_ef),
                               gmul(r.theta, gsqrt(bd)) + gmul(r.sigma, gsqrt(ac))) < tol);
    REQUIRE(relative_deviation(gmul(r.sigma_new, sq_ef),
                               gmul(r.sigma, gsqrt(bd)) - gmul(r.theta, gsqrt(ac))) < tol);
    REQUIRE(relative_deviation(gmul(r.sigma_new, r.theta_new), gmul(r.sigma, r.theta)) < tol);
}

std::vector<double> random_lengths(int count, Rng& rng) {
    std::vector<double> x(count);
    for (double& v : x) v = rng.uniform(0.5, 2.0);
    return x;
}

}  // namespace

TEST_CASE("pentagon cycle of five flips", "[ptolemy]") {
    const auto t = fan_triangulation(5);
    SpinStructure s;
    s.orient(arc_key(1, 3), 1, 3);
    s.orient(arc_key(1, 4), 1, 4);

    Rng rng(55501);
    for (int rep = 0; rep < 25; ++rep) {
        const auto x = random_lengths(7, rng);
        DecoratedState st = standard_state(t, s, x);
        // Sorted faces (1,2,3) < (1,3,4) < (1,4,5) carry generators 1,2,3.
        const auto g1 = GrassmannNumber::generator(3, 1);
        const auto g2 = GrassmannNumber::generator(3, 2);
        const auto g3 = GrassmannNumber::generator(3, 3);

        // Arc values by the side naming of the quadrilateral walkthrough:
        // boundary (1,2), (1,5), (4,5), (3,4), (2,3) and diagonals (1,3), (1,4).
        const double pa = x[2 - 1], pb = x[1 - 1], pc = x[5 - 1], pd = x[4 - 1],
                     pe = x[3 - 1], px1 = x[6 - 1], px2 = x[7 - 1];

        const auto r1 = flip(st, arc_key(1, 3));
        check_flip_identities(r1, 1e-12);
        REQUIRE(r1.new_arc == arc_key(2, 4));
        REQUIRE(st.spin.direction(arc_key(2, 4)) == std::pair<int, int>(2, 4));
        REQUIRE(r1.flipped_side == arc_key(3, 4));
        REQUIRE(st.spin.boundary_sign(arc_key(3, 4)) == -1);
        // First flip in closed form.
        const auto expected_x3 =
            GrassmannNumber::scalar(3, (pa * pd + pe * px2) / px1) +
            gmul(g1, g2) * (std::sqrt(pa * pd * pe * px2) / px1);
        REQUIRE(max_abs_diff(st.lambda.at(arc_key(2, 4)), expected_x3) < 1e-12);

        const auto r2 = flip(st, arc_key(1, 4));
        check_flip_identities(r2, 1e-12);
        REQUIRE(r2.new_arc == arc_key(2, 5));
        REQUIRE(st.spin.direction(arc_key(2, 5)) == std::pair<int, int>(2, 5));
        REQUIRE(st.spin.boundary_sign(arc_key(4, 5)) == -1);

        const auto r3 = flip(st, arc_key(2, 4));
        check_flip_identities(r3, 1e-12);
        REQUIRE(r3.new_arc == arc_key(3, 5));
        REQUIRE(st.spin.direction(arc_key(3, 5)) == std::pair<int, int>(3, 5));
        // The (4,5) flag flips back.
        REQUIRE(st.spin.boundary_sign(arc_key(4, 5)) == +1);
        // Halfway identity: the new length in closed form.
        const auto expected_x5 =
            GrassmannNumber::scalar(3, (pb * pd + pc * px1) / px2) +
            gmul(g2, g3) * (std::sqrt(pb * pc * pd * px1) / px2);
        REQUIRE(max_abs_diff(st.lambda.at(arc_key(3, 5)), expected_x5) < 1e-12);

        const auto r4 = flip(st, arc_key(2, 5));
        check_flip_identities(r4, 1e-12);
        REQUIRE(r4.new_arc == arc_key(1, 3));
        REQUIRE(st.spin.direction(arc_key(1, 3)) == std::pair<int, int>(3, 1));

        const auto r5 = flip(st, arc_key(3, 5));
        check_flip_identities(r5, 1e-12);
        REQUIRE(r5.new_arc == arc_key(1, 4));
        REQUIRE(st.spin.direction(arc_key(1, 4)) == std::pair<int, int>(4, 1));

        // Back to the starting shape: same lengths, arrows reversed, only the
        // (3,4) boundary flag negated, middle face invariant negated.
        REQUIRE(st.tri.is_arc(1, 3));
        REQUIRE(st.tri.is_arc(1, 4));
        REQUIRE(relative_deviation(st.lambda.at(arc_key(1, 3)),
                                   GrassmannNumber::scalar(3, px1)) < 1e-9);
        REQUIRE(relative_deviation(st.lambda.at(arc_key(1, 4)),
                                   GrassmannNumber::scalar(3, px2)) < 1e-9);
        REQUIRE(max_abs_diff(st.mu.at(face_key(1, 2, 3)), g1) < 1e-9);
        REQUIRE(max_abs_diff(st.mu.at(face_key(1, 3, 4)), -g2) < 1e-9);
        REQUIRE(max_abs_diff(st.mu.at(face_key(1, 4, 5)), g3) < 1e-9);
        REQUIRE(st.spin.boundary_sign(arc_key(3, 4)) == -1);
        for (const Arc& side : {arc_key(1, 2), arc_key(2, 3), arc_key(4, 5), arc_key(1, 5)})
            REQUIRE(st.spin.boundary_sign(side) == +1);
    }
}

TEST_CASE("double flip on a quadrilateral", "[ptolemy]") {
    const auto t = Triangulation::build(4, {{1, 3}});
    Rng rng(818141);
    for (int rep = 0; rep < 50; ++rep) {
        SpinStructure s;
        if (rng.coin())
            s.orient(arc_key(1, 3), 1, 3);
        else
            s.orient(arc_key(1, 3), 3, 1);
        DecoratedState st = standard_state(t, s, random_lengths(5, rng));
        const auto e0 = st.lambda.at(arc_key(1, 3));
        const auto mu_left = st.mu;  // face invariants before
        const auto dir0 = st.spin.direction(arc_key(1, 3));

        const auto r1 = flip(st, arc_key(1, 3));
        check_flip_identities(r1, 1e-12);
        REQUIRE(st.tri.is_arc(2, 4));
        const auto r2 = flip(st, arc_key(2, 4));
        check_flip_identities(r2, 1e-12);

        // Shape restored, diagonal arrow reversed.
        REQUIRE(st.tri.is_arc(1, 3));
        REQUIRE(st.spin.direction(arc_key(1, 3)) ==
                std::pair<int, int>(dir0.second, dir0.first));
        // Length restored exactly up to roundoff.
        REQUIRE(relative_deviation(st.lambda.at(arc_key(1, 3)), e0) < 1e-10);
        // The left-of-e face invariant is negated, the right one survives;
        // their product is preserved.
        const int tail = dir0.first, head = dir0.second;
        const int apex_r = on_right(4, tail, head, 2) ? 2 : 4;
        const int apex_l = apex_r == 2 ? 4 : 2;
        const auto old_theta = mu_left.at(face_key(tail, head, apex_l));
        const auto old_sigma = mu_left.at(face_key(tail, head, apex_r));
        REQUIRE(max_abs_diff(st.mu.at(face_key(tail, head, apex_l)), -old_theta) < 1e-10);
        REQUIRE(max_abs_diff(st.mu.at(face_key(tail, head, apex_r)), old_sigma) < 1e-10);
        // The sigma/theta roles land swapped, so the preserved product pairs
        // the new left-face value with the new right-face value.
        REQUIRE(relative_deviation(gmul(st.mu.at(face_key(tail, head, apex_l)),
                                        st.mu.at(face_key(tail, head, apex_r))),
                                   gmul(old_sigma, old_theta)) < 1e-10);
        // Orientation flags: the two left-side boundary edges flipped.
        REQUIRE(st.spin.boundary_sign(arc_key(tail, apex_l)) == -1);
        REQUIRE(st.spin.boundary_sign(arc_key(head, apex_l)) == -1);
        REQUIRE(st.spin.boundary_sign(arc_key(tail, apex_r)) == +1);
        REQUIRE(st.spin.boundary_sign(arc_key(head, apex_r)) == +1);
    }
}

TEST_CASE("straightening agrees with the path expansion", "[ptolemy]") {
    Rng rng(424242);
    for (int n = 5; n <= 8; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            const auto t = random_triangulation(n, rng);
            const auto s = random_spin(t, rng);
            int a = 0, b = 0;
            for (int tries = 0; tries < 200 && a == 0; ++tries) {
                const int u = 1 + static_cast<int>(rng.below(n));
                const int v = 1 + static_cast<int>(rng.below(n));
                if (u != v && !t.is_arc(u, v)) a = u, b = v;
            }
            if (a == 0) continue;
            const auto x = random_lengths(t.arc_count(), rng);
            const DecoratedState st = standard_state(t, s, x);

            // Evaluate the combinatorial expansion with the face invariants.
            const auto e = superpath::tpaths::expand_lambda(t, s, a, b);
            std::vector<GrassmannNumber> images;
            for (int i = 1; i <= e.fd.q(); ++i) {
                const Face& f = e.fd.tris[i - 1];
                const Face of = face_key(e.restriction.old_label[f[0]],
                                         e.restriction.old_label[f[1]],
                                         e.restriction.old_label[f[2]]);
                images.push_back(st.mu.at(of));
            }
            const auto from_paths = superpath::superring::evaluate(e.value, x, images);

            // Straighten by flips under every strategy.
            const auto v1 = flip_sequence_lambda(st, a, b, FlipStrategy::kFromA).value;
            const auto v2 = flip_sequence_lambda(st, a, b, FlipStrategy::kFromB).value;
            const auto v3 = flip_sequence_lambda(st, a, b, FlipStrategy::kAlternate).value;
            const auto v4 = flip_sequence_lambda(
                                st, a, b, FlipStrategy::kRandomReducing,
                                [&rng](std::size_t c) {
                                    return static_cast<std::size_t>(
                                        rng.below(static_cast<std::uint64_t>(c)));
                                })
                                .value;

            REQUIRE(relative_deviation(from_paths, v1) < 1e-9);
            REQUIRE(relative_deviation(v1, v2) < 1e-9);
            REQUIRE(relative_deviation(v1, v3) < 1e-9);
            REQUIRE(relative_deviation(v1, v4) < 1e-9);
        }
    }
}

TEST_CASE("flip input validation", "[ptolemy]") {
    const auto t = fan_triangulation(5);
    SpinStructure s;
    s.orient(arc_key(1, 3), 1, 3);
    s.orient(arc_key(1, 4), 1, 4);
    Rng rng(7);
    DecoratedState st = standard_state(t, s, random_lengths(7, rng));
    REQUIRE_THROWS_AS(flip(st, arc_key(1, 2)), std::invalid_argument);   // boundary
    REQUIRE_THROWS_AS(flip(st, arc_key(2, 4)), std::invalid_argument);   // not an arc
    // Trivial chord: no flips run, the arc's own value comes back.
    const auto r = flip_sequence_lambda(st, 1, 3);
    REQUIRE(r.flipped.empty());
    REQUIRE(max_abs_diff(r.value, st.lambda.at(arc_key(1, 3))) == 0.0);

    // Missing orientation is rejected at construction.
    SpinStructure partial;
    partial.orient(arc_key(1, 3), 1, 3);
    REQUIRE_THROWS_AS(standard_state(t, partial, std::vector<double>(7, 1.0)),
                      std::invalid_argument);
}
