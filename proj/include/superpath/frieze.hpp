#pragma once

// Super-friezes: staggered arrays over Grassmann numbers whose even entries
// obey the unimodular diamond rule and whose odd entries sit between
// diagonally adjacent even entries.  The array of width n is grown from a
// decorated fan triangulation of an (n+3)-gon: each south-east diagonal of
// the array is the set of chord lengths at one fan centre, consecutive
// diagonals are related by a sweep of exchange moves, and every elementary
// diamond of the array is one exchange move whose two border sides equal 1.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superpath/grassmann.hpp"
#include "superpath/ptolemy.hpp"
#include "superpath/triangulation.hpp"

namespace superpath::frieze {

using grassmann::GrassmannNumber;
using grassmann::gmul;
using grassmann::gsqrt;
using grassmann::max_abs_diff;
using ptolemy::DecoratedState;
using ptolemy::FlipResult;
using triangulation::Arc;
using triangulation::arc_key;
using triangulation::Face;
using triangulation::face_key;
using triangulation::fan_triangulation;
using triangulation::SpinStructure;
using triangulation::Triangulation;

// 1-based cyclic vertex label in a p-gon.
inline int wrap(int v, int p) {
    int r = (v - 1) % p;
    if (r < 0) r += p;
    return r + 1;
}

// One south-east diagonal of the array: even[0..width+1] runs from the top
// border 1 to the bottom border 1, and odd[r] (r = 0..width) sits between
// even[r] and even[r+1].  Each odd entry is the face invariant of the
// triangle spanned by its two neighbours' chords, rescaled by the square
// root of the product of those neighbours.
struct FriezeDiagonal {
    std::vector<GrassmannNumber> even;
    std::vector<GrassmannNumber> odd;
};

// One elementary diamond of the array, in the orientation
//
//                 top
//       upper_left   upper_right
//     left                   right
//       lower_left   lower_right
//                bottom
//
// recorded from the exchange move that produced `right` from `left`:
// left = e, top = b, bottom = d, right = f (the quadrilateral sides a and c
// are border 1s), and the four odd entries are the rescaled face invariants
// upper_left = theta sqrt(b e), lower_left = sigma sqrt(e d),
// lower_right = theta' sqrt(d f), upper_right = sigma' sqrt(b f).
struct FriezeDiamond {
    int sweep = 0;  // 0-based index of the diagonal holding `left`
    int pos = 0;    // 1-based row of `left` within that diagonal
    GrassmannNumber left, top, bottom, right;
    GrassmannNumber upper_left, upper_right, lower_left, lower_right;
};

// A built frieze: polygon = width + 3 vertices, diagonals[t] for
// t = 0..polygon (one extra so the glide can be observed), and one diamond
// per exchange move (polygon sweeps of `width` moves each).  `initial` is
// the decorated fan the array was grown from; its odd inputs are the
// Grassmann generators g_1..g_{width+1} scaled so that diagonals[0].odd
// reproduces them.
struct SuperFrieze {
    int width;
    int polygon;
    DecoratedState initial;
    std::vector<FriezeDiagonal> diagonals;
    std::vector<FriezeDiamond> diamonds;
};

// Largest absolute residual of the six diamond relations
//   left right - top bottom = 1 + lower_right upper_left
//   left right - top bottom = 1 + upper_right lower_left
//   left lower_right - bottom upper_left = lower_left
//   top  lower_right - right  upper_left = upper_right
//   top  lower_left  - left   upper_right = upper_left
//   right lower_left - bottom upper_right = lower_right
inline double diamond_residual(const FriezeDiamond& dm) {
    const GrassmannNumber one = GrassmannNumber::scalar(dm.left.num_generators(), 1.0);
    double res = 0.0;
    const auto acc = [&res](const GrassmannNumber& lhs, const GrassmannNumber& rhs) {
        res = std::max(res, max_abs_diff(lhs, rhs));
    };
    const GrassmannNumber cross = gmul(dm.left, dm.right) - gmul(dm.top, dm.bottom);
    acc(cross, one + gmul(dm.lower_right, dm.upper_left));
    acc(cross, one + gmul(dm.upper_right, dm.lower_left));
    acc(gmul(dm.left, dm.lower_right) - gmul(dm.bottom, dm.upper_left), dm.lower_left);
    acc(gmul(dm.top, dm.lower_right) - gmul(dm.right, dm.upper_left), dm.upper_right);
    acc(gmul(dm.top, dm.lower_left) - gmul(dm.left, dm.upper_right), dm.upper_left);
    acc(gmul(dm.right, dm.lower_left) - gmul(dm.bottom, dm.upper_right), dm.lower_right);
    return res;
}

// Largest absolute coefficient appearing in the diamond, for turning the
// absolute residual into a relative one.
inline double diamond_scale(const FriezeDiamond& dm) {
    double s = 1.0;
    for (const GrassmannNumber* g : {&dm.left, &dm.top, &dm.bottom, &dm.right, &dm.upper_left,
                                     &dm.upper_right, &dm.lower_left, &dm.lower_right})
        s = std::max(s, g->max_abs_coefficient());
    return s;
}

// Build the frieze of the given width from the even inputs x[0..width-1]
// (all positive) and optional odd input coefficients xi[0..width]; the j-th
// odd input is xi[j-1] times the j-th Grassmann generator (all 1 by
// default).  diagonals[0] holds the inputs: even 1, x_1, ..., x_n, 1 and
// odd xi_1, ..., xi_{n+1}.
inline SuperFrieze build_frieze(const std::vector<double>& x, const std::vector<double>& xi = {}) {
    const int width = static_cast<int>(x.size());
    if (width < 2) throw std::invalid_argument("frieze width must be at least 2");
    const int p = width + 3;
    const int k = width + 1;
    for (double v : x)
        if (!(v > 0)) throw std::invalid_argument("even frieze inputs must be positive");
    std::vector<double> xic(static_cast<std::size_t>(k), 1.0);
    if (!xi.empty()) {
        if (static_cast<int>(xi.size()) != k)
            throw dimension_error("need width+1 odd frieze inputs");
        xic = xi;
    }

    // Decorated fan at vertex 1: boundary lengths 1, diagonal (1, p-w) has
    // length x_w and points away from the centre, and the face flanked by
    // the chords carrying x_{w-1} and x_w holds the w-th odd input (border
    // chords count as 1).
    const Triangulation t = fan_triangulation(p);
    SpinStructure s;
    for (int v = 3; v <= p - 1; ++v) s.orient(arc_key(1, v), 1, v);
    const auto fan_length = [&](int v) { return (v == 2 || v == p) ? 1.0 : x[p - v - 1]; };
    std::map<Arc, GrassmannNumber> lambda;
    for (const Arc& a : t.arcs()) {
        const double v =
            t.is_diagonal(a) ? x[p - std::max(a.first, a.second) - 1] : 1.0;
        lambda.emplace(a, GrassmannNumber::scalar(k, v));
    }
    std::map<Face, GrassmannNumber> mu;
    for (int v = 2; v <= p - 1; ++v) {
        const int w = p - v;
        const double coeff = xic[w - 1] / std::sqrt(fan_length(v) * fan_length(v + 1));
        mu.emplace(face_key(1, v, v + 1),
                   gmul(GrassmannNumber::scalar(k, coeff), GrassmannNumber::generator(k, w)));
    }
    DecoratedState st(t, s, std::move(lambda), std::move(mu));
    DecoratedState initial = st;

    std::vector<FriezeDiagonal> diagonals;
    std::vector<FriezeDiamond> diamonds;
    diamonds.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(width));

    const auto read_diagonal = [&](int centre) {
        FriezeDiagonal d;
        d.even.assign(static_cast<std::size_t>(width) + 2, GrassmannNumber::scalar(k, 1.0));
        for (int r = 1; r <= width; ++r)
            d.even[static_cast<std::size_t>(r)] =
                st.lambda.at(arc_key(centre, wrap(centre - r - 1, p)));
        for (int r = 0; r <= width; ++r) {
            const Face f = face_key(centre, wrap(centre - r - 1, p), wrap(centre - r - 2, p));
            d.odd.push_back(gmul(gsqrt(gmul(d.even[static_cast<std::size_t>(r)],
                                            d.even[static_cast<std::size_t>(r) + 1])),
                                 st.mu.at(f)));
        }
        diagonals.push_back(std::move(d));
    };

    int centre = 1;
    read_diagonal(centre);
    for (int sweep = 0; sweep < p; ++sweep) {
        // Flip the fan chords of the current centre from the shortest to the
        // longest; each move is one diamond of the array.
        for (int pos = 1; pos <= width; ++pos) {
            const FlipResult r = ptolemy::flip(st, arc_key(centre, wrap(centre - pos - 1, p)));
            FriezeDiamond dm;
            dm.sweep = sweep;
            dm.pos = pos;
            dm.left = r.e;
            dm.top = r.b;
            dm.bottom = r.d;
            dm.right = r.f;
            dm.upper_left = gmul(r.theta, gsqrt(gmul(r.b, r.e)));
            dm.lower_left = gmul(r.sigma, gsqrt(gmul(r.e, r.d)));
            dm.lower_right = gmul(r.theta_new, gsqrt(gmul(r.d, r.f)));
            dm.upper_right = gmul(r.sigma_new, gsqrt(gmul(r.b, r.f)));
            diamonds.push_back(std::move(dm));
        }
        // The sweep leaves every new fan chord pointing away from the new
        // centre except the last one; reversing the triangle that joins the
        // old centre to the new one fixes that arrow (and negates the face
        // invariant, which the next diagonal reads back negated).
        const int next = wrap(centre - 1, p);
        const Face last = face_key(next, centre, wrap(centre + 1, p));
        st.spin = triangulation::reverse_triangle(st.spin, st.tri, last);
        st.mu.at(last) = -st.mu.at(last);
        centre = next;
        read_diagonal(centre);
    }
    return SuperFrieze{width, p, std::move(initial), std::move(diagonals), std::move(diamonds)};
}

}  // namespace superpath::frieze
