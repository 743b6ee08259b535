#pragma once

// Exchange moves on a decorated triangulated disk: each flip replaces one
// diagonal by the other diagonal of its quadrilateral and updates the even
// lengths and odd face invariants over Grassmann numbers.  Serves as the
// numeric engine that the combinatorial expansions are checked against.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "superpath/grassmann.hpp"
#include "superpath/triangulation.hpp"

namespace superpath::ptolemy {

using grassmann::GrassmannNumber;
using triangulation::Arc;
using triangulation::Face;
using triangulation::SpinStructure;
using triangulation::Triangulation;

// A triangulation whose arcs carry even values, whose faces carry odd values,
// and whose diagonals are oriented (boundary arcs carry +/- flags inside the
// spin structure instead).
struct DecoratedState {
    Triangulation tri;
    SpinStructure spin;
    std::map<Arc, GrassmannNumber> lambda;
    std::map<Face, GrassmannNumber> mu;

    DecoratedState(Triangulation t, SpinStructure s, std::map<Arc, GrassmannNumber> l,
                   std::map<Face, GrassmannNumber> m)
        : tri(std::move(t)), spin(std::move(s)), lambda(std::move(l)), mu(std::move(m)) {
        for (const Arc& a : tri.arcs()) {
            auto it = lambda.find(a);
            if (it == lambda.end()) throw std::invalid_argument("arc without a length value");
            if (!it->second.is_even()) throw parity_error("arc lengths must be even");
        }
        if (lambda.size() != tri.arcs().size())
            throw std::invalid_argument("length value on a non-arc");
        for (const Face& f : tri.faces()) {
            auto it = mu.find(f);
            if (it == mu.end()) throw std::invalid_argument("face without an odd invariant");
            if (!it->second.is_odd()) throw parity_error("face invariants must be odd");
        }
        if (mu.size() != tri.faces().size())
            throw std::invalid_argument("odd invariant on a non-face");
        for (const Arc& d : tri.diagonals())
            if (!spin.has_orientation(d))
                throw std::invalid_argument("diagonal carries no orientation");
    }
};

// The standard start: length of arc with index i is x_values[i-1] (a plain
// positive number), and the face invariant of the j-th face (in the sorted
// face order of Triangulation::faces) is the j-th Grassmann generator.
inline DecoratedState standard_state(const Triangulation& t, const SpinStructure& s,
                                     const std::vector<double>& x_values) {
    if (static_cast<int>(x_values.size()) != t.arc_count())
        throw dimension_error("need one value per arc");
    const int k = t.n() - 2;
    std::map<Arc, GrassmannNumber> lambda;
    for (const Arc& a : t.arcs()) {
        const double v = x_values[t.arc_index(a) - 1];
        if (v <= 0) throw std::invalid_argument("arc lengths must be positive");
        lambda.emplace(a, GrassmannNumber::scalar(k, v));
    }
    std::map<Face, GrassmannNumber> mu;
    for (std::size_t j = 0; j < t.faces().size(); ++j)
        mu.emplace(t.faces()[j], GrassmannNumber::generator(k, static_cast<int>(j) + 1));
    return DecoratedState(t, s, std::move(lambda), std::move(mu));
}

// Everything one exchange move touched, for verifying the defining relations:
// e f = a c + b d + sqrt(abcd) sigma theta, and the two odd updates.
struct FlipResult {
    Arc old_arc{}, new_arc{};
    Arc flipped_side{};  // the quadrilateral side whose orientation flag flipped
    GrassmannNumber a, b, c, d, e, f;
    GrassmannNumber sigma, theta;        // before: right / left face invariants
    GrassmannNumber sigma_new, theta_new;
};

// Flip the oriented diagonal `diag`.  Quadrilateral convention, looking along
// the orientation tail -> head: the face on the left carries theta, the face
// on the right carries sigma; side a joins the tail to the left apex, b the
// head to the left apex, c the head to the right apex, d the tail to the
// right apex.  The replacement diagonal runs from the right apex to the left
// apex (and is oriented that way); the new left-of-f face (containing the old
// tail) receives theta', the other face receives sigma'; the orientation flag
// of side b flips.
inline FlipResult flip(DecoratedState& st, const Arc& diag) {
    const int n = st.tri.n();
    if (!st.tri.is_arc(diag.first, diag.second))
        throw std::invalid_argument("not an arc of the triangulation");
    if (triangulation::vertices_adjacent(n, diag.first, diag.second))
        throw std::invalid_argument("cannot flip a boundary arc");
    const auto [tail, head] = st.spin.direction(diag);

    const auto fs = st.tri.faces_with_arc(diag);
    const int p0 = triangulation::third_vertex(fs[0], diag);
    const int p1 = triangulation::third_vertex(fs[1], diag);
    const bool p0_right = triangulation::on_right(n, tail, head, p0);
    const int left = p0_right ? p1 : p0;   // theta apex
    const int right = p0_right ? p0 : p1;  // sigma apex
    if (triangulation::on_right(n, tail, head, left) ||
        !triangulation::on_right(n, tail, head, right))
        throw std::logic_error("flip quadrilateral is not split by the diagonal");

    FlipResult r;
    r.old_arc = triangulation::arc_key(tail, head);
    r.new_arc = triangulation::arc_key(right, left);
    const Arc side_a = triangulation::arc_key(tail, left);
    const Arc side_b = triangulation::arc_key(head, left);
    const Arc side_c = triangulation::arc_key(head, right);
    const Arc side_d = triangulation::arc_key(tail, right);
    r.flipped_side = side_b;
    r.a = st.lambda.at(side_a);
    r.b = st.lambda.at(side_b);
    r.c = st.lambda.at(side_c);
    r.d = st.lambda.at(side_d);
    r.e = st.lambda.at(r.old_arc);
    r.sigma = st.mu.at(triangulation::face_key(tail, head, right));
    r.theta = st.mu.at(triangulation::face_key(tail, head, left));

    using grassmann::ginv;
    using grassmann::gmul;
    using grassmann::gsqrt;
    const GrassmannNumber ac = gmul(r.a, r.c);
    const GrassmannNumber bd = gmul(r.b, r.d);
    const GrassmannNumber root = gmul(gmul(gsqrt(r.a), gsqrt(r.b)), gmul(gsqrt(r.c), gsqrt(r.d)));
    r.f = gmul(ginv(r.e), ac + bd + gmul(root, gmul(r.sigma, r.theta)));

    const GrassmannNumber inv_sqrt_ef = ginv(gsqrt(gmul(r.e, r.f)));
    const GrassmannNumber sq_bd = gsqrt(bd);
    const GrassmannNumber sq_ac = gsqrt(ac);
    r.theta_new = gmul(inv_sqrt_ef, gmul(r.theta, sq_bd) + gmul(r.sigma, sq_ac));
    r.sigma_new = gmul(inv_sqrt_ef, gmul(r.sigma, sq_bd) - gmul(r.theta, sq_ac));

    st.tri = st.tri.with_replaced_diagonal(r.old_arc, r.new_arc);
    st.lambda.erase(r.old_arc);
    st.lambda.emplace(r.new_arc, r.f);
    st.mu.erase(triangulation::face_key(tail, head, right));
    st.mu.erase(triangulation::face_key(tail, head, left));
    st.mu.emplace(triangulation::face_key(tail, right, left), r.theta_new);
    st.mu.emplace(triangulation::face_key(head, right, left), r.sigma_new);

    st.spin.erase(r.old_arc);
    st.spin.orient(r.new_arc, right, left);
    if (triangulation::vertices_adjacent(n, side_b.first, side_b.second))
        st.spin.flip_boundary_sign(side_b);
    else
        st.spin.reverse(side_b);
    return r;
}

// How the next diagonal to flip is chosen when straightening a chord.
enum class FlipStrategy {
    kFromA,            // always the crossed diagonal nearest a
    kFromB,            // always the crossed diagonal nearest b
    kAlternate,        // nearest a, then nearest b, alternating
    kRandomReducing    // uniformly among crossed diagonals whose flip helps
};

struct SequenceResult {
    DecoratedState state;       // the final decorated triangulation
    std::vector<Arc> flipped;   // diagonals flipped, in order
    GrassmannNumber value;      // final length of (a,b)
};

// Would flipping d lower the number of diagonals crossing (a, b)?  The flip
// removes d (which crosses) and inserts the opposite diagonal of its
// quadrilateral, so this holds exactly when the replacement does not cross.
inline bool flip_reduces_crossings(const Triangulation& t, const Arc& d, int a, int b) {
    const auto fs = t.faces_with_arc(d);
    const Arc nd = triangulation::arc_key(triangulation::third_vertex(fs[0], d),
                                          triangulation::third_vertex(fs[1], d));
    return !triangulation::arcs_cross(t.n(), triangulation::arc_key(a, b), nd);
}

// Flip diagonals of `start` until (a, b) is an arc, choosing each flip by the
// given strategy, and return the final state together with the length of
// (a, b).  The random strategy draws from pick_below(count) -> [0, count).
inline SequenceResult flip_sequence_lambda(
    const DecoratedState& start, int a, int b, FlipStrategy strategy = FlipStrategy::kFromA,
    const std::function<std::size_t(std::size_t)>& pick_below = {}) {
    const int n = start.tri.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");

    SequenceResult out{start, {}, GrassmannNumber()};
    bool from_a = true;
    std::size_t previous = static_cast<std::size_t>(-1);
    while (!out.state.tri.is_arc(a, b)) {
        const auto crossed = triangulation::crossed_diagonals(out.state.tri, a, b);
        if (crossed.size() >= previous) throw std::logic_error("crossing count failed to drop");
        previous = crossed.size();

        Arc pick{};
        switch (strategy) {
            case FlipStrategy::kFromA:
                pick = crossed.front();
                break;
            case FlipStrategy::kFromB:
                pick = crossed.back();
                break;
            case FlipStrategy::kAlternate:
                pick = from_a ? crossed.front() : crossed.back();
                from_a = !from_a;
                break;
            case FlipStrategy::kRandomReducing: {
                if (!pick_below)
                    throw std::invalid_argument("random strategy needs a generator");
                std::vector<Arc> candidates;
                for (const Arc& d : crossed)
                    if (flip_reduces_crossings(out.state.tri, d, a, b)) candidates.push_back(d);
                pick = candidates[pick_below(candidates.size())];
                break;
            }
        }
        out.flipped.push_back(pick);
        flip(out.state, pick);
    }
    out.value = out.state.lambda.at(triangulation::arc_key(a, b));
    return out;
}

}  // namespace superpath::ptolemy
