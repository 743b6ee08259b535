#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superpath/common.hpp"

namespace superpath::triangulation {

// Vertices of the marked polygon are labeled 1..n in counterclockwise order.
using Arc = std::pair<int, int>;       // unordered pair, stored as (min, max)
using Face = std::array<int, 3>;       // triangle, stored sorted ascending

inline Arc arc_key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

inline Face face_key(int u, int v, int w) {
    Face f{u, v, w};
    std::sort(f.begin(), f.end());
    return f;
}

// True if v lies strictly inside the counterclockwise open interval from a to b.
inline bool in_ccw_interval(int n, int a, int b, int v) {
    const int width = ((b - a) % n + n) % n;
    const int offset = ((v - a) % n + n) % n;
    return offset > 0 && offset < width;
}

// True if v lies on the right of the chord directed tail -> head.
inline bool on_right(int n, int tail, int head, int v) {
    return in_ccw_interval(n, tail, head, v);
}

inline bool vertices_adjacent(int n, int u, int v) {
    const int d = ((u - v) % n + n) % n;
    return d == 1 || d == n - 1;
}

// Proper crossing of two chords: exactly one endpoint of f lies strictly
// inside each open interval cut by e.  Shared endpoints do not cross.
inline bool arcs_cross(int n, const Arc& e, const Arc& f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        return false;
    return in_ccw_interval(n, e.first, e.second, f.first) !=
           in_ccw_interval(n, e.first, e.second, f.second);
}

// A triangulation of the convex n-gon by n-3 pairwise non-crossing diagonals.
// Arcs (boundary sides + diagonals) carry a stable 1-based index: the side
// ending at vertex i (walking counterclockwise) is arc i, so (n,1) -> 1 and
// (i-1,i) -> i; the j-th input diagonal is arc n+j.
class Triangulation {
  public:
    static Triangulation build(int n, const std::vector<Arc>& diagonals) {
        if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
        Triangulation t;
        t.n_ = n;
        std::set<Arc> seen;
        for (const Arc& d : diagonals) {
            const auto [u, v] = d;
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("diagonal endpoint out of range");
            if (u == v) throw std::invalid_argument("degenerate diagonal");
            if (vertices_adjacent(n, u, v))
                throw std::invalid_argument("diagonal connects adjacent vertices");
            const Arc k = arc_key(u, v);
            if (!seen.insert(k).second) throw std::invalid_argument("duplicate diagonal");
            t.diagonals_.push_back(k);
        }
        if (static_cast<int>(t.diagonals_.size()) != n - 3)
            throw std::invalid_argument("a triangulated " + std::to_string(n) +
                                        "-gon needs " + std::to_string(n - 3) +
                                        " diagonals, got " +
                                        std::to_string(t.diagonals_.size()));
        for (std::size_t i = 0; i < t.diagonals_.size(); ++i)
            for (std::size_t j = i + 1; j < t.diagonals_.size(); ++j)
                if (arcs_cross(n, t.diagonals_[i], t.diagonals_[j]))
                    throw std::invalid_argument("diagonals cross");

        for (int i = 1; i <= n; ++i) {
            const Arc side = arc_key(i == 1 ? n : i - 1, i);
            t.arc_index_[side] = i;
            t.arcs_.insert(side);
        }
        for (std::size_t j = 0; j < t.diagonals_.size(); ++j) {
            t.arc_index_[t.diagonals_[j]] = n + 1 + static_cast<int>(j);
            t.arcs_.insert(t.diagonals_[j]);
        }

        // Faces are exactly the 3-cliques of the arc graph: the region cut
        // out by three pairwise-connected vertices can contain no further
        // vertex or chord, so every 3-clique bounds one triangle.
        std::set<Face> faces;
        for (const Arc& e : t.arcs_) {
            for (int w = 1; w <= n; ++w) {
                if (w == e.first || w == e.second) continue;
                if (t.is_arc(e.first, w) && t.is_arc(e.second, w))
                    faces.insert(face_key(e.first, e.second, w));
            }
        }
        t.faces_.assign(faces.begin(), faces.end());
        if (static_cast<int>(t.faces_.size()) != n - 2)
            throw std::invalid_argument("invalid face structure");
        return t;
    }

    int n() const { return n_; }
    const std::vector<Arc>& diagonals() const { return diagonals_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::set<Arc>& arcs() const { return arcs_; }

    bool is_arc(int u, int v) const { return arcs_.count(arc_key(u, v)) != 0; }
    bool is_diagonal(const Arc& a) const {
        return arcs_.count(a) != 0 && !vertices_adjacent(n_, a.first, a.second);
    }

    int arc_index(const Arc& a) const {
        auto it = arc_index_.find(a);
        if (it == arc_index_.end()) throw std::invalid_argument("not an arc of T");
        return it->second;
    }
    int arc_index(int u, int v) const { return arc_index(arc_key(u, v)); }

    // Total number of indexed arcs (n boundary sides + n-3 diagonals).
    int arc_count() const { return 2 * n_ - 3; }

    Arc arc_of_index(int idx) const {
        for (const auto& [a, i] : arc_index_)
            if (i == idx) return a;
        throw std::invalid_argument("arc index out of range");
    }

    std::vector<Face> faces_with_arc(const Arc& a) const {
        std::vector<Face> out;
        for (const Face& f : faces_) {
            const bool has_u = f[0] == a.first || f[1] == a.first || f[2] == a.first;
            const bool has_v = f[0] == a.second || f[1] == a.second || f[2] == a.second;
            if (has_u && has_v) out.push_back(f);
        }
        return out;
    }

    bool has_face(const Face& f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f);
    }

    // Replace diagonal e by f, keeping e's slot in the input order (so arc
    // indices of untouched diagonals are stable across a flip).
    Triangulation with_replaced_diagonal(const Arc& e, const Arc& f) const {
        std::vector<Arc> diags = diagonals_;
        auto it = std::find(diags.begin(), diags.end(), arc_key(e.first, e.second));
        if (it == diags.end()) throw std::invalid_argument("not a diagonal of T");
        *it = arc_key(f.first, f.second);
        return build(n_, diags);
    }

  private:
    int n_ = 0;
    std::vector<Arc> diagonals_;
    std::vector<Face> faces_;
    std::set<Arc> arcs_;
    std::map<Arc, int> arc_index_;
};

inline int third_vertex(const Face& f, const Arc& a) {
    for (int v : f)
        if (v != a.first && v != a.second) return v;
    throw std::invalid_argument("face does not contain the arc");
}

// Orientation data: every diagonal carries a direction (tail -> head);
// boundary sides are unoriented but carry a bookkeeping sign used by the
// flip engine, +1 unless a reversal has acted on them.
class SpinStructure {
  public:
    SpinStructure() = default;

    void orient(const Arc& d, int tail, int head) {
        if (arc_key(tail, head) != arc_key(d.first, d.second))
            throw std::invalid_argument("orientation endpoints do not match the arc");
        orient_[arc_key(d.first, d.second)] = {tail, head};
    }

    bool has_orientation(const Arc& d) const { return orient_.count(arc_key(d.first, d.second)); }

    std::pair<int, int> direction(const Arc& d) const {
        auto it = orient_.find(arc_key(d.first, d.second));
        if (it == orient_.end()) throw std::invalid_argument("arc carries no orientation");
        return it->second;
    }

    int tail(const Arc& d) const { return direction(d).first; }
    int head(const Arc& d) const { return direction(d).second; }

    void reverse(const Arc& d) {
        auto it = orient_.find(arc_key(d.first, d.second));
        if (it == orient_.end()) throw std::invalid_argument("arc carries no orientation");
        std::swap(it->second.first, it->second.second);
    }

    void erase(const Arc& d) { orient_.erase(arc_key(d.first, d.second)); }

    int boundary_sign(const Arc& b) const {
        auto it = boundary_sign_.find(arc_key(b.first, b.second));
        return it == boundary_sign_.end() ? +1 : it->second;
    }

    void flip_boundary_sign(const Arc& b) {
        const Arc k = arc_key(b.first, b.second);
        boundary_sign_[k] = -boundary_sign(k);
    }

    const std::map<Arc, std::pair<int, int>>& orientations() const { return orient_; }
    const std::map<Arc, int>& boundary_signs() const { return boundary_sign_; }

    friend bool operator==(const SpinStructure& a, const SpinStructure& b) {
        if (a.orient_ != b.orient_) return false;
        auto normalized = [](const SpinStructure& s) {
            std::map<Arc, int> m;
            for (const auto& [k, v] : s.boundary_sign_)
                if (v != +1) m[k] = v;
            return m;
        };
        return normalized(a) == normalized(b);
    }

  private:
    std::map<Arc, std::pair<int, int>> orient_;
    std::map<Arc, int> boundary_sign_;
};

// Diagonals of t crossed by the chord (a,b), ordered by crossing position
// walking from a to b.
inline std::vector<Arc> crossed_diagonals(const Triangulation& t, int a, int b) {
    struct Entry {
        int p, q;
        Arc d;
    };
    std::vector<Entry> entries;
    const int n = t.n();
    for (const Arc& d : t.diagonals()) {
        if (!arcs_cross(n, arc_key(a, b), d)) continue;
        // u = endpoint on the counterclockwise side of a->b, v = the other.
        int u = d.first, v = d.second;
        if (!in_ccw_interval(n, a, b, u)) std::swap(u, v);
        const int p = ((u - a) % n + n) % n;   // ccw distance a -> u
        const int q = ((a - v) % n + n) % n;   // cw distance a -> v
        entries.push_back({p, q, d});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return std::pair(x.p, x.q) < std::pair(y.p, y.q);
    });
    std::vector<Arc> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(e.d);
    return out;
}

// The triangles crossed by (a,b), in crossing order (the first contains a,
// the last contains b), obtained by walking the dual path across the crossed
// diagonals.
inline std::vector<Face> crossed_faces(const Triangulation& t, int a, int b,
                                       const std::vector<Arc>& ds) {
    std::vector<Face> tris;
    if (ds.empty()) throw std::invalid_argument("chord crosses no diagonal");
    const Face first = face_key(a, ds[0].first, ds[0].second);
    if (!t.has_face(first))
        throw std::logic_error("first crossed triangle is not a face");
    tris.push_back(first);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto adj = t.faces_with_arc(ds[i]);
        if (adj.size() != 2) throw std::logic_error("diagonal must bound two faces");
        tris.push_back(adj[0] == tris.back() ? adj[1] : adj[0]);
    }
    const Face& last = tris.back();
    if (last[0] != b && last[1] != b && last[2] != b)
        throw std::logic_error("last crossed triangle does not contain the target");
    return tris;
}

// Restriction of a triangulation to the region crossed by the chord (a,b):
// the union of the crossed triangles, relabeled 1..m counterclockwise.
struct Restriction {
    Triangulation sub;
    std::vector<int> old_label;  // new vertex (1-based) -> original vertex
    std::vector<int> new_label;  // original vertex -> new vertex (0 if absent)
    int a_new = 0, b_new = 0;

    Arc old_arc(const Arc& na) const {
        return arc_key(old_label[na.first], old_label[na.second]);
    }
    Arc to_new(const Arc& oa) const {
        return arc_key(new_label[oa.first], new_label[oa.second]);
    }
};

inline Restriction restrict_to_crossed(const Triangulation& t, int a, int b) {
    const int n = t.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");
    if (t.is_arc(a, b)) throw arc_exists_error("chord is already an arc of T");

    const auto ds = crossed_diagonals(t, a, b);
    const auto tris = crossed_faces(t, a, b, ds);

    std::set<int> verts;
    for (const Face& f : tris) verts.insert(f.begin(), f.end());

    Restriction r;
    r.old_label.assign(1, 0);  // 1-based
    r.new_label.assign(n + 1, 0);
    for (int v : verts) {
        r.old_label.push_back(v);
        r.new_label[v] = static_cast<int>(r.old_label.size()) - 1;
    }
    const int m = static_cast<int>(verts.size());

    // Each cyclically consecutive pair of region vertices must be joined by
    // an arc of T (a boundary side or an uncrossed diagonal of the region).
    for (int i = 1; i <= m; ++i) {
        const int u = r.old_label[i];
        const int v = r.old_label[i == m ? 1 : i + 1];
        if (!t.is_arc(u, v))
            throw std::logic_error("crossed region boundary is not an arc of T");
    }

    std::vector<Arc> sub_diags;
    sub_diags.reserve(ds.size());
    for (const Arc& d : ds) sub_diags.push_back(r.to_new(d));
    r.sub = Triangulation::build(m, sub_diags);
    r.a_new = r.new_label[a];
    r.b_new = r.new_label[b];
    return r;
}

// Fan decomposition of the triangles crossed by (a,b).  Requires every
// diagonal of t to be crossed by (a,b) (restrict first).  Triangle i is
// tris[i-1]; crossed diagonal i is ds[i-1]; fans are numbered 1..N with
// centers[j-1] the center of fan j.
struct FanDecomposition {
    int a = 0, b = 0;
    std::vector<Arc> ds;            // d_1..d_{q-1}, crossing order from a
    std::vector<Face> tris;         // theta_1..theta_q
    std::vector<int> centers;       // c_1..c_N
    std::vector<int> fan_of_tri;    // per triangle, 1..N

    int q() const { return static_cast<int>(tris.size()); }
    int num_fans() const { return static_cast<int>(centers.size()); }
    int center_of_tri(int i) const { return centers[fan_of_tri[i - 1] - 1]; }
};

inline FanDecomposition fan_decompose(const Triangulation& t, int a, int b,
                                      const SpinStructure* quad_hint = nullptr) {
    const int n = t.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");
    if (t.is_arc(a, b)) throw arc_exists_error("chord is already an arc of T");

    FanDecomposition fd;
    fd.a = a;
    fd.b = b;
    fd.ds = crossed_diagonals(t, a, b);
    if (static_cast<int>(fd.ds.size()) != static_cast<int>(t.diagonals().size()))
        throw std::invalid_argument(
            "fan decomposition requires every diagonal to be crossed; restrict first");
    fd.tris = crossed_faces(t, a, b, fd.ds);
    const int q = fd.q();

    if (q == 2) {
        // Quadrilateral: either endpoint of the single crossed diagonal works
        // as the center; take the tail under the supplied orientation when
        // one is given, the smaller label otherwise.
        const Arc d = fd.ds[0];
        int c = std::min(d.first, d.second);
        if (quad_hint != nullptr && quad_hint->has_orientation(d)) c = quad_hint->tail(d);
        fd.centers = {c};
        fd.fan_of_tri = {1, 1};
        return fd;
    }

    // Middle triangle i (2 <= i <= q-1) is flanked by crossed sides d_{i-1}
    // and d_i; its fan center is their shared vertex.
    std::vector<int> mid_center(q + 1, 0);
    for (int i = 2; i <= q - 1; ++i) {
        const Arc& d_prev = fd.ds[i - 2];
        const Arc& d_next = fd.ds[i - 1];
        int shared = 0;
        for (int u : {d_prev.first, d_prev.second})
            if (u == d_next.first || u == d_next.second) shared = u;
        if (shared == 0) throw std::logic_error("consecutive crossed sides share no vertex");
        mid_center[i] = shared;
    }

    fd.fan_of_tri.assign(q, 0);
    for (int i = 2; i <= q - 1; ++i) {
        if (fd.centers.empty() || fd.centers.back() != mid_center[i])
            fd.centers.push_back(mid_center[i]);
        fd.fan_of_tri[i - 1] = static_cast<int>(fd.centers.size());
    }
    fd.fan_of_tri[0] = 1;
    fd.fan_of_tri[q - 1] = static_cast<int>(fd.centers.size());

    // Sanity: consecutive fan centers are joined by a crossed diagonal.
    for (std::size_t j = 0; j + 1 < fd.centers.size(); ++j) {
        const Arc link = arc_key(fd.centers[j], fd.centers[j + 1]);
        if (std::find(fd.ds.begin(), fd.ds.end(), link) == fd.ds.end())
            throw std::logic_error("consecutive fan centers are not joined by a crossed side");
    }
    return fd;
}

// Canonical orientation attached to a fan decomposition: within a fan the
// crossed sides point away from the center, and the side between two fans
// points from the earlier center to the later one.
inline SpinStructure default_orientation(const FanDecomposition& fd) {
    SpinStructure s;
    const int q = fd.q();
    for (int i = 1; i <= q - 1; ++i) {
        const Arc& d = fd.ds[i - 1];
        const int fan_lo = fd.fan_of_tri[i - 1];
        const int fan_hi = fd.fan_of_tri[i];
        if (fan_lo == fan_hi) {
            const int c = fd.centers[fan_lo - 1];
            if (d.first != c && d.second != c)
                throw std::logic_error("within-fan side does not touch the center");
            s.orient(d, c, d.first == c ? d.second : d.first);
        } else {
            const int c_lo = fd.centers[fan_lo - 1];
            const int c_hi = fd.centers[fan_hi - 1];
            if (arc_key(c_lo, c_hi) != d)
                throw std::logic_error("between-fan side does not join the centers");
            s.orient(d, c_lo, c_hi);
        }
    }
    return s;
}

// Positive ordering of the crossed triangles under an orientation of the
// crossed sides.  Returns theta indices (1-based) from largest to smallest.
// Rule, applied triangle by triangle: if the directed side d_k separating
// theta_k from theta_{k+1} has theta_k's apex on its right, theta_k is
// greater than every later triangle, otherwise smaller.
inline std::vector<int> positive_order(const FanDecomposition& fd, int n,
                                       const SpinStructure& s) {
    const int q = fd.q();
    std::vector<int> order;  // built back to front
    std::deque<int> dq;
    dq.push_back(q);
    for (int k = q - 1; k >= 1; --k) {
        const Arc& d = fd.ds[k - 1];
        const auto [tail, head] = s.direction(d);
        const int apex = third_vertex(fd.tris[k - 1], d);
        if (on_right(n, tail, head, apex))
            dq.push_front(k);
        else
            dq.push_back(k);
    }
    order.assign(dq.begin(), dq.end());
    return order;
}

// Reversal move at a face: reverse every directed side, flip the bookkeeping
// sign of every boundary side.  (The face's odd invariant changes sign; the
// caller tracks that.)
inline SpinStructure reverse_triangle(const SpinStructure& s, const Triangulation& t,
                                      const Face& f) {
    if (!t.has_face(f)) throw std::invalid_argument("not a face of T");
    SpinStructure r = s;
    const std::array<Arc, 3> sides = {arc_key(f[0], f[1]), arc_key(f[0], f[2]),
                                      arc_key(f[1], f[2])};
    for (const Arc& side : sides) {
        if (t.is_diagonal(side)) {
            r.reverse(side);
        } else {
            r.flip_boundary_sign(side);
        }
    }
    return r;
}

// Result of normalizing an orientation to the canonical one over the region
// crossed by (a,b): the canonical orientation plus the sign each odd
// invariant picks up (epsilon[i-1] for theta_i).
struct Normalization {
    SpinStructure spin;
    std::vector<int> epsilon;
};

// epsilon_i = (-1)^{# crossed sides d_j, j >= i, whose direction disagrees
// with the canonical one}, then replaced by its global negation when that
// uses strictly fewer minus signs (the two sign vectors give the same class).
inline Normalization normalize_to_default(const Triangulation& t, const SpinStructure& s,
                                          int a, int b) {
    const FanDecomposition fd = fan_decompose(t, a, b, &s);
    const SpinStructure def = default_orientation(fd);
    const int q = fd.q();
    std::vector<int> disagree(q, 0);  // index k-1 for side d_k
    for (int k = 1; k <= q - 1; ++k) {
        const Arc& d = fd.ds[k - 1];
        disagree[k - 1] = (s.tail(d) != def.tail(d)) ? 1 : 0;
    }
    Normalization out;
    out.spin = def;
    out.epsilon.assign(q, +1);
    int suffix = 0;
    for (int i = q; i >= 1; --i) {
        if (i <= q - 1) suffix += disagree[i - 1];
        out.epsilon[i - 1] = (suffix % 2 == 0) ? +1 : -1;
    }
    int negatives = 0;
    for (int e : out.epsilon)
        if (e < 0) ++negatives;
    if (2 * negatives > q)
        for (int& e : out.epsilon) e = -e;
    return out;
}

// --- stock shapes -------------------------------------------------------------

// Fan triangulation: every diagonal from vertex 1.
inline Triangulation fan_triangulation(int n) {
    std::vector<Arc> diags;
    for (int j = 3; j <= n - 1; ++j) diags.push_back(arc_key(1, j));
    return Triangulation::build(n, diags);
}

// Zigzag triangulation together with its standard orientation.  The shape is
// described by vertex *names*: diagonals join name i to name i+1 for
// i = 2..n-2, directed i -> i+1, and the dual path turns alternately.  Names
// map to counterclockwise positions as: 1, then even names ascending, then n,
// then odd names descending.
struct Zigzag {
    Triangulation tri;
    SpinStructure spin;
    std::vector<int> pos_of_name;  // name (1-based) -> ccw position
    std::vector<int> name_of_pos;  // ccw position (1-based) -> name

    Arc arc_of_names(int i, int j) const { return arc_key(pos_of_name[i], pos_of_name[j]); }
    Face face_of_names(int i, int j, int k) const {
        return face_key(pos_of_name[i], pos_of_name[j], pos_of_name[k]);
    }
};

namespace detail {

// All triangulations of the convex polygon on the contiguous vertex run vs,
// as diagonal lists.  Each triangulation is produced exactly once (the apex
// of the triangle on the base edge (vs.front(), vs.back()) is unique).
inline std::vector<std::vector<Arc>> triangulations_of_run(const std::vector<int>& vs) {
    const std::size_t m = vs.size();
    if (m < 3) return {{}};
    std::vector<std::vector<Arc>> result;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const auto left =
            triangulations_of_run(std::vector<int>(vs.begin(), vs.begin() + i + 1));
        const auto right =
            triangulations_of_run(std::vector<int>(vs.begin() + i, vs.end()));
        for (const auto& dl : left) {
            for (const auto& dr : right) {
                std::vector<Arc> d;
                d.reserve(dl.size() + dr.size() + 2);
                d.insert(d.end(), dl.begin(), dl.end());
                d.insert(d.end(), dr.begin(), dr.end());
                if (i >= 2) d.push_back(arc_key(vs.front(), vs[i]));
                if (i + 3 <= m) d.push_back(arc_key(vs[i], vs.back()));
                result.push_back(std::move(d));
            }
        }
    }
    return result;
}

template <typename PickIndex>
inline void random_run(const std::vector<int>& vs, PickIndex&& pick, std::vector<Arc>& out) {
    const std::size_t m = vs.size();
    if (m < 3) return;
    const std::size_t i = 1 + pick(m - 2);  // apex index in 1..m-2
    if (i >= 2) out.push_back(arc_key(vs.front(), vs[i]));
    if (i + 3 <= m) out.push_back(arc_key(vs[i], vs.back()));
    random_run(std::vector<int>(vs.begin(), vs.begin() + i + 1), pick, out);
    random_run(std::vector<int>(vs.begin() + i, vs.end()), pick, out);
}

}  // namespace detail

// Every triangulation of the n-gon (Catalan(n-2) of them), deterministically
// ordered.
inline std::vector<Triangulation> all_triangulations(int n) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    std::vector<Triangulation> out;
    for (auto& d : detail::triangulations_of_run(vs)) out.push_back(Triangulation::build(n, d));
    return out;
}

// A triangulation drawn by recursive random apex choice.  Deterministic for a
// given generator state; not uniform over triangulations, which is fine for
// property testing.
template <typename RngT>
inline Triangulation random_triangulation(int n, RngT& rng) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    std::vector<Arc> d;
    auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng.below(k)); };
    detail::random_run(vs, pick, d);
    return Triangulation::build(n, d);
}

// A spin structure with a random direction on every diagonal and +1 boundary
// signs.
template <typename RngT>
inline SpinStructure random_spin(const Triangulation& t, RngT& rng) {
    SpinStructure s;
    for (const Arc& d : t.diagonals()) {
        if (rng.coin())
            s.orient(d, d.first, d.second);
        else
            s.orient(d, d.second, d.first);
    }
    return s;
}

inline Zigzag zigzag_triangulation(int n) {
    if (n < 4) throw std::invalid_argument("zigzag needs at least 4 vertices");
    Zigzag z;
    z.name_of_pos.assign(1, 0);
    z.name_of_pos.push_back(1);
    for (int e = 2; e < n; e += 2) z.name_of_pos.push_back(e);
    z.name_of_pos.push_back(n);
    const int last_odd = (n % 2 == 0) ? n - 1 : n - 2;
    for (int o = last_odd; o >= 3; o -= 2) z.name_of_pos.push_back(o);
    z.pos_of_name.assign(n + 1, 0);
    for (int p = 1; p <= n; ++p) z.pos_of_name[z.name_of_pos[p]] = p;

    std::vector<Arc> diags;
    for (int i = 2; i <= n - 2; ++i)
        diags.push_back(arc_key(z.pos_of_name[i], z.pos_of_name[i + 1]));
    z.tri = Triangulation::build(n, diags);
    for (int i = 2; i <= n - 2; ++i)
        z.spin.orient(arc_key(z.pos_of_name[i], z.pos_of_name[i + 1]), z.pos_of_name[i],
                      z.pos_of_name[i + 1]);
    return z;
}

}  // namespace superpath::triangulation
