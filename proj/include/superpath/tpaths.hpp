#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superpath/common.hpp"
#include "superpath/superring.hpp"
#include "superpath/triangulation.hpp"

namespace superpath::tpaths {

using superring::HalfExponents;
using superring::SuperPolynomial;
using triangulation::Arc;
using triangulation::Face;
using triangulation::FanDecomposition;
using triangulation::Restriction;
using triangulation::SpinStructure;
using triangulation::Triangulation;

// One edge of the auxiliary graph attached to a chord (a,b): the arcs of the
// (restricted) triangulation, one odd edge from each crossed triangle to its
// fan center, and one connector between every pair of crossed triangles.
// Nodes are 1..m for polygon vertices and m+i for crossed triangle i.
struct AuxEdge {
    enum Kind { kArc, kSigma, kTau };
    Kind kind = kArc;
    Arc arc{};          // kArc only (restricted labels)
    int ti = 0, tj = 0; // kSigma: ti = triangle index; kTau: ti < tj
    int node_u = 0, node_v = 0;
    int crossing = 0;   // 0 = does not cross (a,b); else position along (a,b):
                        // crossed side d_k at 2k, odd edge of triangle i at 2i-1
};

// Step of a path: an auxiliary edge traversed in a definite direction.
struct PathStep {
    int edge = -1;  // index into the edge table
    int from = 0, to = 0;
};

struct SuperTPath {
    std::vector<PathStep> steps;
    std::uint32_t theta_mask = 0;  // crossed-triangle indices used (bit i-1)
    bool is_super() const { return theta_mask != 0; }
};

class AuxiliaryGraph {
  public:
    AuxiliaryGraph(const Triangulation& rt, const FanDecomposition& fd) {
        const int m = rt.n();
        const int q = fd.q();
        std::map<Arc, int> crossed_pos;
        for (std::size_t k = 0; k < fd.ds.size(); ++k)
            crossed_pos[fd.ds[k]] = 2 * (static_cast<int>(k) + 1);

        for (const Arc& a : rt.arcs()) {
            AuxEdge e;
            e.kind = AuxEdge::kArc;
            e.arc = a;
            e.node_u = a.first;
            e.node_v = a.second;
            auto it = crossed_pos.find(a);
            e.crossing = it == crossed_pos.end() ? 0 : it->second;
            edges_.push_back(e);
        }
        for (int i = 1; i <= q; ++i) {
            AuxEdge e;
            e.kind = AuxEdge::kSigma;
            e.ti = i;
            e.node_u = m + i;
            e.node_v = fd.center_of_tri(i);
            e.crossing = 2 * i - 1;
            edges_.push_back(e);
        }
        for (int i = 1; i <= q; ++i) {
            for (int j = i + 1; j <= q; ++j) {
                AuxEdge e;
                e.kind = AuxEdge::kTau;
                e.ti = i;
                e.tj = j;
                e.node_u = m + i;
                e.node_v = m + j;
                e.crossing = 0;
                edges_.push_back(e);
            }
        }
        adjacency_.assign(m + q + 1, {});
        for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
            adjacency_[edges_[idx].node_u].push_back(static_cast<int>(idx));
            adjacency_[edges_[idx].node_v].push_back(static_cast<int>(idx));
        }
    }

    const std::vector<AuxEdge>& edges() const { return edges_; }

    // Depth-first enumeration of every path satisfying the axioms: endpoints
    // a and b, odd length, no repeated edge, even positions cross (a,b),
    // triangle edges only at the parity their kind allows (odd connectors,
    // even center edges), and all crossings strictly monotone toward b.
    std::vector<SuperTPath> enumerate(int a, int b) const {
        std::vector<SuperTPath> out;
        std::vector<char> used(edges_.size(), 0);
        std::vector<PathStep> steps;
        dfs(a, b, 1, 0, used, steps, out);
        return out;
    }

  private:
    void dfs(int cur, int target, int pos, int last_cross, std::vector<char>& used,
             std::vector<PathStep>& steps, std::vector<SuperTPath>& out) const {
        for (int idx : adjacency_[cur]) {
            if (used[idx]) continue;
            const AuxEdge& e = edges_[idx];
            const bool even_pos = pos % 2 == 0;
            if (e.kind == AuxEdge::kSigma && !even_pos) continue;
            if (e.kind == AuxEdge::kTau && even_pos) continue;
            if (even_pos && e.crossing == 0) continue;
            if (e.crossing != 0 && e.crossing <= last_cross) continue;

            const int next = e.node_u == cur ? e.node_v : e.node_u;
            used[idx] = 1;
            steps.push_back(PathStep{idx, cur, next});
            const int cross = e.crossing != 0 ? e.crossing : last_cross;
            if (next == target && pos % 2 == 1) {
                SuperTPath p;
                p.steps = steps;
                for (const PathStep& st : p.steps) {
                    const AuxEdge& pe = edges_[st.edge];
                    if (pe.kind == AuxEdge::kSigma)
                        p.theta_mask |= std::uint32_t{1} << (pe.ti - 1);
                }
                out.push_back(std::move(p));
            }
            dfs(next, target, pos + 1, cross, used, steps, out);
            steps.pop_back();
            used[idx] = 0;
        }
    }

    std::vector<AuxEdge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Identification of crossed triangles with odd generators.  By default
// triangle i (crossing order from a) is generator i; expansions that live
// inside a larger ambient polygon can instead supply global identifiers per
// face (in the ambient labels) plus the ambient generator count.
struct ThetaNaming {
    std::map<Face, int> id_of_face;  // ambient labels
    int total = 0;                   // number of generators in the ambient ring
};

// A chord expansion: the Laurent sum over all paths, plus everything needed
// to interpret it (restriction, fan decomposition, canonical orientation,
// the positive ordering used for products, and the generator naming).
struct Expansion {
    SuperPolynomial value;
    bool trivial = false;           // (a,b) was already an arc
    int a = 0, b = 0;
    Restriction restriction;
    FanDecomposition fd;            // restricted labels
    SpinStructure default_spin;     // restricted labels
    SpinStructure actual_spin;      // restricted labels (the input orientation)
    std::vector<int> positive_desc; // local triangle indices, largest first
    std::vector<int> theta_global;  // local index (1-based) -> generator id
    std::vector<SuperTPath> paths;  // enumeration order; ordinary = empty mask
    std::vector<AuxEdge> edges;     // edge table the path steps refer to

    int num_vars() const { return value.num_vars(); }
    int num_thetas() const { return value.num_thetas(); }
};

namespace detail {

// sqrt(x_opp / (x_flank1 x_flank2)) for the odd edge of a crossed triangle,
// as half-exponents over the ambient variables.
inline void add_sigma_exponents(HalfExponents& exps, const Triangulation& full,
                                const Restriction& r, const Face& tri, int center,
                                int sign = +1) {
    int u = 0, v = 0;
    for (int w : tri) {
        if (w == center) continue;
        (u == 0 ? u : v) = w;
    }
    const int opp = full.arc_index(r.old_arc(triangulation::arc_key(u, v)));
    const int f1 = full.arc_index(r.old_arc(triangulation::arc_key(center, u)));
    const int f2 = full.arc_index(r.old_arc(triangulation::arc_key(center, v)));
    exps[opp - 1] += sign;
    exps[f1 - 1] -= sign;
    exps[f2 - 1] -= sign;
}

}  // namespace detail

// Weight of one path as a term over the ambient arc variables: arcs at odd
// positions multiply, arcs at even positions divide, each odd edge
// contributes sqrt(opposite/(flank*flank)) times its generator, connectors
// contribute the sign (-1)^{#disagreeing crossed sides between the two
// triangles}, and the generator product is written in the positive order.
inline SuperPolynomial path_weight(const SuperTPath& p, const Expansion& ctx,
                                   const Triangulation& full,
                                   const std::vector<int>& disagree) {
    const int m_vars = ctx.value.num_vars();
    const int k_total = ctx.value.num_thetas();
    HalfExponents exps(m_vars, 0);
    int inv = 0;
    std::vector<int> used_local;

    for (std::size_t s = 0; s < p.steps.size(); ++s) {
        const AuxEdge& e = ctx.edges[p.steps[s].edge];
        const bool odd_pos = s % 2 == 0;  // position s+1
        switch (e.kind) {
            case AuxEdge::kArc: {
                const int xi = full.arc_index(ctx.restriction.old_arc(e.arc));
                exps[xi - 1] += odd_pos ? 2 : -2;
                break;
            }
            case AuxEdge::kSigma: {
                detail::add_sigma_exponents(exps, full, ctx.restriction,
                                            ctx.fd.tris[e.ti - 1],
                                            ctx.fd.center_of_tri(e.ti));
                used_local.push_back(e.ti);
                break;
            }
            case AuxEdge::kTau: {
                for (int k = e.ti; k < e.tj; ++k) inv += disagree[k - 1];
                break;
            }
        }
    }

    // Generator word in the positive order (largest first), then mapped to
    // ambient ids; the stored coefficient absorbs the re-sorting sign.
    std::vector<int> display;
    for (int local : ctx.positive_desc)
        if (std::find(used_local.begin(), used_local.end(), local) != used_local.end())
            display.push_back(ctx.theta_global[local - 1]);
    std::uint32_t mask = 0;
    for (int g : display) mask |= std::uint32_t{1} << (g - 1);
    int sign = sort_sign(display);
    if (inv % 2 != 0) sign = -sign;
    return SuperPolynomial::monomial(m_vars, k_total, sign, std::move(exps), mask);
}

// Laurent expansion of the chord (a,b) over the arcs of t, under the
// orientation s of the diagonals.  Every path across the crossed region
// contributes one term.  If (a,b) is already an arc the expansion is that
// arc's own variable.
inline Expansion expand_lambda(const Triangulation& t, const SpinStructure& s, int a, int b,
                               const std::optional<ThetaNaming>& naming = std::nullopt) {
    const int n = t.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");

    Expansion out;
    out.a = a;
    out.b = b;
    const int m_vars = t.arc_count();

    if (t.is_arc(a, b)) {
        out.trivial = true;
        const int k_total = naming ? naming->total : 0;
        HalfExponents exps(m_vars, 0);
        exps[t.arc_index(a, b) - 1] = 2;
        out.value = SuperPolynomial::monomial(m_vars, k_total, 1, std::move(exps), 0u);
        return out;
    }

    out.restriction = triangulation::restrict_to_crossed(t, a, b);
    const Triangulation& rt = out.restriction.sub;

    // Carry the orientation of the crossed diagonals into restricted labels.
    for (const Arc& d : rt.diagonals()) {
        const Arc od = out.restriction.old_arc(d);
        if (!s.has_orientation(od))
            throw std::invalid_argument("crossed diagonal carries no orientation");
        const auto [ot, oh] = s.direction(od);
        out.actual_spin.orient(d, out.restriction.new_label[ot],
                               out.restriction.new_label[oh]);
    }

    out.fd = triangulation::fan_decompose(rt, out.restriction.a_new, out.restriction.b_new,
                                          &out.actual_spin);
    out.default_spin = triangulation::default_orientation(out.fd);
    out.positive_desc = triangulation::positive_order(out.fd, rt.n(), out.default_spin);

    const int q = out.fd.q();
    out.theta_global.resize(q);
    int k_total = q;
    if (naming) {
        k_total = naming->total;
        for (int i = 1; i <= q; ++i) {
            const Face& f = out.fd.tris[i - 1];
            const Face of = triangulation::face_key(out.restriction.old_label[f[0]],
                                                    out.restriction.old_label[f[1]],
                                                    out.restriction.old_label[f[2]]);
            auto it = naming->id_of_face.find(of);
            if (it == naming->id_of_face.end())
                throw std::invalid_argument("crossed face missing from the naming map");
            out.theta_global[i - 1] = it->second;
        }
    } else {
        for (int i = 1; i <= q; ++i) out.theta_global[i - 1] = i;
    }

    std::vector<int> disagree(std::max(q - 1, 0), 0);
    for (int k = 1; k <= q - 1; ++k)
        disagree[k - 1] =
            out.actual_spin.tail(out.fd.ds[k - 1]) != out.default_spin.tail(out.fd.ds[k - 1])
                ? 1
                : 0;

    AuxiliaryGraph aux(rt, out.fd);
    out.edges = aux.edges();
    out.paths = aux.enumerate(out.restriction.a_new, out.restriction.b_new);
    out.value = SuperPolynomial::zero(m_vars, k_total);
    for (const SuperTPath& p : out.paths)
        out.value += path_weight(p, out, t, disagree);
    return out;
}

// Exponent vectors (over the ambient arcs) of the odd-edge weights, indexed
// by ambient generator id; generators that name no crossed triangle get a
// zero scaling.  Feeding this to rescale_thetas converts an expansion to the
// basis in which every term has integer exponents.
inline std::vector<HalfExponents> sigma_scalings(const Expansion& e, const Triangulation& full) {
    std::vector<HalfExponents> out(e.value.num_thetas(),
                                   HalfExponents(e.value.num_vars(), 0));
    for (int i = 1; i <= e.fd.q(); ++i) {
        HalfExponents exps(e.value.num_vars(), 0);
        detail::add_sigma_exponents(exps, full, e.restriction, e.fd.tris[i - 1],
                                    e.fd.center_of_tri(i));
        out[e.theta_global[i - 1] - 1] = std::move(exps);
    }
    return out;
}

// --- rendering ----------------------------------------------------------------

// "(1,6,θ1,θ2,6,3,5,4 | x1,σ1,τ12,σ2,x8,x9,x5)": nodes in ambient labels
// (crossed triangle i prints as θi), then the traversed edges.
inline std::string render_path(const SuperTPath& p, const Expansion& ctx,
                               const Triangulation& full) {
    const int m = ctx.restriction.sub.n();
    auto node_name = [&](int node) {
        if (node <= m) return std::to_string(ctx.restriction.old_label[node]);
        return "θ" + std::to_string(node - m);
    };
    std::string verts = node_name(p.steps.front().from);
    std::string edges;
    for (const PathStep& st : p.steps) {
        verts += "," + node_name(st.to);
        const AuxEdge& e = ctx.edges[st.edge];
        if (!edges.empty()) edges += ",";
        switch (e.kind) {
            case AuxEdge::kArc:
                edges += "x" + std::to_string(full.arc_index(ctx.restriction.old_arc(e.arc)));
                break;
            case AuxEdge::kSigma:
                edges += "σ" + std::to_string(e.ti);
                break;
            case AuxEdge::kTau:
                edges += "τ" + std::to_string(e.ti) + std::to_string(e.tj);
                break;
        }
    }
    return "(" + verts + " | " + edges + ")";
}

// Display order for generator words of an expansion: positive order, largest
// first, in ambient ids, extended by any unused ambient generators ascending.
inline std::vector<int> display_order(const Expansion& e) {
    std::vector<int> order;
    std::vector<char> seen(e.value.num_thetas() + 1, 0);
    for (int local : e.positive_desc) {
        order.push_back(e.theta_global[local - 1]);
        seen[order.back()] = 1;
    }
    for (int g = 1; g <= e.value.num_thetas(); ++g)
        if (!seen[g]) order.push_back(g);
    return order;
}

// --- closed-form odd sums -------------------------------------------------------

// For the fan triangulation (all diagonals from vertex 1) with its canonical
// orientation, the rescaled odd invariant attached to the triangle (1,2,k)
// after straightening is the sum of the odd-edge weights of the first k-2
// triangles.  Generator i names the face (1, i+1, i+2); variables are the
// arcs of the fan.
inline SuperPolynomial mu_single_fan(const Triangulation& t, int k) {
    const int n = t.n();
    const Triangulation fan = triangulation::fan_triangulation(n);
    if (t.diagonals() != fan.diagonals())
        throw std::invalid_argument("triangulation is not the fan at vertex 1");
    if (k < 3 || k > n) throw std::invalid_argument("apex k must be in [3, n]");
    const int m_vars = t.arc_count();
    const int k_total = n - 2;
    SuperPolynomial sum = SuperPolynomial::zero(m_vars, k_total);
    for (int i = 1; i <= k - 2; ++i) {
        HalfExponents exps(m_vars, 0);
        exps[t.arc_index(i + 1, i + 2) - 1] += 1;
        exps[t.arc_index(1, i + 1) - 1] -= 1;
        exps[t.arc_index(1, i + 2) - 1] -= 1;
        sum += SuperPolynomial::monomial(m_vars, k_total, 1, std::move(exps),
                                         std::uint32_t{1} << (i - 1));
    }
    return sum;
}

// Generator naming for a zigzag: triangle on names (j, j+1, j+2) is
// generator j, for j = 1..n-2.
inline ThetaNaming zigzag_naming(const triangulation::Zigzag& z) {
    ThetaNaming naming;
    const int n = z.tri.n();
    naming.total = n - 2;
    for (int j = 1; j <= n - 2; ++j)
        naming.id_of_face[z.face_of_names(j, j + 1, j + 2)] = j;
    return naming;
}

// For the zigzag with its standard orientation, the rescaled odd invariant
// attached to the triangle (k, k+1, n) after straightening: the sum over
// i = k..n-2 of (expansion of the chord from name i+1 to name n) times the
// odd-edge weight of the triangle on names (i, i+1, i+2), in that order.
inline SuperPolynomial mu_zigzag(const triangulation::Zigzag& z, int k) {
    const int n = z.tri.n();
    const Triangulation check = triangulation::zigzag_triangulation(n).tri;
    if (z.tri.diagonals() != check.diagonals())
        throw std::invalid_argument("triangulation is not the standard zigzag");
    if (k < 1 || k > n - 2) throw std::invalid_argument("index k must be in [1, n-2]");
    const int m_vars = z.tri.arc_count();
    const ThetaNaming naming = zigzag_naming(z);
    const int k_total = naming.total;

    SuperPolynomial sum = SuperPolynomial::zero(m_vars, k_total);
    for (int i = k; i <= n - 2; ++i) {
        const Expansion e =
            expand_lambda(z.tri, z.spin, z.pos_of_name[i + 1], z.pos_of_name[n], naming);
        HalfExponents exps(m_vars, 0);
        exps[z.tri.arc_index(z.arc_of_names(i, i + 2)) - 1] += 1;
        exps[z.tri.arc_index(z.arc_of_names(i, i + 1)) - 1] -= 1;
        exps[z.tri.arc_index(z.arc_of_names(i + 1, i + 2)) - 1] -= 1;
        const auto w = SuperPolynomial::monomial(m_vars, k_total, 1, std::move(exps),
                                                 std::uint32_t{1} << (i - 1));
        sum += e.value * w;
    }
    return sum;
}

}  // namespace superpath::tpaths
