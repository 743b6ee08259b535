#pragma once

// Classical (theta-free) length computations, kept deliberately independent of
// the graded engine in tpaths.hpp: exact Laurent polynomials with integer
// exponents, a direct path enumeration on the full polygon, and a symbolic
// flip recursion.  Used as cross-checks for the even part of the graded
// expansions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "superpath/common.hpp"
#include "superpath/superring.hpp"
#include "superpath/triangulation.hpp"

namespace superpath::classical {

using superring::Rational;
using triangulation::Arc;
using triangulation::Face;
using triangulation::Triangulation;

using Exponents = std::vector<std::int32_t>;

// Exact multivariate Laurent polynomial over a fixed variable count.  Terms
// are kept in a map ordered lexicographically on the exponent vector, so the
// leading term (largest in lex) sits at the back.
class LaurentPoly {
  public:
    using TermMap = std::map<Exponents, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(int m) : m_(m) {
        if (m < 0) throw dimension_error("negative variable count");
    }

    static LaurentPoly zero(int m) { return LaurentPoly(m); }

    static LaurentPoly constant(int m, const Rational& c) {
        LaurentPoly p(m);
        if (c != 0) p.terms_[Exponents(m, 0)] = c;
        return p;
    }

    static LaurentPoly monomial(int m, const Rational& c, Exponents e) {
        if (static_cast<int>(e.size()) != m)
            throw dimension_error("exponent vector length mismatch");
        LaurentPoly p(m);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    static LaurentPoly variable(int m, int index, std::int32_t power = 1) {
        if (index < 1 || index > m) throw dimension_error("variable index out of range");
        Exponents e(m, 0);
        e[index - 1] = power;
        return monomial(m, 1, std::move(e));
    }

    int num_vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same(b);
        LaurentPoly r(a.m_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.m_);
                for (int i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != m_)
            throw dimension_error("exponent vector length mismatch");
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (c == 0) {
            terms_.erase(it);
        }
    }

  private:
    void check_same(const LaurentPoly& o) const {
        if (m_ != o.m_) throw dimension_error("mixed variable counts");
    }

    int m_ = 0;
    TermMap terms_;
};

// Exact quotient num/den.  Long division on the lex leading term: each round
// cancels the current leading term of the remainder, which therefore strictly
// decreases in lex order.  Exact quotients terminate with remainder zero; a
// non-divisible pair would run forever into ever-lower exponents, so a
// generous round cap converts that into an error.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                                std::size_t max_rounds = 200000) {
    if (num.num_vars() != den.num_vars()) throw dimension_error("mixed variable counts");
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    const int m = num.num_vars();
    const auto& lead_d = *den.terms().rbegin();

    LaurentPoly q(m);
    LaurentPoly r = num;
    std::size_t rounds = 0;
    while (!r.is_zero()) {
        if (++rounds > max_rounds) throw std::runtime_error("quotient is not a Laurent polynomial");
        const auto& lead_r = *r.terms().rbegin();
        Exponents e(m);
        for (int i = 0; i < m; ++i) e[i] = lead_r.first[i] - lead_d.first[i];
        const Rational c = lead_r.second / lead_d.second;
        const LaurentPoly t = LaurentPoly::monomial(m, c, std::move(e));
        q += t;
        r -= t * den;
    }
    return q;
}

// The even part of a graded expansion as a Laurent polynomial: terms with a
// nonempty generator word are dropped and the half-integer grid must land on
// integers.
inline LaurentPoly even_part(const superring::SuperPolynomial& p) {
    LaurentPoly r(p.num_vars());
    for (const auto& [key, c] : p.terms()) {
        if (key.theta != 0) continue;
        Exponents e(p.num_vars());
        for (int i = 0; i < p.num_vars(); ++i) {
            if (key.exps[i] % 2 != 0)
                throw std::invalid_argument("expansion has a fractional body exponent");
            e[i] = key.exps[i] / 2;
        }
        r.add_term(e, c);
    }
    return r;
}

// --- oracle 1: direct path enumeration on the full polygon ---------------------

// Sum over all classical admissible paths from a to b: steps along arcs of t,
// never reusing an edge, odd length; steps at even positions must cross the
// chord (a,b), and the crossings must march strictly monotonically from a
// toward b.  Weight: odd steps multiply their arc, even steps divide.
inline LaurentPoly classical_lambda_paths(const Triangulation& t, int a, int b) {
    const int n = t.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");
    const int m = t.arc_count();
    if (t.is_arc(a, b)) return LaurentPoly::variable(m, t.arc_index(a, b));

    // Crossing position of every arc (1-based along the chord), 0 if disjoint.
    const std::vector<Arc> crossed = triangulation::crossed_diagonals(t, a, b);
    std::vector<int> cross_pos(m + 1, 0);
    std::vector<Arc> arc_of_idx(m + 1);
    for (const Arc& e : t.arcs()) arc_of_idx[t.arc_index(e)] = e;
    for (std::size_t k = 0; k < crossed.size(); ++k)
        cross_pos[t.arc_index(crossed[k])] = static_cast<int>(k) + 1;

    // Adjacency by arc index.
    std::vector<std::vector<int>> adj(n + 1);
    for (int i = 1; i <= m; ++i) {
        adj[arc_of_idx[i].first].push_back(i);
        adj[arc_of_idx[i].second].push_back(i);
    }

    LaurentPoly sum(m);
    std::vector<char> used(m + 1, 0);
    Exponents exps(m, 0);

    auto dfs = [&](auto&& self, int cur, int pos, int last_cross) -> void {
        if (cur == b && pos % 2 == 0) sum.add_term(exps, 1);
        for (int idx : adj[cur]) {
            if (used[idx]) continue;
            const bool even_pos = pos % 2 == 0;
            const int cp = cross_pos[idx];
            if (even_pos && cp == 0) continue;
            if (cp != 0 && cp <= last_cross) continue;
            const Arc& e = arc_of_idx[idx];
            used[idx] = 1;
            exps[idx - 1] += even_pos ? -1 : 1;
            self(self, e.first == cur ? e.second : e.first, pos + 1,
                 cp != 0 ? cp : last_cross);
            exps[idx - 1] -= even_pos ? -1 : 1;
            used[idx] = 0;
        }
    };
    dfs(dfs, a, 1, 0);
    return sum;
}

// --- oracle 2: symbolic exchange recursion -------------------------------------

// Repeatedly replace the first diagonal crossed by (a,b) using the exchange
// relation  new * old = ac + bd  on symbolic lengths, until (a,b) becomes an
// arc; every division is exact.  Completely independent of the enumeration
// above.
inline LaurentPoly classical_lambda_flips(const Triangulation& t0, int a, int b) {
    const int n = t0.n();
    if (a == b || a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("invalid chord endpoints");
    const int m = t0.arc_count();

    Triangulation t = t0;
    std::map<Arc, LaurentPoly> lambda;
    for (const Arc& e : t.arcs()) lambda.emplace(e, LaurentPoly::variable(m, t.arc_index(e)));

    std::size_t guard = 0;
    while (!t.is_arc(a, b)) {
        if (++guard > static_cast<std::size_t>(n)) throw std::logic_error("flip recursion stuck");
        const Arc d = triangulation::crossed_diagonals(t, a, b).front();
        const auto fs = t.faces_with_arc(d);
        const int p = triangulation::third_vertex(fs[0], d);
        const int q = triangulation::third_vertex(fs[1], d);
        const Arc nd = triangulation::arc_key(p, q);
        const LaurentPoly prod =
            lambda.at(triangulation::arc_key(d.first, p)) *
                lambda.at(triangulation::arc_key(d.second, q)) +
            lambda.at(triangulation::arc_key(d.first, q)) *
                lambda.at(triangulation::arc_key(d.second, p));
        LaurentPoly nl = divide_exact(prod, lambda.at(d));
        t = t.with_replaced_diagonal(d, nd);
        lambda.erase(d);
        lambda.emplace(nd, std::move(nl));
    }
    return lambda.at(triangulation::arc_key(a, b));
}

}  // namespace superpath::classical
