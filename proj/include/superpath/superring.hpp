#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "superpath/common.hpp"
#include "superpath/grassmann.hpp"

namespace superpath::superring {

using Rational = boost::multiprecision::cpp_rational;

// Exponent vector in *half units*: exps[i] == h means x_{i+1}^{h/2}.  Keeping
// halves as integers makes every arithmetic step exact.
using HalfExponents = std::vector<std::int32_t>;

struct TermKey {
    HalfExponents exps;
    std::uint32_t theta = 0;  // ascending word of theta generators, as bitmask

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Graded-lexicographic term order: total degree, then the exponent vector
// lexicographically, then theta word size, then the word itself.  Used as the
// storage order, so iteration (and therefore printing) is deterministic.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        const auto deg_a = std::accumulate(a.exps.begin(), a.exps.end(), std::int64_t{0});
        const auto deg_b = std::accumulate(b.exps.begin(), b.exps.end(), std::int64_t{0});
        if (deg_a != deg_b) return deg_a > deg_b;
        if (a.exps != b.exps) return a.exps > b.exps;
        const int pa = std::popcount(a.theta), pb = std::popcount(b.theta);
        if (pa != pb) return pa < pb;
        return a.theta < b.theta;
    }
};

// Element of the supercommutative ring of Laurent monomials in x_1..x_m with
// half-integer exponents, exact rational coefficients, and anticommuting
// generators theta_1..theta_k.  Each term stores its theta word ascending;
// reordering signs live in the coefficient.
class SuperPolynomial {
  public:
    using TermMap = std::map<TermKey, Rational, TermOrder>;

    SuperPolynomial() : m_(0), k_(0) {}
    SuperPolynomial(int m, int k) : m_(check_m(m)), k_(check_k(k)) {}

    static SuperPolynomial zero(int m, int k) { return SuperPolynomial(m, k); }

    static SuperPolynomial constant(int m, int k, const Rational& c) {
        SuperPolynomial p(m, k);
        if (c != 0) p.terms_[TermKey{HalfExponents(m, 0), 0u}] = c;
        return p;
    }

    static SuperPolynomial one(int m, int k) { return constant(m, k, 1); }

    // coeff * prod x_i^{exps_halves[i]/2} * (ascending theta word for mask).
    static SuperPolynomial monomial(int m, int k, const Rational& coeff,
                                    HalfExponents exps_halves, std::uint32_t theta_mask) {
        SuperPolynomial p(m, k);
        if (static_cast<int>(exps_halves.size()) != m)
            throw dimension_error("exponent vector length does not match variable count");
        if (k < 32 && (theta_mask >> k) != 0)
            throw dimension_error("theta word uses generators beyond k");
        if (coeff != 0) p.terms_[TermKey{std::move(exps_halves), theta_mask}] = coeff;
        return p;
    }

    // x_var^{halves/2}
    static SuperPolynomial x_power(int m, int k, int var, std::int32_t halves) {
        if (var < 1 || var > m) throw dimension_error("variable index out of range");
        HalfExponents e(m, 0);
        e[var - 1] = halves;
        return monomial(m, k, 1, std::move(e), 0u);
    }

    static SuperPolynomial theta(int m, int k, int index) {
        if (index < 1 || index > k) throw dimension_error("theta index out of range");
        return monomial(m, k, 1, HalfExponents(m, 0), std::uint32_t{1} << (index - 1));
    }

    int num_vars() const { return m_; }
    int num_thetas() const { return k_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const TermKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const TermKey& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
        check_same(a, b);
        SuperPolynomial r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c);
        return r;
    }

    friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a + (-b);
    }

    SuperPolynomial operator-() const {
        SuperPolynomial r = *this;
        for (auto& [key, c] : r.terms_) c = -c;
        return r;
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) {
        check_same(*this, o);
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }

    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
        check_same(a, b);
        SuperPolynomial r(a.m_, a.k_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                if ((ka.theta & kb.theta) != 0) continue;
                TermKey key;
                key.exps.resize(a.m_);
                for (int i = 0; i < a.m_; ++i) key.exps[i] = ka.exps[i] + kb.exps[i];
                key.theta = ka.theta | kb.theta;
                const int sign = merge_sign(ka.theta, kb.theta);
                Rational prod = ca * cb;
                r.add_term(key, sign > 0 ? prod : Rational(-prod));
            }
        }
        return r;
    }

    friend SuperPolynomial operator*(const SuperPolynomial& a, const Rational& s) {
        SuperPolynomial r = a;
        if (s == 0) return SuperPolynomial(a.m_, a.k_);
        for (auto& [key, c] : r.terms_) c *= s;
        return r;
    }

    friend SuperPolynomial operator*(const Rational& s, const SuperPolynomial& a) { return a * s; }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.m_ == b.m_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

  private:
    static int check_m(int m) {
        if (m < 0) throw dimension_error("negative variable count");
        return m;
    }
    static int check_k(int k) {
        if (k < 0 || k > 24) throw dimension_error("theta count must be in [0, 24]");
        return k;
    }
    static void check_same(const SuperPolynomial& a, const SuperPolynomial& b) {
        if (a.m_ != b.m_ || a.k_ != b.k_)
            throw dimension_error("operands live over different rings (" + std::to_string(a.m_) +
                                  " vars/" + std::to_string(a.k_) + " thetas vs " +
                                  std::to_string(b.m_) + "/" + std::to_string(b.k_) + ")");
    }

    int m_, k_;
    TermMap terms_;
};

// --- evaluation ------------------------------------------------------------

// Substitute positive reals for the x variables and odd algebra elements for
// the thetas.  theta_images must have one entry per theta generator, all odd
// and over a common generator count.
inline grassmann::GrassmannNumber evaluate(const SuperPolynomial& p,
                                           const std::vector<double>& x_values,
                                           const std::vector<grassmann::GrassmannNumber>& theta_images) {
    using grassmann::GrassmannNumber;
    if (static_cast<int>(x_values.size()) != p.num_vars())
        throw dimension_error("x value count does not match variable count");
    if (static_cast<int>(theta_images.size()) != p.num_thetas())
        throw dimension_error("theta image count does not match theta count");
    int gens = 0;
    for (const auto& im : theta_images) {
        if (!im.is_odd()) throw parity_error("theta image must be odd");
        gens = std::max(gens, im.num_generators());
    }
    for (double x : x_values) {
        if (!(x > 0.0)) throw std::domain_error("x values must be positive");
    }

    GrassmannNumber acc(gens);
    for (const auto& [key, coeff] : p.terms()) {
        double v = coeff.template convert_to<double>();
        for (int i = 0; i < p.num_vars(); ++i) {
            if (key.exps[i] != 0) v *= std::pow(x_values[i], 0.5 * key.exps[i]);
        }
        GrassmannNumber term = GrassmannNumber::scalar(gens, v);
        std::uint32_t w = key.theta;
        while (w != 0) {
            const int idx = std::countr_zero(w);
            term = gmul(term, theta_images[idx]);
            w &= w - 1;
        }
        acc += term;
    }
    return acc;
}

// --- theta manipulations ----------------------------------------------------

// theta_i -> signs[i-1] * theta_i  (each sign must be +1 or -1).
inline SuperPolynomial substitute_theta_signs(const SuperPolynomial& p,
                                              const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != p.num_thetas())
        throw dimension_error("sign count does not match theta count");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    SuperPolynomial r(p.num_vars(), p.num_thetas());
    for (const auto& [key, c] : p.terms()) {
        int sign = 1;
        std::uint32_t w = key.theta;
        while (w != 0) {
            sign *= signs[std::countr_zero(w)];
            w &= w - 1;
        }
        r.add_term(key, sign > 0 ? c : -c);
    }
    return r;
}

// Keep only the purely even part (all thetas sent to zero).
inline SuperPolynomial truncate_theta(const SuperPolynomial& p) {
    SuperPolynomial r(p.num_vars(), p.num_thetas());
    for (const auto& [key, c] : p.terms())
        if (key.theta == 0) r.add_term(key, c);
    return r;
}

// Rescale each theta_i by the monomial x^{scalings[i-1]/2}: a term whose word
// contains theta_i has scalings[i-1] subtracted from its exponent vector.
// This converts expansions between the plain and the rescaled odd basis.
inline SuperPolynomial rescale_thetas(const SuperPolynomial& p,
                                      const std::vector<HalfExponents>& scalings) {
    if (static_cast<int>(scalings.size()) != p.num_thetas())
        throw dimension_error("scaling count does not match theta count");
    for (const auto& s : scalings)
        if (static_cast<int>(s.size()) != p.num_vars())
            throw dimension_error("scaling exponent length does not match variable count");
    SuperPolynomial r(p.num_vars(), p.num_thetas());
    for (const auto& [key, c] : p.terms()) {
        TermKey nk = key;
        std::uint32_t w = key.theta;
        while (w != 0) {
            const int idx = std::countr_zero(w);
            for (int i = 0; i < p.num_vars(); ++i) nk.exps[i] -= scalings[idx][i];
            w &= w - 1;
        }
        r.add_term(nk, c);
    }
    return r;
}

inline bool all_exponents_integer(const SuperPolynomial& p) {
    for (const auto& [key, c] : p.terms())
        for (std::int32_t h : key.exps)
            if (h % 2 != 0) return false;
    return true;
}

// --- rendering ---------------------------------------------------------------

namespace detail {

inline std::string half_power_string(std::int32_t halves) {
    if (halves % 2 == 0) return std::to_string(halves / 2);
    return std::to_string(halves) + "/2";
}

inline void append_factors(std::string& out, const TermKey& key) {
    for (std::size_t i = 0; i < key.exps.size(); ++i) {
        const std::int32_t h = key.exps[i];
        if (h == 0) continue;
        out += " x" + std::to_string(i + 1);
        if (h != 2) out += "^(" + half_power_string(h) + ")";
    }
}

}  // namespace detail

// Canonical text form, one term per entry of the storage order, theta words
// ascending: e.g. "(-1) x1^(3/2) x8^(-1) θ1θ3".
inline std::string render_term(const TermKey& key, const Rational& coeff,
                               const std::string& theta_symbol = "θ") {
    std::string out = "(" + coeff.str() + ")";
    detail::append_factors(out, key);
    if (key.theta != 0) {
        out += " ";
        std::uint32_t w = key.theta;
        while (w != 0) {
            out += theta_symbol + std::to_string(std::countr_zero(w) + 1);
            w &= w - 1;
        }
    }
    return out;
}

inline std::string render(const SuperPolynomial& p, const std::string& theta_symbol = "θ") {
    if (p.is_zero()) return "(0)";
    std::string out;
    for (const auto& [key, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += render_term(key, c, theta_symbol);
    }
    return out;
}

// Text form with each theta word written in a caller-chosen total order of
// the generators (display_order lists theta indices from first-printed to
// last-printed).  The coefficient absorbs the reordering sign, so the printed
// expression equals the stored one.
inline std::string render_ordered(const SuperPolynomial& p, const std::vector<int>& display_order,
                                  const std::string& theta_symbol = "θ") {
    if (static_cast<int>(display_order.size()) != p.num_thetas())
        throw dimension_error("display order must list every theta index once");
    std::vector<int> position(p.num_thetas() + 1, -1);
    for (std::size_t r = 0; r < display_order.size(); ++r) {
        const int idx = display_order[r];
        if (idx < 1 || idx > p.num_thetas() || position[idx] != -1)
            throw std::invalid_argument("display order must be a permutation of 1..k");
        position[idx] = static_cast<int>(r);
    }
    if (p.is_zero()) return "(0)";
    std::string out;
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> word;  // ascending indices, 1-based
        std::uint32_t w = key.theta;
        while (w != 0) {
            word.push_back(std::countr_zero(w) + 1);
            w &= w - 1;
        }
        std::vector<int> displayed = word;
        std::sort(displayed.begin(), displayed.end(),
                  [&](int a, int b) { return position[a] < position[b]; });
        // Sign of the permutation taking the displayed sequence back to the
        // ascending (stored) sequence.
        const int sign = sort_sign(displayed);
        TermKey shown{key.exps, 0u};
        std::string term = render_term(shown, sign > 0 ? c : -c, theta_symbol);
        if (!displayed.empty()) {
            term += " ";
            for (int idx : displayed) term += theta_symbol + std::to_string(idx);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

}  // namespace superpath::superring
