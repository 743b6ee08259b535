#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superpath/common.hpp"

namespace superpath::grassmann {

// Numeric element of the real algebra generated by k anticommuting generators
// g_1..g_k (k <= 24).  A basis monomial g_{i1}...g_{im} with i1 < ... < im is
// encoded as the bitmask with bits i1-1, ..., im-1 set.  Terms are kept
// sorted by mask and coefficients that are exactly 0.0 are dropped, so the
// representation of a value is unique.
class GrassmannNumber {
  public:
    static constexpr int kMaxGenerators = 24;

    using Term = std::pair<std::uint32_t, double>;

    GrassmannNumber() : k_(0) {}

    explicit GrassmannNumber(int k, double scalar = 0.0) : k_(check_k(k)) {
        if (scalar != 0.0) terms_.emplace_back(0u, scalar);
    }

    static GrassmannNumber scalar(int k, double value) { return GrassmannNumber(k, value); }

    // The generator g_index, 1-based.
    static GrassmannNumber generator(int k, int index) {
        GrassmannNumber g(k);
        if (index < 1 || index > k)
            throw dimension_error("generator index " + std::to_string(index) +
                                  " out of range for " + std::to_string(k) + " generators");
        g.terms_.emplace_back(std::uint32_t{1} << (index - 1), 1.0);
        return g;
    }

    // Terms need not be sorted or unique; they are normalized here.
    static GrassmannNumber from_terms(int k, std::vector<Term> terms) {
        GrassmannNumber g(k);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        for (const Term& t : terms) {
            if (k < kMaxGenerators && (t.first >> k) != 0)
                throw dimension_error("term mask uses generators beyond k");
            if (!g.terms_.empty() && g.terms_.back().first == t.first)
                g.terms_.back().second += t.second;
            else
                g.terms_.push_back(t);
        }
        g.drop_zeros();
        return g;
    }

    int num_generators() const { return k_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    double coefficient(std::uint32_t mask) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                                   [](const Term& t, std::uint32_t m) { return t.first < m; });
        return (it != terms_.end() && it->first == mask) ? it->second : 0.0;
    }

    // Coefficient of the empty word (the scalar part).
    double body() const {
        return (!terms_.empty() && terms_.front().first == 0u) ? terms_.front().second : 0.0;
    }

    // Zero counts as both even and odd.
    bool is_even() const {
        for (const Term& t : terms_)
            if (std::popcount(t.first) % 2 != 0) return false;
        return true;
    }

    bool is_odd() const {
        for (const Term& t : terms_)
            if (std::popcount(t.first) % 2 != 1) return false;
        return true;
    }

    double max_abs_coefficient() const {
        double m = 0.0;
        for (const Term& t : terms_) m = std::max(m, std::abs(t.second));
        return m;
    }

    GrassmannNumber operator-() const {
        GrassmannNumber r = *this;
        for (Term& t : r.terms_) t.second = -t.second;
        return r;
    }

    GrassmannNumber& operator+=(const GrassmannNumber& o) {
        *this = *this + o;
        return *this;
    }

    friend GrassmannNumber operator+(const GrassmannNumber& a, const GrassmannNumber& b) {
        check_same(a, b);
        GrassmannNumber r(std::max(a.k_, b.k_));
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                const double c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0.0) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i, ++j;
            }
        }
        return r;
    }

    friend GrassmannNumber operator-(const GrassmannNumber& a, const GrassmannNumber& b) {
        return a + (-b);
    }

    friend GrassmannNumber operator*(const GrassmannNumber& a, double s) {
        GrassmannNumber r = a;
        for (Term& t : r.terms_) t.second *= s;
        r.drop_zeros();
        return r;
    }

    friend GrassmannNumber operator*(double s, const GrassmannNumber& a) { return a * s; }

  private:
    static int check_k(int k) {
        if (k < 0 || k > kMaxGenerators)
            throw dimension_error("number of generators must be in [0, 24], got " +
                                  std::to_string(k));
        return k;
    }

    static void check_same(const GrassmannNumber& a, const GrassmannNumber& b) {
        // A 0-generator value is a plain scalar and mixes with any algebra.
        if (a.k_ != b.k_ && a.k_ != 0 && b.k_ != 0)
            throw dimension_error("operands live over different generator counts (" +
                                  std::to_string(a.k_) + " vs " + std::to_string(b.k_) + ")");
    }

    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return t.second == 0.0; }),
                     terms_.end());
    }

    friend GrassmannNumber gmul(const GrassmannNumber&, const GrassmannNumber&);

    int k_;
    std::vector<Term> terms_;
};

// Product.  For k <= 16 terms are accumulated in a dense per-thread scratch
// table indexed by mask (fast path: the flip verifiers multiply many small
// values); larger k falls back to hashed accumulation.
inline GrassmannNumber gmul(const GrassmannNumber& a, const GrassmannNumber& b) {
    GrassmannNumber::check_same(a, b);
    const int k = std::max(a.num_generators(), b.num_generators());
    GrassmannNumber r(k);
    if (a.is_zero() || b.is_zero()) return r;

    if (k <= 16) {
        thread_local std::vector<double> scratch;
        thread_local std::vector<char> used;
        thread_local std::vector<std::uint32_t> touched;
        const std::size_t need = std::size_t{1} << k;
        if (scratch.size() < need) {
            scratch.resize(need, 0.0);
            used.resize(need, 0);
        }
        touched.clear();
        for (const auto& [ma, ca] : a.terms()) {
            for (const auto& [mb, cb] : b.terms()) {
                if ((ma & mb) != 0) continue;
                const std::uint32_t m = ma | mb;
                if (!used[m]) {
                    used[m] = 1;
                    scratch[m] = 0.0;
                    touched.push_back(m);
                }
                scratch[m] += merge_sign(ma, mb) * ca * cb;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t m : touched) {
            if (scratch[m] != 0.0) r.terms_.emplace_back(m, scratch[m]);
            used[m] = 0;
        }
        return r;
    }

    std::unordered_map<std::uint32_t, double> acc;
    acc.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            acc[ma | mb] += merge_sign(ma, mb) * ca * cb;
        }
    }
    std::vector<GrassmannNumber::Term> terms(acc.begin(), acc.end());
    return GrassmannNumber::from_terms(k, std::move(terms));
}

inline GrassmannNumber gmul(const GrassmannNumber& a, const GrassmannNumber& b,
                            const GrassmannNumber& c) {
    return gmul(gmul(a, b), c);
}

// Multiplicative inverse of an even element with nonzero body:
// a = b0 (1 + N) with N nilpotent, so 1/a = (1/b0) sum_j (-N)^j.
inline GrassmannNumber ginv(const GrassmannNumber& a) {
    if (!a.is_even()) throw parity_error("inverse requires an even element");
    const double b0 = a.body();
    if (b0 == 0.0) throw std::domain_error("element with zero body is not invertible");
    const int k = a.num_generators();
    GrassmannNumber minus_n = a * (-1.0 / b0) + GrassmannNumber::scalar(k, 1.0);
    GrassmannNumber acc = GrassmannNumber::scalar(k, 1.0);
    GrassmannNumber pow = GrassmannNumber::scalar(k, 1.0);
    for (int j = 1; j <= k / 2 + 1; ++j) {
        pow = gmul(pow, minus_n);
        if (pow.is_zero()) break;
        acc += pow;
    }
    return acc * (1.0 / b0);
}

// Square root of an even element with positive body, via the binomial series
// sqrt(1 + N) = sum_j C(1/2, j) N^j, which terminates because N is nilpotent.
// This is the unique even square root with positive body.
inline GrassmannNumber gsqrt(const GrassmannNumber& a) {
    if (!a.is_even()) throw parity_error("square root requires an even element");
    const double b0 = a.body();
    if (b0 <= 0.0) throw std::domain_error("square root requires a positive body");
    const int k = a.num_generators();
    GrassmannNumber n = a * (1.0 / b0) - GrassmannNumber::scalar(k, 1.0);
    GrassmannNumber acc = GrassmannNumber::scalar(k, 1.0);
    GrassmannNumber pow = GrassmannNumber::scalar(k, 1.0);
    double binom = 1.0;  // C(1/2, j)
    for (int j = 1; j <= k / 2 + 1; ++j) {
        pow = gmul(pow, n);
        if (pow.is_zero()) break;
        binom *= (0.5 - (j - 1)) / j;
        acc += pow * binom;
    }
    return acc * std::sqrt(b0);
}

// max |coefficient difference| over all basis words.
inline double max_abs_diff(const GrassmannNumber& a, const GrassmannNumber& b) {
    return (a - b).max_abs_coefficient();
}

// Deviation of x from a reference value, relative to the reference's largest
// coefficient (floored at 1 so near-zero references don't blow up).
inline double relative_deviation(const GrassmannNumber& x, const GrassmannNumber& ref) {
    return max_abs_diff(x, ref) / std::max(1.0, ref.max_abs_coefficient());
}

}  // namespace superpath::grassmann
