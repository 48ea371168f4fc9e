#ifndef CREMONA_UPOLY_HPP
#define CREMONA_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cremona {

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// The zero polynomial has no coefficients and degree -1.
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) c_.push_back(constant);
    }

    static UPoly monomial(const Rational& coeff, int exponent) {
        std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
        c.back() = coeff;
        return UPoly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational operator[](int i) const { return (i >= 0 && i <= degree()) ? c_[i] : Rational(0); }
    const Rational& lead() const { return c_.back(); }

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(UPoly a, const Rational& s) {
        if (s == 0) return {};
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; divisor must be nonzero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
        std::vector<Rational> r = a.c_;
        if (a.degree() < b.degree()) return {UPoly(), a};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        const Rational inv = 1 / b.lead();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            const Rational f = r[k + b.degree()] * inv;
            q[k] = f;
            if (f == 0) continue;
            for (int i = 0; i <= b.degree(); ++i) r[i + k] -= f * b.c_[i];
        }
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return *this * (1 / lead());
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

inline UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact univariate division");
    return q;
}

namespace detail {

inline int sign_changes(const std::vector<UPoly>& seq, const Rational& t) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sign(p(t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Rational of least denominator in the closed interval [lo, hi].
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
    const Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    const Rational tail = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    return Rational(fl) + 1 / tail;
}

}  // namespace detail

/// All distinct rational roots in increasing order.
///
/// Roots are isolated exactly with a Sturm sequence of the squarefree part and
/// refined until the isolating interval is narrower than 1/L^2, where L is the
/// leading coefficient of the primitive integer form. A rational root has
/// denominator dividing L, so it is then the simplest rational in its interval.
inline std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;

    // Strip the root at zero.
    std::size_t low = 0;
    while (p.coeffs()[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    UPoly q(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
    if (q.degree() > 0) q = exact_quotient(q, gcd(q, q.derivative()));
    if (q.degree() <= 0) return roots;

    // Primitive integer form.
    Integer den = 1;
    for (const auto& c : q.coeffs()) den = lcm(den, c.get_den());
    q = q * Rational(den);
    Integer cont = 0;
    for (const auto& c : q.coeffs()) cont = gcd(cont, c.get_num());
    q = q * (Rational(1) / Rational(cont));
    const Integer lead = abs(q.lead().get_num());

    std::vector<UPoly> sturm{q, q.derivative()};
    while (sturm.back().degree() > 0) {
        UPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
        if (r.is_zero()) break;
        sturm.push_back(-r);
    }

    Rational bound = 0;
    for (const auto& c : q.coeffs()) bound = std::max(bound, Rational(abs(c / q.lead())));
    bound += 1;

    const Rational width_target = Rational(1) / Rational(lead * lead * 2);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        const int count = detail::sign_changes(sturm, a) - detail::sign_changes(sturm, b);
        if (count == 0) continue;
        if (count > 1) {
            const Rational mid = (a + b) / 2;
            work.emplace_back(a, mid);
            work.emplace_back(mid, b);
            continue;
        }
        // Exactly one root in (a, b]; bisect on sign of q.
        if (q(b) == 0) {
            roots.push_back(b);
            continue;
        }
        const int sb = sign(q(b));
        while (b - a >= width_target) {
            const Rational mid = (a + b) / 2;
            const int sm = sign(q(mid));
            if (sm == 0) {
                a = b = mid;
                break;
            }
            if (sm == sb) {
                b = mid;
            } else {
                a = mid;
            }
        }
        const Rational candidate = (a == b) ? a : detail::simplest_between(a, b);
        if (q(candidate) == 0) roots.push_back(candidate);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace cremona

#endif  // CREMONA_UPOLY_HPP
