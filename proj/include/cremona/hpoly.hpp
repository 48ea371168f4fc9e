#ifndef CREMONA_HPOLY_HPP
#define CREMONA_HPOLY_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "upoly.hpp"

namespace cremona {

using Exponent = std::array<int, 3>;

enum class Var { X = 0, Y = 1, Z = 2 };

/// Homogeneous polynomial in x, y, z with rational coefficients.
///
/// Terms are kept sorted lexicographically with x > y > z, largest first, and
/// never store a zero coefficient. The zero polynomial keeps a degree tag so
/// that it can take part in equal-degree triples.
class HPoly {
   public:
    using Terms = std::map<Exponent, Rational, std::greater<>>;

    HPoly() = default;

    /// Throws DegreeMismatch if the terms are not all of the same degree.
    explicit HPoly(Terms terms, int degree_if_zero = 0) : terms_(std::move(terms)), deg_(degree_if_zero) {
        std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
        if (terms_.empty()) return;
        deg_ = total(terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
            if (total(e) != deg_) throw Error(ErrorCode::DegreeMismatch, "polynomial is not homogeneous");
        }
    }

    static HPoly zero(int degree) { return HPoly(Terms{}, degree); }
    static HPoly constant(const Rational& c) { return HPoly(Terms{{Exponent{0, 0, 0}, c}}); }
    static HPoly monomial(const Rational& c, const Exponent& e) { return HPoly(Terms{{e, c}}, total(e)); }
    static HPoly var(Var v) {
        Exponent e{0, 0, 0};
        e[static_cast<int>(v)] = 1;
        return monomial(1, e);
    }
    static HPoly x() { return var(Var::X); }
    static HPoly y() { return var(Var::Y); }
    static HPoly z() { return var(Var::Z); }

    int degree() const noexcept { return deg_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Lexicographically first term.
    const std::pair<const Exponent, Rational>& leading() const { return *terms_.begin(); }

    Rational operator()(const std::array<Rational, 3>& p) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) m *= p[i];
            acc += m;
        }
        return acc;
    }

    HPoly& operator+=(const HPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (deg_ != o.deg_) throw Error(ErrorCode::DegreeMismatch, "adding polynomials of different degrees");
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    HPoly& operator-=(const HPoly& o) { return *this += -o; }
    HPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator-(HPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend HPoly operator*(HPoly a, const Rational& s) { return a *= s; }
    friend HPoly operator*(const Rational& s, HPoly a) { return a *= s; }
    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        Terms r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                auto [it, inserted] = r.try_emplace(e, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        return HPoly(std::move(r), a.deg_ + b.deg_);
    }
    friend bool operator==(const HPoly& a, const HPoly& b) {
        if (a.is_zero() && b.is_zero()) return a.deg_ == b.deg_;
        return a.terms_ == b.terms_;
    }

    static int total(const Exponent& e) noexcept { return e[0] + e[1] + e[2]; }

   private:
    Terms terms_;
    int deg_ = 0;
};

inline HPoly pow(const HPoly& p, int k) {
    if (p.is_zero()) return k == 0 ? HPoly::constant(1) : HPoly::zero(p.degree() * k);
    HPoly r = HPoly::constant(1);
    HPoly base = p;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

inline HPoly derivative(const HPoly& p, Var v) {
    const int i = static_cast<int>(v);
    HPoly::Terms r;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        r.emplace(f, c * e[i]);
    }
    return HPoly(std::move(r), std::max(p.degree() - 1, 0));
}

/// p(f0, f1, f2). The fi must share a degree.
inline HPoly substitute(const HPoly& p, const HPoly& f0, const HPoly& f1, const HPoly& f2) {
    const std::array<const HPoly*, 3> f{&f0, &f1, &f2};
    int fdeg = -1;
    for (const HPoly* fi : f) {
        if (fi->is_zero()) continue;
        if (fdeg < 0) fdeg = fi->degree();
        if (fi->degree() != fdeg) throw Error(ErrorCode::DegreeMismatch, "substitution triple has unequal degrees");
    }
    if (fdeg < 0) fdeg = 0;
    // Power tables, built lazily up to the largest exponent used.
    std::array<std::vector<HPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) powers[i].push_back(HPoly::constant(1));
    auto power = [&](int i, int k) -> const HPoly& {
        while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * *f[i]);
        return powers[i][k];
    };
    HPoly r = HPoly::zero(p.degree() * fdeg);
    for (const auto& [e, c] : p.terms()) r += c * (power(0, e[0]) * power(1, e[1]) * power(2, e[2]));
    if (r.is_zero()) return HPoly::zero(p.degree() * fdeg);
    return r;
}

/// Exact quotient p / d, or nullopt when d does not divide p.
inline std::optional<HPoly> divide(const HPoly& p, const HPoly& d) {
    if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (p.is_zero()) return HPoly::zero(std::max(p.degree() - d.degree(), 0));
    if (p.degree() < d.degree()) return std::nullopt;
    const auto& [ld, lc] = d.leading();
    const Rational inv = 1 / lc;
    HPoly rem = p;
    HPoly::Terms q;
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        const Exponent e{lr[0] - ld[0], lr[1] - ld[1], lr[2] - ld[2]};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
        const Rational f = cr * inv;
        q.emplace(e, f);
        rem -= HPoly::monomial(f, e) * d;
    }
    return HPoly(std::move(q), p.degree() - d.degree());
}

/// Primitive integer content, lexicographically first coefficient positive.
inline HPoly normalize(const HPoly& p) {
    if (p.is_zero()) return p;
    Integer den = 1;
    for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
    Integer num = 0;
    for (const auto& [e, c] : p.terms()) num = gcd(num, Integer(c * den));
    Rational s = Rational(den) / Rational(num);
    if (p.leading().second < 0) s = -s;
    return p * s;
}

namespace detail {

// Bivariate polynomial in (u, v): index is the power of u, coefficient a
// polynomial in v. Used as the recursive representation for the gcd.
using BiRep = std::vector<UPoly>;

inline void trim(BiRep& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline BiRep to_birep(const HPoly& p) {
    BiRep r;
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(r.size()) <= e[0]) r.resize(e[0] + 1);
        r[e[0]] += UPoly::monomial(c, e[1]);
    }
    trim(r);
    return r;
}

inline HPoly from_birep(const BiRep& a) {
    int deg = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) deg = std::max(deg, static_cast<int>(i) + a[i].degree());
    HPoly::Terms t;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j <= a[i].degree(); ++j)
            if (a[i][j] != 0) t.emplace(Exponent{static_cast<int>(i), j, deg - static_cast<int>(i) - j}, a[i][j]);
    return HPoly(std::move(t), deg);
}

inline UPoly content(const BiRep& a) {
    UPoly g;
    for (const auto& c : a) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

// Divides out the content and scales the leading coefficient to be monic.
inline BiRep primitive_part(BiRep a) {
    if (a.empty()) return a;
    const UPoly c = content(a);
    if (c.degree() > 0)
        for (auto& x : a) x = exact_quotient(x, c);
    const Rational s = 1 / a.back().lead();
    for (auto& x : a) x = x * s;
    return a;
}

inline BiRep pseudo_remainder(BiRep a, const BiRep& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const UPoly la = a.back();
        for (auto& x : a) x = x * lb;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

// gcd in Q[v][u] by the primitive polynomial remainder sequence.
inline BiRep bivariate_gcd(const BiRep& p, const BiRep& q) {
    if (p.empty()) return q;
    if (q.empty()) return p;
    const UPoly cg = gcd(content(p), content(q));
    BiRep a = primitive_part(p);
    BiRep b = primitive_part(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty() && b.size() > 1) {
        BiRep r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.empty() ? r : primitive_part(std::move(r));
    }
    BiRep g = b.empty() ? a : BiRep{UPoly(Rational(1))};
    for (auto& x : g) x = x * cg;
    return g;
}

}  // namespace detail

/// Greatest common divisor, normalized. gcd(p, 0) is normalize(p).
///
/// Powers of z are split off, the rest is dehomogenized at z = 1 and handled
/// as a bivariate gcd with x as main variable, then rehomogenized.
inline HPoly gcd(const HPoly& p, const HPoly& q) {
    if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
    if (q.is_zero()) return normalize(p);
    if (p.is_zero()) return normalize(q);
    auto z_order = [](const HPoly& f) {
        int k = f.degree();
        for (const auto& [e, c] : f.terms()) k = std::min(k, e[2]);
        return k;
    };
    const int kz = std::min(z_order(p), z_order(q));
    const HPoly g = detail::from_birep(detail::bivariate_gcd(detail::to_birep(p), detail::to_birep(q)));
    return normalize(g * HPoly::monomial(1, Exponent{0, 0, kz}));
}

inline HPoly gcd(const HPoly& a, const HPoly& b, const HPoly& c) {
    if (a.is_zero() && b.is_zero()) return normalize(c);
    return gcd(gcd(a, b), c);
}

/// Product of the distinct irreducible factors.
inline HPoly squarefree_part(const HPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
    if (p.degree() == 0) return HPoly::constant(1);
    HPoly g = gcd(p, derivative(p, Var::X));
    g = gcd(g, derivative(p, Var::Y));
    g = gcd(g, derivative(p, Var::Z));
    return normalize(*divide(p, g));
}

/// Order of vanishing at the origin of the affine chart where `chart` = 1.
inline int vanishing_order(const HPoly& p, Var chart) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "vanishing order of zero");
    const int i = static_cast<int>(chart);
    int k = p.degree();
    for (const auto& [e, c] : p.terms()) k = std::min(k, p.degree() - e[i]);
    return k;
}

inline std::string to_string(const HPoly& p) {
    if (p.is_zero()) return "0";
    static constexpr std::array<const char*, 3> names{"x", "y", "z"};
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool is_const = e == Exponent{0, 0, 0};
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (is_const) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace cremona

#endif  // CREMONA_HPOLY_HPP
