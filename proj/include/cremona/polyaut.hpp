#ifndef CREMONA_POLYAUT_HPP
#define CREMONA_POLYAUT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parse.hpp"
#include "rational_map.hpp"

namespace cremona {

/// Polynomial in the affine coordinates X, Y.
class BiPoly {
   public:
    using Key = std::array<int, 2>;  // {power of X, power of Y}
    using Terms = std::map<Key, Rational, std::greater<>>;

    BiPoly() = default;
    BiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) t_[{0, 0}] = c;
    }
    explicit BiPoly(Terms t) : t_(std::move(t)) { prune(); }

    static BiPoly X() { return monomial(1, 1, 0); }
    static BiPoly Y() { return monomial(1, 0, 1); }
    static BiPoly monomial(const Rational& c, int i, int j) {
        BiPoly p;
        if (c != 0) p.t_[{i, j}] = c;
        return p;
    }

    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    Rational coeff(int i, int j) const {
        const auto it = t_.find({i, j});
        return it == t_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k[0] + k[1]);
        return d;
    }

    BiPoly leading_form() const {
        const int d = degree();
        Terms out;
        for (const auto& [k, c] : t_)
            if (k[0] + k[1] == d) out.emplace(k, c);
        return BiPoly(std::move(out));
    }

    /// Coefficient of the lexicographically largest monomial.
    const Rational& leading_coeff() const { return t_.begin()->second; }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) t_[k] += c;
        prune();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) t_[k] -= c;
        prune();
        return *this;
    }
    BiPoly& operator*=(const Rational& s) {
        if (s == 0) t_.clear();
        for (auto& [k, c] : t_) c *= s;
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        Terms out;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) out[{ka[0] + kb[0], ka[1] + kb[1]}] += ca * cb;
        return BiPoly(std::move(out));
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

   private:
    void prune() { std::erase_if(t_, [](const auto& kv) { return kv.second == 0; }); }
    Terms t_;
};

inline BiPoly pow(const BiPoly& p, int k) {
    BiPoly r(1), b = p;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

/// p(a, b).
inline BiPoly substitute(const BiPoly& p, const BiPoly& a, const BiPoly& b) {
    std::vector<BiPoly> pa{BiPoly(1)}, pb{BiPoly(1)};
    BiPoly out;
    for (const auto& [k, c] : p.terms()) {
        while (static_cast<int>(pa.size()) <= k[0]) pa.push_back(pa.back() * a);
        while (static_cast<int>(pb.size()) <= k[1]) pb.push_back(pb.back() * b);
        out += c * (pa[k[0]] * pb[k[1]]);
    }
    return out;
}

inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        const bool unit = (k[0] + k[1] > 0) && (c == 1 || c == -1);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        const auto var = [&mono](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("X", k[0]);
        var("Y", k[1]);
        const Rational a = abs(c);
        if (mono.empty()) {
            out += a.get_str();
        } else {
            if (!unit) out += a.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

/// Pair (p, q) read as the map (X, Y) -> (p, q).
struct BiPair {
    BiPoly p, q;

    int degree() const { return std::max(p.degree(), q.degree()); }
    friend bool operator==(const BiPair&, const BiPair&) = default;
};

inline BiPair identity_pair() { return {BiPoly::X(), BiPoly::Y()}; }

/// f o g: apply g first.
inline BiPair compose(const BiPair& f, const BiPair& g) {
    return {substitute(f.p, g.p, g.q), substitute(f.q, g.p, g.q)};
}

inline std::string to_string(const BiPair& f) { return "(" + to_string(f.p) + ", " + to_string(f.q) + ")"; }

enum class FactorKind { Affine, Elementary };

constexpr std::string_view factor_kind_name(FactorKind k) noexcept {
    return k == FactorKind::Affine ? "AFFINE" : "ELEMENTARY";
}

struct JungFactor {
    FactorKind kind;
    BiPair map;
};

namespace detail {

inline bool is_affine(const BiPair& f) { return f.p.degree() <= 1 && f.q.degree() <= 1; }

inline Rational linear_det(const BiPair& f) {
    return f.p.coeff(1, 0) * f.q.coeff(0, 1) - f.p.coeff(0, 1) * f.q.coeff(1, 0);
}

/// (alpha X + P(Y), beta Y + gamma) with alpha beta != 0.
inline bool is_elementary(const BiPair& f) {
    for (const auto& [k, c] : f.p.terms())
        if (k[0] > 1 || (k[0] == 1 && k[1] > 0)) return false;
    if (f.q.degree() > 1 || f.q.coeff(1, 0) != 0) return false;
    return f.p.coeff(1, 0) != 0 && f.q.coeff(0, 1) != 0;
}

inline BiPair invert_affine(const BiPair& f) {
    const Rational a = f.p.coeff(1, 0), b = f.p.coeff(0, 1), c = f.p.coeff(0, 0);
    const Rational d = f.q.coeff(1, 0), e = f.q.coeff(0, 1), g = f.q.coeff(0, 0);
    const Rational det = a * e - b * d;
    if (det == 0) throw Error(ErrorCode::NotAutomorphism, "affine part is singular");
    const BiPoly u = BiPoly::X() - BiPoly(c), v = BiPoly::Y() - BiPoly(g);
    return {(e / det) * u - (b / det) * v, (a / det) * v - (d / det) * u};
}

inline BiPair invert_elementary(const BiPair& f) {
    const Rational alpha = f.p.coeff(1, 0), beta = f.q.coeff(0, 1), gamma = f.q.coeff(0, 0);
    const BiPoly y = (BiPoly::Y() - BiPoly(gamma)) * (1 / beta);
    BiPoly P = f.p - BiPoly::monomial(alpha, 1, 0);
    return {(BiPoly::X() - substitute(P, BiPoly::X(), y)) * (1 / alpha), y};
}

inline BiPair invert_factor(const JungFactor& f) {
    return f.kind == FactorKind::Affine ? invert_affine(f.map) : invert_elementary(f.map);
}

// Appends g after the list, merging with the last factor when both have the same kind.
inline void push_factor(std::vector<JungFactor>& out, JungFactor g) {
    if (!out.empty() && out.back().kind == g.kind) {
        out.back().map = compose(out.back().map, g.map);
        return;
    }
    out.push_back(std::move(g));
}

}  // namespace detail

/// Factors F as f1 o f2 o ... o fn (f1 outermost) with affine and
/// elementary pieces. Degrees strictly drop while elementary factors are
/// peeled off the left; a swap (Y, X) is inserted when the second
/// component has the larger degree.
inline std::vector<JungFactor> jung_factorize(const BiPair& F) {
    const BiPair swap{BiPoly::Y(), BiPoly::X()};
    std::vector<JungFactor> out;
    BiPair cur = F;
    while (!detail::is_affine(cur)) {
        int dp = cur.p.degree(), dq = cur.q.degree();
        if (dq > dp) {
            detail::push_factor(out, {FactorKind::Affine, swap});
            std::swap(cur.p, cur.q);
            std::swap(dp, dq);
        }
        if (dq < 1 || dp % dq != 0)
            throw Error(ErrorCode::NotAutomorphism, "leading forms are not related by a power: " + to_string(F));
        const int k = dp / dq;
        const BiPoly lq = pow(cur.q.leading_form(), k), lp = cur.p.leading_form();
        const Rational c = lp.leading_coeff() / lq.leading_coeff();
        if (lp != c * lq)
            throw Error(ErrorCode::NotAutomorphism, "leading forms are not related by a power: " + to_string(F));
        // cur = (X + c Y^k, Y) o (p - c q^k, q)
        const BiPair e{BiPoly::X() + BiPoly::monomial(c, 0, k), BiPoly::Y()};
        detail::push_factor(out, {k == 1 ? FactorKind::Affine : FactorKind::Elementary, e});
        cur.p -= c * pow(cur.q, k);
    }
    if (detail::linear_det(cur) == 0) throw Error(ErrorCode::NotAutomorphism, "affine remainder is singular");
    detail::push_factor(out, {FactorKind::Affine, cur});
    if (out.back().kind == FactorKind::Affine && out.back().map == identity_pair()) out.pop_back();
    return out;
}

inline BiPair recompose(const std::vector<JungFactor>& factors) {
    // Folding from the right keeps the substituted polynomial small.
    BiPair acc = identity_pair();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(it->map, acc);
    return acc;
}

/// Polynomial automorphism of the affine plane together with a verified
/// inverse.
class PolyAuto {
   public:
    /// Derives the inverse from the Jung factors; NotAutomorphism if none exists.
    explicit PolyAuto(BiPair f) : f_(std::move(f)) {
        const auto factors = jung_factorize(f_);
        BiPair inv = identity_pair();
        for (const auto& g : factors) inv = compose(detail::invert_factor(g), inv);
        inv_ = std::move(inv);
        check();
    }
    PolyAuto(BiPair f, BiPair inverse) : f_(std::move(f)), inv_(std::move(inverse)) { check(); }
    PolyAuto(BiPoly p, BiPoly q) : PolyAuto(BiPair{std::move(p), std::move(q)}) {}

    const BiPair& map() const noexcept { return f_; }
    const BiPoly& p() const noexcept { return f_.p; }
    const BiPoly& q() const noexcept { return f_.q; }
    const BiPair& inverse() const noexcept { return inv_; }
    int degree() const { return f_.degree(); }

    friend PolyAuto compose(const PolyAuto& f, const PolyAuto& g) {
        return PolyAuto(compose(f.f_, g.f_), compose(g.inv_, f.inv_));
    }
    friend bool operator==(const PolyAuto& a, const PolyAuto& b) { return a.f_ == b.f_; }

   private:
    void check() const {
        if (compose(f_, inv_) != identity_pair() || compose(inv_, f_) != identity_pair())
            throw Error(ErrorCode::NotAutomorphism, "inverse witness does not compose to the identity");
    }

    BiPair f_, inv_;
};

inline std::vector<JungFactor> jung_factorize(const PolyAuto& F) { return jung_factorize(F.map()); }

inline RationalMap homogenize(const BiPair& F) {
    const int D = std::max(F.degree(), 1);
    const auto lift = [D](const BiPoly& p) {
        HPoly::Terms t;
        for (const auto& [k, c] : p.terms()) t[{k[0], k[1], D - k[0] - k[1]}] = c;
        return HPoly(std::move(t), D);
    };
    return RationalMap(lift(F.p), lift(F.q), pow(HPoly::z(), D));
}

inline RationalMap homogenize(const PolyAuto& F) { return homogenize(F.map()); }

/// Parses "(expr_in_X_Y, expr_in_X_Y)" as a pair.
inline BiPair parse_pair(std::string_view text) {
    const auto parts = split_tuple(text, ',');
    if (parts.size() != 2) throw ParseError(0, "an automorphism needs exactly two components");
    std::array<BiPoly, 2> out;
    for (int i = 0; i < 2; ++i) {
        BiPoly::Terms t;
        for (const auto& [e, c] : parse_polynomial(parts[i].first, {"X", "Y"}, parts[i].second)) t[{e[0], e[1]}] = c;
        out[i] = BiPoly(std::move(t));
    }
    return {out[0], out[1]};
}

inline PolyAuto parse_polyaut(std::string_view text) { return PolyAuto(parse_pair(text)); }

}  // namespace cremona

#endif  // CREMONA_POLYAUT_HPP
