#ifndef CREMONA_RATIONAL_MAP_HPP
#define CREMONA_RATIONAL_MAP_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hpoly.hpp"
#include "matrix.hpp"
#include "parse.hpp"

namespace cremona {

/// Rational self-map of the projective plane, (x:y:z) -> (f0 : f1 : f2).
///
/// Always stored reduced and canonical: the components are coprime, their
/// joint integer content is 1 and the first nonzero coefficient (component
/// order, then lexicographic order) is positive. Equality is therefore
/// equality of the underlying term maps.
class RationalMap {
   public:
    /// Reduces and canonicalizes; throws DegenerateTriple for triples that do
    /// not define a map to the plane, DegreeMismatch for unequal degrees.
    RationalMap(HPoly f0, HPoly f1, HPoly f2) : c_{std::move(f0), std::move(f1), std::move(f2)} { reduce(); }

    const std::array<HPoly, 3>& components() const noexcept { return c_; }
    const HPoly& operator[](int i) const { return c_[i]; }
    int degree() const noexcept { return deg_; }

    Point3 operator()(const Point3& p) const { return {c_[0](p), c_[1](p), c_[2](p)}; }

    friend bool operator==(const RationalMap& f, const RationalMap& g) { return f.c_ == g.c_; }

   private:
    void reduce() {
        int deg = -1;
        for (const auto& f : c_) {
            if (f.is_zero()) continue;
            if (deg < 0) deg = f.degree();
            if (f.degree() != deg) throw Error(ErrorCode::DegreeMismatch, "components have different degrees");
        }
        if (deg < 0) throw Error(ErrorCode::DegenerateTriple, "all components vanish");
        const HPoly g = gcd(c_[0], c_[1], c_[2]);
        for (auto& f : c_) f = f.is_zero() ? HPoly::zero(deg - g.degree()) : *divide(f, g);
        deg_ = deg - g.degree();
        if (deg_ == 0) throw Error(ErrorCode::DegenerateTriple, "components are proportional (constant map)");

        Integer den = 1;
        for (const auto& f : c_)
            for (const auto& [e, c] : f.terms()) den = lcm(den, c.get_den());
        Integer num = 0;
        for (const auto& f : c_)
            for (const auto& [e, c] : f.terms()) num = gcd(num, Integer(c * den));
        Rational s = Rational(den) / Rational(num);
        for (const auto& f : c_) {
            if (f.is_zero()) continue;
            if (f.leading().second < 0) s = -s;
            break;
        }
        for (auto& f : c_) f *= s;
    }

    std::array<HPoly, 3> c_;
    int deg_ = 0;
};

/// f o g: apply g first.
inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
    return RationalMap(substitute(f[0], g[0], g[1], g[2]), substitute(f[1], g[0], g[1], g[2]),
                       substitute(f[2], g[0], g[1], g[2]));
}

inline RationalMap linear_map(const Mat3& m) {
    if (m.det() == 0) throw Error(ErrorCode::SingularMatrix, "linear map needs an invertible matrix");
    std::array<HPoly, 3> rows;
    for (int i = 0; i < 3; ++i) {
        rows[i] = HPoly::zero(1);
        for (int j = 0; j < 3; ++j) {
            Exponent e{0, 0, 0};
            e[j] = 1;
            rows[i] += HPoly::monomial(m(i, j), e);
        }
    }
    return RationalMap(rows[0], rows[1], rows[2]);
}

/// Matrix of a degree-one map, scaled to match the canonical form.
inline std::optional<Mat3> linear_matrix(const RationalMap& f) {
    if (f.degree() != 1) return std::nullopt;
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Exponent e{0, 0, 0};
            e[j] = 1;
            m(i, j) = f[i].coeff(e);
        }
    return m;
}

inline RationalMap identity_map() { return RationalMap(HPoly::x(), HPoly::y(), HPoly::z()); }

/// (yz : xz : xy)
inline RationalMap sigma() {
    return RationalMap(HPoly::y() * HPoly::z(), HPoly::x() * HPoly::z(), HPoly::x() * HPoly::y());
}

/// (xy : z^2 : yz)
inline RationalMap rho() {
    return RationalMap(HPoly::x() * HPoly::y(), HPoly::z() * HPoly::z(), HPoly::y() * HPoly::z());
}

/// (x^2 : xy : y^2 - xz)
inline RationalMap tau() {
    return RationalMap(HPoly::x() * HPoly::x(), HPoly::x() * HPoly::y(),
                       HPoly::y() * HPoly::y() - HPoly::x() * HPoly::z());
}

/// (x z^(d-1) + y^d : y z^(d-1) : z^d), the Jonquieres family.
inline RationalMap jonquieres_map(int d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "jonquieres_map needs d >= 2");
    const HPoly zd1 = pow(HPoly::z(), d - 1);
    return RationalMap(HPoly::x() * zd1 + pow(HPoly::y(), d), HPoly::y() * zd1, pow(HPoly::z(), d));
}

inline HPoly jacobian(const RationalMap& f) {
    std::array<std::array<HPoly, 3>, 3> j;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) j[r][c] = derivative(f[r], static_cast<Var>(c));
    const HPoly det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                      j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                      j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    if (det.is_zero()) return HPoly::zero(3 * (f.degree() - 1));
    return det;
}

enum class QuadraticOrbit { Sigma, Rho, Tau };

constexpr std::string_view orbit_name(QuadraticOrbit o) noexcept {
    switch (o) {
        case QuadraticOrbit::Sigma: return "SIGMA_ORBIT";
        case QuadraticOrbit::Rho: return "RHO_ORBIT";
        case QuadraticOrbit::Tau: return "TAU_ORBIT";
    }
    return "";
}

/// Orbit of a quadratic birational map under left-right linear equivalence,
/// read off from the number of distinct lines it contracts: the linear
/// factors of its Jacobian determinant (3, 2 or 1 of them).
inline QuadraticOrbit classify_quadratic(const RationalMap& f) {
    if (f.degree() != 2) throw Error(ErrorCode::NotQuadratic, "map has degree " + std::to_string(f.degree()));
    const HPoly jac = jacobian(f);
    if (jac.is_zero()) throw Error(ErrorCode::NotBirational, "Jacobian vanishes identically");
    switch (squarefree_part(jac).degree()) {
        case 3: return QuadraticOrbit::Sigma;
        case 2: return QuadraticOrbit::Rho;
        case 1: return QuadraticOrbit::Tau;
        default: break;
    }
    throw Error(ErrorCode::NotBirational, "contracted locus does not match a quadratic birational map");
}

inline bool verify_inverse(const RationalMap& f, const RationalMap& g) {
    const RationalMap id = identity_map();
    try {
        return compose(f, g) == id && compose(g, f) == id;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateTriple) return false;
        throw;
    }
}

inline std::string to_string(const RationalMap& f) {
    return "(" + to_string(f[0]) + " : " + to_string(f[1]) + " : " + to_string(f[2]) + ")";
}

/// Parses "(e0 : e1 : e2)".
inline RationalMap parse_map(std::string_view text) {
    const auto parts = split_tuple(text, ':');
    if (parts.size() != 3) throw ParseError(0, "a map needs exactly three components");
    std::array<SparsePoly, 3> raw;
    int deg = -1;
    for (int i = 0; i < 3; ++i) {
        raw[i] = parse_polynomial(parts[i].first, {"x", "y", "z"}, parts[i].second);
        for (const auto& [e, c] : raw[i]) {
            const int d = HPoly::total(e);
            if (deg < 0) deg = d;
            if (d != deg) throw Error(ErrorCode::DegreeMismatch, "components are not homogeneous of one degree");
        }
    }
    if (deg < 0) throw Error(ErrorCode::DegenerateTriple, "all components vanish");
    std::array<HPoly, 3> comps;
    for (int i = 0; i < 3; ++i) comps[i] = HPoly(HPoly::Terms(raw[i].begin(), raw[i].end()), deg);
    return RationalMap(comps[0], comps[1], comps[2]);
}

}  // namespace cremona

#endif  // CREMONA_RATIONAL_MAP_HPP
