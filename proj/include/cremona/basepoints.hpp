#ifndef CREMONA_BASEPOINTS_HPP
#define CREMONA_BASEPOINTS_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "homaloidal.hpp"
#include "rational_map.hpp"
#include "upoly.hpp"

namespace cremona {

/// Point of the projective plane scaled so its last nonzero coordinate is 1.
class ProjPoint {
   public:
    explicit ProjPoint(Point3 c) : c_(std::move(c)) {
        int last = 2;
        while (last >= 0 && c_[last] == 0) --last;
        if (last < 0) throw Error(ErrorCode::InvalidArgument, "(0 : 0 : 0) is not a point");
        const Rational s = 1 / c_[last];
        for (auto& x : c_) x *= s;
    }
    ProjPoint(const Rational& x, const Rational& y, const Rational& z) : ProjPoint(Point3{x, y, z}) {}

    const Point3& coords() const noexcept { return c_; }
    const Rational& operator[](int i) const { return c_[i]; }

    /// Index of the coordinate that equals 1: the affine chart containing the point.
    Var chart() const {
        for (int i = 2; i >= 0; --i)
            if (c_[i] != 0) return static_cast<Var>(i);
        return Var::Z;
    }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

   private:
    Point3 c_;
};

inline std::string to_string(const ProjPoint& p) {
    return "(" + p[0].get_str() + " : " + p[1].get_str() + " : " + p[2].get_str() + ")";
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.coords(), q.coords(), r.coords()) == 0;
}

struct BasePoint {
    ProjPoint point;
    int multiplicity = 0;
};

struct BasePointReport {
    int degree = 0;
    std::vector<BasePoint> points;
    long deficiency_sq = 0;   // d^2 - 1 - sum m^2
    long deficiency_lin = 0;  // 3(d - 1) - sum m

    bool complete() const noexcept { return deficiency_sq == 0 && deficiency_lin == 0; }
};

/// Multiplicity at p of a general member of the linear system of f.
///
/// p is moved to the origin of its affine chart by a translation; the order
/// of a general combination of the components is the least order among the
/// components themselves.
inline int multiplicity_at(const RationalMap& f, const ProjPoint& p) {
    const Var chart = p.chart();
    const int c = static_cast<int>(chart);
    std::array<HPoly, 3> shift{HPoly::x(), HPoly::y(), HPoly::z()};
    for (int i = 0; i < 3; ++i)
        if (i != c && p[i] != 0) shift[i] += p[i] * HPoly::var(chart);
    int order = f.degree();
    for (const auto& comp : f.components()) {
        if (comp.is_zero()) continue;
        order = std::min(order, vanishing_order(substitute(comp, shift[0], shift[1], shift[2]), chart));
    }
    return order;
}

namespace detail {

// Rows are scaled to integers, then fraction-free Bareiss elimination.
inline Rational determinant(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer den = 1;
        for (const auto& v : rows[r]) den = lcm(den, v.get_den());
        scale *= den;
        for (std::size_t c = 0; c < n; ++c) m[r][c] = rows[r][c].get_num() * (den / rows[r][c].get_den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (n == 0) return 1;
    Rational det(m[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

// Coefficients in X (index = power) of p(X, t, 1).
inline std::vector<Rational> specialize_y(const HPoly& p, const Rational& t, int x_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(x_degree) + 1);
    for (const auto& [e, coef] : p.terms()) {
        Rational v = coef;
        for (int k = 0; k < e[1]; ++k) v *= t;
        c[e[0]] += v;
    }
    return c;
}

inline int x_degree(const HPoly& p) {
    int k = 0;
    for (const auto& [e, c] : p.terms()) k = std::max(k, e[0]);
    return k;
}

inline Rational sylvester_det(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    const int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    return determinant(s);
}

/// Res_X(a(X, Y, 1), b(X, Y, 1)) as a polynomial in Y, by evaluation at
/// Y = 0, 1, ..., deg a * deg b and Newton interpolation.
inline UPoly resultant_x(const HPoly& a, const HPoly& b) {
    const int ma = x_degree(a), mb = x_degree(b);
    const int samples = a.degree() * b.degree() + 1;
    std::vector<Rational> ts, vals;
    for (int i = 0; i < samples; ++i) {
        const Rational t(i);
        ts.push_back(t);
        vals.push_back(sylvester_det(specialize_y(a, t, ma), specialize_y(b, t, mb)));
    }
    // Divided differences in place, then expand the Newton form.
    for (int j = 1; j < samples; ++j)
        for (int i = samples - 1; i >= j; --i) vals[i] = (vals[i] - vals[i - 1]) / (ts[i] - ts[i - j]);
    UPoly result;
    for (int i = samples - 1; i >= 0; --i) result = result * UPoly(std::vector<Rational>{-ts[i], 1}) + UPoly(vals[i]);
    return result;
}

// Coefficients of p(X, y0, z0) as a univariate polynomial in X.
inline UPoly restrict_to_line(const HPoly& p, const Rational& y0, const Rational& z0) {
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [e, coef] : p.terms()) {
        Rational v = coef;
        for (int k = 0; k < e[1]; ++k) v *= y0;
        for (int k = 0; k < e[2]; ++k) v *= z0;
        c[e[0]] += v;
    }
    return UPoly(std::move(c));
}

inline std::vector<Rational> common_rational_roots_on_line(const RationalMap& f, const Rational& y0, const Rational& z0) {
    UPoly g;
    for (const auto& comp : f.components()) g = gcd(g, restrict_to_line(comp, y0, z0));
    if (g.is_zero()) throw Error(ErrorCode::ResultantCollapse, "components share a line");
    return rational_roots(g);
}

inline bool is_pure_z_power(const HPoly& g) {
    return std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[0] == 0 && t.first[1] == 0; });
}

}  // namespace detail

/// Proper base points with rational coordinates.
///
/// Affine points (z = 1): Y-coordinates are rational roots of the gcd of
/// resultants in X of general combinations of the components; each is
/// back-substituted. Points on z = 0 come from the restriction to that line.
inline BasePointReport rational_proper_base_points(const RationalMap& f) {
    BasePointReport report;
    report.degree = f.degree();
    const long d = f.degree();
    std::vector<ProjPoint> found;

    if (f.degree() >= 2) {
        static constexpr std::array<std::array<int, 3>, 8> kCombos{{{1, 2, 3},
                                                                   {1, 5, -7},
                                                                   {2, -3, 11},
                                                                   {3, 1, -4},
                                                                   {1, -6, 2},
                                                                   {5, 3, 1},
                                                                   {-2, 7, 9},
                                                                   {4, -1, 6}}};
        std::vector<HPoly> combos;
        for (const auto& w : kCombos) {
            HPoly c = HPoly::zero(f.degree());
            for (int i = 0; i < 3; ++i) c += Rational(w[i]) * f[i];
            if (!c.is_zero()) combos.push_back(std::move(c));
        }
        UPoly elim;
        int used = 0;
        for (std::size_t i = 0; i < combos.size() && used < 3; ++i)
            for (std::size_t j = i + 1; j < combos.size() && used < 3; ++j) {
                if (!detail::is_pure_z_power(gcd(combos[i], combos[j]))) continue;
                UPoly r = detail::resultant_x(combos[i], combos[j]);
                if (r.is_zero()) continue;
                elim = gcd(elim, r);
                ++used;
            }
        if (used == 0) throw Error(ErrorCode::ResultantCollapse, "every elimination resultant vanishes");

        for (const auto& y0 : rational_roots(elim))
            for (const auto& x0 : detail::common_rational_roots_on_line(f, y0, 1)) found.emplace_back(x0, y0, 1);
        for (const auto& x0 : detail::common_rational_roots_on_line(f, 1, 0)) found.emplace_back(x0, 1, 0);
        const Point3 e0{1, 0, 0};
        if (f[0](e0) == 0 && f[1](e0) == 0 && f[2](e0) == 0) found.emplace_back(e0);
    }

    for (const auto& p : found) {
        const Point3 v = f(p.coords());
        if (v[0] != 0 || v[1] != 0 || v[2] != 0)
            throw Error(ErrorCode::ResultantCollapse, "back-substitution produced a non-base point");
        report.points.push_back({p, multiplicity_at(f, p)});
    }
    std::sort(report.points.begin(), report.points.end(), [](const BasePoint& a, const BasePoint& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
        return a.point.coords() > b.point.coords();
    });
    long s1 = 0, s2 = 0;
    for (const auto& bp : report.points) {
        s1 += bp.multiplicity;
        s2 += static_cast<long>(bp.multiplicity) * bp.multiplicity;
    }
    report.deficiency_sq = d * d - 1 - s2;
    report.deficiency_lin = 3 * (d - 1) - s1;
    return report;
}

/// Characteristic vector over the proper rational base points; complete
/// exactly when those points carry the whole homaloidal mass.
inline CharVector char_vector_partial(const RationalMap& f) {
    const BasePointReport r = rational_proper_base_points(f);
    std::vector<int> m;
    for (const auto& bp : r.points) m.push_back(bp.multiplicity);
    return CharVector::proper(f.degree(), m, r.complete());
}

}  // namespace cremona

#endif  // CREMONA_BASEPOINTS_HPP
