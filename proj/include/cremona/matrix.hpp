#ifndef CREMONA_MATRIX_HPP
#define CREMONA_MATRIX_HPP

#include <array>

#include "rational.hpp"

namespace cremona {

using Point3 = std::array<Rational, 3>;

/// 3x3 rational matrix acting on column vectors of homogeneous coordinates.
struct Mat3 {
    std::array<std::array<Rational, 3>, 3> a{};

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
        return m;
    }
    static Mat3 diagonal(const Rational& d0, const Rational& d1, const Rational& d2) {
        Mat3 m;
        m.a[0][0] = d0;
        m.a[1][1] = d1;
        m.a[2][2] = d2;
        return m;
    }
    /// Matrix whose columns are the given points.
    static Mat3 from_columns(const Point3& c0, const Point3& c1, const Point3& c2) {
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
            m.a[i][0] = c0[i];
            m.a[i][1] = c1[i];
            m.a[i][2] = c2[i];
        }
        return m;
    }

    const Rational& operator()(int i, int j) const { return a[i][j]; }
    Rational& operator()(int i, int j) { return a[i][j]; }

    Rational det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    Mat3 inverse() const {
        const Rational d = det();
        if (d == 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                r.a[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
            }
        return r;
    }

    Point3 operator*(const Point3& p) const {
        Point3 r;
        for (int i = 0; i < 3; ++i) r[i] = a[i][0] * p[0] + a[i][1] * p[1] + a[i][2] * p[2];
        return r;
    }

    friend Mat3 operator*(const Mat3& m, const Mat3& n) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = m.a[i][0] * n.a[0][j] + m.a[i][1] * n.a[1][j] + m.a[i][2] * n.a[2][j];
        return r;
    }

    friend bool operator==(const Mat3& m, const Mat3& n) { return m.a == n.a; }

    bool is_identity() const { return *this == identity(); }
};

inline Rational det3(const Point3& p, const Point3& q, const Point3& r) {
    return Mat3::from_columns(p, q, r).det();
}

}  // namespace cremona

#endif  // CREMONA_MATRIX_HPP
