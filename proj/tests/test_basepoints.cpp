#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace cremona;
using testing_support::Gen;

namespace {

ProjPoint pt(long x, long y, long z) { return ProjPoint(Rational(x), Rational(y), Rational(z)); }

bool has_point(const BasePointReport& r, const ProjPoint& p, int m) {
    return std::any_of(r.points.begin(), r.points.end(),
                       [&](const BasePoint& bp) { return bp.point == p && bp.multiplicity == m; });
}

// Minimum order at p over random combinations of the components.
int multiplicity_by_random_combinations(const RationalMap& f, const ProjPoint& p, Gen& g) {
    const Mat3 A = Mat3::from_columns(p.coords(), {1, 2, 5}, {3, -1, 7});
    const Mat3 move = A.det() != 0 ? A : Mat3::from_columns(p.coords(), {2, 7, 1}, {-1, 1, 4});
    // After x -> move * x the point p sits at (1 : 0 : 0).
    std::array<HPoly, 3> lin;
    for (int i = 0; i < 3; ++i)
        lin[i] = move(i, 0) * HPoly::x() + move(i, 1) * HPoly::y() + move(i, 2) * HPoly::z();
    int best = f.degree();
    for (int k = 0; k < 5; ++k) {
        HPoly c = HPoly::zero(f.degree());
        for (int i = 0; i < 3; ++i) c += Rational(g.integer(-50, 50)) * f[i];
        if (c.is_zero()) continue;
        best = std::min(best, vanishing_order(substitute(c, lin[0], lin[1], lin[2]), Var::X));
    }
    return best;
}

}  // namespace

TEST(BasePoints, Sigma) {
    const auto r = rational_proper_base_points(sigma());
    ASSERT_EQ(r.points.size(), 3u);
    EXPECT_EQ(r.points[0].point, pt(1, 0, 0));
    EXPECT_EQ(r.points[1].point, pt(0, 1, 0));
    EXPECT_EQ(r.points[2].point, pt(0, 0, 1));
    for (const auto& bp : r.points) EXPECT_EQ(bp.multiplicity, 1);
    EXPECT_EQ(r.deficiency_sq, 0);
    EXPECT_EQ(r.deficiency_lin, 0);
    EXPECT_TRUE(r.complete());
}

TEST(BasePoints, JonquieresCubic) {
    const auto r = rational_proper_base_points(jonquieres_map(3));
    ASSERT_EQ(r.points.size(), 1u);
    EXPECT_EQ(r.points[0].point, pt(1, 0, 0));
    EXPECT_EQ(r.points[0].multiplicity, 2);
    EXPECT_EQ(r.deficiency_sq, 4);
    EXPECT_EQ(r.deficiency_lin, 4);
}

TEST(BasePoints, Tau) {
    const auto r = rational_proper_base_points(tau());
    ASSERT_EQ(r.points.size(), 1u);
    EXPECT_EQ(r.points[0].point, pt(0, 0, 1));
    EXPECT_EQ(r.points[0].multiplicity, 1);
    EXPECT_EQ(r.deficiency_sq, 2);
    EXPECT_EQ(r.deficiency_lin, 2);
}

TEST(BasePoints, Rho) {
    const auto r = rational_proper_base_points(rho());
    ASSERT_EQ(r.points.size(), 2u);
    EXPECT_TRUE(has_point(r, pt(1, 0, 0), 1));
    EXPECT_TRUE(has_point(r, pt(0, 1, 0), 1));
    EXPECT_EQ(r.deficiency_sq, 1);
    EXPECT_EQ(r.deficiency_lin, 1);
}

TEST(BasePoints, LinearMapHasNone) {
    const auto r = rational_proper_base_points(identity_map());
    EXPECT_TRUE(r.points.empty());
    EXPECT_TRUE(r.complete());
}

TEST(BasePoints, ConjugatedSigmaMatchesPreimagesOfCoordinatePoints) {
    Gen g(41);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat3 A = g.invertible(), B = g.invertible();
        const RationalMap f = word_eval(Word{}.push_linear(A).push_sigma().push_linear(B));
        const Mat3 Binv = B.inverse();
        const auto r = rational_proper_base_points(f);
        ASSERT_EQ(r.points.size(), 3u);
        for (const Point3& e : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}})
            EXPECT_TRUE(has_point(r, ProjPoint(Binv * e), 1)) << trial;
        EXPECT_TRUE(r.complete());
    }
}

TEST(MultiplicityAt, Examples) {
    EXPECT_EQ(multiplicity_at(sigma(), pt(1, 0, 0)), 1);
    EXPECT_EQ(multiplicity_at(sigma(), pt(1, 1, 1)), 0);
    for (int d = 2; d <= 6; ++d) EXPECT_EQ(multiplicity_at(jonquieres_map(d), pt(1, 0, 0)), d - 1) << d;
}

TEST(MultiplicityAt, AgreesWithRandomCombinations) {
    Gen g(42);
    for (int trial = 0; trial < 25; ++trial) {
        const RationalMap f = word_eval(g.word(g.integer(1, 2)));
        const auto r = rational_proper_base_points(f);
        for (const auto& bp : r.points) EXPECT_EQ(multiplicity_by_random_combinations(f, bp.point, g), bp.multiplicity);
        EXPECT_EQ(multiplicity_by_random_combinations(f, pt(7, -3, 11), g), multiplicity_at(f, pt(7, -3, 11)));
    }
}

TEST(MultiplicityAt, InvariantUnderLinearChange) {
    Gen g(43);
    for (int trial = 0; trial < 25; ++trial) {
        const RationalMap f = word_eval(g.word(g.integer(1, 2)));
        const Mat3 A = g.invertible();
        const RationalMap fa = compose(f, linear_map(A));
        for (const auto& bp : rational_proper_base_points(f).points)
            EXPECT_EQ(multiplicity_at(fa, ProjPoint(A.inverse() * bp.point.coords())), bp.multiplicity);
    }
}

TEST(CharVectorPartial, Examples) {
    const CharVector s = char_vector_partial(sigma());
    EXPECT_EQ(s, CharVector::proper(2, {1, 1, 1}, true));
    const CharVector t = char_vector_partial(tau());
    EXPECT_EQ(t, CharVector::proper(2, {1}, false));
    const CharVector id = char_vector_partial(identity_map());
    EXPECT_EQ(id, CharVector::proper(1, {}, true));
}

TEST(Properties, DeficienciesNonNegativeAndNoetherWhenComplete) {
    Gen g(44);
    int complete = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const RationalMap f = word_eval(g.word(g.integer(1, 2)));
        const auto r = rational_proper_base_points(f);
        EXPECT_GE(r.deficiency_sq, 0);
        EXPECT_GE(r.deficiency_lin, 0);
        if (r.complete()) {
            ++complete;
            long s1 = 0, s2 = 0;
            for (const auto& bp : r.points) {
                s1 += bp.multiplicity;
                s2 += static_cast<long>(bp.multiplicity) * bp.multiplicity;
            }
            EXPECT_EQ(s2, static_cast<long>(f.degree()) * f.degree() - 1);
            EXPECT_EQ(s1, 3L * (f.degree() - 1));
        }
    }
    EXPECT_GT(complete, 10);
}

TEST(Properties, DegreeDropThroughQuadraticMap) {
    Gen g(45);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const RationalMap f = word_eval(g.word(g.integer(1, 2)));
        const auto pts = rational_proper_base_points(f).points;
        if (pts.size() < 3) continue;
        const auto &p = pts[0], &q = pts[1], &r = pts[2];
        if (collinear(p.point, q.point, r.point)) continue;
        const auto [Q, Qinv] = quadratic_with_base_points(p.point, q.point, r.point);
        EXPECT_EQ(compose(f, Qinv).degree(), 2 * f.degree() - p.multiplicity - q.multiplicity - r.multiplicity);
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(ProjPoint, CanonicalScaling) {
    EXPECT_EQ(ProjPoint(Rational(2), Rational(4), Rational(2)), pt(1, 2, 1));
    EXPECT_EQ(ProjPoint(Rational(3), Rational(0), Rational(0)), pt(1, 0, 0));
    EXPECT_EQ(to_string(ProjPoint(Rational(1), Rational(3), Rational(2))), "(1/2 : 3/2 : 1)");
    EXPECT_THROW(pt(0, 0, 0), Error);
}
