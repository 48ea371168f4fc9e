#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace cremona;
using testing_support::Gen;

namespace {

HPoly P(const char* text) { return parse_hpoly(text); }

// All p/q with p | a0 and q | an, the classical candidate set.
std::set<Rational> rational_root_candidates(const UPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> ints;
    for (const auto& c : p.coeffs()) ints.push_back(Integer(c * den));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    const auto divisors = [](Integer n) {
        std::vector<Integer> out;
        n = abs(n);
        for (Integer k = 1; k <= n; ++k)
            if (n % k == 0) out.push_back(k);
        return out;
    };
    std::set<Rational> out;
    if (low > 0) out.insert(0);
    for (const auto& a : divisors(ints[low]))
        for (const auto& b : divisors(ints.back())) {
            for (int s : {-1, 1}) {
                const Rational r = Rational(a * s) / Rational(b);
                if (p(r) == 0) out.insert(r);
            }
        }
    return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    const Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(make_rational(0, 5)), "0");
    EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
    EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(Parse, AcceptsGrammar) {
    const HPoly p = P("x*z^2 + y^3");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.coeff({1, 0, 2}), 1);
    EXPECT_EQ(p.coeff({0, 3, 0}), 1);
    EXPECT_EQ(P("1/2*x - (y - 3*z)"), HPoly::monomial(make_rational(1, 2), {1, 0, 0}) - HPoly::y() + Rational(3) * HPoly::z());
    EXPECT_EQ(P("(x + y)^2"), P("x^2 + 2*x*y + y^2"));
}

TEST(Parse, RejectsJuxtapositionWithPosition) {
    try {
        parse_hpoly("x y");
        FAIL() << "juxtaposition accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_hpoly("x +"), ParseError);
    EXPECT_THROW(parse_hpoly("x^2 + y"), ParseError);
    EXPECT_THROW(parse_hpoly("w"), ParseError);
    EXPECT_THROW(parse_hpoly("2x"), ParseError);
}

TEST(HPolyAdd, Examples) {
    EXPECT_TRUE((P("x^2") + P("-x^2")).is_zero());
    EXPECT_EQ(P("x*y") + P("y*z"), P("x*y + y*z"));
    EXPECT_EQ(P("x^2 - y^2") + P("y^2 + 2*x*y"), P("x^2 + 2*x*y"));
}

TEST(HPolyAdd, DegreeMismatch) {
    try {
        (void)(P("x") + P("x^2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
    }
    EXPECT_EQ(HPoly::zero(5) + P("x"), P("x"));
}

TEST(HPolyMul, Examples) {
    EXPECT_EQ(P("y*z") * P("x*z"), P("x*y*z^2"));
    const HPoly p = P("3*x^2 - y*z");
    EXPECT_EQ(p * HPoly::constant(1), p);
    EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
}

TEST(HPolyGcd, Examples) {
    EXPECT_EQ(gcd(P("x^2*y*z"), P("x*y^2*z")), P("x*y*z"));
    EXPECT_EQ(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")), P("x + y"));
    EXPECT_EQ(gcd(P("-2*x^2 + 4*y*z"), HPoly::zero(2)), P("x^2 - 2*y*z"));
}

TEST(HPolyGcd, NormalizedPrimitive) {
    const HPoly g = gcd(P("-6*x^2*y + 6*y^3"), P("4*x*y - 4*y^2"));
    EXPECT_EQ(g, P("x*y - y^2"));
}

TEST(HPolySquarefree, Examples) {
    EXPECT_EQ(squarefree_part(P("y*z^2")), P("y*z"));
    EXPECT_EQ(squarefree_part(P("x^3")), P("x"));
    EXPECT_EQ(squarefree_part(P("x*y*z")), P("x*y*z"));
    EXPECT_EQ(squarefree_part(P("(x + y)^2*(x - 2*z)^3*y")), normalize(P("(x + y)*(x - 2*z)*y")));
}

TEST(HPolySubstitute, Examples) {
    const HPoly a = P("y*z"), b = P("x*z"), c = P("x*y");
    EXPECT_EQ(substitute(P("x"), a, b, c), P("y*z"));
    EXPECT_EQ(substitute(P("y*z"), a, b, c), P("x^2*y*z"));
    EXPECT_EQ(substitute(P("x + y"), P("x"), P("y"), P("z")), P("x + y"));
    try {
        substitute(P("x"), P("x"), P("y^2"), P("z"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
    }
}

TEST(VanishingOrder, Examples) {
    EXPECT_EQ(vanishing_order(P("x*z^2 + y^3"), Var::X), 2);
    EXPECT_EQ(vanishing_order(P("x"), Var::Z), 1);
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(vanishing_order(pow(HPoly::z(), d), Var::X), d);
}

TEST(Properties, GcdContainsCommonFactor) {
    Gen g(11);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const HPoly p = g.hpoly(g.integer(1, 3), -3, 3), q = g.hpoly(g.integer(1, 3), -3, 3);
        const HPoly r = g.hpoly(g.integer(1, 3), -3, 3);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        if (gcd(p, q).degree() != 0) continue;
        const HPoly h = gcd(p * r, q * r);
        EXPECT_TRUE(divide(h, normalize(r)).has_value());
        EXPECT_TRUE(divide(p * r, h).has_value());
        EXPECT_TRUE(divide(q * r, h).has_value());
        ++checked;
    }
    EXPECT_GT(checked, 30);
}

TEST(Properties, RingLaws) {
    Gen g(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = g.integer(0, 3);
        const HPoly a = g.hpoly(g.integer(0, 3)), b = g.hpoly(d), c = g.hpoly(d);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        const int e = g.integer(1, 2);
        const HPoly f0 = g.hpoly(e), f1 = g.hpoly(e), f2 = g.hpoly(e);
        EXPECT_EQ(substitute(a * b, f0, f1, f2), substitute(a, f0, f1, f2) * substitute(b, f0, f1, f2));
    }
}

TEST(Properties, VanishingOrderAdditive) {
    Gen g(13);
    for (int trial = 0; trial < 50; ++trial) {
        const HPoly a = g.hpoly(g.integer(0, 4)), b = g.hpoly(g.integer(0, 4));
        if (a.is_zero() || b.is_zero()) continue;
        for (Var v : {Var::X, Var::Y, Var::Z})
            EXPECT_EQ(vanishing_order(a * b, v), vanishing_order(a, v) + vanishing_order(b, v));
    }
}

TEST(Properties, Deterministic) {
    Gen g(14);
    for (int trial = 0; trial < 20; ++trial) {
        const HPoly a = g.hpoly(3), b = g.hpoly(3);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(gcd(a * b, b).terms(), gcd(a * b, b).terms());
    }
}

TEST(UPolyRoots, PlantedRoots) {
    Gen g(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<Rational> planted;
        UPoly p(Rational(1));
        for (int k = g.integer(0, 4); k > 0; --k) {
            const Rational r = make_rational(g.integer(-9, 9), g.integer(1, 6));
            planted.insert(r);
            p = p * UPoly(std::vector<Rational>{-r, 1}) * UPoly(std::vector<Rational>{-r, 1});
        }
        // An irreducible quadratic factor contributes no rational root.
        p = p * UPoly(std::vector<Rational>{Rational(g.integer(1, 5)), 0, 1});
        const auto roots = rational_roots(p);
        EXPECT_EQ(std::set<Rational>(roots.begin(), roots.end()), planted);
        EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    }
}

TEST(UPolyRoots, MatchesCandidateEnumeration) {
    Gen g(22);
    for (int trial = 0; trial < 80; ++trial) {
        const UPoly p = g.upoly(g.integer(1, 5), -12, 12);
        const auto roots = rational_roots(p);
        EXPECT_EQ(std::set<Rational>(roots.begin(), roots.end()), rational_root_candidates(p)) << trial;
    }
}
