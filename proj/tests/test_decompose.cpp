#include <gtest/gtest.h>

#include "support.hpp"

using namespace cremona;
using testing_support::fixture;
using testing_support::Gen;
using testing_support::random_automorphism;

namespace {

ProjPoint pt(long x, long y, long z) { return ProjPoint(Rational(x), Rational(y), Rational(z)); }

BiPoly X() { return BiPoly::X(); }
BiPoly Y() { return BiPoly::Y(); }

BiPair shear(int k, const Rational& c = 1) { return {X() + BiPoly::monomial(c, 0, k), Y()}; }

void expect_good_word(const Word& w, const RationalMap& f) {
    const VerifyReport v = verify_word(w, f);
    EXPECT_TRUE(v.verified);
    EXPECT_TRUE(v.respects_lower_bound);
    EXPECT_GE(w.sigma_count(), log2_floor(f.degree()));
}

}  // namespace

TEST(VerifyWord, Examples) {
    const VerifyReport t = verify_word(io::load_word(fixture("tau_word.json")), tau());
    EXPECT_TRUE(t.verified);
    EXPECT_EQ(t.sigma_count, 4);
    const VerifyReport p = verify_word(io::load_word(fixture("psi_word.json")), parse_map("(x*z^2 + y^3 : y*z^2 : z^3)"));
    EXPECT_TRUE(p.verified);
    EXPECT_EQ(p.sigma_count, 8);
    EXPECT_FALSE(verify_word(Word{}.push_sigma(), rho()).verified);
    EXPECT_EQ(log2_floor(1), 0);
    EXPECT_EQ(log2_floor(8), 3);
}

TEST(QuadraticWithBasePoints, Examples) {
    EXPECT_EQ(quadratic_with_base_points(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)).first, sigma());
    const auto [Q, Qinv] = quadratic_with_base_points(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 1));
    EXPECT_EQ(classify_quadratic(Q), QuadraticOrbit::Sigma);
    EXPECT_TRUE(verify_inverse(Q, Qinv));
    const auto rep = rational_proper_base_points(Q);
    ASSERT_EQ(rep.points.size(), 3u);
    try {
        quadratic_with_base_points(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CollinearCenters);
    }
}

TEST(Greedy, ConjugatesOfSigmaUseOneSigma) {
    Gen g(61);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMap f = word_eval(g.word(1));
        const Word w = decompose_greedy(f, static_cast<std::uint64_t>(trial));
        EXPECT_EQ(w.sigma_count(), 1);
        expect_good_word(w, f);
    }
}

TEST(Greedy, Generators) {
    const Word r = decompose_greedy(rho());
    EXPECT_EQ(r.sigma_count(), 2);
    expect_good_word(r, rho());
    const Word t = decompose_greedy(tau());
    expect_good_word(t, tau());
    EXPECT_LE(t.sigma_count(), bounds(2).upper_polyaut);
    const RationalMap psi = jonquieres_map(3);
    const Word p = decompose_greedy(psi);
    expect_good_word(p, psi);
    EXPECT_LE(p.sigma_count(), bounds(3).upper_polyaut);
}

TEST(Greedy, JonquieresMaps) {
    for (int d = 2; d <= 4; ++d) {
        const RationalMap f = jonquieres_map(d);
        const Word w = decompose_greedy(f);
        expect_good_word(w, f);
        EXPECT_LE(w.sigma_count(), bounds(d).upper_polyaut);
    }
}

TEST(Greedy, RandomWords) {
    Gen g(62);
    for (int trial = 0; trial < 12; ++trial) {
        const RationalMap f = word_eval(g.word(g.integer(2, 3)));
        const Word w = decompose_greedy(f, static_cast<std::uint64_t>(trial));
        expect_good_word(w, f);
        EXPECT_LE(w.sigma_count(), 64 * f.degree());
    }
}

TEST(Greedy, Errors) {
    try {
        decompose_greedy(jonquieres_map(4), 0, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonterminationGuard);
    }
    // Conics through the three points (1 : t : t^2) with t^3 = 2.
    const RationalMap irrational = parse_map("(y^2 - x*z : y*z - 2*x^2 : z^2 - 2*x*y)");
    EXPECT_EQ(classify_quadratic(irrational), QuadraticOrbit::Sigma);
    EXPECT_TRUE(rational_proper_base_points(irrational).points.empty());
    try {
        decompose_greedy(irrational);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IrrationalBaseLocus);
    }
    EXPECT_EQ(decompose_greedy(identity_map()).sigma_count(), 0);
}

TEST(Greedy, Deterministic) {
    Gen g(63);
    const RationalMap f = word_eval(g.word(2));
    EXPECT_EQ(decompose_greedy(f, 5), decompose_greedy(f, 5));
}

TEST(Monomial, Examples) {
    EXPECT_TRUE(monomial_to_word(MonomialMap(1, 0, 0, 1)).empty());
    EXPECT_EQ(monomial_to_word(MonomialMap(-1, 0, 0, -1)), Word{}.push_sigma());
    EXPECT_EQ(monomial_projective(MonomialMap(-1, 0, 0, -1)), sigma());
    const Word s = monomial_to_word(MonomialMap(1, 1, 0, 1));
    EXPECT_EQ(s.sigma_count(), 2);
    EXPECT_EQ(monomial_projective(MonomialMap(1, 1, 0, 1)), parse_map("(x*y : y*z : z^2)"));
    expect_good_word(s, parse_map("(x*y : y*z : z^2)"));
    EXPECT_THROW(MonomialMap(2, 0, 0, 1), Error);
}

TEST(Monomial, WShearFixtureMatchesConstant) {
    const Word w = io::load_word(fixture("w_shear_word.json"));
    EXPECT_EQ(w, w_shear());
    EXPECT_EQ(w.sigma_count(), 2);
    EXPECT_EQ(word_eval(w), parse_map("(x*y : y*z : z^2)"));
    EXPECT_EQ(classify_quadratic(word_eval(w)), QuadraticOrbit::Rho);
}

TEST(Monomial, RandomUnimodularMatrices) {
    Gen g(64);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialMap m(1, 0, 0, 1);
        for (int k = g.integer(1, 4); k > 0; --k) {
            const int t = g.integer(-2, 2);
            m = m * (g.coin() ? MonomialMap(1, t, 0, 1) : MonomialMap(1, 0, t, 1));
            if (g.integer(0, 3) == 0) m = m * MonomialMap(0, 1, 1, 0);
            if (g.integer(0, 3) == 0) m = m * MonomialMap(1, 0, 0, -1);
        }
        expect_good_word(monomial_to_word(m), monomial_projective(m));
    }
}

TEST(Monomial, CompositionIsMatrixProduct) {
    const MonomialMap a(1, 1, 0, 1), b(0, 1, 1, 0), c(2, 1, 1, 1);
    EXPECT_EQ(monomial_projective(a * b), compose(monomial_projective(a), monomial_projective(b)));
    EXPECT_EQ(monomial_projective(c * a), compose(monomial_projective(c), monomial_projective(a)));
}

TEST(Elementary, Examples) {
    const Word w2 = elementary_to_word(shear(2));
    EXPECT_EQ(w2.sigma_count(), 4);
    expect_good_word(w2, jonquieres_map(2));
    const Word w3 = elementary_to_word(shear(3));
    EXPECT_EQ(w3.sigma_count(), 8);
    expect_good_word(w3, jonquieres_map(3));
    const BiPair lin{Rational(2) * X() + BiPoly(Rational(5)), Rational(3) * Y() - BiPoly(Rational(1))};
    const Word w0 = elementary_to_word(lin);
    EXPECT_EQ(w0.sigma_count(), 0);
    expect_good_word(w0, homogenize(lin));
    EXPECT_THROW(elementary_to_word({Y(), X()}), Error);
}

TEST(Elementary, RandomWithinPerMonomialBound) {
    Gen g(65);
    for (int trial = 0; trial < 12; ++trial) {
        const BiPair e = g.elementary(g.integer(2, 3));
        const Word w = elementary_to_word(e);
        expect_good_word(w, homogenize(e));
        int bound = 0;
        for (const auto& [k, c] : e.p.terms())
            if (k[1] >= 2) bound += 4 * (k[1] - 1);
        EXPECT_LE(w.sigma_count(), bound);
    }
}

TEST(Jung, Examples) {
    EXPECT_TRUE(jung_factorize(identity_pair()).empty());
    const auto f = jung_factorize(shear(2));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].kind, FactorKind::Elementary);
    EXPECT_EQ(f[0].map, shear(2));
    try {
        jung_factorize(BiPair{X() * X(), Y()});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
    }
    EXPECT_THROW(PolyAuto(X() * Y(), Y()), Error);
}

TEST(Jung, AffineElementaryAffineRoundTrip) {
    Gen g(66);
    for (int trial = 0; trial < 20; ++trial) {
        const BiPair F = compose(compose(g.affine(), shear(3)), g.affine());
        const auto factors = jung_factorize(F);
        EXPECT_EQ(recompose(factors), F);
        for (const auto& fac : factors)
            EXPECT_TRUE(fac.kind == FactorKind::Affine ? detail::is_affine(fac.map) : detail::is_elementary(fac.map));
    }
}

TEST(Jung, RandomAutomorphismsRoundTrip) {
    Gen g(67);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPair F = random_automorphism(g);
        const auto factors = jung_factorize(F);
        EXPECT_EQ(recompose(factors), F) << to_string(F);
        for (const auto& fac : factors)
            EXPECT_TRUE(fac.kind == FactorKind::Affine ? detail::is_affine(fac.map) : detail::is_elementary(fac.map));
        // The inverse witness is checked by composing at degree deg(F)^2.
        if (F.degree() <= 8) {
            const PolyAuto A(F);
            EXPECT_EQ(compose(A.map(), A.inverse()), identity_pair());
        }
    }
}

TEST(Homogenize, Examples) {
    for (int d = 2; d <= 6; ++d) EXPECT_EQ(homogenize(shear(d)), jonquieres_map(d));
    EXPECT_EQ(homogenize(identity_pair()), identity_map());
    EXPECT_EQ(homogenize(BiPair{Y(), X()}), parse_map("(y : x : z)"));
}

TEST(Homogenize, IsMorphism) {
    Gen g(68);
    for (int trial = 0; trial < 20; ++trial) {
        const BiPair F = g.coin() ? g.affine() : g.elementary(g.integer(2, 3));
        const BiPair G = g.coin() ? g.affine() : g.elementary(g.integer(2, 3));
        EXPECT_EQ(homogenize(compose(F, G)), compose(homogenize(F), homogenize(G)));
    }
}

TEST(DecomposePolyAut, Examples) {
    const PolyAuto f2(shear(2)), f3(shear(3));
    const Word w2 = decompose_polyaut(f2), w3 = decompose_polyaut(f3);
    EXPECT_EQ(w2.sigma_count(), 4);
    EXPECT_EQ(w3.sigma_count(), 8);
    EXPECT_LE(w2.sigma_count(), bounds(2).upper_polyaut);
    EXPECT_LE(w3.sigma_count(), bounds(3).upper_polyaut);
    expect_good_word(w2, homogenize(f2));
    expect_good_word(w3, homogenize(f3));
    const auto r = report_for(w3, homogenize(f3));
    EXPECT_EQ(r.upper_bound_polyaut, 10);
    EXPECT_EQ(r.lower_bound, 1);
    EXPECT_TRUE(r.verified);
}

TEST(DecomposePolyAut, ElementaryAffineElementary) {
    Gen g(69);
    for (int trial = 0; trial < 6; ++trial) {
        const PolyAuto F(compose(compose(g.elementary(2), g.affine()), g.elementary(2)));
        const Word w = decompose_polyaut(F);
        const RationalMap h = homogenize(F);
        expect_good_word(w, h);
        const auto r = report_for(w, h);
        EXPECT_EQ(r.upper_bound_polyaut, 2 * (2 * h.degree() - 1));
    }
}
