#ifndef CREMONA_TESTS_SUPPORT_HPP
#define CREMONA_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>

#include "cremona/cremona.hpp"

namespace testing_support {

using namespace cremona;

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational nonzero_small() {
        int v = 0;
        while (v == 0) v = integer(-3, 3);
        return coin() ? Rational(v) : make_rational(v, integer(1, 3));
    }

    Mat3 invertible() {
        while (true) {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = integer(-3, 3);
            if (m.det() != 0) return m;
        }
    }

    RationalMap linear() { return linear_map(invertible()); }

    /// A L s L s ... L with the given number of sigmas.
    Word word(int sigmas) {
        Word w;
        w.push_linear(invertible());
        for (int i = 0; i < sigmas; ++i) w.push_sigma().push_linear(invertible());
        return w;
    }

    HPoly hpoly(int degree, int lo = -4, int hi = 4) {
        HPoly::Terms t;
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) {
                const int c = integer(lo, hi);
                if (c != 0) t[{a, b, degree - a - b}] = c;
            }
        return HPoly(std::move(t), degree);
    }

    UPoly upoly(int degree, int lo = -5, int hi = 5) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = integer(lo, hi);
        while (c.back() == 0) c.back() = integer(lo, hi);
        return UPoly(std::move(c));
    }

    BiPair affine() {
        while (true) {
            const Rational a = integer(-2, 2), b = integer(-2, 2), d = integer(-2, 2), e = integer(-2, 2);
            if (a * e - b * d == 0) continue;
            return {a * BiPoly::X() + b * BiPoly::Y() + BiPoly(Rational(integer(-2, 2))),
                    d * BiPoly::X() + e * BiPoly::Y() + BiPoly(Rational(integer(-2, 2)))};
        }
    }

    /// (alpha X + P(Y), beta Y + gamma) with deg P = degree.
    BiPair elementary(int degree) {
        BiPoly p = nonzero_small() * BiPoly::X();
        for (int k = 0; k <= degree; ++k) {
            const Rational c = k == degree ? nonzero_small() : Rational(integer(-2, 2));
            p += BiPoly::monomial(c, 0, k);
        }
        return {p, nonzero_small() * BiPoly::Y() + BiPoly(Rational(integer(-2, 2)))};
    }

   private:
    std::mt19937_64 rng_;
};

/// Applies `steps` random quadratic transforms to (1; ), keeping only
/// results that satisfy the degree and proximity bounds.
inline CharVector reverse_generated(Gen& g, int steps) {
    CharVector cv = CharVector::proper(1, {});
    int done = 0;
    while (done < steps) {
        std::vector<std::size_t> proper;
        for (std::size_t i = 0; i < cv.size(); ++i)
            if (cv.is_proper(i)) proper.push_back(i);
        std::array<Center, 3> centers{kFresh, kFresh, kFresh};
        for (auto& c : centers) {
            if (proper.empty() || !g.coin()) continue;
            const std::size_t k = static_cast<std::size_t>(g.integer(0, static_cast<int>(proper.size()) - 1));
            c = proper[k];
            proper.erase(proper.begin() + static_cast<long>(k));
        }
        try {
            CharVector next = quad_transform(cv, centers).result;
            if (next.degree() >= 2 && !check_bounds(next).all_ok()) continue;
            cv = std::move(next);
            ++done;
        } catch (const Error&) {
        }
    }
    return cv;
}

/// Automorphism from up to five factors, alternating affine and elementary
/// pieces with elementary degree at most four.
inline BiPair random_automorphism(Gen& g) {
    BiPair F = identity_pair();
    const int n = g.integer(1, 5);
    bool affine = g.coin();
    for (int i = 0; i < n; ++i, affine = !affine) F = compose(affine ? g.affine() : g.elementary(g.integer(2, 4)), F);
    return F;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace testing_support

#endif  // CREMONA_TESTS_SUPPORT_HPP
