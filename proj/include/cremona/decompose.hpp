#ifndef CREMONA_DECOMPOSE_HPP
#define CREMONA_DECOMPOSE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "basepoints.hpp"
#include "homaloidal.hpp"
#include "polyaut.hpp"
#include "word.hpp"

namespace cremona {

struct VerifyReport {
    bool verified = false;
    int sigma_count = 0;
    int lower_bound = 0;          // floor(log2 deg f)
    bool respects_lower_bound = false;
};

inline int log2_floor(int d) { return d < 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(d))) - 1; }

inline VerifyReport verify_word(const Word& w, const RationalMap& f) {
    VerifyReport r;
    r.sigma_count = w.sigma_count();
    r.lower_bound = log2_floor(f.degree());
    r.respects_lower_bound = r.sigma_count >= r.lower_bound;
    r.verified = word_eval(w) == f;
    return r;
}

/// Word P s P^-1 for the quadratic involution whose base points are the
/// columns of P.
inline Word quadratic_word(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    const Mat3 P = Mat3::from_columns(p.coords(), q.coords(), r.coords());
    if (P.det() == 0) throw Error(ErrorCode::CollinearCenters, "centers are collinear");
    Word w;
    w.push_linear(P).push_sigma().push_linear(P.inverse());
    return w;
}

/// Quadratic map with base points exactly p, q, r, returned with its
/// inverse (the same map: it is an involution).
inline std::pair<RationalMap, RationalMap> quadratic_with_base_points(const ProjPoint& p, const ProjPoint& q,
                                                                      const ProjPoint& r) {
    const RationalMap Q = word_eval(quadratic_word(p, q, r));
    const BasePointReport rep = rational_proper_base_points(Q);
    bool ok = rep.points.size() == 3;
    for (const auto& bp : rep.points) ok = ok && bp.multiplicity == 1 && (bp.point == p || bp.point == q || bp.point == r);
    if (!ok) throw Error(ErrorCode::CollinearCenters, "quadratic map does not have the requested base points");
    return {Q, Q};
}

namespace detail {

inline ProjPoint fresh_point(std::size_t i) {
    Integer a = 1, b = 1;
    for (std::size_t k = 0; k < i; ++k) {
        a *= 2;
        b *= 3;
    }
    return ProjPoint(Rational(1), Rational(a), Rational(b));
}

inline bool same_centers(const std::array<ProjPoint, 3>& a, const std::array<ProjPoint, 3>& b) {
    return std::all_of(a.begin(), a.end(), [&b](const ProjPoint& p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

// Fresh points must avoid the base locus and the lines joining centers.
inline bool generic_for(const BasePointReport& rep, const std::vector<ProjPoint>& centers, const ProjPoint& cand) {
    for (const auto& bp : rep.points)
        if (bp.point == cand) return false;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (centers[i] == cand) return false;
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (collinear(centers[i], centers[j], cand)) return false;
        for (const auto& bp : rep.points) {
            if (bp.point == centers[i]) continue;
            if (collinear(centers[i], cand, bp.point)) return false;
        }
    }
    return true;
}

struct GreedyMove {
    std::array<ProjPoint, 3> centers;
    RationalMap after;
    BasePointReport report;
    long score = 0;
};

// Degree plus the multiplicity not yet carried by rational proper points.
inline long greedy_score(const BasePointReport& r) { return r.degree + r.deficiency_lin; }

}  // namespace detail

/// Writes f as a word by repeatedly composing with quadratic involutions.
///
/// Candidate centers at each step: the top proper base point together with
/// any two further proper base points, one proper point and a fresh point,
/// or two fresh points. Fresh points come from (1 : 2^i : 3^i) and are kept
/// only if the composition has the degree predicted by their genericity.
/// The move of least (degree + hidden multiplicity, degree) wins; undoing
/// the previous step is not allowed. Stops at degree one.
inline Word decompose_greedy(const RationalMap& f, std::uint64_t seed = 0, std::optional<int> max_steps = std::nullopt) {
    const int guard = max_steps.value_or(64 * f.degree());
    RationalMap cur = f;
    BasePointReport rep = rational_proper_base_points(cur);
    std::vector<Mat3> centers_used;
    std::optional<std::array<ProjPoint, 3>> previous;
    const std::size_t fresh_start = static_cast<std::size_t>(seed % 8);
    int steps = 0;

    while (cur.degree() > 1) {
        if (steps >= guard)
            throw Error(ErrorCode::NonterminationGuard, "no degree-one map after " + std::to_string(guard) + " steps");
        const int d = cur.degree();
        const auto& pts = rep.points;
        if (pts.empty()) throw Error(ErrorCode::IrrationalBaseLocus, "no rational proper base point");

        // Candidates are listed with their exact resulting degree, then
        // evaluated by increasing degree. The score is at least the degree,
        // so evaluation stops once the degree exceeds the best score; ties
        // keep listing order.
        struct Candidate {
            std::array<ProjPoint, 3> centers;
            int degree;
            std::size_t order;
        };
        std::vector<Candidate> candidates;
        const auto add = [&](const std::array<ProjPoint, 3>& c, int degree) {
            if (previous && detail::same_centers(c, *previous)) return;
            candidates.push_back({c, degree, candidates.size()});
        };
        const auto with_fresh = [&](std::vector<ProjPoint> centers, int degree) {
            std::size_t i = fresh_start;
            for (int attempt = 0; attempt < 64 && centers.size() < 3; ++attempt, ++i) {
                const ProjPoint cand = detail::fresh_point(i);
                if (detail::generic_for(rep, centers, cand)) centers.push_back(cand);
            }
            if (centers.size() == 3) add({centers[0], centers[1], centers[2]}, degree);
        };

        const ProjPoint& p1 = pts[0].point;
        const int m1 = pts[0].multiplicity;
        for (std::size_t i = 1; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (!collinear(p1, pts[i].point, pts[j].point))
                    add({p1, pts[i].point, pts[j].point}, 2 * d - m1 - pts[i].multiplicity - pts[j].multiplicity);
        for (std::size_t i = 1; i < pts.size(); ++i) with_fresh({p1, pts[i].point}, 2 * d - m1 - pts[i].multiplicity);
        with_fresh({p1}, 2 * d - m1);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });

        std::optional<detail::GreedyMove> best;
        std::size_t best_order = 0;
        for (const auto& cand : candidates) {
            if (best && cand.degree > best->score) break;
            const auto& c = cand.centers;
            RationalMap g = compose(cur, word_eval(quadratic_word(c[0], c[1], c[2])));
            if (g.degree() != cand.degree) continue;
            const auto key = [](long score, int degree, std::size_t order) { return std::tuple(score, degree, order); };
            if (best && key(cand.degree, cand.degree, cand.order) >= key(best->score, best->after.degree(), best_order)) continue;
            BasePointReport r = rational_proper_base_points(g);
            const long score = detail::greedy_score(r);
            if (best && key(score, g.degree(), cand.order) >= key(best->score, best->after.degree(), best_order)) continue;
            best = detail::GreedyMove{c, std::move(g), std::move(r), score};
            best_order = cand.order;
        }
        if (!best) throw Error(ErrorCode::Stuck, "no admissible quadratic transform");

        const auto& c = best->centers;
        centers_used.push_back(Mat3::from_columns(c[0].coords(), c[1].coords(), c[2].coords()));
        previous = c;
        cur = std::move(best->after);
        rep = std::move(best->report);
        ++steps;
    }

    Word w;
    w.push_linear(*linear_matrix(cur));
    for (auto it = centers_used.rbegin(); it != centers_used.rend(); ++it) w.push_linear(*it).push_sigma().push_linear(it->inverse());
    return simplify(w);
}

/// Exponent matrix [[a, b], [c, d]] of (X^a Y^b, X^c Y^d); composition is
/// the matrix product.
class MonomialMap {
   public:
    using Matrix = std::array<std::array<long, 2>, 2>;

    explicit MonomialMap(Matrix m) : m_(m) {
        const long det = m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
        if (det != 1 && det != -1) throw Error(ErrorCode::DeterminantNotUnit, "exponent matrix must have determinant +-1");
    }
    MonomialMap(long a, long b, long c, long d) : MonomialMap(Matrix{{{a, b}, {c, d}}}) {}

    const Matrix& matrix() const noexcept { return m_; }
    long det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

    friend MonomialMap operator*(const MonomialMap& f, const MonomialMap& g) {
        Matrix r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = f.m_[i][0] * g.m_[0][j] + f.m_[i][1] * g.m_[1][j];
        return MonomialMap(r);
    }
    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

   private:
    Matrix m_;
};

/// Projective form of a monomial map, with negative exponents cleared.
inline RationalMap monomial_projective(const MonomialMap& m) {
    const auto& a = m.matrix();
    std::array<std::array<long, 3>, 3> e{{{a[0][0], a[0][1], -a[0][0] - a[0][1]},
                                          {a[1][0], a[1][1], -a[1][0] - a[1][1]},
                                          {0, 0, 0}}};
    for (int v = 0; v < 3; ++v) {
        const long lo = std::min({e[0][v], e[1][v], e[2][v]});
        for (auto& row : e) row[v] -= lo;
    }
    std::array<HPoly, 3> c;
    for (int i = 0; i < 3; ++i)
        c[i] = HPoly::monomial(1, {static_cast<int>(e[i][0]), static_cast<int>(e[i][1]), static_cast<int>(e[i][2])});
    return RationalMap(c[0], c[1], c[2]);
}

/// Two-sigma word for the shear (XY, Y), i.e. the map (xy : yz : z^2).
/// Found once with decompose_greedy and frozen here and in
/// fixtures/w_shear_word.json.
inline const Word& w_shear() {
    static const Word w = [] {
        const auto m = [](std::array<std::array<int, 3>, 3> a) {
            Mat3 r;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r(i, j) = a[i][j];
            return r;
        };
        Word out;
        out.push_linear(m({{{1, 1, 0}, {1, 0, 0}, {1, 0, -1}}}))
            .push_sigma()
            .push_linear(m({{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}}))
            .push_sigma()
            .push_linear(m({{{1, 0, -1}, {0, 1, -1}, {0, 0, 1}}}));
        return out;
    }();
    return w;
}

namespace detail {

inline Word shear_power(long k) {
    if (k >= 0) return repeat(w_shear(), static_cast<int>(k));
    return repeat(inverse(w_shear()), static_cast<int>(-k));
}

inline Word swap_word() {
    Mat3 m;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(2, 2) = 1;
    return Word{}.push_linear(m);
}

inline Word negation_word() { return Word{}.push_sigma(); }

// diag(1, -1) = W S^-1 W S W S^-1
inline Word flip_word() {
    return swap_word() + shear_power(-1) + swap_word() + shear_power(1) + swap_word() + shear_power(-1);
}

}  // namespace detail

/// Word for a monomial map, by Euclidean reduction of its exponent matrix
/// with shears and the coordinate swap down to a triangular matrix.
inline Word monomial_to_word(const MonomialMap& m) {
    auto a = m.matrix();
    Word w;
    while (a[1][0] != 0) {
        // a = S^q W a'  with  a' = W S^-q a
        const long q = static_cast<long>(floor(make_rational(a[0][0], a[1][0])).get_si());
        const std::array<long, 2> r0{a[0][0] - q * a[1][0], a[0][1] - q * a[1][1]};
        a[0] = a[1];
        a[1] = r0;
        w.append(detail::shear_power(q)).append(detail::swap_word());
    }
    const long d0 = a[0][0], d1 = a[1][1], b = a[0][1];
    if (d0 == 1 && d1 == 1) {
        w.append(detail::shear_power(b));
    } else if (d0 == -1 && d1 == -1) {
        w.append(detail::negation_word()).append(detail::shear_power(-b));
    } else if (d0 == 1) {
        w.append(detail::shear_power(-b)).append(detail::flip_word());
    } else {
        w.append(detail::negation_word()).append(detail::shear_power(b)).append(detail::flip_word());
    }
    return simplify(w);
}

/// Word for an elementary automorphism (alpha X + P(Y), beta Y + gamma):
/// the affine part and the linear terms of P give one linear letter; each
/// monomial c Y^k with k >= 2 is the conjugate of (X + cY, Y) by the
/// monomial map of exponent matrix [[1, 1-k], [0, 1]].
inline Word elementary_to_word(const BiPair& e) {
    if (!detail::is_elementary(e)) throw Error(ErrorCode::InvalidArgument, "not of the form (aX + P(Y), bY + c)");
    const Rational alpha = e.p.coeff(1, 0), beta = e.q.coeff(0, 1), gamma = e.q.coeff(0, 0);
    Mat3 head;
    head(0, 0) = alpha;
    head(0, 1) = e.p.coeff(0, 1);
    head(0, 2) = e.p.coeff(0, 0);
    head(1, 1) = beta;
    head(1, 2) = gamma;
    head(2, 2) = 1;
    Word w;
    w.push_linear(head);
    for (const auto& [k, c] : e.p.terms()) {
        if (k[1] < 2) continue;
        Mat3 shear = Mat3::identity();
        shear(0, 1) = c / alpha;
        w.append(detail::shear_power(k[1] - 1)).push_linear(shear).append(detail::shear_power(1 - k[1]));
    }
    return simplify(w);
}

inline Word affine_to_word(const BiPair& a) {
    Mat3 m;
    m(0, 0) = a.p.coeff(1, 0);
    m(0, 1) = a.p.coeff(0, 1);
    m(0, 2) = a.p.coeff(0, 0);
    m(1, 0) = a.q.coeff(1, 0);
    m(1, 1) = a.q.coeff(0, 1);
    m(1, 2) = a.q.coeff(0, 0);
    m(2, 2) = 1;
    return Word{}.push_linear(m);
}

inline Word decompose_polyaut(const PolyAuto& F) {
    Word w;
    for (const auto& g : jung_factorize(F))
        w.append(g.kind == FactorKind::Affine ? affine_to_word(g.map) : elementary_to_word(g.map));
    return simplify(w);
}

struct DecompositionReport {
    Word word;
    int sigma_count = 0;
    int lower_bound = 0;
    int upper_bound_polyaut = 0;  // 2(2d - 1)
    bool verified = false;
};

inline DecompositionReport report_for(Word w, const RationalMap& f) {
    const VerifyReport v = verify_word(w, f);
    return {std::move(w), v.sigma_count, v.lower_bound, 2 * (2 * f.degree() - 1), v.verified};
}

}  // namespace cremona

#endif  // CREMONA_DECOMPOSE_HPP
