#ifndef CREMONA_HOMALOIDAL_HPP
#define CREMONA_HOMALOIDAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace cremona {

/// A base point: its multiplicity and, for an infinitely near point, the
/// index of the point it lies over.
struct BasePointNode {
    int multiplicity = 0;
    std::optional<std::size_t> parent;

    friend bool operator==(const BasePointNode&, const BasePointNode&) = default;
};

/// Homaloidal type (d; m1, ..., mn) with a proximity forest.
///
/// Construction checks that the parent relation is a forest and that every
/// multiplicity is positive. Monotonicity along the forest and d >= m + 1 are
/// reported by check_bounds rather than rejected, so malformed data can be
/// inspected.
class CharVector {
   public:
    CharVector(int degree, std::vector<BasePointNode> points, bool complete = true)
        : degree_(degree), points_(std::move(points)), complete_(complete) {
        if (degree_ < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
        const std::size_t n = points_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = points_[i];
            if (p.multiplicity < 1) throw Error(ErrorCode::InvalidForest, "multiplicities must be positive");
            if (p.parent && *p.parent >= n) throw Error(ErrorCode::InvalidForest, "parent index out of range");
        }
        // Walking up from any node must reach a root in fewer than n steps.
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t cur = i;
            std::size_t steps = 0;
            while (points_[cur].parent) {
                cur = *points_[cur].parent;
                if (++steps > n) throw Error(ErrorCode::InvalidForest, "proximity relation has a cycle");
            }
        }
    }

    /// All points proper.
    static CharVector proper(int degree, const std::vector<int>& multiplicities, bool complete = true) {
        std::vector<BasePointNode> pts;
        pts.reserve(multiplicities.size());
        for (int m : multiplicities) pts.push_back({m, std::nullopt});
        return CharVector(degree, std::move(pts), complete);
    }

    int degree() const noexcept { return degree_; }
    const std::vector<BasePointNode>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool complete() const noexcept { return complete_; }
    bool is_proper(std::size_t i) const { return !points_.at(i).parent.has_value(); }

    bool has_children(std::size_t i) const {
        return std::any_of(points_.begin(), points_.end(), [i](const auto& p) { return p.parent == i; });
    }

    std::size_t root_of(std::size_t i) const {
        while (points_[i].parent) i = *points_[i].parent;
        return i;
    }

    /// Multiplicities in non-increasing order.
    std::vector<int> sorted_multiplicities() const {
        std::vector<int> m;
        m.reserve(points_.size());
        for (const auto& p : points_) m.push_back(p.multiplicity);
        std::sort(m.begin(), m.end(), std::greater<>());
        return m;
    }

    friend bool operator==(const CharVector&, const CharVector&) = default;

   private:
    int degree_;
    std::vector<BasePointNode> points_;
    bool complete_;
};

namespace detail {
inline void require_complete(const CharVector& cv) {
    if (!cv.complete()) throw Error(ErrorCode::IncompleteVector, "characteristic vector is incomplete");
}
}  // namespace detail

/// Both Noether equations: sum m^2 = d^2 - 1 and sum m = 3(d - 1).
inline bool noether_check(const CharVector& cv) {
    detail::require_complete(cv);
    long s1 = 0, s2 = 0;
    for (const auto& p : cv.points()) {
        s1 += p.multiplicity;
        s2 += static_cast<long>(p.multiplicity) * p.multiplicity;
    }
    const long d = cv.degree();
    return s2 == d * d - 1 && s1 == 3 * (d - 1);
}

/// Every non-increasing multiset of positive integers <= d - 1 that solves
/// the Noether equations, in lexicographically decreasing order.
inline std::vector<std::vector<int>> enumerate_homaloidal(int d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "enumeration needs d >= 2");
    if (d > 12) throw Error(ErrorCode::DegreeTooLarge, "enumeration is limited to d <= 12");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // rem_sum / rem_sq: what the remaining entries (each <= cap) must add up to.
    auto rec = [&](auto&& self, int cap, long rem_sum, long rem_sq) -> void {
        if (rem_sum == 0 && rem_sq == 0) {
            out.push_back(cur);
            return;
        }
        // Entries are >= 1, so m^2 >= m; and entries <= cap give m^2 <= cap * m.
        if (rem_sum <= 0 || rem_sq < rem_sum || rem_sq > cap * rem_sum) return;
        for (int m = std::min<long>(cap, rem_sum); m >= 1; --m) {
            if (static_cast<long>(m) * m > rem_sq) continue;
            cur.push_back(m);
            self(self, m, rem_sum - m, rem_sq - static_cast<long>(m) * m);
            cur.pop_back();
        }
    };
    rec(rec, d - 1, 3L * (d - 1), static_cast<long>(d) * d - 1);
    return out;
}

struct BoundsReport {
    int point_count = 0;
    int max_points = 0;  // 2d - 1
    int triple_sum = 0;  // m1 + m2 + m3
    bool count_ok = false;
    bool weak_triple_ok = false;    // m1 + m2 + m3 >= d
    bool strong_triple_ok = false;  // m1 + m2 + m3 >= d + 1
    bool per_point_ok = false;      // d >= m_i + 1
    bool proximity_ok = false;      // m_child <= m_parent

    bool all_ok() const noexcept {
        return count_ok && weak_triple_ok && strong_triple_ok && per_point_ok && proximity_ok;
    }
};

inline BoundsReport check_bounds(const CharVector& cv) {
    detail::require_complete(cv);
    if (cv.degree() < 2) throw Error(ErrorCode::InvalidArgument, "bounds are stated for d >= 2");
    const int d = cv.degree();
    const auto m = cv.sorted_multiplicities();
    BoundsReport r;
    r.point_count = static_cast<int>(m.size());
    r.max_points = 2 * d - 1;
    r.count_ok = r.point_count <= r.max_points;
    for (std::size_t i = 0; i < 3 && i < m.size(); ++i) r.triple_sum += m[i];
    r.weak_triple_ok = r.triple_sum >= d;
    r.strong_triple_ok = r.triple_sum >= d + 1;
    r.per_point_ok = m.empty() || d >= m.front() + 1;
    r.proximity_ok = true;
    for (const auto& p : cv.points())
        if (p.parent && p.multiplicity > cv.points()[*p.parent].multiplicity) r.proximity_ok = false;
    return r;
}

/// (2j, h) with 2j = d - m1 and h the number of other points with m > j.
/// Ordered lexicographically.
struct JHPair {
    int two_j = 0;
    int h = 0;

    friend auto operator<=>(const JHPair&, const JHPair&) = default;
};

namespace detail {
inline JHPair jh_unchecked(const CharVector& cv) {
    const auto m = cv.sorted_multiplicities();
    JHPair r;
    r.two_j = cv.degree() - (m.empty() ? 0 : m.front());
    for (std::size_t i = 1; i < m.size(); ++i)
        if (2 * m[i] > r.two_j) ++r.h;
    return r;
}
}  // namespace detail

inline JHPair jh(const CharVector& cv) {
    detail::require_complete(cv);
    if (cv.degree() < 2) throw Error(ErrorCode::InvalidArgument, "(j, h) is defined for d >= 2");
    return detail::jh_unchecked(cv);
}

/// Type (d; d-1, 1^(2d-2)), or degree one.
inline bool is_jonquieres(const CharVector& cv) {
    detail::require_complete(cv);
    const int d = cv.degree();
    if (d == 1) return true;
    const auto m = cv.sorted_multiplicities();
    if (m.empty() || m.front() != d - 1 || static_cast<int>(m.size()) != 2 * d - 1) return false;
    return std::all_of(m.begin() + 1, m.end(), [](int k) { return k == 1; });
}

/// Center of a quadratic transform: an existing proper point, or a fresh
/// generic point (multiplicity 0) when empty.
using Center = std::optional<std::size_t>;
inline constexpr Center kFresh = std::nullopt;

struct QuadTransformResult {
    CharVector result;
    /// Index in `result` of the point exchanged with each center, or empty
    /// when its new multiplicity is zero.
    std::array<std::optional<std::size_t>, 3> exchanged;
};

/// Effect on the type of composing with a quadratic map centered at three
/// points: d' = 2d - ma - mb - mc and ma' = d - mb - mc (and cyclically).
/// Points infinitely near a center to first order become proper.
inline QuadTransformResult quad_transform(const CharVector& cv, const std::array<Center, 3>& centers) {
    detail::require_complete(cv);
    for (int k = 0; k < 3; ++k) {
        if (!centers[k]) continue;
        if (*centers[k] >= cv.size()) throw Error(ErrorCode::InvalidArgument, "center index out of range");
        if (!cv.is_proper(*centers[k])) throw Error(ErrorCode::NonProperCenter, "centers must be proper points");
        for (int l = 0; l < k; ++l)
            if (centers[l] == centers[k]) throw Error(ErrorCode::InvalidArgument, "centers must be distinct");
    }
    const int d = cv.degree();
    std::array<int, 3> m{};
    for (int k = 0; k < 3; ++k) m[k] = centers[k] ? cv.points()[*centers[k]].multiplicity : 0;
    const int s = m[0] + m[1] + m[2];
    const int d_new = 2 * d - s;
    std::array<int, 3> m_new{};
    for (int k = 0; k < 3; ++k) m_new[k] = d - s + m[k];
    if (d_new < 1 || *std::min_element(m_new.begin(), m_new.end()) < 0)
        throw Error(ErrorCode::NoetherViolation, "quadratic transform produces a negative multiplicity");

    auto center_slot = [&](std::size_t i) -> int {
        for (int k = 0; k < 3; ++k)
            if (centers[k] == i) return k;
        return -1;
    };
    std::vector<std::optional<std::size_t>> index_map(cv.size());
    std::vector<BasePointNode> out;
    QuadTransformResult r{CharVector(1, {}), {}};
    for (std::size_t i = 0; i < cv.size(); ++i) {
        const int k = center_slot(i);
        if (k >= 0) {
            if (m_new[k] == 0) continue;
            index_map[i] = out.size();
            r.exchanged[k] = out.size();
            out.push_back({m_new[k], std::nullopt});
        } else {
            index_map[i] = out.size();
            out.push_back(cv.points()[i]);
        }
    }
    for (std::size_t i = 0; i < cv.size(); ++i) {
        if (!index_map[i] || center_slot(i) >= 0) continue;
        auto& node = out[*index_map[i]];
        if (!node.parent) continue;
        node.parent = center_slot(*node.parent) >= 0 ? std::nullopt : index_map[*node.parent];
    }
    for (int k = 0; k < 3; ++k) {
        if (centers[k] || m_new[k] == 0) continue;
        r.exchanged[k] = out.size();
        out.push_back({m_new[k], std::nullopt});
    }
    r.result = CharVector(d_new, std::move(out), true);
    if (!noether_check(r.result))
        throw Error(ErrorCode::NoetherViolation, "quadratic transform output fails the Noether equations");
    return r;
}

struct DescentStep {
    char case_tag = 'a';  // 'a', 'b' or 'c'
    std::array<Center, 3> centers;  // indices into the vector before the step
    CharVector after{1, {}};
    JHPair jh_after;
    /// Case b only: the exchange value given to the maximal point (d - m_q)
    /// next to the value 2j, which the two routes disagree on when m_q < m1.
    std::optional<std::array<int, 2>> case_b_exchange;
};

struct DescentTrace {
    std::vector<DescentStep> steps;
    /// (2j, h) at the start and at the end of every macro-step; strictly
    /// decreasing.
    std::vector<JHPair> macro;
    int sigma_count = 0;
    bool terminated = false;
};

namespace detail {

inline bool by_weight(const CharVector& cv, std::size_t a, std::size_t b) {
    const int ma = cv.points()[a].multiplicity, mb = cv.points()[b].multiplicity;
    return ma != mb ? ma > mb : a < b;
}

}  // namespace detail

/// Combinatorial Noether descent: quadratic transforms chosen by the case
/// analysis a / b / c until the degree is one. Every transform counts one
/// sigma.
inline DescentTrace descent(const CharVector& start) {
    detail::require_complete(start);
    if (!noether_check(start)) throw Error(ErrorCode::NoetherViolation, "input fails the Noether equations");
    if (start.degree() >= 2 && !check_bounds(start).all_ok())
        throw Error(ErrorCode::BoundsViolation, "input fails the degree and proximity bounds");

    DescentTrace trace;
    CharVector cv = start;
    trace.macro.push_back(detail::jh_unchecked(cv));
    const int guard = 64 * start.degree();
    while (cv.degree() > 1) {
        if (static_cast<int>(trace.steps.size()) >= guard)
            throw Error(ErrorCode::NonterminationGuard, "descent exceeded " + std::to_string(guard) + " steps");

        // p1: proper point of largest multiplicity, first in listed order.
        std::optional<std::size_t> p1;
        for (std::size_t i = 0; i < cv.size(); ++i)
            if (cv.is_proper(i) && (!p1 || detail::by_weight(cv, i, *p1))) p1 = i;
        if (!p1) throw Error(ErrorCode::Stuck, "no proper base point");
        const int two_j = cv.degree() - cv.points()[*p1].multiplicity;

        std::vector<std::size_t> large_proper, large_near;
        for (std::size_t i = 0; i < cv.size(); ++i) {
            if (i == *p1 || 2 * cv.points()[i].multiplicity <= two_j) continue;
            (cv.is_proper(i) ? large_proper : large_near).push_back(i);
        }
        auto order = [&](std::size_t a, std::size_t b) { return detail::by_weight(cv, a, b); };
        std::sort(large_proper.begin(), large_proper.end(), order);
        std::sort(large_near.begin(), large_near.end(), order);

        DescentStep step;
        if (large_proper.size() >= 2) {
            step.case_tag = 'a';
            step.centers = {*p1, large_proper[0], large_proper[1]};
        } else if (cv.has_children(*p1)) {
            step.case_tag = 'c';
            step.centers = {*p1, kFresh, kFresh};
        } else {
            std::optional<std::size_t> anchor;
            for (std::size_t i : large_near) {
                const std::size_t r = cv.root_of(i);
                if (r != *p1) {
                    anchor = r;
                    break;
                }
            }
            if (!anchor) throw Error(ErrorCode::Stuck, "no case of the descent applies");
            step.case_tag = 'b';
            step.centers = {*p1, *anchor, kFresh};
            step.case_b_exchange =
                std::array<int, 2>{cv.degree() - cv.points()[*anchor].multiplicity, two_j};
        }
        auto q = quad_transform(cv, step.centers);
        cv = std::move(q.result);
        step.after = cv;
        step.jh_after = detail::jh_unchecked(cv);
        ++trace.sigma_count;
        if (step.jh_after < trace.macro.back()) trace.macro.push_back(step.jh_after);
        trace.steps.push_back(std::move(step));
    }
    trace.terminated = true;
    return trace;
}

struct DegreeBounds {
    int lower = 0;            // floor(log2 d)
    int upper_general = 0;    // 4(2d - 1)
    int upper_polyaut = 0;    // 2(2d - 1)
};

inline DegreeBounds bounds(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    const auto ud = static_cast<unsigned>(d);
    return {static_cast<int>(std::bit_width(ud)) - 1, 4 * (2 * d - 1), 2 * (2 * d - 1)};
}

struct LamyStage {
    std::string label;
    int removed = 0;
    int count_after = 0;
};

struct LamyTrace {
    int aut_degree = 0;
    int initial = 0;
    std::vector<LamyStage> stages;
    int final_count = 0;
};

/// Base-point bookkeeping for a map coming from a polynomial automorphism of
/// degree n: one point for the first blow-up, n - 1 on the way up the
/// Hirzebruch tower, n - 1 on the way down, none for the final contraction.
inline LamyTrace lamy_trace(int aut_degree, int base_count) {
    if (aut_degree < 2) throw Error(ErrorCode::InvalidArgument, "automorphism degree must be >= 2");
    const int n = aut_degree;
    if (base_count < 2 * n - 1)
        throw Error(ErrorCode::InsufficientBaseCount,
                    "need at least 2n - 1 = " + std::to_string(2 * n - 1) + " base points");
    LamyTrace t{n, base_count, {}, base_count};
    auto stage = [&](std::string label, int removed) {
        t.final_count -= removed;
        t.stages.push_back({std::move(label), removed, t.final_count});
    };
    stage("blow up the proper indeterminacy point (P2 -> F1)", 1);
    stage("ascending elementary links F1 -> Fn", n - 1);
    stage("descending elementary links Fn -> F1", n - 1);
    stage("contract the section of F1 (F1 -> P2)", 0);
    return t;
}

}  // namespace cremona

#endif  // CREMONA_HOMALOIDAL_HPP
