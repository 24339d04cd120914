#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "selnet/combinatorics.hpp"
#include "selnet/error.hpp"
#include "selnet/linear_program.hpp"

namespace selnet {

using Point = std::vector<Rational>;

struct PointSet {
    int dimension = 0;
    std::vector<long> ids;
    std::vector<Point> points;

    static PointSet of(int dimension, std::vector<Point> pts) {
        PointSet s;
        s.dimension = dimension;
        s.points = std::move(pts);
        s.ids.resize(s.points.size());
        for (std::size_t i = 0; i < s.ids.size(); ++i) s.ids[i] = static_cast<long>(i);
        return s;
    }

    std::size_t size() const { return points.size(); }
};

enum class HullMembership { Outside, RelativeBoundary, RelativeInterior };

inline bool lex_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline void check_dimension(const Point& p, std::size_t d, const char* where) {
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, where);
}

// Sign of the determinant of the affine frame (p1-p0, ..., pd-p0): +1 for a
// positively oriented simplex, 0 iff the points are affinely dependent.
inline int orientation(const std::vector<Point>& simplex_points) {
    if (simplex_points.empty()) throw Error(ErrorCode::DimensionMismatch, "orientation: empty");
    std::size_t d = simplex_points[0].size();
    if (simplex_points.size() != d + 1)
        throw Error(ErrorCode::DimensionMismatch, "orientation: needs d+1 points in R^d");
    for (const auto& p : simplex_points) check_dimension(p, d, "orientation");
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = simplex_points[i + 1][j] - simplex_points[0][j];
    // Exact Gaussian elimination, tracking the sign of the determinant.
    int sign_flips = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && sgn(m[piv][col]) == 0) ++piv;
        if (piv == d) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign_flips = -sign_flips;
        }
        for (std::size_t r = col + 1; r < d; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < d; ++j) m[r][j] -= f * m[col][j];
        }
    }
    int s = sign_flips;
    for (std::size_t i = 0; i < d; ++i) s *= sgn(m[i][i]);
    return s;
}

inline int orient2d(const Point& a, const Point& b, const Point& c) {
    Rational v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return sgn(v);
}

// Exact classification of x against conv(S); boundary and interior are
// relative to aff(S). Uses the LP characterization: x lies in the relative
// interior iff it admits a full-support convex combination of S.
inline HullMembership hull_membership(const Point& x, const std::vector<Point>& hull_points) {
    if (hull_points.empty()) throw Error(ErrorCode::Precondition, "hull_membership: empty hull");
    std::size_t d = x.size();
    for (const auto& p : hull_points) check_dimension(p, d, "hull_membership");
    std::size_t k = hull_points.size();
    // Variables: lambda_1..k, tau, slack_1..k. Rows: d coordinate matches,
    // one normalization, k rows lambda_i - tau - slack_i = 0.
    std::size_t cols = 2 * k + 1;
    std::vector<std::vector<Rational>> A(d + 1 + k, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(d + 1 + k, Rational(0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) A[r][j] = hull_points[j][r];
        b[r] = x[r];
    }
    for (std::size_t j = 0; j < k; ++j) A[d][j] = 1;
    b[d] = 1;
    for (std::size_t j = 0; j < k; ++j) {
        A[d + 1 + j][j] = 1;
        A[d + 1 + j][k] = -1;
        A[d + 1 + j][k + 1 + j] = -1;
    }
    std::vector<Rational> c(cols, Rational(0));
    c[k] = -1; // maximize tau
    auto res = SimplexSolver::minimize(A, b, c);
    if (res.status == SimplexSolver::Status::Infeasible) return HullMembership::Outside;
    if (res.status != SimplexSolver::Status::Optimal)
        throw Error(ErrorCode::InternalFailure, "hull_membership: unbounded");
    return sgn(res.objective) < 0 ? HullMembership::RelativeInterior : HullMembership::RelativeBoundary;
}

// Barycentric coordinates of target in the affinely independent frame.
inline std::vector<Rational> affine_solve(const std::vector<Point>& frame, const Point& target) {
    std::size_t d = target.size();
    if (frame.size() != d + 1) throw Error(ErrorCode::DimensionMismatch, "affine_solve: frame size");
    for (const auto& p : frame) check_dimension(p, d, "affine_solve");
    std::size_t n = d + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < n; ++j) m[r][j] = frame[j][r];
        m[r][n] = target[r];
    }
    for (std::size_t j = 0; j < n; ++j) m[d][j] = 1;
    m[d][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::DegenerateFrame, "affine_solve: singular frame");
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Rational> alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = m[i][n];
    return alpha;
}

// True iff every (d+1)-subset spans a full-dimensional simplex.
inline bool static_general_position(const PointSet& ps) {
    std::size_t d = static_cast<std::size_t>(ps.dimension);
    if (ps.size() < d + 1) return true;
    bool ok = true;
    for_each_combination(ps.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
        if (!ok) return;
        std::vector<Point> simplex;
        simplex.reserve(d + 1);
        for (auto i : idx) simplex.push_back(ps.points[i]);
        if (orientation(simplex) == 0) ok = false;
    });
    return ok;
}

// Lexicographic minimum of the intersection of convex hulls, by d staged
// exact programs: minimize x_1, pin it, minimize x_2, and so on.
inline std::optional<Point> lex_min_intersection(const std::vector<std::vector<Point>>& hulls) {
    if (hulls.empty()) throw Error(ErrorCode::Precondition, "lex_min_intersection: no hulls");
    std::size_t d = hulls[0].empty() ? 0 : hulls[0][0].size();
    std::size_t weight_count = 0;
    for (const auto& h : hulls) {
        if (h.empty()) throw Error(ErrorCode::Precondition, "lex_min_intersection: empty hull");
        for (const auto& p : h) check_dimension(p, d, "lex_min_intersection");
        weight_count += h.size();
    }
    // Variables: hull weights, then u_1..d, v_1..d with x = u - v.
    std::size_t cols = weight_count + 2 * d;
    std::size_t base_rows = hulls.size() * (d + 1);
    std::vector<std::vector<Rational>> A(base_rows, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(base_rows, Rational(0));
    std::size_t offset = 0, row = 0;
    for (const auto& h : hulls) {
        for (std::size_t r = 0; r < d; ++r, ++row) {
            for (std::size_t j = 0; j < h.size(); ++j) A[row][offset + j] = h[j][r];
            A[row][weight_count + r] = -1;
            A[row][weight_count + d + r] = 1;
        }
        for (std::size_t j = 0; j < h.size(); ++j) A[row][offset + j] = 1;
        b[row] = 1;
        ++row;
        offset += h.size();
    }
    Point result(d);
    for (std::size_t stage = 0; stage < d; ++stage) {
        std::vector<Rational> c(cols, Rational(0));
        c[weight_count + stage] = 1;
        c[weight_count + d + stage] = -1;
        auto res = SimplexSolver::minimize(A, b, c);
        if (res.status == SimplexSolver::Status::Infeasible) {
            if (stage != 0)
                throw Error(ErrorCode::InternalFailure, "lex_min_intersection: stage infeasible");
            return std::nullopt;
        }
        if (res.status != SimplexSolver::Status::Optimal)
            throw Error(ErrorCode::InternalFailure, "lex_min_intersection: unbounded stage");
        result[stage] = res.objective;
        std::vector<Rational> fix(cols, Rational(0));
        fix[weight_count + stage] = 1;
        fix[weight_count + d + stage] = -1;
        A.push_back(std::move(fix));
        b.push_back(res.objective);
    }
    return result;
}

// --- 2D fast paths (exact, used by enumeration-heavy callers) ---

inline HullMembership point_in_triangle(const Point& x, const Point& a, const Point& b,
                                        const Point& c) {
    int o = orient2d(a, b, c);
    if (o == 0) {
        // Degenerate triangle: fall back to the general LP classification.
        return hull_membership(x, {a, b, c});
    }
    int s1 = orient2d(a, b, x) * o;
    int s2 = orient2d(b, c, x) * o;
    int s3 = orient2d(c, a, x) * o;
    if (s1 < 0 || s2 < 0 || s3 < 0) return HullMembership::Outside;
    if (s1 == 0 || s2 == 0 || s3 == 0) return HullMembership::RelativeBoundary;
    return HullMembership::RelativeInterior;
}

// Indices of the convex hull in counterclockwise order (monotone chain).
// Collinear input degenerates to the two extreme points.
inline std::vector<std::size_t> convex_hull_2d(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (pts[i][0] != pts[j][0]) return pts[i][0] < pts[j][0];
        return pts[i][1] < pts[j][1];
    });
    if (n <= 2) return order;
    std::vector<std::size_t> hull;
    auto build = [&](auto begin, auto end) {
        std::size_t start = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= start + 2 &&
                   orient2d(pts[hull[hull.size() - 2]], pts[hull.back()], pts[*it]) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
    };
    build(order.begin(), order.end());
    hull.pop_back();
    std::size_t lower = hull.size();
    build(order.rbegin(), order.rend());
    hull.pop_back();
    if (hull.size() == lower) {
        // All points collinear; keep the two extremes.
        return {order.front(), order.back()};
    }
    return hull;
}

// Membership in a convex polygon given by its CCW hull vertices (or a
// segment / single point when degenerate).
inline HullMembership point_in_convex_polygon(const Point& x, const std::vector<Point>& hull) {
    if (hull.empty()) throw Error(ErrorCode::Precondition, "empty polygon");
    if (hull.size() == 1)
        return x == hull[0] ? HullMembership::RelativeInterior : HullMembership::Outside;
    if (hull.size() == 2) {
        if (orient2d(hull[0], hull[1], x) != 0) return HullMembership::Outside;
        const Point& a = hull[0];
        const Point& b = hull[1];
        int i = a[0] != b[0] ? 0 : 1;
        Rational lo = std::min(a[i], b[i]), hi = std::max(a[i], b[i]);
        if (x[i] < lo || x[i] > hi) return HullMembership::Outside;
        if (x[i] == lo || x[i] == hi) return HullMembership::RelativeBoundary;
        return HullMembership::RelativeInterior;
    }
    bool boundary = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        int s = orient2d(hull[i], hull[(i + 1) % hull.size()], x);
        if (s < 0) return HullMembership::Outside;
        if (s == 0) boundary = true;
    }
    return boundary ? HullMembership::RelativeBoundary : HullMembership::RelativeInterior;
}

} // namespace selnet
