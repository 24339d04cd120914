#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "selnet/geometry.hpp"
#include "selnet/parallel.hpp"

namespace selnet {

struct TverbergPartition {
    std::vector<std::vector<long>> parts; // disjoint id blocks covering the tuple
    Point witness;                        // lexicographic minimum of the hull intersection
};

struct SelectionCertificate {
    std::vector<long> tuple;              // the d^2+d+1 ids
    std::vector<long> simplex;            // S: d+1 ids, x in conv(S)
    std::vector<std::vector<long>> parts; // D_1..D_d partitioning tuple minus S
    Point x;
};

struct DepthReport {
    Point point;
    long long depth = 0;          // spanned d-simplices with point not outside
    long long boundary_count = 0; // of which: point on the relative boundary
};

struct RichSimplexReport {
    std::vector<long> simplex;
    std::vector<std::vector<long>> tuples; // distinct qualifying d^2-tuples
};

namespace detail {

inline std::vector<Point> points_for(const PointSet& ps, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(ps.points[i]);
    return out;
}

inline std::vector<long> ids_for(const PointSet& ps, const std::vector<std::size_t>& idx) {
    std::vector<long> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(ps.ids[i]);
    return out;
}

inline void require_general_position(const PointSet& ps, const char* where) {
    if (!static_general_position(ps))
        throw Error(ErrorCode::DegenerateInput, std::string(where) + ": points not in general position");
}

inline PointSet subset(const PointSet& ps, const std::vector<std::size_t>& idx) {
    PointSet out;
    out.dimension = ps.dimension;
    for (auto i : idx) {
        out.ids.push_back(ps.ids[i]);
        out.points.push_back(ps.points[i]);
    }
    return out;
}

} // namespace detail

// Fast exact membership for the simplex sizes the depth counters loop over.
inline HullMembership membership_fast(const Point& x, const std::vector<Point>& hull) {
    if (x.size() == 2 && hull.size() == 3)
        return point_in_triangle(x, hull[0], hull[1], hull[2]);
    if (x.size() == 1 && hull.size() == 2) {
        const Rational& a = std::min(hull[0][0], hull[1][0]);
        const Rational& b = std::max(hull[0][0], hull[1][0]);
        if (x[0] < a || x[0] > b) return HullMembership::Outside;
        if (x[0] == a || x[0] == b) return HullMembership::RelativeBoundary;
        return HullMembership::RelativeInterior;
    }
    return hull_membership(x, hull);
}

// The unique two-block split of d+2 general-position points whose hulls
// intersect, from the sign pattern of the affine dependency.
inline TverbergPartition radon_partition(const PointSet& D) {
    std::size_t d = static_cast<std::size_t>(D.dimension);
    if (D.size() != d + 2)
        throw Error(ErrorCode::SizeMismatch, "radon_partition: needs d+2 points");
    detail::require_general_position(D, "radon_partition");
    // Nontrivial lambda with sum lambda_i p_i = 0 and sum lambda_i = 0:
    // kernel of the (d+1) x (d+2) matrix of homogeneous coordinates.
    std::size_t rows = d + 1, cols = d + 2;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = D.points[j][r];
    for (std::size_t j = 0; j < cols; ++j) m[d][j] = 1;
    std::vector<int> pivot_col(rows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Rational inv = 1 / m[rank][col];
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    if (rank != rows) throw Error(ErrorCode::DegenerateInput, "radon_partition: rank deficient");
    int free_col = -1;
    for (std::size_t col = 0; col < cols; ++col) {
        bool is_pivot = false;
        for (auto pc : pivot_col) is_pivot |= pc == static_cast<int>(col);
        if (!is_pivot) free_col = static_cast<int>(col);
    }
    std::vector<Rational> lambda(cols, Rational(0));
    lambda[free_col] = 1;
    for (std::size_t r = 0; r < rows; ++r) lambda[pivot_col[r]] = -m[r][free_col];
    std::vector<std::vector<long>> parts(2);
    std::vector<std::vector<Point>> hulls(2);
    for (std::size_t j = 0; j < cols; ++j) {
        int s = sgn(lambda[j]);
        if (s == 0)
            throw Error(ErrorCode::DegenerateInput, "radon_partition: zero dependency entry");
        std::size_t side = s > 0 ? 0 : 1;
        parts[side].push_back(D.ids[j]);
        hulls[side].push_back(D.points[j]);
    }
    if (parts[0].empty() || parts[1].empty())
        throw Error(ErrorCode::InternalFailure, "radon_partition: one-sided dependency");
    if (parts[1][0] < parts[0][0]) {
        std::swap(parts[0], parts[1]);
        std::swap(hulls[0], hulls[1]);
    }
    auto witness = lex_min_intersection({hulls[0], hulls[1]});
    if (!witness)
        throw Error(ErrorCode::InternalFailure, "radon_partition: hulls do not intersect");
    return {std::move(parts), std::move(*witness)};
}

// All partitions of (r-1)(d+1)+1 points into r blocks of size at most d+1
// whose hulls share a point; each comes with its determined witness.
// enforce_general_position can be dropped for hand-built degenerate inputs;
// the enumeration itself only needs hull feasibility.
inline std::vector<TverbergPartition> tverberg_partitions(const PointSet& D, std::size_t r,
                                                          bool enforce_general_position = true,
                                                          int max_dimension = 3) {
    std::size_t d = static_cast<std::size_t>(D.dimension);
    if (D.dimension > max_dimension)
        throw Error(ErrorCode::Precondition, "tverberg_partitions: dimension above enumeration cap");
    if (D.size() != (r - 1) * (d + 1) + 1)
        throw Error(ErrorCode::SizeMismatch, "tverberg_partitions: needs (r-1)(d+1)+1 points");
    if (enforce_general_position) detail::require_general_position(D, "tverberg_partitions");
    std::vector<TverbergPartition> out;
    for_each_bounded_partition(D.size(), r, d + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
        std::vector<std::vector<Point>> hulls;
        hulls.reserve(blocks.size());
        for (const auto& blk : blocks) {
            std::vector<Point> h;
            h.reserve(blk.size());
            for (auto i : blk) h.push_back(D.points[i]);
            hulls.push_back(std::move(h));
        }
        auto witness = lex_min_intersection(hulls);
        if (!witness) return;
        TverbergPartition tp;
        for (const auto& blk : blocks) {
            std::vector<long> ids;
            ids.reserve(blk.size());
            for (auto i : blk) ids.push_back(D.ids[i]);
            tp.parts.push_back(std::move(ids));
        }
        tp.witness = std::move(*witness);
        out.push_back(std::move(tp));
    });
    return out;
}

// Witness procedure for one (d^2+d+1)-tuple: a (d+1)-set S and a partition of
// the rest into d blocks whose intersection's lex minimum lands in conv(S).
inline SelectionCertificate selection_pair(const PointSet& D) {
    std::size_t d = static_cast<std::size_t>(D.dimension);
    if (D.size() != d * d + d + 1)
        throw Error(ErrorCode::SizeMismatch, "selection_pair: needs d^2+d+1 points");
    detail::require_general_position(D, "selection_pair");

    auto points_of_ids = [&](const std::vector<long>& ids) {
        std::vector<Point> out;
        out.reserve(ids.size());
        for (long id : ids) {
            for (std::size_t i = 0; i < D.size(); ++i)
                if (D.ids[i] == id) out.push_back(D.points[i]);
        }
        return out;
    };

    // Step 1: first Tverberg partition into d+1 blocks of size <= d+1.
    std::vector<std::vector<long>> blocks;
    Point x;
    bool found = false;
    for_each_bounded_partition(D.size(), d + 1, d + 1, [&](const std::vector<std::vector<std::size_t>>& bl) {
        if (found) return;
        std::vector<std::vector<Point>> hulls;
        for (const auto& b : bl) {
            std::vector<Point> h;
            for (auto i : b) h.push_back(D.points[i]);
            hulls.push_back(std::move(h));
        }
        auto witness = lex_min_intersection(hulls);
        if (!witness) return;
        found = true;
        x = std::move(*witness);
        for (const auto& b : bl) {
            std::vector<long> ids;
            for (auto i : b) ids.push_back(D.ids[i]);
            blocks.push_back(std::move(ids));
        }
    });
    if (!found)
        throw Error(ErrorCode::InternalFailure, "selection_pair: no Tverberg partition found");

    // Step 2: reorder so x is already the lex minimum of the first d hulls.
    bool reordered = false;
    for_each_combination(d + 1, d, [&](const std::vector<std::size_t>& pick) {
        if (reordered) return;
        std::vector<std::vector<Point>> hulls;
        for (auto i : pick) hulls.push_back(points_of_ids(blocks[i]));
        auto sub = lex_min_intersection(hulls);
        if (!sub || *sub != x) return;
        reordered = true;
        std::vector<std::vector<long>> next;
        std::vector<bool> used(d + 1, false);
        for (auto i : pick) {
            next.push_back(blocks[i]);
            used[i] = true;
        }
        for (std::size_t i = 0; i <= d; ++i)
            if (!used[i]) next.push_back(blocks[i]);
        blocks = std::move(next);
    });
    if (!reordered)
        throw Error(ErrorCode::InternalFailure, "selection_pair: no d-subfamily matches the witness");

    std::vector<long> tuple = D.ids;
    std::sort(tuple.begin(), tuple.end());

    auto finish = [&](std::vector<long> simplex, std::vector<std::vector<long>> parts) {
        std::sort(simplex.begin(), simplex.end());
        if (simplex.size() != d + 1)
            throw Error(ErrorCode::InternalFailure, "selection_pair: bad simplex size");
        std::vector<std::vector<Point>> hulls;
        for (const auto& p : parts) hulls.push_back(points_of_ids(p));
        auto check = lex_min_intersection(hulls);
        if (!check || *check != x)
            throw Error(ErrorCode::InternalFailure, "selection_pair: witness drifted");
        if (hull_membership(x, points_of_ids(simplex)) == HullMembership::Outside)
            throw Error(ErrorCode::InternalFailure, "selection_pair: witness outside simplex");
        return SelectionCertificate{std::move(tuple), std::move(simplex), std::move(parts), x};
    };

    // Step 3: x interior to a full block among the first d lets that block be S.
    for (std::size_t j = 0; j < d; ++j) {
        if (blocks[j].size() != d + 1) continue;
        if (hull_membership(x, points_of_ids(blocks[j])) == HullMembership::RelativeInterior) {
            std::vector<std::vector<long>> parts;
            for (std::size_t i = 0; i <= d; ++i)
                if (i != j) parts.push_back(blocks[i]);
            return finish(blocks[j], std::move(parts));
        }
    }

    // Step 4: x sits on the boundary of every full block among the first d;
    // shed one removable point at a time until exactly d^2 points remain.
    std::vector<std::vector<long>> working(blocks.begin(), blocks.begin() + d);
    std::vector<long> eliminated;
    auto total = [&] {
        std::size_t s = 0;
        for (const auto& w : working) s += w.size();
        return s;
    };
    while (total() > d * d) {
        bool removed = false;
        for (std::size_t i = 0; i < d && !removed; ++i) {
            if (working[i].size() != d + 1) continue;
            for (std::size_t k = 0; k < working[i].size() && !removed; ++k) {
                std::vector<long> trimmed = working[i];
                trimmed.erase(trimmed.begin() + k);
                if (hull_membership(x, points_of_ids(trimmed)) != HullMembership::Outside) {
                    eliminated.push_back(working[i][k]);
                    working[i] = std::move(trimmed);
                    removed = true;
                }
            }
        }
        if (!removed)
            throw Error(ErrorCode::InternalFailure, "selection_pair: no removable boundary point");
    }
    std::vector<long> simplex = eliminated;
    simplex.insert(simplex.end(), blocks[d].begin(), blocks[d].end());
    return finish(std::move(simplex), std::move(working));
}

// Exhaustive depth oracle: how many spanned d-simplices contain x.
inline DepthReport simplex_depth(const PointSet& P, const Point& x) {
    std::size_t d = static_cast<std::size_t>(P.dimension);
    if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, "simplex_depth");
    DepthReport report;
    report.point = x;
    for_each_combination(P.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
        auto m = membership_fast(x, detail::points_for(P, idx));
        if (m == HullMembership::Outside) return;
        ++report.depth;
        if (m == HullMembership::RelativeBoundary) ++report.boundary_count;
    });
    return report;
}

namespace detail {

// Candidate witnesses: every determined Tverberg point of a d^2-tuple split
// into d blocks (the points themselves when d = 1, Radon witnesses of
// 4-tuples when d = 2).
inline std::vector<Point> selection_candidates(const PointSet& P) {
    std::size_t d = static_cast<std::size_t>(P.dimension);
    std::vector<Point> candidates;
    if (d == 1) {
        candidates = P.points;
    } else if (d == 2) {
        std::vector<std::vector<std::size_t>> tuples;
        for_each_combination(P.size(), 4, [&](const std::vector<std::size_t>& idx) {
            tuples.push_back(idx);
        });
        std::vector<Point> witnesses(tuples.size());
        parallel_for(tuples.size(), [&](std::size_t k) {
            witnesses[k] = radon_partition(subset(P, tuples[k])).witness;
        });
        candidates = std::move(witnesses);
    } else {
        for_each_combination(P.size(), d * d, [&](const std::vector<std::size_t>& idx) {
            for (const auto& tp : tverberg_partitions(subset(P, idx), d))
                candidates.push_back(tp.witness);
        });
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

} // namespace detail

// A point of provably high simplicial depth: the deepest Tverberg witness.
inline DepthReport first_selection_point(const PointSet& P) {
    std::size_t d = static_cast<std::size_t>(P.dimension);
    if (P.size() < d * d + d + 1)
        throw Error(ErrorCode::TooFewPoints, "first_selection_point: needs d^2+d+1 points");
    detail::require_general_position(P, "first_selection_point");
    auto candidates = detail::selection_candidates(P);
    std::vector<DepthReport> reports(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t i) { reports[i] = simplex_depth(P, candidates[i]); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].depth > reports[best].depth) best = i;
        // candidates are lex-sorted, so ties already resolve to the smaller point
    }
    return reports[best];
}

// The simplex S collecting the most distinct d^2-tuples across all
// certificates, with the tuples that selected it.
inline RichSimplexReport rich_simplex(const PointSet& P) {
    std::size_t d = static_cast<std::size_t>(P.dimension);
    std::size_t tuple_size = d * d + d + 1;
    if (P.size() < tuple_size)
        throw Error(ErrorCode::TooFewPoints, "rich_simplex: needs d^2+d+1 points");
    detail::require_general_position(P, "rich_simplex");
    std::vector<std::vector<std::size_t>> tuples;
    for_each_combination(P.size(), tuple_size, [&](const std::vector<std::size_t>& idx) {
        tuples.push_back(idx);
    });
    std::vector<SelectionCertificate> certs(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t k) { certs[k] = selection_pair(subset(P, tuples[k])); });
    std::map<std::vector<long>, std::vector<std::vector<long>>> by_simplex;
    for (auto& cert : certs) {
        std::vector<long> rest;
        for (long id : cert.tuple)
            if (std::find(cert.simplex.begin(), cert.simplex.end(), id) == cert.simplex.end())
                rest.push_back(id);
        by_simplex[cert.simplex].push_back(std::move(rest));
    }
    RichSimplexReport best;
    std::size_t best_count = 0;
    for (auto& [simplex, tuple_list] : by_simplex) {
        std::sort(tuple_list.begin(), tuple_list.end());
        tuple_list.erase(std::unique(tuple_list.begin(), tuple_list.end()), tuple_list.end());
        if (tuple_list.size() > best_count) {
            best_count = tuple_list.size();
            best.simplex = simplex;
            best.tuples = tuple_list;
        }
    }
    return best;
}

// Pigeonhole floor on the depth the selection point must reach.
inline Integer first_selection_bound(std::size_t n, std::size_t d, const Integer& b_d) {
    return ceil_div(binomial(n, d * d + d + 1), b_d * binomial(n, d * d));
}

inline Integer rich_simplex_bound(std::size_t n, std::size_t d) {
    return ceil_div(binomial(n, d * d + d + 1), binomial(n, d + 1));
}

} // namespace selnet
