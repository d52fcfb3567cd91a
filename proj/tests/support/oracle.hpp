// ============================================================================
// tests/support/oracle.hpp — independent brute-force oracles
// ============================================================================
//
// Everything here is deliberately implemented without the zone algebra:
// membership is decided by direct evaluation of constraint atoms at
// rational grid points, set operations by their defining boolean formulas,
// and the timed operators by discretized quantifier search. Grids:
// membership points on the 1/2 grid, existential delays on the 1/4 grid,
// universal path checks on the 1/8 grid — exact for integer-bound
// constraints at those points.
//
// ============================================================================

#ifndef TIO_TESTS_ORACLE_HPP
#define TIO_TESTS_ORACLE_HPP

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tio/constraints.hpp"
#include "tio/federation.hpp"

namespace tio::testing {

using Point = std::vector<Rational>;  // slot 0 = reference clock, always 0

inline Point make_point(std::initializer_list<Rational> user_clocks) {
    Point p{Rational(0)};
    p.insert(p.end(), user_clocks.begin(), user_clocks.end());
    return p;
}

/// Direct evaluation of one atom at a point.
inline bool eval_atom(const AtomicConstraint& a, const Point& p) {
    Rational lhs = p[static_cast<size_t>(a.lhs)];
    if (a.rhs != 0) lhs -= p[static_cast<size_t>(a.rhs)];
    Rational b(a.bound);
    switch (a.op) {
        case CmpOp::Lt: return lhs < b;
        case CmpOp::Le: return lhs <= b;
        case CmpOp::Eq: return lhs == b;
        case CmpOp::Gt: return lhs > b;
        case CmpOp::Ge: return lhs >= b;
    }
    return false;
}

inline bool eval_expr(const ConstraintExpr& e, const Point& p) {
    if (e.is_false) return false;
    for (const AtomicConstraint& a : e.atoms)
        if (!eval_atom(a, p)) return false;
    return true;
}

/// All points of [0, hi]^n at the given granularity (denominator).
inline std::vector<Point> grid_points(int num_clocks, long long hi, long long den) {
    std::vector<Point> pts;
    std::vector<long long> idx(static_cast<size_t>(num_clocks), 0);
    const long long steps = hi * den;
    while (true) {
        Point p{Rational(0)};
        for (long long v : idx) p.emplace_back(v, den);
        pts.push_back(p);
        int c = 0;
        for (; c < num_clocks; ++c) {
            if (++idx[static_cast<size_t>(c)] <= steps) break;
            idx[static_cast<size_t>(c)] = 0;
        }
        if (c == num_clocks) break;
    }
    return pts;
}

using Member = std::function<bool(const Point&)>;

inline Point shifted(const Point& p, const Rational& d) {
    Point q = p;
    for (size_t i = 1; i < q.size(); ++i) q[i] += d;
    return q;
}

/// exists d >= 0 (1/4 grid, bounded) with pred(p + d)
inline bool exists_delay(const Point& p, long long max_delay, const Member& pred) {
    for (long long q = 0; q <= max_delay * 4; ++q)
        if (pred(shifted(p, Rational(q, 4)))) return true;
    return false;
}

/// exists d >= 0 (1/4 grid) with p - d >= 0 and pred(p - d)
inline bool exists_past(const Point& p, const Member& pred) {
    Rational min_clock(-1);
    for (size_t i = 1; i < p.size(); ++i)
        if (min_clock < Rational(0) || p[i] < min_clock) min_clock = p[i];
    if (p.size() == 1) min_clock = Rational(0);
    for (long long q = 0;; ++q) {
        Rational d(q, 4);
        if (d > min_clock) break;
        if (pred(shifted(p, -d))) return true;
    }
    return false;
}

/// Brute-force timed predecessor:
/// exists d (1/4 grid) with target(p+d) and no escape point on [0,d]
/// (checked on the 1/8 grid).
inline bool oracle_timed_pred(const Point& p, long long max_delay,
                              const Member& target, const Member& escape) {
    for (long long q = 0; q <= max_delay * 4; ++q) {
        Rational d(q, 4);
        if (!target(shifted(p, d))) continue;
        bool blocked = false;
        for (long long r = 0; r <= q * 2 && !blocked; ++r)
            if (escape(shifted(p, Rational(r, 8)))) blocked = true;
        if (!blocked) return true;
    }
    return false;
}

/// Random conjunctive constraint over <= 2 clocks, bounds <= 4. May be
/// empty. Integer bounds only.
inline ConstraintExpr random_expr(std::mt19937& rng, int num_clocks) {
    std::uniform_int_distribution<int> natoms(0, 3);
    std::uniform_int_distribution<int> clock(1, num_clocks);
    std::uniform_int_distribution<int> opd(0, 4);
    std::uniform_int_distribution<long long> bound(0, 4);
    std::uniform_int_distribution<int> diag(0, 3);
    ConstraintExpr e;
    int k = natoms(rng);
    for (int i = 0; i < k; ++i) {
        AtomicConstraint a;
        a.lhs = clock(rng);
        if (num_clocks > 1 && diag(rng) == 0) {
            a.rhs = clock(rng);
            if (a.rhs == a.lhs) a.rhs = 0;
        }
        a.op = static_cast<CmpOp>(opd(rng));
        a.bound = bound(rng);
        e.atoms.push_back(a);
    }
    return e;
}

inline Federation fed_from_expr(const ConstraintExpr& e, int num_clocks) {
    return Federation::of(zone_from_expr(e, num_clocks));
}

/// Random federation: union of up to 3 random conjunctions.
inline Federation random_fed(std::mt19937& rng, int num_clocks,
                             std::vector<ConstraintExpr>* parts = nullptr) {
    std::uniform_int_distribution<int> nzones(1, 3);
    Federation f = Federation::empty(num_clocks);
    int k = nzones(rng);
    for (int i = 0; i < k; ++i) {
        ConstraintExpr e = random_expr(rng, num_clocks);
        if (parts) parts->push_back(e);
        f = f.unite(fed_from_expr(e, num_clocks));
    }
    return f;
}

inline Member member_of_exprs(const std::vector<ConstraintExpr>& parts) {
    return [parts](const Point& p) {
        for (const ConstraintExpr& e : parts)
            if (eval_expr(e, p)) return true;
        return false;
    };
}

}  // namespace tio::testing

#endif  // TIO_TESTS_ORACLE_HPP
