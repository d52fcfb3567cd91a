// ============================================================================
// tio/zone.hpp — difference-bound zones over a fixed clock set
// ============================================================================
//
// A Zone is a convex set of clock valuations represented as a Difference
// Bound Matrix (DBM): for clocks x_0..x_n (x_0 is the reference clock,
// identically zero), entry (i,j) bounds x_i - x_j from above:
//
//   x_i - x_j <  c   (strict bound)
//   x_i - x_j <= c   (weak bound)
//
// Zones are kept in canonical (shortest-path closed) form after every
// operation, so emptiness, inclusion and equality are entrywise checks.
// All valuations are implicitly non-negative: (0,j) entries never exceed
// the weak zero bound.
//
// ============================================================================

#ifndef TIO_ZONE_HPP
#define TIO_ZONE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace tio {

using Rational = boost::rational<long long>;

// ── Bound ───────────────────────────────────────────────────────────────────
// One DBM entry. Encoded as raw = 2*value + (weak ? 1 : 0) so that integer
// order coincides with bound tightness: (v,<) < (v,<=) < (v+1,<).

struct Bound {
    long long raw;

    static constexpr long long kInfRaw = INT64_C(1) << 60;

    static Bound weak(long long v) { return Bound{2 * v + 1}; }
    static Bound strict(long long v) { return Bound{2 * v}; }
    static Bound infinity() { return Bound{kInfRaw}; }
    static Bound zero() { return weak(0); }

    bool is_infinity() const { return raw >= kInfRaw; }
    bool is_strict() const { return !is_infinity() && (raw & 1) == 0; }
    long long value() const { return (raw - (raw & 1)) / 2; }

    // Path composition: value sum, strict if either side is strict.
    Bound operator+(Bound o) const {
        if (is_infinity() || o.is_infinity()) return infinity();
        return Bound{2 * (value() + o.value()) + ((raw & 1) & (o.raw & 1))};
    }

    // Negation for complements: !(x-y <= v) is y-x < -v, and dually.
    Bound negated() const {
        return is_strict() ? weak(-value()) : strict(-value());
    }

    bool operator==(const Bound& o) const {
        return raw == o.raw || (is_infinity() && o.is_infinity());
    }
    bool operator!=(const Bound& o) const { return !(*this == o); }
    bool operator<(Bound o) const { return raw < o.raw; }
    bool operator<=(Bound o) const { return raw <= o.raw; }

    /// True if the rational difference d satisfies this bound.
    bool admits(const Rational& d) const {
        if (is_infinity()) return true;
        Rational v(value());
        return is_strict() ? d < v : d <= v;
    }

    std::string to_string() const;
};

// ── Zone ────────────────────────────────────────────────────────────────────
// Immutable-style zone over `num_clocks` user clocks (indices 1..n).
// Mutating helpers exist but every public result is canonical.

class Zone {
public:
    /// All non-negative valuations.
    static Zone universe(int num_clocks);
    /// The empty set.
    static Zone empty(int num_clocks);
    /// The single valuation with every clock zero.
    static Zone zero_point(int num_clocks);

    int num_clocks() const { return dim_ - 1; }
    bool is_empty() const { return empty_; }

    Bound bound(int i, int j) const { return m_[i * dim_ + j]; }

    /// Intersect with the constraint x_i - x_j ≼ b and re-canonicalize.
    Zone constrained(int i, int j, Bound b) const;

    Zone intersect(const Zone& o) const;

    /// Time-successor closure: { v + d | v in Z, d >= 0 }.
    Zone up() const;
    /// Time-predecessor closure (clamped to non-negative valuations).
    Zone down() const;
    /// Reset the given clocks to zero.
    Zone reset(const std::vector<int>& clocks) const;
    /// Drop all constraints on the given clocks (except non-negativity).
    Zone freed(const std::vector<int>& clocks) const;
    /// { v | v[clocks := 0] in Z }.
    Zone pre_reset(const std::vector<int>& clocks) const;

    /// Classic max-constant extrapolation: bounds above k are dropped,
    /// bounds below -k are relaxed to (-k, <). Result contains the input.
    Zone extrapolated(long long k) const;

    /// Complement as a list of (possibly overlapping) zones.
    std::vector<Zone> complement() const;

    bool contains(const std::vector<Rational>& valuation) const;
    bool subset_of(const Zone& o) const;
    bool operator==(const Zone& o) const;
    bool operator!=(const Zone& o) const { return !(*this == o); }

    /// Largest bound magnitude occurring in the matrix (0 for empty).
    long long max_constant() const;

    /// Remap clock indices into a wider clock space. map[i] gives the new
    /// index of old clock i; map[0] must be 0.
    Zone embedded(int new_num_clocks, const std::vector<int>& map) const;

    /// Conjunctive constraint text, e.g. "x <= 5 && x - y < 2".
    /// Redundant bounds implied via the reference clock are suppressed.
    std::string to_string(const std::vector<std::string>& clock_names) const;

private:
    Zone(int dim, bool empty);

    Bound& at(int i, int j) { return m_[i * dim_ + j]; }
    Bound get(int i, int j) const { return m_[i * dim_ + j]; }

    /// Floyd-Warshall closure; flips empty_ if a negative cycle appears.
    void canonicalize();
    void clamp_nonneg();

    int dim_;
    bool empty_;
    std::vector<Bound> m_;
};

}  // namespace tio

#endif  // TIO_ZONE_HPP
