// ============================================================================
// tio/federation.hpp — finite unions of zones
// ============================================================================
//
// A Federation is a finite union of non-empty canonical zones over one clock
// set. It is the universal symbolic set representation of the toolkit: all
// set algebra is exact, and the timed-game operators (timed predecessor,
// downward-closed core) live here.
//
// Federations are immutable values; every operation returns a new one.
//
// ============================================================================

#ifndef TIO_FEDERATION_HPP
#define TIO_FEDERATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tio/zone.hpp"

namespace tio {

/// Thrown when a federation exceeds the configured zone budget
/// (TIOSPEC_MAXZONES). Analyses translate this into exit code 5.
struct ZoneBudgetExceeded : std::runtime_error {
    ZoneBudgetExceeded() : std::runtime_error("federation zone budget exceeded") {}
};

/// Global zone budget; default 10000.
void set_zone_budget(size_t budget);
size_t zone_budget();

class Federation {
public:
    /// Empty federation over zero clocks; reassign before use.
    Federation() : num_clocks_(0) {}

    /// The empty set over n clocks.
    static Federation empty(int num_clocks);
    /// All non-negative valuations over n clocks.
    static Federation universe(int num_clocks);
    /// Singleton federation (empty zones vanish).
    static Federation of(const Zone& z);
    static Federation of_zones(std::vector<Zone> zs, int num_clocks);

    int num_clocks() const { return num_clocks_; }
    bool is_empty() const { return zones_.empty(); }
    const std::vector<Zone>& zones() const { return zones_; }

    Federation unite(const Federation& o) const;
    Federation intersect(const Federation& o) const;
    Federation subtract(const Federation& o) const;
    Federation complement() const;

    Federation up() const;
    Federation down() const;
    Federation reset(const std::vector<int>& clocks) const;
    Federation freed(const std::vector<int>& clocks) const;
    /// { v | v[clocks := 0] in F }
    Federation pre_reset(const std::vector<int>& clocks) const;

    Federation extrapolated(long long k) const;
    Federation embedded(int new_num_clocks, const std::vector<int>& map) const;

    /// Largest downward-closed subset: F minus everything whose past
    /// leaves F. Used for invariant/co-invariant strengthening.
    Federation down_closed_core() const;
    bool is_downward_closed() const;

    /// Safe timed predecessor:
    ///   { v | exists d >= 0: v+d in target and v+d' not in escape
    ///     for all d' in [0,d] }.
    static Federation timed_pred(const Federation& target, const Federation& escape);

    bool contains(const std::vector<Rational>& valuation) const;
    bool subset_of(const Federation& o) const;
    bool same_set(const Federation& o) const;

    long long max_constant() const;

    /// One conjunctive string per zone ("false" when empty).
    std::vector<std::string> to_strings(const std::vector<std::string>& clock_names) const;
    std::string to_string(const std::vector<std::string>& clock_names) const;

private:
    Federation(int n) : num_clocks_(n) {}

    /// Drop empty zones, drop zones subsumed by another member.
    void reduce();

    int num_clocks_;
    std::vector<Zone> zones_;
};

}  // namespace tio

#endif  // TIO_FEDERATION_HPP
