// ============================================================================
// federation.cpp — exact set algebra on zone unions
// ============================================================================

#include "tio/federation.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace tio {

namespace {
std::atomic<size_t> g_zone_budget{10000};
}

void set_zone_budget(size_t budget) { g_zone_budget = budget; }
size_t zone_budget() { return g_zone_budget; }

Federation Federation::empty(int num_clocks) { return Federation(num_clocks); }

Federation Federation::universe(int num_clocks) {
    Federation f(num_clocks);
    f.zones_.push_back(Zone::universe(num_clocks));
    return f;
}

Federation Federation::of(const Zone& z) {
    Federation f(z.num_clocks());
    if (!z.is_empty()) f.zones_.push_back(z);
    return f;
}

Federation Federation::of_zones(std::vector<Zone> zs, int num_clocks) {
    Federation f(num_clocks);
    f.zones_ = std::move(zs);
    f.reduce();
    return f;
}

namespace {

// pairwise subsumption elimination only; no exact minimization
void reduce_zones(std::vector<Zone>& zones) {
    zones.erase(std::remove_if(zones.begin(), zones.end(),
                               [](const Zone& z) { return z.is_empty(); }),
                zones.end());
    std::vector<Zone> kept;
    for (size_t i = 0; i < zones.size(); ++i) {
        bool subsumed = false;
        for (size_t j = 0; j < zones.size() && !subsumed; ++j) {
            if (i == j) continue;
            if (zones[i].subset_of(zones[j])) {
                // break ties so that equal zones keep exactly one copy
                if (zones[j].subset_of(zones[i]) && i < j) continue;
                subsumed = true;
            }
        }
        if (!subsumed) kept.push_back(zones[i]);
    }
    zones = std::move(kept);
    if (zones.size() > zone_budget()) throw ZoneBudgetExceeded();
}

}  // namespace

void Federation::reduce() { reduce_zones(zones_); }

Federation Federation::unite(const Federation& o) const {
    if (num_clocks_ != o.num_clocks_)
        throw std::invalid_argument("federation clock count mismatch");
    Federation f(num_clocks_);
    f.zones_ = zones_;
    f.zones_.insert(f.zones_.end(), o.zones_.begin(), o.zones_.end());
    f.reduce();
    return f;
}

Federation Federation::intersect(const Federation& o) const {
    if (num_clocks_ != o.num_clocks_)
        throw std::invalid_argument("federation clock count mismatch");
    Federation f(num_clocks_);
    for (const Zone& a : zones_)
        for (const Zone& b : o.zones_) {
            Zone z = a.intersect(b);
            if (!z.is_empty()) f.zones_.push_back(z);
        }
    f.reduce();
    return f;
}

Federation Federation::subtract(const Federation& o) const {
    if (num_clocks_ != o.num_clocks_)
        throw std::invalid_argument("federation clock count mismatch");
    std::vector<Zone> acc = zones_;
    for (const Zone& b : o.zones_) {
        std::vector<Zone> next;
        std::vector<Zone> negs = b.complement();
        for (const Zone& a : acc) {
            if (a.intersect(b).is_empty()) {
                next.push_back(a);  // untouched by this obstacle
                continue;
            }
            for (const Zone& n : negs) {
                Zone z = a.intersect(n);
                if (!z.is_empty()) next.push_back(z);
            }
        }
        // keep the intermediate union small; chains of complements blow
        // up combinatorially otherwise
        reduce_zones(next);
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return of_zones(std::move(acc), num_clocks_);
}

Federation Federation::complement() const {
    return universe(num_clocks_).subtract(*this);
}

Federation Federation::up() const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) f.zones_.push_back(z.up());
    f.reduce();
    return f;
}

Federation Federation::down() const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) f.zones_.push_back(z.down());
    f.reduce();
    return f;
}

Federation Federation::reset(const std::vector<int>& clocks) const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) f.zones_.push_back(z.reset(clocks));
    f.reduce();
    return f;
}

Federation Federation::freed(const std::vector<int>& clocks) const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) f.zones_.push_back(z.freed(clocks));
    f.reduce();
    return f;
}

Federation Federation::pre_reset(const std::vector<int>& clocks) const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) {
        Zone p = z.pre_reset(clocks);
        if (!p.is_empty()) f.zones_.push_back(p);
    }
    f.reduce();
    return f;
}

Federation Federation::extrapolated(long long k) const {
    Federation f(num_clocks_);
    for (const Zone& z : zones_) f.zones_.push_back(z.extrapolated(k));
    f.reduce();
    return f;
}

Federation Federation::embedded(int new_num_clocks, const std::vector<int>& map) const {
    Federation f(new_num_clocks);
    for (const Zone& z : zones_) f.zones_.push_back(z.embedded(new_num_clocks, map));
    f.reduce();
    return f;
}

Federation Federation::down_closed_core() const {
    // v is kept iff no past point of v lies outside F:
    // core(F) = F \ up(complement(F)).
    return subtract(complement().up());
}

bool Federation::is_downward_closed() const { return down().same_set(*this); }

Federation Federation::timed_pred(const Federation& target, const Federation& escape) {
    if (target.num_clocks_ != escape.num_clocks_)
        throw std::invalid_argument("federation clock count mismatch");
    // Recursive obstacle split. For a single convex obstacle b, a point v
    // can reach the target while avoiding b iff
    //   - v never meets b by delaying (v not in down(b)) and v in down(G), or
    //   - v meets b later but hits G strictly before entering b, which for
    //     points of down(b) is exactly v in down(G \ up(b)).
    struct Rec {
        static Federation go(const Federation& g, const std::vector<Zone>& obs, size_t i) {
            if (g.is_empty()) return g;
            if (i == obs.size()) return g.down();
            Federation ub = Federation::of(obs[i].up());
            Federation shadowed = g.intersect(ub);
            if (shadowed.is_empty()) {
                // the obstacle lies entirely after every target hit along
                // any line that meets both, so it never blocks
                return go(g, obs, i + 1);
            }
            Federation db = Federation::of(obs[i].down());
            Federation blocked = go(g.subtract(ub), obs, i + 1).intersect(db);
            Federation clear = go(g, obs, i + 1).subtract(db);
            return blocked.unite(clear);
        }
    };
    return Rec::go(target, escape.zones_, 0);
}

bool Federation::contains(const std::vector<Rational>& valuation) const {
    for (const Zone& z : zones_)
        if (z.contains(valuation)) return true;
    return false;
}

bool Federation::subset_of(const Federation& o) const {
    return subtract(o).is_empty();
}

bool Federation::same_set(const Federation& o) const {
    return subset_of(o) && o.subset_of(*this);
}

long long Federation::max_constant() const {
    long long k = 0;
    for (const Zone& z : zones_) k = std::max(k, z.max_constant());
    return k;
}

std::vector<std::string> Federation::to_strings(
        const std::vector<std::string>& clock_names) const {
    std::vector<std::string> out;
    if (zones_.empty()) {
        out.push_back("false");
        return out;
    }
    for (const Zone& z : zones_) out.push_back(z.to_string(clock_names));
    return out;
}

std::string Federation::to_string(const std::vector<std::string>& clock_names) const {
    auto parts = to_strings(clock_names);
    if (parts.size() == 1) return parts[0];
    std::ostringstream oss;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) oss << " || ";
        oss << "(" << parts[i] << ")";
    }
    return oss.str();
}

}  // namespace tio
