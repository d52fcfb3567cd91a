// ============================================================================
// zone.cpp — DBM operations
// ============================================================================

#include "tio/zone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tio {

std::string Bound::to_string() const {
    if (is_infinity()) return "inf";
    std::ostringstream oss;
    oss << (is_strict() ? "<" : "<=") << value();
    return oss.str();
}

Zone::Zone(int dim, bool empty) : dim_(dim), empty_(empty) {
    m_.assign(static_cast<size_t>(dim_) * dim_, Bound::infinity());
    for (int i = 0; i < dim_; ++i) at(i, i) = Bound::zero();
}

Zone Zone::universe(int num_clocks) {
    Zone z(num_clocks + 1, false);
    for (int j = 1; j < z.dim_; ++j) z.at(0, j) = Bound::zero();
    return z;
}

Zone Zone::empty(int num_clocks) { return Zone(num_clocks + 1, true); }

Zone Zone::zero_point(int num_clocks) {
    Zone z(num_clocks + 1, false);
    for (int i = 0; i < z.dim_; ++i)
        for (int j = 0; j < z.dim_; ++j) z.at(i, j) = Bound::zero();
    return z;
}

void Zone::clamp_nonneg() {
    for (int j = 1; j < dim_; ++j)
        if (Bound::zero() < at(0, j)) at(0, j) = Bound::zero();
}

void Zone::canonicalize() {
    if (empty_) return;
    clamp_nonneg();
    for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i) {
            if (get(i, k).is_infinity()) continue;
            for (int j = 0; j < dim_; ++j) {
                Bound via = get(i, k) + get(k, j);
                if (via < get(i, j)) at(i, j) = via;
            }
        }
    for (int i = 0; i < dim_; ++i)
        if (get(i, i) < Bound::zero()) {
            empty_ = true;
            return;
        }
}

Zone Zone::constrained(int i, int j, Bound b) const {
    if (empty_) return *this;
    Zone z = *this;
    if (b < z.get(i, j)) {
        z.at(i, j) = b;
        z.canonicalize();
    }
    return z;
}

Zone Zone::intersect(const Zone& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("zone clock count mismatch");
    if (empty_) return *this;
    if (o.empty_) return o;
    Zone z = *this;
    bool changed = false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (o.get(i, j) < z.get(i, j)) {
                z.at(i, j) = o.get(i, j);
                changed = true;
            }
    if (changed) z.canonicalize();
    return z;
}

Zone Zone::up() const {
    if (empty_) return *this;
    Zone z = *this;
    for (int i = 1; i < dim_; ++i) z.at(i, 0) = Bound::infinity();
    z.canonicalize();
    return z;
}

Zone Zone::down() const {
    if (empty_) return *this;
    Zone z = *this;
    for (int j = 1; j < dim_; ++j) z.at(0, j) = Bound::zero();
    z.canonicalize();
    return z;
}

Zone Zone::reset(const std::vector<int>& clocks) const {
    if (empty_ || clocks.empty()) return *this;
    Zone z = *this;
    for (int x : clocks) {
        for (int j = 0; j < dim_; ++j) {
            z.at(x, j) = z.get(0, j);
            z.at(j, x) = z.get(j, 0);
        }
        z.at(x, x) = Bound::zero();
    }
    z.canonicalize();
    return z;
}

Zone Zone::freed(const std::vector<int>& clocks) const {
    if (empty_ || clocks.empty()) return *this;
    Zone z = *this;
    for (int x : clocks) {
        for (int j = 0; j < dim_; ++j) {
            if (j == x) continue;
            z.at(x, j) = Bound::infinity();
            z.at(j, x) = Bound::infinity();
        }
        z.at(0, x) = Bound::zero();
    }
    z.canonicalize();
    return z;
}

Zone Zone::pre_reset(const std::vector<int>& clocks) const {
    if (empty_ || clocks.empty()) return *this;
    Zone z = *this;
    for (int x : clocks) {
        // pin x = 0, then forget it
        z = z.constrained(x, 0, Bound::zero());
        if (z.empty_) return z;
    }
    return z.freed(clocks);
}

Zone Zone::extrapolated(long long k) const {
    if (empty_) return *this;
    Zone z = *this;
    bool changed = false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            Bound b = z.get(i, j);
            if (b.is_infinity()) continue;
            if (b.value() > k) {
                z.at(i, j) = Bound::infinity();
                changed = true;
            } else if (b.value() < -k) {
                z.at(i, j) = Bound::strict(-k);
                changed = true;
            }
        }
    if (changed) z.canonicalize();
    return z;
}

std::vector<Zone> Zone::complement() const {
    std::vector<Zone> out;
    if (empty_) {
        out.push_back(universe(num_clocks()));
        return out;
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            Bound b = get(i, j);
            if (b.is_infinity()) continue;
            Zone neg = universe(num_clocks()).constrained(j, i, b.negated());
            if (!neg.is_empty()) out.push_back(neg);
        }
    return out;
}

bool Zone::contains(const std::vector<Rational>& valuation) const {
    if (empty_) return false;
    // valuation[0] is the reference clock and must be 0
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            if (!get(i, j).admits(valuation[i] - valuation[j])) return false;
        }
    return true;
}

bool Zone::subset_of(const Zone& o) const {
    if (empty_) return true;
    if (o.empty_) return false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!(get(i, j) <= o.get(i, j))) return false;
    return true;
}

bool Zone::operator==(const Zone& o) const {
    if (empty_ || o.empty_) return empty_ == o.empty_;
    return m_ == o.m_;
}

long long Zone::max_constant() const {
    long long k = 0;
    if (empty_) return k;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Bound b = get(i, j);
            if (i != j && !b.is_infinity()) k = std::max(k, std::llabs(b.value()));
        }
    return k;
}

Zone Zone::embedded(int new_num_clocks, const std::vector<int>& map) const {
    Zone z = empty_ ? Zone::empty(new_num_clocks) : Zone::universe(new_num_clocks);
    if (empty_) return z;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            Bound b = get(i, j);
            if (b < z.get(map[i], map[j])) z.at(map[i], map[j]) = b;
        }
    z.canonicalize();
    return z;
}

std::string Zone::to_string(const std::vector<std::string>& clock_names) const {
    if (empty_) return "false";
    auto name = [&](int i) { return clock_names[static_cast<size_t>(i) - 1]; };
    std::ostringstream oss;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) oss << " && ";
        oss << s;
        first = false;
    };
    std::vector<bool> done(m_.size(), false);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j || done[static_cast<size_t>(i * dim_ + j)]) continue;
            Bound b = get(i, j);
            if (b.is_infinity()) continue;
            // skip the implicit non-negativity bound
            if (i == 0 && b == Bound::zero()) continue;
            // skip bounds recoverable through the reference clock
            if (i != 0 && j != 0 && b == get(i, 0) + get(0, j)) continue;
            Bound rev = get(j, i);
            std::ostringstream a;
            if (!b.is_strict() && !rev.is_strict() && rev.value() == -b.value()) {
                // tight two-sided bound: print as equality once
                done[static_cast<size_t>(j * dim_ + i)] = true;
                if (j == 0)
                    a << name(i) << " == " << b.value();
                else if (i == 0)
                    a << name(j) << " == " << -b.value();
                else
                    a << name(i) << " - " << name(j) << " == " << b.value();
            } else if (j == 0) {
                a << name(i) << (b.is_strict() ? " < " : " <= ") << b.value();
            } else if (i == 0) {
                a << name(j) << (b.is_strict() ? " > " : " >= ") << -b.value();
            } else {
                a << name(i) << " - " << name(j)
                  << (b.is_strict() ? " < " : " <= ") << b.value();
            }
            emit(a.str());
        }
    if (first) return "true";
    return oss.str();
}

}  // namespace tio
