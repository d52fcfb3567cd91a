// ============================================================================
// games.cpp — zone exploration, reachability, backpropagation fixpoints
// ============================================================================

#include "tio/games.hpp"

#include <algorithm>
#include <deque>

namespace tio {

namespace {

constexpr int kMaxRounds = 4096;

Federation fed_of(const Zone& z) { return Federation::of(z); }

// determinism gate without the (costlier) full validation
void require_deterministic(const TIOA& a, const char* who) {
    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        Federation legal = a.legal(l);
        for (size_t i = 0; i < a.transitions.size(); ++i) {
            const Transition& ti = a.transitions[i];
            if (ti.from != l.name) continue;
            for (size_t j = i + 1; j < a.transitions.size(); ++j) {
                const Transition& tj = a.transitions[j];
                if (tj.from != l.name || tj.action != ti.action) continue;
                if (ti.to == tj.to &&
                    std::set<int>(ti.resets.begin(), ti.resets.end()) ==
                        std::set<int>(tj.resets.begin(), tj.resets.end()))
                    continue;
                if (!Federation::of(ti.guard.intersect(tj.guard))
                         .intersect(legal)
                         .is_empty())
                    throw UsageError(std::string(who) +
                                     ": nondeterministic automaton rejected (action " +
                                     ti.action + " at " + l.name + ")");
            }
        }
    }
}

}  // namespace

// ── Exploration ─────────────────────────────────────────────────────────────

ZoneGraph explore(const TIOA& a) {
    require_deterministic(a, "explore");
    ZoneGraph g;
    const int n = a.num_clocks();
    const long long k = a.max_constant();

    auto sink = [&](bool top) -> int {
        int& slot = top ? g.top_node : g.bot_node;
        if (slot < 0) {
            slot = static_cast<int>(g.nodes.size());
            g.nodes.push_back({top ? kTopName : kBotName, Federation::universe(n)});
        }
        return slot;
    };

    for (const Location& l : a.locations)
        g.reached.emplace(l.name, Federation::empty(n));

    std::deque<int> work;
    auto add_node = [&](const std::string& loc, const Federation& zone) -> int {
        // reuse an identical or covering node when one exists
        for (size_t i = 0; i < g.nodes.size(); ++i)
            if (g.nodes[i].location == loc && zone.subset_of(g.nodes[i].zone))
                return static_cast<int>(i);
        int idx = static_cast<int>(g.nodes.size());
        g.nodes.push_back({loc, zone});
        g.reached[loc] = g.reached[loc].unite(zone);
        work.push_back(idx);
        return idx;
    };

    // initial state per the semantic mapping rules
    {
        const Location& l0 = a.location(a.initial);
        std::vector<Rational> zeros(static_cast<size_t>(n) + 1, Rational(0));
        if (l0.kind == LocKind::Top || !l0.invariant.contains(zeros)) {
            g.initial = sink(true);
        } else if (l0.kind == LocKind::Bottom || !l0.coinvariant.contains(zeros)) {
            g.initial = sink(false);
        } else {
            Federation f0 = fed_of(Zone::zero_point(n)).up().intersect(a.legal(l0));
            g.initial = add_node(l0.name, f0.extrapolated(k));
        }
    }

    while (!work.empty()) {
        int ni = work.front();
        work.pop_front();
        // nodes vector may reallocate while expanding; copy what we need
        std::string loc_name = g.nodes[ni].location;
        Federation zone = g.nodes[ni].zone;
        const Location& l = a.location(loc_name);

        // time-out delay into Inv ∧ ¬coInv
        Federation timeout = zone.up().intersect(l.invariant.subtract(l.coinvariant));
        if (!timeout.is_empty())
            g.edges.push_back({ni, sink(false), -1, true});

        for (size_t ti = 0; ti < a.transitions.size(); ++ti) {
            const Transition& t = a.transitions[ti];
            if (t.from != loc_name) continue;
            Federation fire = zone.intersect(fed_of(t.guard));
            if (fire.is_empty()) continue;
            Federation landed = fire.reset(t.resets);
            const Location& target = a.location(t.to);
            bool input = a.alphabet.is_input(t.action);

            if (target.kind == LocKind::Top) {
                g.edges.push_back({ni, sink(true), static_cast<int>(ti), false});
                continue;
            }
            if (target.kind == LocKind::Bottom) {
                g.edges.push_back({ni, sink(false), static_cast<int>(ti), false});
                continue;
            }
            if (input && !landed.subtract(target.invariant.complement()).same_set(landed)) {
                // some landing valuation violates Inv' — magic action
                g.edges.push_back({ni, sink(true), static_cast<int>(ti), false});
            }
            if (!input &&
                !landed.intersect(target.invariant.subtract(target.coinvariant)).is_empty()) {
                // error action
                g.edges.push_back({ni, sink(false), static_cast<int>(ti), false});
            }
            Federation plain = landed.intersect(a.legal(target));
            if (plain.is_empty()) continue;
            Federation succ = plain.up().intersect(a.legal(target)).extrapolated(k);
            if (succ.subset_of(g.reached[t.to])) {
                // already covered; add the edge if one node subsumes it
                bool linked = false;
                for (size_t i = 0; i < g.nodes.size() && !linked; ++i)
                    if (g.nodes[i].location == t.to && succ.subset_of(g.nodes[i].zone)) {
                        g.edges.push_back({ni, static_cast<int>(i),
                                           static_cast<int>(ti), false});
                        linked = true;
                    }
                if (linked) continue;
            }
            int tgt = add_node(t.to, succ);
            g.edges.push_back({ni, tgt, static_cast<int>(ti), false});
        }
    }
    return g;
}

// ── Witness extraction ──────────────────────────────────────────────────────

namespace {

// Rational delay intervals {d : v + d ∈ zone}; used to pick concrete
// witness delays.
struct DelayInterval {
    Rational lo{0};
    Rational hi{0};
    bool lo_open = false, hi_open = false, hi_unbounded = true, ok = true;
};

DelayInterval delay_interval(const std::vector<Rational>& v, const Zone& z) {
    DelayInterval iv;
    int n = z.num_clocks();
    for (int i = 0; i <= n && iv.ok; ++i)
        for (int j = 0; j <= n && iv.ok; ++j) {
            if (i == j) continue;
            Bound b = z.bound(i, j);
            if (b.is_infinity()) continue;
            Rational bb(b.value());
            if (i >= 1 && j >= 1) {
                if (!b.admits(v[i] - v[j])) iv.ok = false;
            } else if (j == 0) {
                Rational cap = bb - v[i];
                if (iv.hi_unbounded || cap < iv.hi ||
                    (cap == iv.hi && b.is_strict() && !iv.hi_open)) {
                    iv.hi = cap;
                    iv.hi_open = b.is_strict();
                    iv.hi_unbounded = false;
                }
            } else {
                Rational floor = -bb - v[j];
                if (floor > iv.lo || (floor == iv.lo && b.is_strict() && !iv.lo_open)) {
                    iv.lo = floor;
                    iv.lo_open = b.is_strict();
                }
            }
        }
    if (iv.lo < Rational(0)) {
        iv.lo = Rational(0);
        iv.lo_open = false;
    }
    if (iv.ok && !iv.hi_unbounded &&
        (iv.hi < iv.lo || (iv.hi == iv.lo && (iv.lo_open || iv.hi_open))))
        iv.ok = false;
    return iv;
}

// Smallest pleasant rational in the interval: the closed left endpoint when
// possible, else left endpoint plus 1/2, 1/4, ... until inside.
std::optional<Rational> pick_in_interval(const DelayInterval& iv) {
    if (!iv.ok) return std::nullopt;
    if (!iv.lo_open) return iv.lo;
    for (long long den = 1; den <= 1024; den *= 2) {
        Rational cand = iv.lo + Rational(1, den);
        if (iv.hi_unbounded || cand < iv.hi || (cand == iv.hi && !iv.hi_open))
            return cand;
    }
    if (!iv.hi_unbounded) return (iv.lo + iv.hi) / Rational(2);
    return std::nullopt;
}

std::optional<Rational> pick_delay(const std::vector<Rational>& v, const Federation& f) {
    std::optional<Rational> best;
    for (const Zone& z : f.zones()) {
        auto d = pick_in_interval(delay_interval(v, z));
        if (d && (!best || *d < *best)) best = d;
    }
    return best;
}

}  // namespace

std::optional<TimedTrace> bot_reachable(const TIOA& a) {
    ZoneGraph g = explore(a);
    if (g.bot_node < 0) return std::nullopt;
    if (g.initial == g.bot_node) return TimedTrace{};  // the automaton IS ⊥

    // BFS for a shortest edge path to ⊥
    std::vector<int> pred_edge(g.nodes.size(), -1);
    std::vector<bool> seen(g.nodes.size(), false);
    std::deque<int> q{g.initial};
    seen[static_cast<size_t>(g.initial)] = true;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        if (cur == g.bot_node) break;
        for (size_t ei = 0; ei < g.edges.size(); ++ei) {
            const auto& e = g.edges[ei];
            if (e.from != cur || seen[static_cast<size_t>(e.to)]) continue;
            seen[static_cast<size_t>(e.to)] = true;
            pred_edge[static_cast<size_t>(e.to)] = static_cast<int>(ei);
            q.push_back(e.to);
        }
    }
    if (!seen[static_cast<size_t>(g.bot_node)]) return std::nullopt;

    std::vector<int> path;  // edge indices, initial -> ... -> bot
    for (int cur = g.bot_node; cur != g.initial;) {
        int ei = pred_edge[static_cast<size_t>(cur)];
        path.push_back(ei);
        cur = g.edges[static_cast<size_t>(ei)].from;
    }
    std::reverse(path.begin(), path.end());

    const int n = a.num_clocks();

    // Backward feasible "fire sets": for each path edge, the valuations of
    // its source node from which the remaining path can be completed.
    std::vector<Federation> fire(path.size(), Federation::empty(n));
    Federation after = Federation::universe(n);  // landing set demanded downstream
    for (size_t i = path.size(); i-- > 0;) {
        const auto& e = g.edges[static_cast<size_t>(path[i])];
        const auto& node = g.nodes[static_cast<size_t>(e.from)];
        const Location& l = a.location(node.location);
        if (e.is_delay) {
            // final time-out: delay into Inv ∧ ¬coInv
            fire[i] = node.zone.intersect(
                l.invariant.subtract(l.coinvariant).down());
        } else {
            const Transition& t = a.transitions[static_cast<size_t>(e.trans)];
            const Location& target = a.location(t.to);
            Federation want;
            if (target.kind == LocKind::Bottom) {
                want = Federation::universe(n);
            } else if (e.to == g.bot_node) {
                // error action into Inv' ∧ ¬coInv'
                want = target.invariant.subtract(target.coinvariant);
            } else {
                want = a.legal(target).intersect(after);
            }
            fire[i] = node.zone.intersect(fed_of(t.guard))
                          .intersect(want.pre_reset(t.resets));
        }
        after = fire[i].down();
    }

    // Forward replay picking concrete delays.
    TimedTrace trace;
    std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(0));
    for (size_t i = 0; i < path.size(); ++i) {
        const auto& e = g.edges[static_cast<size_t>(path[i])];
        // for the final time-out the delay must land in Inv ∧ ¬coInv
        // itself, not merely where that region is delay-reachable
        Federation into = fire[i];
        if (e.is_delay) {
            const Location& l = a.location(g.nodes[static_cast<size_t>(e.from)].location);
            into = l.invariant.subtract(l.coinvariant);
        }
        auto d = pick_delay(v, into);
        if (!d) throw std::logic_error("witness reconstruction failed");
        trace.push_delay(*d);
        for (size_t c = 1; c < v.size(); ++c) v[c] += *d;
        if (e.is_delay) break;  // trace ends in the time-out delay
        const Transition& t = a.transitions[static_cast<size_t>(e.trans)];
        trace.push_action(t.action);
        for (int r : t.resets) v[static_cast<size_t>(r)] = Rational(0);
    }
    return trace;
}

// ── Winning-state predicates ────────────────────────────────────────────────

namespace {

Federation location_winning(const TIOA& a, const std::string& loc,
                            const WinningMap& w) {
    auto it = w.find(loc);
    return it == w.end() ? Federation::empty(a.num_clocks()) : it->second;
}

}  // namespace

Federation auto_bot(const TIOA& a, const std::string& loc) {
    const Location& l = a.location(loc);
    Federation legal = a.legal(l);
    Federation out = Federation::empty(a.num_clocks());
    for (const Transition& t : a.transitions) {
        if (t.from != loc || !a.alphabet.is_output(t.action)) continue;
        const Location& target = a.location(t.to);
        Federation bad;
        if (target.kind == LocKind::Bottom)
            bad = Federation::universe(a.num_clocks());
        else if (target.kind == LocKind::Top)
            continue;
        else
            bad = target.invariant.subtract(target.coinvariant);
        out = out.unite(fed_of(t.guard).intersect(legal).intersect(bad.pre_reset(t.resets)));
    }
    return out;
}

Federation semi_bot(const TIOA& a, const std::string& loc, const WinningMap& current) {
    const Location& l = a.location(loc);
    Federation legal = a.legal(l);
    Federation target = l.invariant.subtract(l.coinvariant)
                            .unite(location_winning(a, loc, current));
    Federation escape = Federation::empty(a.num_clocks());
    for (const Transition& t : a.transitions) {
        if (t.from != loc || !a.alphabet.is_input(t.action)) continue;
        const Location& tl = a.location(t.to);
        if (tl.kind != LocKind::Plain) continue;  // inputs to ⊤/⊥ are no escape
        Federation good = a.legal(tl).subtract(location_winning(a, t.to, current));
        escape = escape.unite(fed_of(t.guard).intersect(legal)
                                  .intersect(good.pre_reset(t.resets)));
    }
    return Federation::timed_pred(target, escape).intersect(legal);
}

Federation auto_top(const TIOA& a, const std::string& loc) {
    const Location& l = a.location(loc);
    Federation legal = a.legal(l);
    Federation out = Federation::empty(a.num_clocks());
    for (const Transition& t : a.transitions) {
        if (t.from != loc || !a.alphabet.is_input(t.action)) continue;
        const Location& target = a.location(t.to);
        Federation bad;
        if (target.kind == LocKind::Top)
            bad = Federation::universe(a.num_clocks());
        else if (target.kind == LocKind::Bottom)
            continue;
        else
            bad = target.invariant.complement();  // magic action region
        out = out.unite(fed_of(t.guard).intersect(legal).intersect(bad.pre_reset(t.resets)));
    }
    return out;
}

Federation semi_top(const TIOA& a, const std::string& loc, const WinningMap& current) {
    const Location& l = a.location(loc);
    Federation legal = a.legal(l);
    Federation target =
        l.invariant.complement().unite(location_winning(a, loc, current));
    // outputs escape to plain non-winning states or into ⊥ (error action);
    // the ⊥-delay region blocks the way to ⊤ (priority to the invariant)
    Federation escape = Federation::empty(a.num_clocks());
    for (const Transition& t : a.transitions) {
        if (t.from != loc || !a.alphabet.is_output(t.action)) continue;
        const Location& tl = a.location(t.to);
        Federation good;
        if (tl.kind == LocKind::Bottom)
            good = Federation::universe(a.num_clocks());
        else if (tl.kind == LocKind::Top)
            continue;
        else
            good = a.legal(tl).subtract(location_winning(a, t.to, current))
                       .unite(tl.invariant.subtract(tl.coinvariant));
        escape = escape.unite(fed_of(t.guard).intersect(legal)
                                  .intersect(good.pre_reset(t.resets)));
    }
    Federation obstacle = escape.unite(l.invariant.subtract(l.coinvariant));
    return Federation::timed_pred(target, obstacle).intersect(legal);
}

namespace {

WinningMap winning_fixpoint(const TIOA& a, bool bottom) {
    WinningMap w;
    const long long k = a.max_constant();
    for (const Location& l : a.locations)
        if (l.kind == LocKind::Plain) w[l.name] = Federation::empty(a.num_clocks());
    for (int round = 0; round < kMaxRounds; ++round) {
        bool changed = false;
        for (const Location& l : a.locations) {
            if (l.kind != LocKind::Plain) continue;
            Federation gen = bottom
                                 ? auto_bot(a, l.name).unite(semi_bot(a, l.name, w))
                                 : auto_top(a, l.name).unite(semi_top(a, l.name, w));
            Federation next = w[l.name].unite(gen).extrapolated(k);
            if (!next.subset_of(w[l.name])) {
                w[l.name] = next;
                changed = true;
            }
        }
        if (!changed) return w;
    }
    throw std::logic_error("winning fixpoint did not stabilize");
}

}  // namespace

WinningMap bot_winning(const TIOA& a) { return winning_fixpoint(a, true); }
WinningMap top_winning(const TIOA& a) { return winning_fixpoint(a, false); }

// ── Specification check ─────────────────────────────────────────────────────

bool is_specification(const TIOA& a) {
    if (a.is_top_tioa()) return false;
    if (a.is_bot_tioa()) return true;
    ZoneGraph g = explore(a);
    if (g.top_node >= 0)
        for (const auto& e : g.edges)
            if (e.to == g.top_node) return false;
    if (g.initial == g.top_node && g.top_node >= 0) return false;
    WinningMap none;
    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        auto it = g.reached.find(l.name);
        if (it == g.reached.end() || it->second.is_empty()) continue;
        if (!auto_top(a, l.name).intersect(it->second).is_empty()) return false;
        if (!semi_top(a, l.name, none).intersect(it->second).is_empty()) return false;
    }
    return true;
}

// ── Backpropagation synthesis ───────────────────────────────────────────────

namespace {

// Shared engine for normalise (bottom = true) and realise (bottom = false).
// Strengthens the co-invariant (resp. invariant) of every location by the
// downward-closed core of what is left after removing the winning
// generators, then rebuilds the automaton: offending transition parts are
// redirected to the chaotic location and removed per ⊥-removal (inputs)
// resp. ⊤-removal (outputs).
TIOA backpropagate(const TIOA& a, bool bottom) {
    const char* who = bottom ? "normalise" : "realise";
    require_deterministic(a, who);
    if (bottom && a.is_bot_tioa()) return a;
    if (!bottom && a.is_top_tioa()) return a;
    if (bottom && a.is_top_tioa())
        throw UsageError("normalise: the ⊤-TIOA is not a specification");
    if (!bottom && a.is_bot_tioa()) return a;

    const int n = a.num_clocks();
    const long long k = a.max_constant();

    // cur: the strengthened bound per plain location
    std::map<std::string, Federation> cur;   // coInv for ⊥, Inv for ⊤
    std::map<std::string, Federation> excised;
    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        cur[l.name] = bottom ? l.coinvariant : l.invariant;
        excised[l.name] = Federation::empty(n);
    }

    auto fixed_bound = [&](const Location& l) {
        return bottom ? l.invariant : l.coinvariant;
    };
    auto cur_of = [&](const std::string& name) -> const Federation& {
        return cur.at(name);
    };
    // target regions seen through the current strengthening
    auto target_bad = [&](const Location& tl) -> Federation {
        if (bottom) {
            if (tl.kind == LocKind::Bottom) return Federation::universe(n);
            if (tl.kind == LocKind::Top) return Federation::empty(n);
            // error region: Inv' ∧ ¬coInv'_cur
            return tl.invariant.subtract(cur_of(tl.name));
        }
        if (tl.kind == LocKind::Top) return Federation::universe(n);
        if (tl.kind == LocKind::Bottom) return Federation::empty(n);
        // magic region: ¬Inv'_cur
        return cur_of(tl.name).complement();
    };
    auto target_good = [&](const Location& tl) -> Federation {
        if (bottom) {
            if (tl.kind != LocKind::Plain) return Federation::empty(n);
            return tl.invariant.intersect(cur_of(tl.name));
        }
        if (tl.kind == LocKind::Bottom) return Federation::universe(n);
        if (tl.kind == LocKind::Top) return Federation::empty(n);
        // plain continuation or an error action into ⊥ both avoid ⊤
        return cur_of(tl.name);
    };

    for (int round = 0; round < kMaxRounds; ++round) {
        bool changed = false;
        for (const Location& l : a.locations) {
            if (l.kind != LocKind::Plain) continue;
            // generator transitions: outputs for ⊥, inputs for ⊤
            Federation gen = Federation::empty(n);
            Federation escape = Federation::empty(n);
            for (const Transition& t : a.transitions) {
                if (t.from != l.name) continue;
                bool generator = bottom ? a.alphabet.is_output(t.action)
                                        : a.alphabet.is_input(t.action);
                const Location& tl = a.location(t.to);
                if (generator) {
                    Federation bad = target_bad(tl);
                    if (!bad.is_empty())
                        gen = gen.unite(fed_of(t.guard).intersect(bad.pre_reset(t.resets)));
                } else {
                    Federation good = target_good(tl);
                    if (!good.is_empty())
                        escape = escape.unite(
                            fed_of(t.guard)
                                .intersect(cur_of(l.name).intersect(fixed_bound(l)))
                                .intersect(good.pre_reset(t.resets)));
                }
            }
            // unavoidable delays into the bad region
            Federation delay_target = bottom
                                          ? l.invariant.subtract(cur_of(l.name))
                                          : cur_of(l.name).complement();
            Federation obstacle = escape;
            if (!bottom)
                obstacle = obstacle.unite(cur_of(l.name).subtract(l.coinvariant));
            gen = gen.unite(Federation::timed_pred(delay_target, obstacle));

            Federation exc = excised[l.name].unite(gen).extrapolated(k);
            if (!exc.subset_of(excised[l.name])) {
                excised[l.name] = exc;
                Federation base = bottom ? a.location(l.name).coinvariant
                                         : a.location(l.name).invariant;
                Federation next = base.subtract(exc).down_closed_core();
                if (bottom) {
                    // A co-invariant is only ever read inside the invariant;
                    // zones that never meet it are noise kept alive by the
                    // clock floor. Dropping them (and re-coring) leaves the
                    // Inv-trace untouched: legal pasts stay legal.
                    std::vector<Zone> keep;
                    for (const Zone& z : next.zones())
                        if (!Federation::of(z).intersect(l.invariant).is_empty())
                            keep.push_back(z);
                    next = Federation::of_zones(std::move(keep), n).down_closed_core();
                }
                cur[l.name] = next;
                changed = true;
            }
        }
        if (!changed) break;
        if (round + 1 == kMaxRounds)
            throw std::logic_error("backpropagation did not stabilize");
    }

    // initial state winning?
    {
        const Location& l0 = a.location(a.initial);
        if (l0.kind == LocKind::Plain) {
            std::vector<Rational> zeros(static_cast<size_t>(n) + 1, Rational(0));
            if (!cur.at(a.initial).contains(zeros) || !fixed_bound(l0).contains(zeros))
                return bottom ? make_bot_tioa(a.alphabet, a.clocks)
                              : make_top_tioa(a.alphabet, a.clocks);
        }
    }

    // rebuild
    TIOA r;
    r.clocks = a.clocks;
    r.alphabet = a.alphabet;
    r.initial = a.initial;
    std::set<std::string> kept;
    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        Federation inv = bottom ? l.invariant : cur.at(l.name);
        Federation coinv = bottom ? cur.at(l.name) : l.coinvariant;
        if (inv.intersect(coinv).is_empty()) continue;  // location fully collapsed
        r.locations.emplace_back(l.name, inv, coinv);
        kept.insert(l.name);
    }

    for (const Transition& t : a.transitions) {
        if (!kept.count(t.from)) continue;
        const Location& tl = a.location(t.to);
        bool removal_side = bottom ? a.alphabet.is_input(t.action)
                                   : a.alphabet.is_output(t.action);
        if (tl.kind == LocKind::Bottom) {
            if (bottom) continue;  // ⊥-removal drops inputs; outputs are vacuous
            // realise keeps error transitions into ⊥ untouched
            r.ensure_bot();
            r.transitions.push_back(t);
            continue;
        }
        if (tl.kind == LocKind::Top) {
            if (!bottom) continue;  // ⊤-removal (outputs) / vacuous auto-⊤ inputs
            r.ensure_top();
            r.transitions.push_back(t);
            continue;
        }
        if (!kept.count(t.to)) {
            // fully collapsed target: for ⊥, input parts landing outside the
            // target invariant are still magic — keep them, pointed at ⊤
            if (bottom && a.alphabet.is_input(t.action)) {
                Federation magic = fed_of(t.guard).subtract(
                    tl.invariant.pre_reset(t.resets));
                for (const Zone& z : magic.zones()) {
                    r.ensure_top();
                    r.transitions.emplace_back(t.from, z, t.action, t.resets, kTopName);
                }
            }
            continue;
        }
        if (removal_side) {
            Federation bad = bottom
                                 ? tl.invariant.subtract(cur.at(t.to))
                                 : cur.at(t.to).complement();
            Federation guard = fed_of(t.guard).subtract(bad.pre_reset(t.resets));
            for (const Zone& z : guard.zones())
                r.transitions.emplace_back(t.from, z, t.action, t.resets, t.to);
        } else {
            r.transitions.push_back(t);
        }
    }
    r.prune_unreachable();
    return r;
}

}  // namespace

TIOA normalise(const TIOA& a) {
    if (!a.is_bot_tioa() && !is_specification(a))
        throw UsageError("normalise: operand is not a specification (⊤ or semi-⊤ present)");
    return backpropagate(a, true);
}

TIOA realise(const TIOA& a) { return backpropagate(a, false); }

}  // namespace tio
