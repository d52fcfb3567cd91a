// ============================================================================
// product.cpp — state-to-process lifting
// ============================================================================

#include "tio/product.hpp"

#include <algorithm>
#include <deque>

namespace tio {

StateClass state_mirror(StateClass s) {
    switch (s) {
        case StateClass::TOP: return StateClass::BOT;
        case StateClass::BOT: return StateClass::TOP;
        default: return StateClass::PLAIN;
    }
}

ComposedState state_compose(OpKind op, StateClass s0, StateClass s1) {
    using K = ComposedState::Kind;
    const bool t0 = s0 == StateClass::TOP, t1 = s1 == StateClass::TOP;
    const bool b0 = s0 == StateClass::BOT, b1 = s1 == StateClass::BOT;
    switch (op) {
        case OpKind::PAR:
            // top has priority over bottom
            if (t0 || t1) return {K::Top};
            if (b0 || b1) return {K::Bot};
            return {K::Pair};
        case OpKind::CONJ:
            // top absorbs, bottom is the unit
            if (t0 || t1) return {K::Top};
            if (b0 && b1) return {K::Bot};
            if (b1) return {K::SoloLeft};
            if (b0) return {K::SoloRight};
            return {K::Pair};
        case OpKind::DISJ:
            // bottom absorbs, top is the unit
            if (b0 || b1) return {K::Bot};
            if (t0 && t1) return {K::Top};
            if (t1) return {K::SoloLeft};
            if (t0) return {K::SoloRight};
            return {K::Pair};
        case OpKind::QUOT: {
            // s0 % s1 = mirror(mirror(s0) || s1)
            StateClass m0 = state_mirror(s0);
            if (m0 == StateClass::TOP || s1 == StateClass::TOP) return {K::Bot};
            if (m0 == StateClass::BOT || s1 == StateClass::BOT) return {K::Top};
            return {K::Pair};
        }
    }
    return {K::Pair};
}

Alphabet alphabet_compose(OpKind op, const Alphabet& a, const Alphabet& b) {
    Alphabet r;
    switch (op) {
        case OpKind::PAR: {
            for (const std::string& o : a.outputs)
                if (b.outputs.count(o))
                    throw ComposabilityError("parallel requires disjoint outputs ('" + o +
                                             "' is an output of both operands)");
            for (const std::string& s : a.outputs) r.outputs.insert(s);
            for (const std::string& s : b.outputs) r.outputs.insert(s);
            for (const std::string& s : a.inputs)
                if (!r.outputs.count(s)) r.inputs.insert(s);
            for (const std::string& s : b.inputs)
                if (!r.outputs.count(s)) r.inputs.insert(s);
            return r;
        }
        case OpKind::CONJ:
        case OpKind::DISJ:
            if (!(a == b))
                throw ComposabilityError(op == OpKind::CONJ
                                             ? "conjunction requires identical alphabets"
                                             : "disjunction requires identical alphabets");
            return a;
        case OpKind::QUOT: {
            for (const std::string& s : b.outputs)
                if (!a.outputs.count(s))
                    throw ComposabilityError(
                        "quotient requires the divisor's outputs to be outputs of the "
                        "dividend ('" + s + "' is not)");
            std::set<std::string> a_all = a.all();
            for (const std::string& s : b.inputs)
                if (!a_all.count(s))
                    throw ComposabilityError(
                        "quotient requires the divisor's alphabet inside the dividend's "
                        "('" + s + "' is not)");
            r.inputs = a.inputs;
            for (const std::string& s : b.outputs) r.inputs.insert(s);
            for (const std::string& s : a.outputs)
                if (!b.outputs.count(s)) r.outputs.insert(s);
            return r;
        }
    }
    return r;
}

std::pair<Federation, Federation> invariant_compose(OpKind op, const Federation& inv0,
                                                    const Federation& coinv0,
                                                    const Federation& inv1,
                                                    const Federation& coinv1) {
    switch (op) {
        case OpKind::PAR:
            return {inv0.intersect(inv1), coinv0.intersect(coinv1)};
        case OpKind::CONJ:
            return {inv0.intersect(inv1), coinv0.unite(coinv1)};
        case OpKind::DISJ:
            return {inv0.unite(inv1), coinv0.intersect(coinv1)};
        case OpKind::QUOT:
            return {inv0.intersect(coinv1), coinv0.intersect(inv1)};
    }
    return {inv0, coinv0};
}

namespace {

StateClass class_of(const Location& l) {
    switch (l.kind) {
        case LocKind::Top: return StateClass::TOP;
        case LocKind::Bottom: return StateClass::BOT;
        default: return StateClass::PLAIN;
    }
}

std::string pair_name(const std::string& a, const std::string& b) { return a + "*" + b; }

}  // namespace

TIOA sync_product(OpKind op, const TIOA& left, const TIOA& right,
                  std::map<std::string, std::string>* renamed) {
    TIOA b = right;
    // clock disjointness by renaming the right operand's colliding clocks
    {
        std::set<std::string> taken(left.clocks.begin(), left.clocks.end());
        for (std::string& c : b.clocks) {
            if (!taken.count(c)) {
                taken.insert(c);
                continue;
            }
            std::string fresh = c;
            do fresh += "'";
            while (taken.count(fresh));
            if (renamed) (*renamed)[c] = fresh;
            taken.insert(fresh);
            c = fresh;
        }
    }

    TIOA p;
    p.alphabet = alphabet_compose(op, left.alphabet, b.alphabet);
    p.clocks = left.clocks;
    p.clocks.insert(p.clocks.end(), b.clocks.begin(), b.clocks.end());
    const int n = p.num_clocks();
    const int n0 = left.num_clocks();

    std::vector<int> lmap(static_cast<size_t>(n0) + 1), rmap(b.clocks.size() + 1);
    lmap[0] = rmap[0] = 0;
    for (int i = 1; i <= n0; ++i) lmap[static_cast<size_t>(i)] = i;
    for (size_t i = 1; i < rmap.size(); ++i) rmap[i] = n0 + static_cast<int>(i);

    auto embed_l = [&](const Federation& f) { return f.embedded(n, lmap); };
    auto embed_r = [&](const Federation& f) { return f.embedded(n, rmap); };
    auto embed_lz = [&](const Zone& z) { return z.embedded(n, lmap); };
    auto embed_rz = [&](const Zone& z) { return z.embedded(n, rmap); };
    auto map_resets = [](const std::vector<int>& rs, const std::vector<int>& map) {
        std::vector<int> out;
        for (int r : rs) out.push_back(map[static_cast<size_t>(r)]);
        return out;
    };

    std::set<std::string> shared;
    for (const std::string& s : left.alphabet.all())
        if (b.alphabet.has(s)) shared.insert(s);

    // composed-state bookkeeping; names never get re-parsed, the operand
    // locations ride along in the worklist. Names must be injective across
    // nesting: solo names are braced so that pair("L:{x}", y) can never
    // collide with solo(x*y), and an identity map catches the remaining
    // theoretical pair-name ambiguities by renaming deterministically.
    enum class CKind { Pair, SoloLeft, SoloRight };
    struct Pending {
        std::string name;
        CKind kind;
        std::string la, lb;
    };
    std::deque<Pending> work;
    std::map<std::string, std::tuple<CKind, std::string, std::string>> seen;

    auto intern = [&](std::string name, CKind kind, const std::string& la,
                      const std::string& lb) -> std::string {
        auto identity = std::make_tuple(kind, la, lb);
        while (true) {
            auto it = seen.find(name);
            if (it == seen.end()) {
                seen.emplace(name, identity);
                work.push_back({name, kind, la, lb});
                return name;
            }
            if (it->second == identity) return name;
            name += "'";
        }
    };
    auto enqueue = [&](ComposedState cs, const std::string& la, const std::string& lb)
        -> std::string {
        switch (cs.kind) {
            case ComposedState::Kind::Top: return kTopName;
            case ComposedState::Kind::Bot: return kBotName;
            case ComposedState::Kind::SoloLeft:
                // the discarded operand is no part of the state's identity
                return intern("L:{" + la + "}", CKind::SoloLeft, la, "");
            case ComposedState::Kind::SoloRight:
                return intern("R:{" + lb + "}", CKind::SoloRight, "", lb);
            default:
                return intern(pair_name(la, lb), CKind::Pair, la, lb);
        }
    };
    auto add_transition = [&](const std::string& from, const Zone& g,
                              const std::string& act, std::vector<int> rs,
                              const std::string& to) {
        if (g.is_empty()) return;
        if (to == kTopName) p.ensure_top();
        if (to == kBotName) p.ensure_bot();
        p.transitions.emplace_back(from, g, act, std::move(rs), to);
    };

    // initial composed state
    {
        ComposedState cs = state_compose(op, class_of(left.location(left.initial)),
                                         class_of(b.location(b.initial)));
        if (cs.kind == ComposedState::Kind::Top) {
            p.initial = kTopName;
            p.ensure_top();
            return p;
        }
        if (cs.kind == ComposedState::Kind::Bot) {
            p.initial = kBotName;
            p.ensure_bot();
            return p;
        }
        p.initial = enqueue(cs, left.initial, b.initial);
    }

    auto expand_solo = [&](const Pending& cur, bool is_left) {
        const TIOA& side = is_left ? left : b;
        const std::string& base = is_left ? cur.la : cur.lb;
        const Location& l = side.location(base);
        const std::vector<int>& map = is_left ? lmap : rmap;
        auto embed_f = [&](const Federation& f) { return f.embedded(n, map); };
        auto embed_z = [&](const Zone& z) { return z.embedded(n, map); };
        p.locations.emplace_back(cur.name, embed_f(l.invariant), embed_f(l.coinvariant));
        for (const Transition& t : side.transitions) {
            if (t.from != base) continue;
            StateClass tc = class_of(side.location(t.to));
            std::string to;
            if (tc == StateClass::TOP)
                to = kTopName;
            else if (tc == StateClass::BOT)
                to = kBotName;
            else
                to = enqueue({is_left ? ComposedState::Kind::SoloLeft
                                      : ComposedState::Kind::SoloRight},
                             is_left ? t.to : "", is_left ? "" : t.to);
            add_transition(cur.name, embed_z(t.guard), t.action,
                           map_resets(t.resets, map), to);
        }
    };

    auto expand_pair = [&](const Pending& cur) {
        const std::string& la = cur.la;
        const std::string& lb = cur.lb;
        const Location& l0 = left.location(la);
        const Location& l1 = b.location(lb);
        auto [inv, coinv] = invariant_compose(op, embed_l(l0.invariant),
                                              embed_l(l0.coinvariant),
                                              embed_r(l1.invariant),
                                              embed_r(l1.coinvariant));
        p.locations.emplace_back(cur.name, std::move(inv), std::move(coinv));

        for (const Transition& t0 : left.transitions) {
            if (t0.from != la) continue;
            if (shared.count(t0.action)) {
                for (const Transition& t1 : b.transitions) {
                    if (t1.from != lb || t1.action != t0.action) continue;
                    Zone g = embed_lz(t0.guard).intersect(embed_rz(t1.guard));
                    if (g.is_empty()) continue;
                    ComposedState cs =
                        state_compose(op, class_of(left.location(t0.to)),
                                      class_of(b.location(t1.to)));
                    std::string to = enqueue(cs, t0.to, t1.to);
                    std::vector<int> rs = map_resets(t0.resets, lmap);
                    for (int r : map_resets(t1.resets, rmap)) rs.push_back(r);
                    add_transition(cur.name, g, t0.action, std::move(rs), to);
                }
            } else {
                ComposedState cs = state_compose(op, class_of(left.location(t0.to)),
                                                 StateClass::PLAIN);
                std::string to = enqueue(cs, t0.to, lb);
                add_transition(cur.name, embed_lz(t0.guard), t0.action,
                               map_resets(t0.resets, lmap), to);
            }
        }
        for (const Transition& t1 : b.transitions) {
            if (t1.from != lb || shared.count(t1.action)) continue;
            ComposedState cs =
                state_compose(op, StateClass::PLAIN, class_of(b.location(t1.to)));
            std::string to = enqueue(cs, la, t1.to);
            add_transition(cur.name, embed_rz(t1.guard), t1.action,
                           map_resets(t1.resets, rmap), to);
        }
    };

    while (!work.empty()) {
        Pending cur = work.front();
        work.pop_front();
        switch (cur.kind) {
            case CKind::SoloLeft: expand_solo(cur, true); break;
            case CKind::SoloRight: expand_solo(cur, false); break;
            case CKind::Pair: expand_pair(cur); break;
        }
    }

    p.prune_unreachable();
    return p;
}

}  // namespace tio
