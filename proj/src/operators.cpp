// ============================================================================
// operators.cpp — operator recipes
// ============================================================================

#include "tio/operators.hpp"

namespace tio {

namespace {

void require_spec(const TIOA& a, const char* who) {
    // the chaotic sentinels are first-class operands
    if (a.is_bot_tioa() || a.is_top_tioa()) return;
    if (!is_specification(a))
        throw UsageError(std::string(who) +
                         ": operand is not a specification (⊤ or semi-⊤ present)");
}

TIOA completed(const TIOA& a) { return top_complete(bot_complete(a)); }

}  // namespace

TIOA io_switch(const TIOA& a) {
    TIOA r = a;
    std::swap(r.alphabet.inputs, r.alphabet.outputs);
    for (Location& l : r.locations) {
        std::swap(l.invariant, l.coinvariant);
        if (l.kind == LocKind::Top) {
            l.kind = LocKind::Bottom;
            l.name = kBotName;
        } else if (l.kind == LocKind::Bottom) {
            l.kind = LocKind::Top;
            l.name = kTopName;
        }
    }
    auto flip = [](std::string& name) {
        if (name == kTopName)
            name = kBotName;
        else if (name == kBotName)
            name = kTopName;
    };
    for (Transition& t : r.transitions) {
        flip(t.from);
        flip(t.to);
    }
    flip(r.initial);
    return r;
}

TIOA parallel(const TIOA& a, const TIOA& b) {
    require_spec(a, "parallel");
    require_spec(b, "parallel");
    return sync_product(OpKind::PAR, bot_complete(a), bot_complete(b));
}

TIOA conjunction(const TIOA& a, const TIOA& b) {
    require_spec(a, "conjunction");
    require_spec(b, "conjunction");
    alphabet_compose(OpKind::CONJ, a.alphabet, b.alphabet);
    TIOA an = normalise(a);
    TIOA bn = normalise(b);
    return realise(sync_product(OpKind::CONJ, completed(an), completed(bn)));
}

TIOA disjunction(const TIOA& a, const TIOA& b) {
    require_spec(a, "disjunction");
    require_spec(b, "disjunction");
    alphabet_compose(OpKind::DISJ, a.alphabet, b.alphabet);
    return top_remove(sync_product(OpKind::DISJ, completed(a), completed(b)));
}

TIOA mirror(const TIOA& a) {
    require_spec(a, "mirror");
    return realise(io_switch(top_complete(a)));
}

TIOA quotient(const TIOA& spec, const TIOA& plant) {
    require_spec(spec, "quotient");
    require_spec(plant, "quotient");
    alphabet_compose(OpKind::QUOT, spec.alphabet, plant.alphabet);
    TIOA sn = normalise(spec);
    return realise(sync_product(OpKind::QUOT, completed(sn), completed(plant)));
}

TIOA quotient_via_mirror(const TIOA& spec, const TIOA& plant) {
    return mirror(parallel(mirror(spec), plant));
}

RefinementVerdict refines(const TIOA& impl, const TIOA& spec) {
    if (!(impl.alphabet == spec.alphabet))
        throw ComposabilityError("refines requires identical alphabets");
    require_spec(impl, "refines");
    require_spec(spec, "refines");
    TIOA closed = parallel(mirror(spec), impl);
    RefinementVerdict v;
    v.witness = bot_reachable(closed);
    v.holds = !v.witness.has_value();
    if (v.holds) v.witness.reset();
    return v;
}

bool equivalent(const TIOA& a, const TIOA& b) {
    return refines(a, b).holds && refines(b, a).holds;
}

bool consistent(const TIOA& a) { return !normalise(a).is_bot_tioa(); }

}  // namespace tio
