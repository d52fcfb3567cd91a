// ============================================================================
// traces.cpp — trace algebra and classification
// ============================================================================

#include "tio/traces.hpp"

#include <sstream>

namespace tio {

// ── Trace algebra ───────────────────────────────────────────────────────────

void TimedTrace::push_delay(const Rational& d) {
    if (d < Rational(0)) throw std::invalid_argument("negative delay");
    if (d == Rational(0)) return;
    if (!steps.empty() && std::holds_alternative<Rational>(steps.back()))
        std::get<Rational>(steps.back()) += d;
    else
        steps.emplace_back(d);
}

void TimedTrace::push_action(const std::string& a) { steps.emplace_back(a); }

TimedTrace TimedTrace::concat(const TimedTrace& o) const {
    TimedTrace r = *this;
    for (const Step& s : o.steps) {
        if (std::holds_alternative<Rational>(s))
            r.push_delay(std::get<Rational>(s));
        else
            r.push_action(std::get<std::string>(s));
    }
    return r;
}

TimedTrace TimedTrace::project(const std::set<std::string>& keep) const {
    TimedTrace r;
    for (const Step& s : steps) {
        if (std::holds_alternative<Rational>(s))
            r.push_delay(std::get<Rational>(s));
        else if (keep.count(std::get<std::string>(s)))
            r.push_action(std::get<std::string>(s));
    }
    return r;
}

Rational TimedTrace::duration() const {
    Rational d(0);
    for (const Step& s : steps)
        if (std::holds_alternative<Rational>(s)) d += std::get<Rational>(s);
    return d;
}

size_t TimedTrace::action_count() const {
    size_t n = 0;
    for (const Step& s : steps)
        if (std::holds_alternative<std::string>(s)) ++n;
    return n;
}

namespace {

Rational parse_rational(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(tok));
        long long num = std::stoll(tok.substr(0, slash));
        long long den = std::stoll(tok.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + tok + "' in trace");
    }
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

TimedTrace TimedTrace::parse(const std::string& text) {
    TimedTrace t;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            Rational d = parse_rational(tok);
            if (d <= Rational(0)) throw ParseError("trace delays must be positive");
            t.push_delay(d);
        } else {
            t.push_action(tok);
        }
    }
    return t;
}

std::string TimedTrace::to_string() const {
    std::ostringstream oss;
    bool first = true;
    for (const Step& s : steps) {
        if (!first) oss << ", ";
        first = false;
        if (std::holds_alternative<Rational>(s)) {
            const Rational& d = std::get<Rational>(s);
            oss << d.numerator();
            if (d.denominator() != 1) oss << "/" << d.denominator();
        } else {
            oss << std::get<std::string>(s);
        }
    }
    return oss.str();
}

// ── Classification ──────────────────────────────────────────────────────────

const char* trace_class_name(TraceClass c) {
    switch (c) {
        case TraceClass::TP: return "TP";
        case TraceClass::TE: return "TE";
        case TraceClass::TM: return "TM";
    }
    return "?";
}

namespace {

struct Run {
    const TIOA& a;
    const Location* loc = nullptr;
    ClockValuation val;
    TraceClass cls = TraceClass::TP;

    explicit Run(const TIOA& tioa) : a(tioa), val(ClockValuation::zeros(tioa.num_clocks())) {
        loc = &a.location(a.initial);
        if (loc->kind == LocKind::Top) {
            cls = TraceClass::TM;
            return;
        }
        if (loc->kind == LocKind::Bottom) {
            cls = TraceClass::TE;
            return;
        }
        if (!loc->invariant.contains(val.values)) {
            cls = TraceClass::TM;
        } else if (!loc->coinvariant.contains(val.values)) {
            cls = TraceClass::TE;
        }
    }

    bool absorbed() const { return cls != TraceClass::TP; }

    // Does v + d' lie in F for some d' in [0, d]? Exact rational check per
    // zone: memberships along the delay line form rational intervals.
    bool hits_within(const Federation& f, const Rational& d) const {
        for (const Zone& z : f.zones()) {
            Rational lo(0), hi = d;
            bool lo_open = false, hi_open = false, feasible = true, hi_unbounded = false;
            (void)hi_unbounded;
            for (int i = 0; i <= a.num_clocks() && feasible; ++i)
                for (int j = 0; j <= a.num_clocks() && feasible; ++j) {
                    if (i == j) continue;
                    Bound b = z.bound(i, j);
                    if (b.is_infinity()) continue;
                    Rational bb(b.value());
                    if (i >= 1 && j >= 1) {
                        if (!b.admits(val.values[i] - val.values[j])) feasible = false;
                    } else if (j == 0) {  // v_i + d' <= bb
                        Rational cap = bb - val.values[i];
                        if (cap < hi || (cap == hi && b.is_strict() && !hi_open)) {
                            hi = cap;
                            hi_open = b.is_strict();
                        }
                    } else {  // -v_j - d' <= bb, i.e. d' >= -bb - v_j
                        Rational floor = -bb - val.values[j];
                        if (floor > lo || (floor == lo && b.is_strict() && !lo_open)) {
                            lo = floor;
                            lo_open = b.is_strict();
                        }
                    }
                }
            if (!feasible) continue;
            if (lo < hi || (lo == hi && !lo_open && !hi_open)) return true;
        }
        return false;
    }

    void delay(const Rational& d) {
        if (absorbed()) return;
        ClockValuation next = val.delayed(d);
        Federation legal = loc->invariant.intersect(loc->coinvariant);
        if (legal.contains(next.values)) {  // downward-closed: segment stays legal
            val = next;
            return;
        }
        Federation timeout = loc->invariant.subtract(loc->coinvariant);
        cls = hits_within(timeout, d) ? TraceClass::TE : TraceClass::TM;
    }

    void fire(const std::string& action) {
        if (absorbed()) return;
        bool input = a.alphabet.is_input(action);
        if (!a.alphabet.has(action))
            throw ModelError("action '" + action + "' not in the alphabet");
        const Transition* hit = nullptr;
        for (const Transition& t : a.transitions) {
            if (t.from != loc->name || t.action != action) continue;
            if (t.guard.contains(val.values)) {
                hit = &t;
                break;  // deterministic
            }
        }
        if (!hit) {  // completion: disabled input traps, disabled output is magic
            cls = input ? TraceClass::TE : TraceClass::TM;
            return;
        }
        const Location& target = a.location(hit->to);
        ClockValuation landed = val.reset(hit->resets);
        if (target.kind == LocKind::Top) {
            cls = TraceClass::TM;
            return;
        }
        if (target.kind == LocKind::Bottom) {
            cls = TraceClass::TE;
            return;
        }
        if (!target.invariant.contains(landed.values)) {
            // magic action for inputs, disabled (hence magic) for outputs
            cls = TraceClass::TM;
            return;
        }
        if (!target.coinvariant.contains(landed.values)) {
            // error action for outputs, trapped input for inputs
            cls = TraceClass::TE;
            return;
        }
        loc = &target;
        val = landed;
    }
};

}  // namespace

TraceClass classify(const TIOA& a, const TimedTrace& t) {
    Run run(a);
    for (const TimedTrace::Step& s : t.steps) {
        if (run.absorbed()) break;
        if (std::holds_alternative<Rational>(s))
            run.delay(std::get<Rational>(s));
        else
            run.fire(std::get<std::string>(s));
    }
    return run.cls;
}

}  // namespace tio
