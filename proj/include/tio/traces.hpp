// ============================================================================
// tio/traces.hpp — timed traces and the run-classification oracle
// ============================================================================
//
// A timed trace is an alternating sequence of strictly positive delays and
// action names; adjacent delays are always coalesced. Delays are exact
// rationals — guard boundary cases (x = 1 versus x < 1) must be decided
// exactly, never in floating point.
//
// Text format: comma-separated tokens, numbers as integers or `p/q`,
// e.g. `start, 2, print, 1/2, printed`.
//
// ============================================================================

#ifndef TIO_TRACES_HPP
#define TIO_TRACES_HPP

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tio/model.hpp"

namespace tio {

struct TimedTrace {
    using Step = std::variant<Rational, std::string>;  // delay | action
    std::vector<Step> steps;

    static TimedTrace parse(const std::string& text);
    std::string to_string() const;

    /// Append a delay, coalescing with a trailing delay; zero is dropped.
    void push_delay(const Rational& d);
    void push_action(const std::string& a);

    /// Concatenation with delay coalescing at the seam.
    TimedTrace concat(const TimedTrace& o) const;

    /// Keep only the given actions, summing the delays in between.
    TimedTrace project(const std::set<std::string>& keep) const;

    /// Sum of all delays.
    Rational duration() const;
    /// Number of action occurrences.
    size_t action_count() const;

    bool operator==(const TimedTrace& o) const { return steps == o.steps; }
};

enum class TraceClass { TP, TE, TM };

const char* trace_class_name(TraceClass c);

/// Run the trace on the ⊤/⊥-completed semantics of a deterministic TIOA:
/// TP while only plain states are visited, TE once the run is absorbed in
/// ⊥ (disabled input, error action, or time-out delay), TM once absorbed
/// in ⊤ (disabled output or delay beyond the invariant).
TraceClass classify(const TIOA& a, const TimedTrace& t);

}  // namespace tio

#endif  // TIO_TRACES_HPP
