// ============================================================================
// tio/model.hpp — timed I/O automata
// ============================================================================
//
// A TIOA has locations carrying an invariant (liveness guarantee bound) and
// a co-invariant (liveness assumption bound), plus guarded input/output
// transitions with clock resets. Two reserved locations encode the chaotic
// states:
//
//   __top__  invariant false                 (magic / timestop)
//   __bot__  invariant true, co-invariant false   (error)
//
// File format: UTF-8 JSON, see README. Invariants and co-invariants are
// federations internally; non-convex ones serialize as arrays of
// conjunctive constraint strings.
//
// ============================================================================

#ifndef TIO_MODEL_HPP
#define TIO_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tio/constraints.hpp"
#include "tio/federation.hpp"

namespace tio {

inline const std::string kTopName = "__top__";
inline const std::string kBotName = "__bot__";

struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// ── Alphabet ────────────────────────────────────────────────────────────────

struct Alphabet {
    std::set<std::string> inputs;
    std::set<std::string> outputs;

    bool is_input(const std::string& a) const { return inputs.count(a) > 0; }
    bool is_output(const std::string& a) const { return outputs.count(a) > 0; }
    bool has(const std::string& a) const { return is_input(a) || is_output(a); }
    std::set<std::string> all() const;
    bool operator==(const Alphabet& o) const = default;
};

// ── Location / Transition ──────────────────────────────────────────────────

enum class LocKind { Plain, Top, Bottom };

struct Location {
    std::string name;
    Federation invariant;
    Federation coinvariant;
    LocKind kind = LocKind::Plain;

    Location() : invariant(Federation::empty(0)), coinvariant(Federation::empty(0)) {}
    Location(std::string n, Federation inv, Federation coinv,
             LocKind k = LocKind::Plain)
        : name(std::move(n)), invariant(std::move(inv)),
          coinvariant(std::move(coinv)), kind(k) {}
};

struct Transition {
    std::string from;
    Zone guard;             // convex; disjunctive guards = multiple transitions
    std::string action;
    std::vector<int> resets;  // clock indices
    std::string to;

    Transition() : guard(Zone::empty(0)) {}
    Transition(std::string f, Zone g, std::string a, std::vector<int> rs, std::string t)
        : from(std::move(f)), guard(std::move(g)), action(std::move(a)),
          resets(std::move(rs)), to(std::move(t)) {}
};

// ── ValidationReport ────────────────────────────────────────────────────────

struct Diagnostic {
    enum class Severity { Error, Warning } severity;
    std::string code;
    std::string message;
    std::string site;
};

struct ValidationReport {
    std::vector<Diagnostic> findings;
    bool wellformed = true;
    bool deterministic = true;
    bool strongly_nonzeno_syntactic = true;

    bool ok() const { return wellformed; }
    std::string to_string() const;
};

// ── TIOA ────────────────────────────────────────────────────────────────────

struct TIOA {
    std::vector<std::string> clocks;  // index i+1 in zones
    Alphabet alphabet;
    std::vector<Location> locations;
    std::string initial;
    std::vector<Transition> transitions;

    int num_clocks() const { return static_cast<int>(clocks.size()); }

    int clock_index(const std::string& name) const;    // throws on unknown
    std::vector<int> clock_indices(const std::vector<std::string>& names) const;

    const Location* find_location(const std::string& name) const;
    Location* find_location(const std::string& name);
    const Location& location(const std::string& name) const;  // throws

    /// Inv ∧ coInv of a location.
    Federation legal(const Location& l) const;

    /// Ensure the reserved __top__/__bot__ location exists; returns its name.
    const std::string& ensure_top();
    const std::string& ensure_bot();

    bool is_top_tioa() const { return initial == kTopName; }
    bool is_bot_tioa() const { return initial == kBotName; }

    long long max_constant() const;

    /// Locations syntactically reachable from the initial one.
    std::set<std::string> reachable_locations() const;
    /// Delete unreachable locations and their transitions; reserved
    /// locations are kept only while referenced.
    void prune_unreachable();
};

/// TIOA with every plain location as initial candidate replaced: the trivial
/// inconsistent / unrealisable automata.
TIOA make_bot_tioa(const Alphabet& alphabet, const std::vector<std::string>& clocks);
TIOA make_top_tioa(const Alphabet& alphabet, const std::vector<std::string>& clocks);

// ── Format ──────────────────────────────────────────────────────────────────

/// Parse the JSON automaton format. Structural problems raise ModelError
/// (or ParseError for constraint strings) with a location of the fault.
TIOA parse_tioa(const std::string& text);
TIOA load_tioa(const std::string& path);

/// Deterministic serialization: identical automata produce identical bytes.
std::string serialize_tioa(const TIOA& a);
void store_tioa(const TIOA& a, const std::string& path);

// ── Validation ──────────────────────────────────────────────────────────────

/// Well-formedness (references, downward-closed invariants), determinism
/// (pairwise-disjoint guards per location and action, inside Inv ∧ coInv),
/// and the syntactic strong-non-zenoness check (every syntactic action
/// cycle resets some clock x and guards some cycle transition with x >= c,
/// c >= 1). The last one is advisory: a warning, never an error.
ValidationReport validate(const TIOA& a);

// ── Completion / removal ────────────────────────────────────────────────────

/// Add input transitions to __bot__ so that every input's guard union
/// becomes TRUE at every plain location (one transition per complement zone).
TIOA bot_complete(const TIOA& a);
/// Dual: output transitions to __top__. Delay-to-top is implicit in the
/// invariant semantics and needs no transitions.
TIOA top_complete(const TIOA& a);
/// Delete input transitions into __bot__, prune the location if orphaned.
TIOA bot_remove(const TIOA& a);
/// Delete output transitions into __top__, prune the location if orphaned.
TIOA top_remove(const TIOA& a);

/// Structural isomorphism (location bijection preserving initial, kinds,
/// invariants, transitions; guards and constraint sets compared as sets).
bool isomorphic(const TIOA& a, const TIOA& b);

}  // namespace tio

#endif  // TIO_MODEL_HPP
