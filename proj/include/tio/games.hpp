// ============================================================================
// tio/games.hpp — symbolic exploration and the synthesis games
// ============================================================================
//
// Forward zone-graph exploration of the timed transition semantics (plain,
// magic and error actions, time-out delays), ⊥-reachability with concrete timed-trace
// witnesses, the auto-⊥ / semi-⊥ / auto-⊤ / semi-⊤ state predicates, and
// the two synthesis fixpoints:
//
//   normalise — ⊥-backpropagation: repeatedly collapses auto-⊥ and semi-⊥
//               states by strengthening co-invariants, redirects incoming
//               transitions away from the winning region, then ⊥-removes.
//   realise   — the exact dual: ⊤-backpropagation strengthening invariants,
//               then ⊤-removal.
//
// Max-constant extrapolation is applied to every accumulated winning
// federation, which bounds the fixpoint lattice and guarantees termination.
//
// ============================================================================

#ifndef TIO_GAMES_HPP
#define TIO_GAMES_HPP

#include <map>
#include <optional>
#include <string>

#include "tio/model.hpp"
#include "tio/traces.hpp"

namespace tio {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// ── Zone graph ──────────────────────────────────────────────────────────────

struct ZoneGraph {
    struct Node {
        std::string location;  // kTopName / kBotName for the chaotic sinks
        Federation zone;
    };
    struct Edge {
        int from;
        int to;
        int trans = -1;  // index into TIOA::transitions; -1 for delay edges
        bool is_delay = false;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    int initial = -1;
    int top_node = -1;
    int bot_node = -1;

    /// Union of explored zones per location.
    std::map<std::string, Federation> reached;
};

/// Forward exploration with delay closure and per-action successors.
/// Rejects nondeterministic input.
ZoneGraph explore(const TIOA& a);

/// NONE iff __bot__ is unreachable; otherwise a concrete timed trace
/// whose delays are picked at small-denominator rationals.
std::optional<TimedTrace> bot_reachable(const TIOA& a);

// ── Winning-state predicates ────────────────────────────────────────────────

/// Per-location federations of ⊥-winning (resp. ⊤-winning) valuations.
using WinningMap = std::map<std::string, Federation>;

/// Valuations of `loc` with an output leading to ⊥ (explicit ⊥ target or
/// error action), inside Inv ∧ coInv.
Federation auto_bot(const TIOA& a, const std::string& loc);

/// Valuations of `loc` from which a delay reaches ⊥ (time-out region or
/// the current winning set) and no input along the way escapes to a
/// non-winning plain state. Inputs into ⊤ do not count as escapes.
Federation semi_bot(const TIOA& a, const std::string& loc, const WinningMap& current);

/// Duals (inputs to ⊤ / unavoidable delay to ⊤; outputs and error actions
/// escape).
Federation auto_top(const TIOA& a, const std::string& loc);
Federation semi_top(const TIOA& a, const std::string& loc, const WinningMap& current);

/// Full fixpoints of the ⊥- (resp. ⊤-) winning valuations, clipped to each
/// location's Inv ∧ coInv.
WinningMap bot_winning(const TIOA& a);
WinningMap top_winning(const TIOA& a);

// ── Synthesis ───────────────────────────────────────────────────────────────

/// ⊥-backpropagation on a deterministic specification. Returns the ⊥-TIOA
/// when the initial state is ⊥-winning. The result is ⊥-removed and free
/// of auto-⊥ and semi-⊥ states.
TIOA normalise(const TIOA& a);

/// ⊤-backpropagation on a deterministic TIOA. Returns the ⊤-TIOA when the
/// initial state is ⊤-winning. The result is ⊤-removed and free of auto-⊤
/// and semi-⊤ states.
TIOA realise(const TIOA& a);

/// ⊤-free and free of auto-⊤/semi-⊤ on the reachable part; every operator
/// input must satisfy this ("specification" in the realisable theory).
bool is_specification(const TIOA& a);

}  // namespace tio

#endif  // TIO_GAMES_HPP
