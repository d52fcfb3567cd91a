// ============================================================================
// tio/constraints.hpp — clock-constraint syntax
// ============================================================================
//
// Textual grammar (whitespace-insensitive), used inside the automaton format:
//
//   expr := 'true' | 'false' | atom ('&&' atom)*
//   atom := clock op int | clock '-' clock op int
//   op   := '<' | '<=' | '==' | '>' | '>='
//
// Expressions are purely conjunctive; disjunction is handled by multiple
// transitions at the model level and by federations internally.
//
// ============================================================================

#ifndef TIO_CONSTRAINTS_HPP
#define TIO_CONSTRAINTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tio/federation.hpp"
#include "tio/zone.hpp"

namespace tio {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ── ClockId ─────────────────────────────────────────────────────────────────
// Index 0 is reserved for the implicit zero clock; user clocks start at 1.

struct ClockId {
    int index = 0;
    std::string name;
};

// ── AtomicConstraint ────────────────────────────────────────────────────────

enum class CmpOp { Lt, Le, Eq, Gt, Ge };

struct AtomicConstraint {
    int lhs = 0;        // clock index, >= 1
    int rhs = 0;        // 0 means the atom is "clock op bound"
    CmpOp op = CmpOp::Le;
    long long bound = 0;

    std::string to_string(const std::vector<std::string>& clock_names) const;
};

// ── ConstraintExpr ──────────────────────────────────────────────────────────
// TRUE is the empty conjunction; FALSE is a distinguished literal.

struct ConstraintExpr {
    bool is_false = false;
    std::vector<AtomicConstraint> atoms;

    static ConstraintExpr make_true() { return {}; }
    static ConstraintExpr make_false() { return {true, {}}; }

    bool is_true() const { return !is_false && atoms.empty(); }

    /// Parse against a clock list; unknown clock names raise ParseError.
    static ConstraintExpr parse(const std::string& text,
                                const std::vector<std::string>& clocks);

    std::string to_string(const std::vector<std::string>& clock_names) const;
};

/// The zone of valuations satisfying a conjunctive expression.
Zone zone_from_expr(const ConstraintExpr& e, int num_clocks);

/// Parse a constraint string straight to a zone.
Zone zone_from_text(const std::string& text, const std::vector<std::string>& clocks);

/// Parse one string or a list of strings (union of conjuncts) to a federation.
Federation fed_from_texts(const std::vector<std::string>& texts,
                          const std::vector<std::string>& clocks);

// ── ClockValuation ──────────────────────────────────────────────────────────
// Total map from clocks to non-negative rationals. Slot 0 is the reference
// clock and always 0.

struct ClockValuation {
    std::vector<Rational> values;  // size = num_clocks + 1, values[0] == 0

    static ClockValuation zeros(int num_clocks) {
        return ClockValuation{std::vector<Rational>(num_clocks + 1, Rational(0))};
    }
    ClockValuation delayed(const Rational& d) const {
        ClockValuation v = *this;
        for (size_t i = 1; i < v.values.size(); ++i) v.values[i] += d;
        return v;
    }
    ClockValuation reset(const std::vector<int>& clocks) const {
        ClockValuation v = *this;
        for (int c : clocks) v.values[c] = Rational(0);
        return v;
    }
};

}  // namespace tio

#endif  // TIO_CONSTRAINTS_HPP
