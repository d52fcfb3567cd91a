// ============================================================================
// tio/product.hpp — generic synchronized product of TIOAs
// ============================================================================
//
// One product construction, parameterized by the polymorphic state /
// alphabet / invariant composition operator: parallel, conjunction,
// disjunction, quotient. Shared actions synchronize (guard conjunction,
// reset union), independent actions interleave. Targets that compose to
// the chaotic states are redirected to __top__ / __bot__; conjunction and
// disjunction may discard one operand, continuing solo in an embedded,
// namespaced copy of the survivor.
//
// ============================================================================

#ifndef TIO_PRODUCT_HPP
#define TIO_PRODUCT_HPP

#include <map>
#include <string>

#include "tio/model.hpp"

namespace tio {

struct ComposabilityError : ModelError {
    explicit ComposabilityError(const std::string& what) : ModelError(what) {}
};

enum class OpKind { PAR, CONJ, DISJ, QUOT };

enum class StateClass { TOP, PLAIN, BOT };

struct ComposedState {
    enum class Kind { Top, Bot, Pair, SoloLeft, SoloRight } kind;
};

/// The parallel / conjunction / disjunction / quotient state composition
/// tables. Left operand first.
ComposedState state_compose(OpKind op, StateClass s0, StateClass s1);

/// Mirror on state classes: top and bottom swap, plain stays.
StateClass state_mirror(StateClass s);

/// Composed alphabet; throws ComposabilityError when the operands violate
/// the operator's composability restriction.
Alphabet alphabet_compose(OpKind op, const Alphabet& a, const Alphabet& b);

/// Invariant / co-invariant composition per operator (operands must
/// already live in the common clock space).
std::pair<Federation, Federation> invariant_compose(OpKind op,
                                                    const Federation& inv0,
                                                    const Federation& coinv0,
                                                    const Federation& inv1,
                                                    const Federation& coinv1);

/// Synchronized product. Clock collisions are resolved by renaming the
/// right operand's clocks; the applied renaming is reported through
/// `renamed` when non-null. Product locations are named "l0*l1", solo
/// continuations "L:name" / "R:name". Unreachable locations are pruned.
TIOA sync_product(OpKind op, const TIOA& a, const TIOA& b,
                  std::map<std::string, std::string>* renamed = nullptr);

}  // namespace tio

#endif  // TIO_PRODUCT_HPP
