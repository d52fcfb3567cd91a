// ============================================================================
// tio/operators.hpp — the specification algebra
// ============================================================================
//
// User-facing operators, each wired with exactly the completion /
// normalisation / realisation steps the theory requires:
//
//   parallel     bot-complete both, synchronized product
//   conjunction  normalise both, complete, product, realise
//   disjunction  complete both, product, top-remove
//   mirror       top-complete, I/O and top/bottom switch, realise
//   quotient     normalise the dividend, complete both, product, realise
//   refines      IMPL refines SPEC iff mirror(SPEC) || IMPL is ⊥-free
//
// ============================================================================

#ifndef TIO_OPERATORS_HPP
#define TIO_OPERATORS_HPP

#include "tio/games.hpp"
#include "tio/model.hpp"
#include "tio/product.hpp"

namespace tio {

struct RefinementVerdict {
    bool holds = false;
    std::optional<TimedTrace> witness;  // ⊥-trace of mirror(spec) || impl
};

TIOA parallel(const TIOA& a, const TIOA& b);
TIOA conjunction(const TIOA& a, const TIOA& b);
TIOA disjunction(const TIOA& a, const TIOA& b);

/// I/O switch plus realisation: the least refined environment of `a`.
TIOA mirror(const TIOA& a);

/// Coarsest controller R such that R || plant refines spec.
TIOA quotient(const TIOA& spec, const TIOA& plant);
/// The derived route (mirror(spec) || plant) mirrored; realisably
/// equivalent to quotient() — used as a cross-check in tests.
TIOA quotient_via_mirror(const TIOA& spec, const TIOA& plant);

/// Does `impl` substitute for `spec` (spec ⊑r impl)?
RefinementVerdict refines(const TIOA& impl, const TIOA& spec);
bool equivalent(const TIOA& a, const TIOA& b);

/// False iff normalisation collapses the automaton to the ⊥-TIOA.
bool consistent(const TIOA& a);

/// The bare I/O switch (inputs <-> outputs, __top__ <-> __bot__ with the
/// invariant/co-invariant roles exchanged). No realisation.
TIOA io_switch(const TIOA& a);

}  // namespace tio

#endif  // TIO_OPERATORS_HPP
