// ============================================================================
// dot_export.hpp — Graphviz rendering of TIOAs
// ============================================================================

#ifndef TIO_DOT_EXPORT_HPP
#define TIO_DOT_EXPORT_HPP

#include <string>

#include "tio/model.hpp"

namespace tio {

/// Graphviz digraph: guards as edge labels, invariant/co-invariant in node
/// labels, __bot__ filled, __top__ double-circled.
std::string export_dot(const TIOA& a);

}  // namespace tio

#endif  // TIO_DOT_EXPORT_HPP
