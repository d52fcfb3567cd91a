// ============================================================================
// dot_export.cpp
// ============================================================================

#include "dot_export.hpp"

#include <sstream>

namespace tio {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const TIOA& a) {
    std::ostringstream oss;
    oss << "digraph tioa {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    oss << "  __init__ [shape=point];\n";
    for (const Location& l : a.locations) {
        oss << "  \"" << dot_escape(l.name) << "\" [";
        if (l.kind == LocKind::Bottom) {
            oss << "label=\"\\u22a5\", style=filled, fillcolor=black, "
                   "fontcolor=white";
        } else if (l.kind == LocKind::Top) {
            oss << "label=\"\\u22a4\", shape=doublecircle";
        } else {
            std::string inv = l.invariant.to_string(a.clocks);
            std::string coinv = l.coinvariant.to_string(a.clocks);
            oss << "label=\"" << dot_escape(l.name);
            if (inv != "true") oss << "\\nInv: " << dot_escape(inv);
            if (coinv != "true") oss << "\\ncoInv: " << dot_escape(coinv);
            oss << "\"";
        }
        oss << "];\n";
    }
    oss << "  __init__ -> \"" << dot_escape(a.initial) << "\";\n";
    for (const Transition& t : a.transitions) {
        bool input = a.alphabet.is_input(t.action);
        std::string label = t.action + (input ? "?" : "!");
        std::string g = t.guard.to_string(a.clocks);
        if (g != "true") label += "\\n" + g;
        if (!t.resets.empty()) {
            label += "\\n{";
            for (size_t i = 0; i < t.resets.size(); ++i) {
                if (i) label += ", ";
                label += a.clocks[static_cast<size_t>(t.resets[i]) - 1] + " := 0";
            }
            label += "}";
        }
        oss << "  \"" << dot_escape(t.from) << "\" -> \"" << dot_escape(t.to)
            << "\" [label=\"" << dot_escape(label) << "\"";
        if (input) oss << ", style=dashed";
        oss << "];\n";
    }
    oss << "}\n";
    return oss.str();
}

}  // namespace tio
