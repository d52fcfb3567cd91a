// ============================================================================
// constraints.cpp — constraint parsing and zone construction
// ============================================================================

#include "tio/constraints.hpp"

#include <cctype>
#include <sstream>

namespace tio {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                s[pos] == '.' || s[pos] == ':' || s[pos] == '*' || s[pos] == '\''))
            ++pos;
        return s.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer in constraint '" + s + "'");
        return std::stoll(s.substr(start, pos - start));
    }
};

int clock_index(const std::string& name, const std::vector<std::string>& clocks,
                const std::string& ctx) {
    for (size_t i = 0; i < clocks.size(); ++i)
        if (clocks[i] == name) return static_cast<int>(i) + 1;
    throw ParseError("unknown clock '" + name + "' in constraint '" + ctx + "'");
}

CmpOp parse_op(Lexer& lx) {
    if (lx.eat("<=")) return CmpOp::Le;
    if (lx.eat(">=")) return CmpOp::Ge;
    if (lx.eat("==")) return CmpOp::Eq;
    if (lx.eat("<")) return CmpOp::Lt;
    if (lx.eat(">")) return CmpOp::Gt;
    throw ParseError("expected comparison operator in constraint '" + lx.s + "'");
}

const char* op_text(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "==";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

}  // namespace

std::string AtomicConstraint::to_string(
        const std::vector<std::string>& clock_names) const {
    std::ostringstream oss;
    oss << clock_names[static_cast<size_t>(lhs) - 1];
    if (rhs != 0) oss << " - " << clock_names[static_cast<size_t>(rhs) - 1];
    oss << " " << op_text(op) << " " << bound;
    return oss.str();
}

ConstraintExpr ConstraintExpr::parse(const std::string& text,
                                     const std::vector<std::string>& clocks) {
    Lexer lx{text};
    if (lx.eat("true")) {
        if (!lx.eof()) throw ParseError("trailing input after 'true' in '" + text + "'");
        return make_true();
    }
    if (lx.eat("false")) {
        if (!lx.eof()) throw ParseError("trailing input after 'false' in '" + text + "'");
        return make_false();
    }
    ConstraintExpr e;
    while (true) {
        AtomicConstraint a;
        std::string l = lx.ident();
        if (l.empty()) throw ParseError("expected clock name in constraint '" + text + "'");
        a.lhs = clock_index(l, clocks, text);
        if (lx.eat("-")) {
            std::string r = lx.ident();
            if (r.empty()) throw ParseError("expected clock name after '-' in '" + text + "'");
            a.rhs = clock_index(r, clocks, text);
        }
        a.op = parse_op(lx);
        a.bound = lx.integer();
        e.atoms.push_back(a);
        if (lx.eof()) break;
        if (!lx.eat("&&"))
            throw ParseError("expected '&&' or end of input in constraint '" + text + "'");
    }
    return e;
}

std::string ConstraintExpr::to_string(
        const std::vector<std::string>& clock_names) const {
    if (is_false) return "false";
    if (atoms.empty()) return "true";
    std::ostringstream oss;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) oss << " && ";
        oss << atoms[i].to_string(clock_names);
    }
    return oss.str();
}

Zone zone_from_expr(const ConstraintExpr& e, int num_clocks) {
    if (e.is_false) return Zone::empty(num_clocks);
    Zone z = Zone::universe(num_clocks);
    for (const AtomicConstraint& a : e.atoms) {
        switch (a.op) {
            case CmpOp::Lt:
                z = z.constrained(a.lhs, a.rhs, Bound::strict(a.bound));
                break;
            case CmpOp::Le:
                z = z.constrained(a.lhs, a.rhs, Bound::weak(a.bound));
                break;
            case CmpOp::Eq:
                z = z.constrained(a.lhs, a.rhs, Bound::weak(a.bound));
                z = z.constrained(a.rhs, a.lhs, Bound::weak(-a.bound));
                break;
            case CmpOp::Gt:
                z = z.constrained(a.rhs, a.lhs, Bound::strict(-a.bound));
                break;
            case CmpOp::Ge:
                z = z.constrained(a.rhs, a.lhs, Bound::weak(-a.bound));
                break;
        }
        if (z.is_empty()) break;
    }
    return z;
}

Zone zone_from_text(const std::string& text, const std::vector<std::string>& clocks) {
    return zone_from_expr(ConstraintExpr::parse(text, clocks),
                          static_cast<int>(clocks.size()));
}

Federation fed_from_texts(const std::vector<std::string>& texts,
                          const std::vector<std::string>& clocks) {
    std::vector<Zone> zs;
    for (const std::string& t : texts) zs.push_back(zone_from_text(t, clocks));
    return Federation::of_zones(std::move(zs), static_cast<int>(clocks.size()));
}

}  // namespace tio
