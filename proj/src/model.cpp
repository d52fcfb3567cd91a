// ============================================================================
// model.cpp — TIOA structure, format, validation, completion
// ============================================================================

#include "tio/model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace tio {

using ordered_json = nlohmann::ordered_json;

// ── Alphabet ────────────────────────────────────────────────────────────────

std::set<std::string> Alphabet::all() const {
    std::set<std::string> s = inputs;
    s.insert(outputs.begin(), outputs.end());
    return s;
}

// ── TIOA helpers ────────────────────────────────────────────────────────────

int TIOA::clock_index(const std::string& name) const {
    for (size_t i = 0; i < clocks.size(); ++i)
        if (clocks[i] == name) return static_cast<int>(i) + 1;
    throw ModelError("unknown clock '" + name + "'");
}

std::vector<int> TIOA::clock_indices(const std::vector<std::string>& names) const {
    std::vector<int> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(clock_index(n));
    return out;
}

const Location* TIOA::find_location(const std::string& name) const {
    for (const Location& l : locations)
        if (l.name == name) return &l;
    return nullptr;
}

Location* TIOA::find_location(const std::string& name) {
    for (Location& l : locations)
        if (l.name == name) return &l;
    return nullptr;
}

const Location& TIOA::location(const std::string& name) const {
    const Location* l = find_location(name);
    if (!l) throw ModelError("unknown location '" + name + "'");
    return *l;
}

Federation TIOA::legal(const Location& l) const {
    return l.invariant.intersect(l.coinvariant);
}

namespace {
Location make_top_location(int n) {
    return Location(kTopName, Federation::empty(n), Federation::universe(n),
                    LocKind::Top);
}
Location make_bot_location(int n) {
    return Location(kBotName, Federation::universe(n), Federation::empty(n),
                    LocKind::Bottom);
}
}  // namespace

const std::string& TIOA::ensure_top() {
    if (!find_location(kTopName)) locations.push_back(make_top_location(num_clocks()));
    return kTopName;
}

const std::string& TIOA::ensure_bot() {
    if (!find_location(kBotName)) locations.push_back(make_bot_location(num_clocks()));
    return kBotName;
}

long long TIOA::max_constant() const {
    long long k = 1;
    for (const Location& l : locations) {
        k = std::max(k, l.invariant.max_constant());
        k = std::max(k, l.coinvariant.max_constant());
    }
    for (const Transition& t : transitions) k = std::max(k, t.guard.max_constant());
    return k;
}

std::set<std::string> TIOA::reachable_locations() const {
    std::set<std::string> seen;
    std::vector<std::string> work{initial};
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const Transition& t : transitions)
            if (t.from == cur && !seen.count(t.to)) work.push_back(t.to);
    }
    return seen;
}

void TIOA::prune_unreachable() {
    std::set<std::string> keep = reachable_locations();
    transitions.erase(std::remove_if(transitions.begin(), transitions.end(),
                                     [&](const Transition& t) {
                                         return !keep.count(t.from) || !keep.count(t.to);
                                     }),
                      transitions.end());
    locations.erase(std::remove_if(locations.begin(), locations.end(),
                                   [&](const Location& l) { return !keep.count(l.name); }),
                    locations.end());
}

TIOA make_bot_tioa(const Alphabet& alphabet, const std::vector<std::string>& clocks) {
    TIOA a;
    a.clocks = clocks;
    a.alphabet = alphabet;
    a.locations.push_back(make_bot_location(a.num_clocks()));
    a.initial = kBotName;
    return a;
}

TIOA make_top_tioa(const Alphabet& alphabet, const std::vector<std::string>& clocks) {
    TIOA a;
    a.clocks = clocks;
    a.alphabet = alphabet;
    a.locations.push_back(make_top_location(a.num_clocks()));
    a.initial = kTopName;
    return a;
}

// ── Format ──────────────────────────────────────────────────────────────────

namespace {

std::vector<std::string> constraint_texts(const ordered_json& j, const char* field,
                                          const std::string& site) {
    if (!j.contains(field)) return {"true"};
    const auto& v = j.at(field);
    if (v.is_string()) return {v.get<std::string>()};
    if (v.is_array()) {
        std::vector<std::string> out;
        for (const auto& e : v) {
            if (!e.is_string())
                throw ModelError(site + ": '" + field + "' entries must be strings");
            out.push_back(e.get<std::string>());
        }
        if (out.empty()) throw ModelError(site + ": '" + field + "' must be non-empty");
        return out;
    }
    throw ModelError(site + ": '" + field + "' must be a string or array of strings");
}

std::vector<std::string> string_list(const ordered_json& j, const char* field) {
    std::vector<std::string> out;
    if (!j.contains(field)) return out;
    for (const auto& e : j.at(field)) out.push_back(e.get<std::string>());
    return out;
}

}  // namespace

TIOA parse_tioa(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError(std::string("JSON parse error: ") + e.what());
    }
    TIOA a;
    a.clocks = string_list(j, "clocks");
    {
        std::set<std::string> seen;
        for (const std::string& c : a.clocks)
            if (!seen.insert(c).second) throw ModelError("duplicate clock '" + c + "'");
    }
    for (const std::string& s : string_list(j, "inputs")) a.alphabet.inputs.insert(s);
    for (const std::string& s : string_list(j, "outputs")) a.alphabet.outputs.insert(s);
    for (const std::string& s : a.alphabet.inputs)
        if (a.alphabet.outputs.count(s))
            throw ModelError("action '" + s + "' is both input and output");

    if (!j.contains("initial")) throw ModelError("missing 'initial'");
    a.initial = j.at("initial").get<std::string>();

    int n = a.num_clocks();
    if (j.contains("locations"))
        for (const auto& lj : j.at("locations")) {
            Location l;
            l.name = lj.at("name").get<std::string>();
            if (a.find_location(l.name))
                throw ModelError("duplicate location '" + l.name + "'");
            if (l.name == kTopName) {
                a.locations.push_back(make_top_location(n));
                continue;
            }
            if (l.name == kBotName) {
                a.locations.push_back(make_bot_location(n));
                continue;
            }
            l.invariant =
                fed_from_texts(constraint_texts(lj, "invariant", l.name), a.clocks);
            l.coinvariant =
                fed_from_texts(constraint_texts(lj, "coinvariant", l.name), a.clocks);
            a.locations.push_back(std::move(l));
        }

    if (j.contains("transitions"))
        for (const auto& tj : j.at("transitions")) {
            Transition t;
            t.from = tj.at("from").get<std::string>();
            t.to = tj.at("to").get<std::string>();
            t.action = tj.at("action").get<std::string>();
            std::string site = "transition " + t.from + " -" + t.action + "-> " + t.to;
            if (!a.alphabet.has(t.action))
                throw ModelError(site + ": undeclared action '" + t.action + "'");
            std::string guard_text =
                tj.contains("guard") ? tj.at("guard").get<std::string>() : "true";
            try {
                t.guard = zone_from_text(guard_text, a.clocks);
            } catch (const ParseError& e) {
                throw ModelError(site + ": " + e.what());
            }
            for (const std::string& r : string_list(tj, "resets")) {
                try {
                    t.resets.push_back(a.clock_index(r));
                } catch (const ModelError&) {
                    throw ModelError(site + ": undeclared reset clock '" + r + "'");
                }
            }
            if (t.to == kTopName) a.ensure_top();
            if (t.to == kBotName) a.ensure_bot();
            if (!a.find_location(t.from)) throw ModelError(site + ": unknown source");
            if (!a.find_location(t.to)) throw ModelError(site + ": unknown target");
            a.transitions.push_back(std::move(t));
        }

    if (a.initial == kTopName) a.ensure_top();
    if (a.initial == kBotName) a.ensure_bot();
    if (!a.find_location(a.initial))
        throw ModelError("initial location '" + a.initial + "' not declared");
    return a;
}

TIOA load_tioa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_tioa(ss.str());
    } catch (const ModelError& e) {
        throw ModelError(path + ": " + e.what());
    }
}

std::string serialize_tioa(const TIOA& a) {
    ordered_json j;
    j["clocks"] = a.clocks;
    j["inputs"] = std::vector<std::string>(a.alphabet.inputs.begin(),
                                           a.alphabet.inputs.end());
    j["outputs"] = std::vector<std::string>(a.alphabet.outputs.begin(),
                                            a.alphabet.outputs.end());
    j["initial"] = a.initial;
    j["locations"] = ordered_json::array();
    for (const Location& l : a.locations) {
        ordered_json lj;
        lj["name"] = l.name;
        auto inv = l.invariant.to_strings(a.clocks);
        auto coinv = l.coinvariant.to_strings(a.clocks);
        lj["invariant"] = inv.size() == 1 ? ordered_json(inv[0]) : ordered_json(inv);
        lj["coinvariant"] =
            coinv.size() == 1 ? ordered_json(coinv[0]) : ordered_json(coinv);
        j["locations"].push_back(lj);
    }
    j["transitions"] = ordered_json::array();
    for (const Transition& t : a.transitions) {
        ordered_json tj;
        tj["from"] = t.from;
        tj["guard"] = t.guard.to_string(a.clocks);
        tj["action"] = t.action;
        std::vector<std::string> rs;
        for (int c : t.resets) rs.push_back(a.clocks[static_cast<size_t>(c) - 1]);
        std::sort(rs.begin(), rs.end());
        tj["resets"] = rs;
        tj["to"] = t.to;
        j["transitions"].push_back(tj);
    }
    return j.dump(2) + "\n";
}

void store_tioa(const TIOA& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ModelError("cannot write '" + path + "'");
    out << serialize_tioa(a);
}

// ── Validation ──────────────────────────────────────────────────────────────

std::string ValidationReport::to_string() const {
    std::ostringstream oss;
    for (const Diagnostic& d : findings)
        oss << (d.severity == Diagnostic::Severity::Error ? "error" : "warning")
            << " [" << d.code << "] " << d.site << ": " << d.message << "\n";
    oss << "wellformed: " << (wellformed ? "yes" : "no") << "\n";
    oss << "deterministic: " << (deterministic ? "yes" : "no") << "\n";
    oss << "strongly-nonzeno (syntactic): "
        << (strongly_nonzeno_syntactic ? "yes" : "no") << "\n";
    return oss.str();
}

namespace {

// Every simple action cycle must reset some clock x on the cycle and bound
// it from below (x >= c, c >= 1) on some cycle transition.
void check_nonzeno(const TIOA& a, ValidationReport& rep) {
    std::map<std::string, std::vector<size_t>> out_edges;
    for (size_t i = 0; i < a.transitions.size(); ++i)
        out_edges[a.transitions[i].from].push_back(i);

    size_t budget = 20000;
    std::vector<size_t> path;
    std::set<std::string> on_path;

    std::function<void(const std::string&, const std::string&)> dfs =
        [&](const std::string& start, const std::string& cur) {
            if (budget == 0) return;
            for (size_t ei : out_edges[cur]) {
                if (budget == 0) return;
                --budget;
                const Transition& t = a.transitions[ei];
                if (t.to == start) {
                    path.push_back(ei);
                    bool ok = false;
                    for (int x = 1; x <= a.num_clocks() && !ok; ++x) {
                        bool reset = false, bounded = false;
                        for (size_t pe : path) {
                            const Transition& pt = a.transitions[pe];
                            if (std::find(pt.resets.begin(), pt.resets.end(), x) !=
                                pt.resets.end())
                                reset = true;
                            if (!pt.guard.is_empty() &&
                                pt.guard.bound(0, x) <= Bound::weak(-1))
                                bounded = true;
                        }
                        ok = reset && bounded;
                    }
                    if (!ok && rep.strongly_nonzeno_syntactic) {
                        rep.strongly_nonzeno_syntactic = false;
                        rep.findings.push_back(
                            {Diagnostic::Severity::Warning, "zeno-cycle",
                             "action cycle without a reset-and-lower-bounded clock",
                             "location " + start});
                    }
                    path.pop_back();
                } else if (!on_path.count(t.to) && t.to > start &&
                           a.location(t.to).kind == LocKind::Plain) {
                    path.push_back(ei);
                    on_path.insert(t.to);
                    dfs(start, t.to);
                    on_path.erase(t.to);
                    path.pop_back();
                }
            }
        };

    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        on_path = {l.name};
        path.clear();
        dfs(l.name, l.name);
        if (!rep.strongly_nonzeno_syntactic) return;
    }
    if (budget == 0)
        rep.findings.push_back({Diagnostic::Severity::Warning, "zeno-cap",
                                "cycle enumeration capped; non-zenoness check partial",
                                ""});
}

}  // namespace

ValidationReport validate(const TIOA& a) {
    ValidationReport rep;
    auto error = [&](const std::string& code, const std::string& msg,
                     const std::string& site) {
        rep.findings.push_back({Diagnostic::Severity::Error, code, msg, site});
        rep.wellformed = false;
    };

    if (!a.find_location(a.initial))
        error("missing-initial", "initial location does not exist", a.initial);
    for (const std::string& s : a.alphabet.inputs)
        if (a.alphabet.outputs.count(s))
            error("alphabet-overlap", "action is both input and output", s);

    std::set<std::string> names;
    for (const Location& l : a.locations) {
        if (!names.insert(l.name).second)
            error("duplicate-location", "duplicate location name", l.name);
        if (l.kind != LocKind::Plain) continue;
        if (!l.invariant.is_downward_closed())
            error("invariant-not-downward-closed",
                  "invariant must be a downward-closed constraint", l.name);
        if (!l.coinvariant.is_downward_closed())
            error("coinvariant-not-downward-closed",
                  "co-invariant must be a downward-closed constraint", l.name);
    }

    for (const Transition& t : a.transitions) {
        std::string site = t.from + " -" + t.action + "-> " + t.to;
        if (!a.find_location(t.from)) error("missing-source", "unknown source", site);
        if (!a.find_location(t.to)) error("missing-target", "unknown target", site);
        if (!a.alphabet.has(t.action)) error("undeclared-action", "unknown action", site);
        for (int r : t.resets)
            if (r < 1 || r > a.num_clocks())
                error("bad-reset", "reset clock out of range", site);
    }
    if (!rep.wellformed) return rep;

    // determinism: guards of distinct same-action transitions from one
    // location must not overlap inside Inv ∧ coInv
    for (const Location& l : a.locations) {
        if (l.kind != LocKind::Plain) continue;
        Federation legal = a.legal(l);
        for (size_t i = 0; i < a.transitions.size(); ++i) {
            const Transition& ti = a.transitions[i];
            if (ti.from != l.name) continue;
            for (size_t j = i + 1; j < a.transitions.size(); ++j) {
                const Transition& tj = a.transitions[j];
                if (tj.from != l.name || tj.action != ti.action) continue;
                if (ti.to == tj.to &&
                    std::set<int>(ti.resets.begin(), ti.resets.end()) ==
                        std::set<int>(tj.resets.begin(), tj.resets.end()))
                    continue;  // same effect, overlap is harmless
                Federation overlap = Federation::of(ti.guard.intersect(tj.guard))
                                         .intersect(legal);
                if (!overlap.is_empty()) {
                    rep.deterministic = false;
                    rep.findings.push_back({Diagnostic::Severity::Error,
                                            "nondeterministic",
                                            "overlapping guards on action " + ti.action,
                                            l.name});
                }
            }
        }
    }

    check_nonzeno(a, rep);
    return rep;
}

// ── Completion / removal ────────────────────────────────────────────────────

namespace {

TIOA complete(const TIOA& a, bool inputs) {
    TIOA b = a;
    const std::string& sink = inputs ? b.ensure_bot() : b.ensure_top();
    const auto& actions = inputs ? b.alphabet.inputs : b.alphabet.outputs;
    std::vector<Transition> added;
    for (const Location& l : b.locations) {
        if (l.kind != LocKind::Plain) continue;
        for (const std::string& act : actions) {
            Federation cover = Federation::empty(b.num_clocks());
            for (const Transition& t : b.transitions)
                if (t.from == l.name && t.action == act)
                    cover = cover.unite(Federation::of(t.guard));
            Federation missing = cover.complement();
            for (const Zone& z : missing.zones())
                added.emplace_back(l.name, z, act, std::vector<int>{}, sink);
        }
    }
    b.transitions.insert(b.transitions.end(), added.begin(), added.end());
    return b;
}

TIOA remove_sink(const TIOA& a, bool inputs) {
    TIOA b = a;
    const std::string& sink = inputs ? kBotName : kTopName;
    b.transitions.erase(
        std::remove_if(b.transitions.begin(), b.transitions.end(),
                       [&](const Transition& t) {
                           bool kind_match = inputs ? b.alphabet.is_input(t.action)
                                                    : b.alphabet.is_output(t.action);
                           return kind_match && t.to == sink;
                       }),
        b.transitions.end());
    bool referenced = b.initial == sink;
    for (const Transition& t : b.transitions)
        if (t.to == sink || t.from == sink) referenced = true;
    if (!referenced)
        b.locations.erase(std::remove_if(b.locations.begin(), b.locations.end(),
                                         [&](const Location& l) { return l.name == sink; }),
                          b.locations.end());
    return b;
}

}  // namespace

TIOA bot_complete(const TIOA& a) { return complete(a, true); }
TIOA top_complete(const TIOA& a) { return complete(a, false); }
TIOA bot_remove(const TIOA& a) { return remove_sink(a, true); }
TIOA top_remove(const TIOA& a) { return remove_sink(a, false); }

// ── Isomorphism ─────────────────────────────────────────────────────────────

namespace {

// Guard federations grouped by (action, resets, target) for one source.
std::map<std::tuple<std::string, std::vector<int>, std::string>, Federation>
edge_groups(const TIOA& a, const std::string& from,
            const std::vector<int>& clock_map) {
    std::map<std::tuple<std::string, std::vector<int>, std::string>, Federation> g;
    for (const Transition& t : a.transitions) {
        if (t.from != from) continue;
        std::vector<int> rs;
        for (int r : t.resets) rs.push_back(clock_map[static_cast<size_t>(r)]);
        std::sort(rs.begin(), rs.end());
        auto key = std::make_tuple(t.action, rs, t.to);
        auto it = g.find(key);
        Federation f = Federation::of(t.guard.embedded(
            static_cast<int>(clock_map.size()) - 1, clock_map));
        if (it == g.end())
            g.emplace(key, f);
        else
            it->second = it->second.unite(f);
    }
    return g;
}

}  // namespace

namespace {

bool isomorphic_with_clock_map(const TIOA& a, const TIOA& b,
                               const std::vector<int>& bmap) {
    std::vector<int> amap(a.clocks.size() + 1);
    amap[0] = 0;
    for (size_t i = 0; i < a.clocks.size(); ++i) amap[i + 1] = static_cast<int>(i) + 1;

    using Groups =
        std::map<std::tuple<std::string, std::vector<int>, std::string>, Federation>;
    std::map<std::string, Groups> ga, gb;
    for (const Location& l : a.locations) ga.emplace(l.name, edge_groups(a, l.name, amap));
    for (const Location& l : b.locations) gb.emplace(l.name, edge_groups(b, l.name, bmap));

    // coarse per-location signature: kind, initial flag, action/reset
    // profile of outgoing edges
    auto signature = [](const TIOA& t, const Location& l, const Groups& g) {
        std::multiset<std::pair<std::string, std::vector<int>>> prof;
        for (auto& [key, fed] : g)
            prof.insert({std::get<0>(key), std::get<1>(key)});
        return std::make_tuple(l.kind, l.name == t.initial, prof);
    };

    // assign locations in a BFS-ish order (a.locations already roughly so)
    std::map<std::string, std::string> fwd, bwd;

    // edges between two assigned locations must match group-by-group
    auto edges_match = [&](const std::string& fa, const std::string& ta,
                           const std::string& fb, const std::string& tb) {
        const Groups& A = ga.at(fa);
        const Groups& B = gb.at(fb);
        for (auto& [key, fed] : A) {
            if (std::get<2>(key) != ta) continue;
            auto it = B.find(std::make_tuple(std::get<0>(key), std::get<1>(key), tb));
            if (it == B.end() || !fed.same_set(it->second)) return false;
        }
        for (auto& [key, fed] : B) {
            if (std::get<2>(key) != tb) continue;
            auto it = A.find(std::make_tuple(std::get<0>(key), std::get<1>(key), ta));
            if (it == A.end() || !fed.same_set(it->second)) return false;
        }
        return true;
    };

    std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
        if (idx == a.locations.size()) return true;
        const Location& la = a.locations[idx];
        auto sig_a = signature(a, la, ga.at(la.name));
        for (const Location& lb : b.locations) {
            if (bwd.count(lb.name)) continue;
            if (signature(b, lb, gb.at(lb.name)) != sig_a) continue;
            Federation ib = lb.invariant.embedded(a.num_clocks(), bmap);
            Federation cb2 = lb.coinvariant.embedded(a.num_clocks(), bmap);
            if (!la.invariant.same_set(ib) || !la.coinvariant.same_set(cb2)) continue;
            bool consistent = true;
            for (auto& [ka, kb] : fwd) {
                if (!edges_match(la.name, ka, lb.name, kb) ||
                    !edges_match(ka, la.name, kb, lb.name)) {
                    consistent = false;
                    break;
                }
            }
            if (consistent && !edges_match(la.name, la.name, lb.name, lb.name))
                consistent = false;
            if (!consistent) continue;
            fwd[la.name] = lb.name;
            bwd[lb.name] = la.name;
            if (assign(idx + 1)) return true;
            fwd.erase(la.name);
            bwd.erase(lb.name);
        }
        return false;
    };
    return assign(0);
}

}  // namespace

bool isomorphic(const TIOA& a, const TIOA& b) {
    if (a.alphabet != b.alphabet) return false;
    if (a.clocks.size() != b.clocks.size()) return false;
    if (a.locations.size() != b.locations.size()) return false;

    // try the name-identity clock correspondence first, then permutations
    const size_t n = b.clocks.size();
    std::vector<int> bmap(n + 1, 0);
    {
        std::set<std::string> ca(a.clocks.begin(), a.clocks.end());
        std::set<std::string> cb(b.clocks.begin(), b.clocks.end());
        if (ca == cb) {
            for (size_t i = 0; i < n; ++i) bmap[i + 1] = a.clock_index(b.clocks[i]);
            if (isomorphic_with_clock_map(a, b, bmap)) return true;
        }
    }
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i) + 1;
    do {
        for (size_t i = 0; i < n; ++i) bmap[i + 1] = perm[i];
        if (isomorphic_with_clock_map(a, b, bmap)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace tio
