// ============================================================================
// test_model.cpp — format, validation, completion / removal
// ============================================================================

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "tio/model.hpp"

using namespace tio;
using namespace tio::testing;

TEST_CASE("parse the job scheduler") {
    TIOA a = load("job_scheduler.json");
    CHECK(a.locations.size() == 2);
    CHECK(a.location("A").invariant.same_set(
        fed_from_texts({"x <= 100"}, a.clocks)));
    bool found = false;
    for (const Transition& t : a.transitions)
        if (t.action == "finish") {
            found = true;
            CHECK(Federation::of(t.guard).same_set(
                fed_from_texts({"x >= 5 && x <= 8"}, a.clocks)));
        }
    CHECK(found);
    CHECK(a.alphabet.inputs == std::set<std::string>{"finish"});
    CHECK(a.alphabet.outputs == std::set<std::string>{"start"});
}

TEST_CASE("degenerate files") {
    // empty alphabet, single location: accepted
    TIOA a = parse_tioa(R"({"clocks": [], "initial": "L",
                            "locations": [{"name": "L"}]})");
    CHECK(a.locations.size() == 1);
    CHECK(validate(a).wellformed);

    // undeclared clock in a transition
    CHECK_THROWS_AS(
        parse_tioa(R"({"clocks": ["x"], "outputs": ["a"], "initial": "L",
                       "locations": [{"name": "L"}],
                       "transitions": [{"from": "L", "guard": "z <= 1",
                                        "action": "a", "to": "L"}]})"),
        ModelError);

    CHECK_THROWS_AS(parse_tioa("{not json"), ModelError);
    CHECK_THROWS_AS(parse_tioa(R"({"clocks": [], "initial": "L",
                                   "locations": [{"name": "L"}, {"name": "L"}]})"),
                    ModelError);
}

TEST_CASE("round trip on the corpus") {
    std::vector<std::string> files = {
        "job_scheduler.json", "printer_controller.json", "watchdog.json",
        "slow_worker.json",         "doomed_emitter.json",          "doomed_waiter.json",
        "hasty_assumer.json",         "urgent_emitter.json",          "choice_spec.json",
        "choice_plant.json",         "printer.json",    "job_buffer.json",
        "print_server.json",    "corpus_a1.json",       "corpus_a7.json",
        "corpus_a8.json",      "corpus_e1.json"};
    for (const std::string& f : files) {
        CAPTURE(f);
        TIOA a = load(f);
        std::string s1 = serialize_tioa(a);
        TIOA b = parse_tioa(s1);
        CHECK(isomorphic(a, b));
        // stable serialization: double round trip is byte-identical
        CHECK(serialize_tioa(b) == s1);
    }
}

TEST_CASE("bottom location serialization uses the canonical encoding") {
    TIOA a = make_bot_tioa({{"r"}, {"s"}}, {"x"});
    std::string s = serialize_tioa(a);
    CHECK(s.find("\"__bot__\"") != std::string::npos);
    CHECK(s.find("\"coinvariant\": \"false\"") != std::string::npos);
    TIOA b = parse_tioa(s);
    CHECK(b.is_bot_tioa());
}

TEST_CASE("validate: determinism and downward closure") {
    TIOA ctl = load("printer_controller.json");
    ValidationReport r = validate(ctl);
    CHECK(r.wellformed);
    CHECK(r.deterministic);

    // overlapping guards 3..5 on the same output
    TIOA nd = parse_tioa(R"({"clocks": ["x"], "outputs": ["a"], "initial": "L",
        "locations": [{"name": "L"}, {"name": "M"}, {"name": "N"}],
        "transitions": [
          {"from": "L", "guard": "x <= 5", "action": "a", "to": "M"},
          {"from": "L", "guard": "x >= 3", "action": "a", "to": "N"}]})");
    CHECK_FALSE(validate(nd).deterministic);

    // x >= 2 is not downward closed
    TIOA bad = parse_tioa(R"({"clocks": ["x"], "initial": "L",
        "locations": [{"name": "L", "invariant": "x >= 2"}]})");
    CHECK_FALSE(validate(bad).wellformed);
}

TEST_CASE("validate: determinism agrees with a discretized check") {
    // grid check: at every half-grid point, at most one distinct-effect
    // transition per action may be enabled inside Inv ∧ coInv
    auto discrete_deterministic = [](const TIOA& a) {
        auto pts = grid_points(a.num_clocks(), 8, 2);
        for (const Location& l : a.locations) {
            if (l.kind != LocKind::Plain) continue;
            Federation legal = a.legal(l);
            for (const Point& p : pts) {
                if (!legal.contains(p)) continue;
                for (const std::string& act : a.alphabet.all()) {
                    std::set<std::string> effects;
                    for (const Transition& t : a.transitions) {
                        if (t.from != l.name || t.action != act) continue;
                        if (!t.guard.contains(p)) continue;
                        std::string key = t.to + "|";
                        for (int rc : t.resets) key += std::to_string(rc) + ",";
                        effects.insert(key);
                    }
                    if (effects.size() > 1) return false;
                }
            }
        }
        return true;
    };
    for (const std::string& f :
         {"job_scheduler.json", "printer_controller.json", "corpus_a3.json",
          "corpus_a7.json", "corpus_a8.json"}) {
        CAPTURE(f);
        TIOA a = load(f);
        CHECK(validate(a).deterministic == discrete_deterministic(a));
    }
    TIOA nd = parse_tioa(R"({"clocks": ["x"], "outputs": ["a"], "initial": "L",
        "locations": [{"name": "L"}, {"name": "M"}, {"name": "N"}],
        "transitions": [
          {"from": "L", "guard": "x <= 5", "action": "a", "to": "M"},
          {"from": "L", "guard": "x >= 3", "action": "a", "to": "N"}]})");
    CHECK(validate(nd).deterministic == discrete_deterministic(nd));
}

TEST_CASE("validate: syntactic strong non-zenoness") {
    CHECK(validate(load("job_scheduler.json")).strongly_nonzeno_syntactic);
    CHECK(validate(load("corpus_a3.json")).strongly_nonzeno_syntactic);

    // a tight loop with no reset: zeno warning, but still wellformed
    TIOA spin = parse_tioa(R"({"clocks": ["x"], "outputs": ["a"], "initial": "L",
        "locations": [{"name": "L"}],
        "transitions": [{"from": "L", "guard": "true", "action": "a", "to": "L"}]})");
    ValidationReport r = validate(spin);
    CHECK(r.wellformed);
    CHECK_FALSE(r.strongly_nonzeno_syntactic);
}

TEST_CASE("bot_complete covers every input everywhere") {
    TIOA sch = load("job_scheduler.json");
    TIOA c = bot_complete(sch);

    // at B the finish band [5,8] is complemented by x<5 and x>8 into __bot__
    Federation to_bot = Federation::empty(c.num_clocks());
    for (const Transition& t : c.transitions)
        if (t.from == "B" && t.action == "finish" && t.to == kBotName)
            to_bot = to_bot.unite(Federation::of(t.guard));
    CHECK(to_bot.same_set(fed_from_texts({"x < 5", "x > 8"}, c.clocks)));

    // input-receptivity: per (plain location, input), the guard union
    // covers Inv ∧ coInv
    for (const Location& l : c.locations) {
        if (l.kind != LocKind::Plain) continue;
        for (const std::string& in : c.alphabet.inputs) {
            Federation cover = Federation::empty(c.num_clocks());
            for (const Transition& t : c.transitions)
                if (t.from == l.name && t.action == in)
                    cover = cover.unite(Federation::of(t.guard));
            CHECK(c.legal(l).subset_of(cover));
        }
    }

    // location with no transition on an input gets a single TRUE transition
    int count = 0;
    for (const Transition& t : c.transitions)
        if (t.from == "A" && t.action == "finish") {
            ++count;
            CHECK(t.to == kBotName);
            CHECK(Federation::of(t.guard).same_set(Federation::universe(1)));
        }
    CHECK(count == 1);

    // completing twice changes nothing
    CHECK(isomorphic(bot_complete(c), c));
}

TEST_CASE("completion and removal are inverse on their fragments") {
    for (const std::string& f :
         {"job_scheduler.json", "printer_controller.json", "corpus_a1.json"}) {
        CAPTURE(f);
        TIOA a = load(f);
        CHECK(isomorphic(bot_remove(bot_complete(a)), a));
        CHECK(isomorphic(top_remove(top_complete(a)), a));
        CHECK(isomorphic(bot_remove(a), a));  // ⊥-free: identity
        CHECK(isomorphic(top_remove(a), a));
    }
    // a7 carries an explicit input transition to ⊥; bot_remove deletes it
    TIOA a7 = load("corpus_a7.json");
    TIOA removed = bot_remove(a7);
    for (const Transition& t : removed.transitions) CHECK(t.to != kBotName);
}

TEST_CASE("isomorphism is insensitive to order, sensitive to structure") {
    TIOA a = load("printer_controller.json");
    TIOA b = a;
    std::reverse(b.locations.begin(), b.locations.end());
    std::reverse(b.transitions.begin(), b.transitions.end());
    CHECK(isomorphic(a, b));
    b.transitions[0].guard = zone_from_text("y <= 7", b.clocks);
    CHECK_FALSE(isomorphic(a, b));
}
