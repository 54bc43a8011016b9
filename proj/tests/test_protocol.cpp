#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "misere/protocol.hpp"

using namespace misere;
using nlohmann::json;

namespace {

json send(Session& s, const json& req) { return json::parse(s.handle(req.dump())); }

// Snapshot fidelity: the history replays to the same board.
void check_snapshot(const json& snap) {
    if (!snap["game"].get<bool>()) return;
    const BoardSpec spec{snap["w"].get<int>(), snap["h"].get<int>(), snap["k"].get<int>()};
    const GameState s = replay(spec, snap["history"].get<std::vector<int>>());
    CHECK(s.render() == snap["board"].get<std::string>());
    CHECK(std::string(to_string(s.to_move())) == snap["to_move"].get<std::string>());
    if (!snap.contains("resigned"))
        CHECK((s.ended() ? std::string(to_string(*s.result())) : "ongoing") == snap["status"].get<std::string>());
}

}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("take-even reply on 7x6") {
    Session s;
    json r = send(s, {{"type", "newgame"}, {"w", 7}, {"h", 6}, {"k", 4}, {"engine_seat", "P2"}, {"strategy", "auto"}});
    CHECK(r["type"] == "state");
    r = send(s, {{"type", "move"}, {"col", 3}});
    CHECK(r["type"] == "engine-move");
    CHECK(r["col"] == 3);
    CHECK(r["strategy_used"] == "take-even");
    check_snapshot(r["snapshot"]);
}

TEST_CASE("prediction") {
    Session s;
    send(s, {{"type", "newgame"}, {"w", 9}, {"h", 1}, {"k", 3}, {"engine_seat", "P2"}, {"strategy", "auto"}});
    const json r = send(s, {{"type", "outcome"}});
    CHECK(r["type"] == "prediction");
    CHECK(r["outcome"] == "Draw");
}

TEST_CASE("illegal move leaves the state alone") {
    Session s;
    send(s, {{"type", "newgame"}, {"w", 3}, {"h", 2}, {"k", 3}, {"engine_seat", "P2"}});
    const json before = send(s, {{"type", "move"}, {"col", 2}});  // engine stacks on 2
    REQUIRE(before["snapshot"]["history"].size() == 2);
    const json r = send(s, {{"type", "move"}, {"col", 2}});
    CHECK(r["type"] == "error");
    CHECK(r["code"] == "IllegalMove");
    CHECK(r["snapshot"] == before["snapshot"]);
}

TEST_CASE("engine opens as P1 and labels the solver") {
    Session s;
    const json r = send(s, {{"type", "newgame"}, {"w", 4}, {"h", 4}, {"k", 3}, {"engine_seat", "P1"}});
    CHECK(r["type"] == "engine-move");
    CHECK(r["strategy_used"] == "solver");
    check_snapshot(r["snapshot"]);
}

TEST_CASE("fallback beyond the solver ceiling") {
    Session s;
    const json r = send(s, {{"type", "newgame"}, {"w", 7}, {"h", 6}, {"k", 4}, {"engine_seat", "P1"}});
    CHECK(r["strategy_used"] == "fallback");
}

TEST_CASE("errors are responses") {
    Session s;
    CHECK(send(s, {{"type", "move"}, {"col", 0}})["type"] == "error");
    CHECK(json::parse(s.handle("not json"))["code"] == "ParseError");
    CHECK(send(s, {{"type", "dance"}})["code"] == "ParseError");
    CHECK(send(s, {{"type", "newgame"}, {"w", 0}, {"h", 6}, {"k", 4}})["code"] == "InvalidSpec");
    CHECK(send(s, {{"type", "newgame"}, {"w", 7}, {"h", 6}, {"k", 4}, {"engine_seat", "P1"}, {"strategy", "take-even"}})
              ["code"] == "NotApplicable");
    CHECK(send(s, {{"type", "newgame"}, {"w", 7}, {"h", 6}, {"k", 4}, {"strategy", "nosuch"}})["code"] == "ParseError");
}

TEST_CASE("hint and resign") {
    Session s;
    send(s, {{"type", "newgame"}, {"w", 7}, {"h", 6}, {"k", 4}, {"engine_seat", "P1"}});
    const json h = send(s, {{"type", "hint"}});
    CHECK(h["type"] == "engine-move");
    CHECK(h["applied"] == false);
    CHECK(h["strategy_used"] == "take-even");
    const json r = send(s, {{"type", "resign"}});
    CHECK(r["snapshot"]["status"] == "P1Win");
    CHECK(send(s, {{"type", "move"}, {"col", 0}})["type"] == "error");
}

TEST_CASE("full game through the stream transport") {
    std::stringstream in;
    in << json{{"type", "newgame"}, {"w", 5}, {"h", 1}, {"k", 2}, {"engine_seat", "P2"}}.dump() << "\n";
    for (int c = 0; c < 5; ++c) in << json{{"type", "move"}, {"col", c}}.dump() << "\n";
    std::stringstream out;
    run_session(in, out);
    std::string line;
    int n = 0;
    json last;
    while (std::getline(out, line)) {
        last = json::parse(line);
        check_snapshot(last["snapshot"]);
        ++n;
    }
    CHECK(n == 6);
    CHECK(last["snapshot"]["status"] != "ongoing");
}

TEST_CASE("fuzzing never breaks a session") {
    std::mt19937 rng(1234);
    const char* types[] = {"newgame", "move", "hint", "state", "outcome", "resign", "bogus"};
    for (int session = 0; session < 40; ++session) {
        Session s;
        for (int i = 0; i < 60; ++i) {
            json req;
            const std::string type = types[rng() % 7];
            req["type"] = type;
            if (type == "newgame") {
                req["w"] = static_cast<int>(rng() % 7);
                req["h"] = static_cast<int>(rng() % 5);
                req["k"] = 2 + static_cast<int>(rng() % 3);
                req["engine_seat"] = rng() % 2 ? "P1" : "P2";
                const char* names[] = {"auto", "solver", "pair", "k2", "take-even", "automata", "x"};
                req["strategy"] = names[rng() % 7];
            } else if (type == "move") {
                req["col"] = static_cast<int>(rng() % 8) - 1;
            }
            std::string raw = req.dump();
            if (rng() % 20 == 0) raw = raw.substr(0, raw.size() / 2);
            const json r = json::parse(s.handle(raw));
            CHECK(r.contains("type"));
            CHECK(r.contains("snapshot"));
            check_snapshot(r["snapshot"]);
        }
    }
}

}
