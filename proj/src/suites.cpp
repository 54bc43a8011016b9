#include "misere/suites.hpp"

#include <chrono>
#include <set>

#include <json.hpp>

#include "misere/automata.hpp"
#include "misere/k2.hpp"
#include "misere/verifier.hpp"

namespace misere {

namespace {

using Sink = std::function<void(const std::string&)>;

struct Tally {
    SuiteResult& r;
    const Sink& sink;
    void add(bool ok, const std::string& cert) {
        r.passed &= ok;
        ++r.checks;
        sink(cert);
    }
    void add(const VerificationReport& v) { add(v.passed, v.certificate()); }
};

void theorem1(Tally& t) {
    auto bounded = [&](const BoardSpec& spec) {
        const auto r = verify_strategy(spec, StrategyKind::TakeEven, Player::P2, Claim::AlwaysWins);
        const int w = spec.width.value();
        const int bound = 1 + (w - w / spec.k) * spec.height.value();
        auto j = nlohmann::json::parse(r.certificate());
        j["length_bound"] = bound;
        const bool ok = r.passed && r.max_game_length <= bound;
        if (!ok) j["result"] = "fail";
        t.add(ok, j.dump());
    };
    bounded({7, 6, 4});
    for (int k : {3, 4})
        for (int h : {2, 4})
            for (int w = k; w <= 7; ++w) bounded({w, h, k});
}

void theorem3(Tally& t) {
    t.add(verify_strategy({4, 3, 3}, StrategyKind::DelayedTakeEven, Player::P2, Claim::AlwaysWins));
    t.add(verify_strategy({6, 3, 3}, StrategyKind::DelayedTakeEven, Player::P2, Claim::AlwaysWins));
    t.add(verify_strategy({5, 3, 3}, StrategyKind::DelayedTakeEven, Player::P1, Claim::AlwaysWins));
    t.add(verify_strategy({7, 3, 3}, StrategyKind::DelayedTakeEven, Player::P1, Claim::AlwaysWins));
}

void theorem5(Tally& t) {
    for (int w = 1; w <= 12; ++w)
        for (Player seat : {Player::P1, Player::P2})
            t.add(verify_strategy({w, 1, 3}, StrategyKind::PairTwoRule, seat, Claim::NeverConnectsKRelaxed));
}

void automata_suite(Tally& t) {
    for (int w = 1; w <= 12; ++w)
        for (Player seat : {Player::P1, Player::P2}) {
            const BoardSpec spec{w, 1, 3};
            const StrategyKind kind =
                applicable(StrategyKind::AutomataOdd, spec, seat) ? StrategyKind::AutomataOdd : StrategyKind::AutomataEven;
            VerifyOptions opt;
            opt.on_state = [seat](const GameState& s) {
                for (const auto& seg : automata::split_segments(row_of(s), seat))
                    if (seg.cls == automata::SegmentClass::E && !seg.odd())
                        throw GameError(ErrorCode::NonCanonical, "E_even in " + s.render_row());
            };
            t.add(verify_strategy(spec, kind, seat, Claim::NeverConnectsKRelaxed, opt));
        }
}

void k2_suite(Tally& t) {
    std::vector<BoardSpec> row;
    for (int w = 1; w <= 10; ++w) row.push_back({w, 1, 2});
    for (const auto& c : verify_table(row)) t.add(c.match(), c.certificate());
    for (int w : {3, 5, 7, 8})
        t.add(verify_strategy({w, 1, 2}, StrategyKind::K2Template, Player::P2, Claim::AlwaysWins));
    for (int w : {4, 6})
        for (Player seat : {Player::P1, Player::P2})
            t.add(verify_strategy({w, 1, 2}, StrategyKind::K2Template, seat, Claim::NeverLoses));
    for (int w = 2; w <= 4; ++w) {
        t.add(verify_strategy({w, 2, 2}, StrategyKind::TakeEven, Player::P2, Claim::AlwaysWins));
        t.add(verify_strategy({w, 3, 2}, StrategyKind::DelayedTakeEven, Player::P2, Claim::AlwaysWins));
    }
}

void table1(Tally& t, const SuiteOptions& opt) {
    SolverConfig cfg;
    cfg.max_cells = opt.max_cells;
    for (const auto& c : verify_table(spec_grid(opt.max_cells, {2, 3, 4, 5}), cfg)) t.add(c.match(), c.certificate());
}

void table2(Tally& t) {
    for (int w = 2; w <= 8; ++w) {
        long plays = 0;
        bool ok = true;
        std::string first_bad;
        std::set<std::string> seen;
        std::function<void(const Row&, Player)> visit = [&](const Row& r, Player mover) {
            if (!seen.insert(render(r)).second) return;
            const bool any = count(r, Cell::Empty) != w;
            for (int c : k2::non_losing_cells(r, mover)) {
                Row next = r;
                next[c] = cell_of(mover);
                if (any) {
                    ++plays;
                    const auto cls = k2::classify_play(r, c, mover);
                    if (!(k2::tally_of(next) - k2::tally_of(r) == cls.delta(mover)) && ok) {
                        ok = false;
                        first_bad = render(r) + "@" + std::to_string(c);
                    }
                }
                visit(next, opponent(mover));
            }
        };
        visit(Row(w, Cell::Empty), Player::P1);
        nlohmann::json j{{"spec", {{"w", w}, {"h", 1}, {"k", 2}}},
                         {"claim", "tally-deltas"},
                         {"plays", plays},
                         {"result", ok ? "pass" : "fail"}};
        if (!ok) j["counterexample"] = first_bad;
        t.add(ok, j.dump());
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "theorem3", "theorem5", "automata",
                                                "k2",       "table1",   "table2"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options, const Sink& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult result;
    Tally t{result, sink};
    if (name == "theorem1") theorem1(t);
    else if (name == "theorem3") theorem3(t);
    else if (name == "theorem5") theorem5(t);
    else if (name == "automata") automata_suite(t);
    else if (name == "k2") k2_suite(t);
    else if (name == "table1") table1(t, options);
    else if (name == "table2") table2(t);
    else throw GameError(ErrorCode::ParseError, "unknown suite '" + name + "'");
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace misere
