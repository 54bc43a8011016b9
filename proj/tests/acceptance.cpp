// One PASS/FAIL line per primary acceptance criterion. Exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "misere/automata.hpp"
#include "misere/k2.hpp"
#include "misere/oracle.hpp"
#include "misere/solver.hpp"
#include "misere/verifier.hpp"
#include "naive.hpp"

using namespace misere;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void report(const char* name, double limit_s, const std::function<Line()>& body) {
    const auto t0 = Clock::now();
    Line line;
    try {
        line = body();
    } catch (const std::exception& e) {
        line.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (line.ok && secs > limit_s) line.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(limit_s) + "s");
    if (!line.ok) ++failures;
    std::printf("%s %-22s %7.2fs  %s\n", line.ok ? "PASS" : "FAIL", name, secs, line.detail.c_str());
    std::fflush(stdout);
}

std::string spec_str(const BoardSpec& s) {
    return std::to_string(s.width.value()) + "x" + std::to_string(s.height.value()) + " k=" + std::to_string(s.k);
}

void require_pass(Line& line, const VerificationReport& r) {
    if (!r.passed) line.fail(r.certificate());
}

}  // namespace

int main() {
    report("take-even-7x6x4", 1.0, [] {
        Line line;
        const auto r = verify_strategy({7, 6, 4}, StrategyKind::TakeEven, Player::P2, Claim::AlwaysWins);
        require_pass(line, r);
        if (r.states_visited > 16384) line.fail("states " + std::to_string(r.states_visited) + " > 4^7");
        if (r.max_game_length > 37) line.fail("game length " + std::to_string(r.max_game_length) + " > 37");
        line.detail = line.ok ? "7x6 k=4 take-even wins; states " + std::to_string(r.states_visited) +
                                    ", longest game " + std::to_string(r.max_game_length)
                              : line.detail;
        return line;
    });

    report("take-even-grid-length", 30.0, [] {
        Line line;
        int runs = 0;
        for (int k : {3, 4})
            for (int h : {2, 4})
                for (int w = k; w <= 7; ++w) {
                    const BoardSpec spec{w, h, k};
                    const auto r = verify_strategy(spec, StrategyKind::TakeEven, Player::P2, Claim::AlwaysWins);
                    require_pass(line, r);
                    const int bound = 1 + (w - w / k) * h;
                    if (r.max_game_length > bound)
                        line.fail(spec_str(spec) + " length " + std::to_string(r.max_game_length) + " > " +
                                  std::to_string(bound));
                    ++runs;
                }
        if (line.ok) line.detail = std::to_string(runs) + " specs, take-even wins within the length bound";
        return line;
    });

    report("delayed-take-even", 600.0, [] {
        Line line;
        const std::pair<BoardSpec, Player> cases[] = {
            {{4, 3, 3}, Player::P2}, {{6, 3, 3}, Player::P2}, {{5, 3, 3}, Player::P1}, {{7, 3, 3}, Player::P1}};
        std::string states;
        for (const auto& [spec, seat] : cases) {
            const auto r = verify_strategy(spec, StrategyKind::DelayedTakeEven, seat, Claim::AlwaysWins);
            require_pass(line, r);
            states += " " + spec_str(spec) + ":" + std::to_string(r.states_visited);
        }
        if (line.ok) line.detail = "delayed take-even wins; states" + states;
        return line;
    });

    report("pair-relaxed", 60.0, [] {
        Line line;
        std::uint64_t states = 0;
        for (int w = 1; w <= 12; ++w)
            for (Player seat : {Player::P1, Player::P2}) {
                const auto r =
                    verify_strategy({w, 1, 3}, StrategyKind::PairTwoRule, seat, Claim::NeverConnectsKRelaxed);
                require_pass(line, r);
                states += r.states_visited;
            }
        if (line.ok) line.detail = "pair strategy never connects 3, w<=12, both seats; states " + std::to_string(states);
        return line;
    });

    report("automata-relaxed", 60.0, [] {
        Line line;
        std::uint64_t states = 0;
        std::set<std::string> classes;
        for (int w = 1; w <= 12; ++w)
            for (Player seat : {Player::P1, Player::P2}) {
                const BoardSpec spec{w, 1, 3};
                const StrategyKind kind = applicable(StrategyKind::AutomataOdd, spec, seat)
                                              ? StrategyKind::AutomataOdd
                                              : StrategyKind::AutomataEven;
                VerifyOptions opt;
                // Closure: every state splits into A..E segments and no E_even
                // ever appears.
                opt.on_state = [seat, &classes](const GameState& s) {
                    for (const auto& seg : automata::split_segments(row_of(s), seat)) {
                        if (seg.cls == automata::SegmentClass::E && !seg.odd())
                            throw GameError(ErrorCode::NonCanonical, "E_even in " + s.render_row());
                        classes.insert(std::string(automata::to_string(seg.cls)));
                    }
                };
                const auto r = verify_strategy(spec, kind, seat, Claim::NeverConnectsKRelaxed, opt);
                require_pass(line, r);
                states += r.states_visited;
            }
        if (line.ok) {
            std::string seen;
            for (const auto& c : classes) seen += c;
            line.detail = "no 3-run, closure holds, no E_even; classes seen " + seen + "; states " +
                          std::to_string(states);
        }
        return line;
    });

    report("k2-tally-deltas", 10.0, [] {
        Line line;
        long plays = 0;
        for (int w = 1; w <= 8; ++w) {
            std::set<std::string> seen;
            std::function<void(const Row&, Player)> visit = [&](const Row& r, Player mover) {
                if (!seen.insert(render(r)).second) return;
                const bool any = count(r, Cell::Empty) != w;
                for (int c : k2::non_losing_cells(r, mover)) {
                    Row next = r;
                    next[c] = cell_of(mover);
                    if (any) {
                        const auto cls = k2::classify_play(r, c, mover);
                        const k2::Tally measured = k2::tally_of(next) - k2::tally_of(r);
                        if (!(measured == cls.delta(mover)))
                            line.fail(render(r) + " play " + std::to_string(c) + " " +
                                      std::string(k2::to_string(cls.kind)));
                        ++plays;
                    }
                    visit(next, opponent(mover));
                }
            };
            visit(Row(w, Cell::Empty), Player::P1);
        }
        if (line.ok) line.detail = std::to_string(plays) + " plays, every measured delta matches its class";
        return line;
    });

    report("k2-row", 600.0, [] {
        Line line;
        std::vector<BoardSpec> row;
        for (int w = 1; w <= 10; ++w) row.push_back({w, 1, 2});
        for (const auto& t : verify_table(row)) {
            const int w = t.spec.width.value();
            const bool draw = w == 1 || w == 2 || w == 4 || w == 6;
            const Outcome want = draw ? Outcome::Draw : Outcome::P2Win;
            if (!t.solver || *t.solver != want) line.fail("solver disagrees at " + spec_str(t.spec));
        }
        for (int w : {3, 5, 7, 8})
            require_pass(line, verify_strategy({w, 1, 2}, StrategyKind::K2Template, Player::P2, Claim::AlwaysWins));
        for (int w : {4, 6}) {
            require_pass(line, verify_strategy({w, 1, 2}, StrategyKind::K2Template, Player::P2, Claim::NeverLoses));
            const auto duel = strategy_vs_solver_duel({w, 1, 2}, StrategyKind::K2Template, Player::P2);
            if (duel.result != Outcome::Draw) line.fail("w=" + std::to_string(w) + " duel did not draw");
        }
        for (int w = 2; w <= 4; ++w) {
            require_pass(line, verify_strategy({w, 2, 2}, StrategyKind::TakeEven, Player::P2, Claim::AlwaysWins));
            require_pass(line,
                         verify_strategy({w, 3, 2}, StrategyKind::DelayedTakeEven, Player::P2, Claim::AlwaysWins));
        }
        if (line.ok)
            line.detail = "row draws exactly at 1,2,4,6; template wins 3,5,7,8, draws 4,6; h=2,3 w=2..4 P2 wins";
        return line;
    });

    report("oracle-vs-solver", 600.0, [] {
        Line line;
        const auto rows = verify_table(spec_grid(16, {2, 3, 4, 5}));
        int mismatches = 0;
        for (const auto& t : rows)
            if (!t.match()) {
                ++mismatches;
                line.fail(t.certificate());
            }
        if (line.ok) line.detail = std::to_string(rows.size()) + " specs with w*h<=16, zero mismatches";
        return line;
    });

    report("solver-exact", 600.0, [] {
        Line line;
        int specs = 0;
        Solver solver;
        for (int k : {2, 3})
            for (int h = 1; h <= 12; ++h)
                for (int w = 1; w * h <= 12; ++w) {
                    const GameState s = GameState::new_game({w, h, k});
                    if (solver.solve(s).outcome != testing::naive_value(s))
                        line.fail("naive disagrees at " + spec_str(s.spec()));
                    ++specs;
                }
        // Repeated and parallel runs give identical values and moves.
        const BoardSpec probe[] = {{4, 4, 3}, {5, 3, 3}, {12, 1, 3}, {6, 2, 2}};
        for (const auto& spec : probe) {
            const GameState s = GameState::new_game(spec);
            Solver base;
            const auto want = base.solve(s);
            for (int threads : {1, 2, 4}) {
                SolverConfig cfg;
                cfg.threads = threads;
                Solver again(cfg);
                const auto got = again.solve(s);
                if (got.outcome != want.outcome || got.best_move != want.best_move)
                    line.fail("nondeterministic at " + spec_str(spec));
            }
            std::vector<SolveResult> results(3);
            std::vector<std::thread> pool;
            for (auto& slot : results)
                pool.emplace_back([&slot, &s] {
                    Solver own;
                    slot = own.solve(s);
                });
            for (auto& t : pool) t.join();
            for (const auto& got : results)
                if (got.outcome != want.outcome || got.best_move != want.best_move)
                    line.fail("concurrent solvers disagree at " + spec_str(spec));
        }
        if (line.ok) line.detail = std::to_string(specs) + " specs agree with the naive enumerator; deterministic";
        return line;
    });

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures;
}
