// mck: command-line front end for the misère connect-k engine.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "misere/oracle.hpp"
#include "misere/protocol.hpp"
#include "misere/solver.hpp"
#include "misere/suites.hpp"

using namespace misere;

namespace {

constexpr int kUsage = 2;

Extent parse_extent(const std::string& s) {
    if (s == "inf" || s == "infinite") return Extent::infinite();
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw GameError(ErrorCode::ParseError, "bad extent '" + s + "'");
    return v;
}

std::vector<int> parse_moves(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Misere connect-k engine"};
    app.require_subcommand(1);

    std::string ws, hs;
    int k = 0;

    auto* outcome_cmd = app.add_subcommand("outcome", "Outcome under perfect play for a board");
    outcome_cmd->add_option("width", ws, "Width or 'inf'")->required();
    outcome_cmd->add_option("height", hs, "Height or 'inf'")->required();
    outcome_cmd->add_option("k", k, "Run length that loses")->required();

    std::string moves;
    std::string cache_path;
    int max_cells = 20;
    std::uint64_t budget = 0;
    int threads = 1;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a position exactly");
    solve_cmd->add_option("width", ws)->required();
    solve_cmd->add_option("height", hs)->required();
    solve_cmd->add_option("k", k)->required();
    solve_cmd->add_option("--moves", moves, "Comma-separated columns played from the empty board");
    solve_cmd->add_option("--cache", cache_path, "Empty-board value cache file");
    solve_cmd->add_option("--max-cells", max_cells, "Solver ceiling on w*h");
    solve_cmd->add_option("--budget", budget, "Node budget, 0 = unlimited");
    solve_cmd->add_option("--threads", threads, "Root-split worker threads");

    std::string suite;
    std::string cert_path;
    int table_cells = 16;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "theorem1 | theorem3 | theorem5 | automata | k2 | table1 | table2")
        ->required();
    verify_cmd->add_option("--max-cells", table_cells, "table1 sweep ceiling on w*h");
    verify_cmd->add_option("--certificates", cert_path, "Write certificate lines here instead of stdout");

    int sw = 0, sh = 0, sk = 0, port = 0;
    std::string seat, strategy;
    int session_cells = 20;
    std::uint64_t session_budget = 0;
    auto* session_cmd = app.add_subcommand("session", "Line-delimited JSON engine session");
    session_cmd->add_option("--width", sw, "Default width for newgame");
    session_cmd->add_option("--height", sh, "Default height for newgame");
    session_cmd->add_option("--k", sk, "Default k for newgame");
    session_cmd->add_option("--seat", seat, "Default engine seat, P1 or P2");
    session_cmd->add_option("--strategy", strategy, "Default strategy (auto, solver, take-even, ...)");
    session_cmd->add_option("--max-cells", session_cells, "Solver ceiling for fallback replies");
    session_cmd->add_option("--budget", session_budget, "Solver node budget per reply, 0 = unlimited");
    session_cmd->add_option("--port", port, "Serve on 127.0.0.1:PORT instead of stdin/stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*outcome_cmd) {
            const BoardSpec spec{parse_extent(ws), parse_extent(hs), k};
            const ConfigOutcome o = outcome(spec);
            std::cout << to_string(o.outcome) << " (" << describe(o.rule) << ")\n";
            return 0;
        }

        if (*solve_cmd) {
            const BoardSpec spec{parse_extent(ws), parse_extent(hs), k};
            spec.validate();
            const GameState s = replay(spec, parse_moves(moves));
            const bool from_empty = s.ply() == 0;
            SolveCache cache;
            if (!cache_path.empty() && from_empty) {
                cache = SolveCache::load(cache_path);
                if (auto hit = cache.find(spec.width.value(), spec.height.value(), spec.k)) {
                    std::cout << to_string(*hit) << " (cached)\n";
                    return 0;
                }
            }
            SolverConfig cfg;
            cfg.max_cells = max_cells;
            cfg.node_budget = budget;
            cfg.threads = threads;
            Solver solver(cfg);
            const SolveResult r = solver.solve(s);
            std::cout << to_string(r.outcome);
            if (r.best_move) std::cout << " best " << *r.best_move;
            std::cout << " nodes " << r.nodes << "\n";
            if (!cache_path.empty() && from_empty) {
                cache.put(spec.width.value(), spec.height.value(), spec.k, r.outcome);
                cache.save(cache_path);
            }
            return 0;
        }

        if (*verify_cmd) {
            std::ofstream file;
            if (!cert_path.empty()) {
                file.open(cert_path);
                if (!file) throw GameError(ErrorCode::ParseError, "cannot write " + cert_path);
            }
            std::ostream& certs = cert_path.empty() ? std::cout : file;
            SuiteOptions opt;
            opt.max_cells = table_cells;
            const SuiteResult r = run_suite(suite, opt, [&](const std::string& line) { certs << line << '\n'; });
            std::cout << suite << ": " << (r.passed ? "pass" : "fail") << " (" << r.checks << " checks, "
                      << r.seconds << "s)\n";
            return r.passed ? 0 : 1;
        }

        if (*session_cmd) {
            SessionConfig cfg;
            cfg.solver.max_cells = session_cells;
            cfg.solver.node_budget = session_budget;
            if (sw) cfg.newgame_defaults["w"] = sw;
            if (sh) cfg.newgame_defaults["h"] = sh;
            if (sk) cfg.newgame_defaults["k"] = sk;
            if (!seat.empty()) cfg.newgame_defaults["engine_seat"] = seat;
            if (!strategy.empty()) cfg.newgame_defaults["strategy"] = strategy;
            if (port > 0) {
                std::cerr << "listening on 127.0.0.1:" << port << "\n";
                serve_tcp(port, cfg);
            } else {
                run_session(std::cin, std::cout, cfg);
            }
            return 0;
        }
    } catch (const GameError& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::InvalidSpec || e.code() == ErrorCode::ParseError ? kUsage : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
