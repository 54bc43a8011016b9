#include "misere/verifier.hpp"

#include <chrono>
#include <cstring>
#include <unordered_map>

#include <json.hpp>

#include "misere/packed.hpp"

namespace misere {

std::string_view to_string(Claim claim) {
    switch (claim) {
        case Claim::AlwaysWins: return "AlwaysWins";
        case Claim::NeverLoses: return "NeverLoses";
        case Claim::NeverConnectsKRelaxed: return "NeverConnectsK-relaxed";
    }
    return "?";
}

Claim claim_for(Guarantee g) { return g == Guarantee::Wins ? Claim::AlwaysWins : Claim::NeverLoses; }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Failure {
    std::vector<int> path;
    std::string why;
};

class Walker {
  public:
    Walker(StrategyKind kind, Player seat, Claim claim, const VerifyOptions& opt)
        : kind_(kind), seat_(seat), claim_(claim), opt_(opt) {}

    // Max terminal ply below a node (opponent to move), or a failure.
    int node(const GameState& s) {
        std::string key;
        if (opt_.memoize) {
            key = key_of(s);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        ++expanded_;
        if (opt_.max_states && expanded_ > opt_.max_states)
            throw GameError(ErrorCode::BudgetExceeded, "verification exceeded " + std::to_string(opt_.max_states) +
                                                           " states");
        int deepest = 0;
        for (int col : s.legal_moves()) {
            const GameState after = s.apply_move(col);
            int len = after.ended() ? terminal(after) : reply(after);
            if (failure_) return 0;
            deepest = std::max(deepest, len);
        }
        if (opt_.memoize) memo_.emplace(std::move(key), deepest);
        return deepest;
    }

    // Strategist to move on a live state.
    int reply(const GameState& s) {
        if (!observe(s)) return 0;
        int col;
        try {
            col = strategy_move(kind_, s);
        } catch (const GameError& e) {
            fail(s, std::string(to_string(e.code())) + ": " + e.what());
            return 0;
        }
        if (!s.is_legal(col)) {
            fail(s, "strategy chose illegal column " + std::to_string(col));
            return 0;
        }
        const GameState after = s.apply_move(col);
        if (after.ended()) return terminal(after);
        if (!observe(after)) return 0;
        return node(after);
    }

    int terminal(const GameState& s) {
        const Outcome r = *s.result();
        bool ok = true;
        switch (claim_) {
            case Claim::AlwaysWins: ok = r == win_for(seat_); break;
            case Claim::NeverLoses:
            case Claim::NeverConnectsKRelaxed: ok = r != win_for(opponent(seat_)); break;
        }
        if (!ok) fail(s, std::string("game ended ") + std::string(to_string(r)));
        return s.ply();
    }

    std::uint64_t states() const { return opt_.memoize ? memo_.size() : expanded_; }
    const std::optional<Failure>& failure() const { return failure_; }

  private:
    bool observe(const GameState& s) {
        if (!opt_.on_state) return true;
        try {
            opt_.on_state(s);
        } catch (const GameError& e) {
            fail(s, std::string(to_string(e.code())) + ": " + e.what());
            return false;
        }
        return true;
    }

    void fail(const GameState& s, std::string why) {
        if (!failure_) failure_ = Failure{s.history(), std::move(why)};
    }

    static std::string key_of(const GameState& s) {
        if (!PackedPosition::fits(s.width(), s.height())) return s.render();
        const PackedPosition p = PackedPosition::encode(s);
        std::string k(sizeof p.planes, '\0');
        std::memcpy(k.data(), p.planes, sizeof p.planes);
        return k;
    }

    StrategyKind kind_;
    Player seat_;
    Claim claim_;
    const VerifyOptions& opt_;
    std::unordered_map<std::string, int> memo_;
    std::uint64_t expanded_ = 0;
    std::optional<Failure> failure_;
};

}  // namespace

VerificationReport verify_strategy(const BoardSpec& spec, StrategyKind kind, Player seat, Claim claim,
                                   const VerifyOptions& options) {
    spec.validate();
    if (!spec.is_finite()) throw GameError(ErrorCode::InfiniteUnsupported, "verification needs a finite board");
    if (!applicable(kind, spec, seat))
        throw GameError(ErrorCode::NotApplicable, std::string(to_string(kind)) + " gives " +
                                                      std::string(to_string(seat)) + " no guarantee on " + spec.str());
    const auto t0 = Clock::now();
    Rules rules;
    if (claim == Claim::NeverConnectsKRelaxed) rules.immune = opponent(seat);

    Walker walker(kind, seat, claim, options);
    const GameState start = GameState::new_game(spec, rules);
    const int longest = seat == Player::P1 ? walker.reply(start) : walker.node(start);

    VerificationReport r{spec, kind, seat, claim, 0, 0, false, {}, {}, 0};
    r.states_visited = walker.states();
    r.max_game_length = longest;
    r.passed = !walker.failure();
    if (walker.failure()) {
        r.counterexample = walker.failure()->path;
        r.failure = walker.failure()->why;
    }
    r.seconds = since(t0);
    return r;
}

std::string VerificationReport::certificate() const {
    nlohmann::json j;
    j["spec"] = {{"w", spec.width.value()}, {"h", spec.height.value()}, {"k", spec.k}};
    j["strategy"] = to_string(kind);
    j["seat"] = to_string(seat);
    j["claim"] = to_string(claim);
    j["states"] = states_visited;
    j["max_game_length"] = max_game_length;
    j["result"] = passed ? "pass" : "fail";
    if (!passed) {
        j["counterexample"] = counterexample;
        j["failure"] = failure;
    }
    return j.dump();
}

std::string TableCheck::certificate() const {
    nlohmann::json j;
    j["spec"] = {{"w", spec.width.value()}, {"h", spec.height.value()}, {"k", spec.k}};
    j["claim"] = "oracle-matches-solver";
    j["oracle"] = to_string(oracle);
    if (solver) j["solver"] = to_string(*solver);
    if (!error.empty()) j["error"] = error;
    j["result"] = match() ? "pass" : "fail";
    return j.dump();
}

std::vector<BoardSpec> spec_grid(int max_cells, const std::vector<int>& ks) {
    std::vector<BoardSpec> out;
    for (int k : ks)
        for (int h = 1; h <= max_cells; ++h)
            for (int w = 1; w * h <= max_cells; ++w) out.push_back({w, h, k});
    return out;
}

std::vector<TableCheck> verify_table(const std::vector<BoardSpec>& grid, const SolverConfig& config) {
    std::vector<TableCheck> out;
    for (const auto& spec : grid) {
        TableCheck row{spec, outcome(spec).outcome, std::nullopt, {}};
        try {
            Solver solver(config);
            row.solver = solver.solve(GameState::new_game(spec)).outcome;
        } catch (const GameError& e) {
            row.error = std::string(to_string(e.code())) + ": " + e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

DuelRecord strategy_vs_solver_duel(const BoardSpec& spec, StrategyKind kind, Player seat, const SolverConfig& config) {
    Solver solver(config);
    GameState s = GameState::new_game(spec);
    while (!s.ended()) {
        const int col = s.to_move() == seat ? strategy_move(kind, s) : solver.best_move(s);
        s = s.apply_move(col);
    }
    return {s.history(), *s.result(), outcome(spec).outcome};
}

}  // namespace misere
