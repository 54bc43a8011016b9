#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "misere/core.hpp"
#include "misere/oracle.hpp"
#include "misere/solver.hpp"
#include "misere/strategies.hpp"

namespace misere {

enum class Claim {
    AlwaysWins,
    NeverLoses,
    // The opponent may connect k without losing; only the strategist's own
    // runs are checked.
    NeverConnectsKRelaxed,
};

std::string_view to_string(Claim claim);

struct VerifyOptions {
    bool memoize = true;
    // 0 = unlimited. Counts strategist-fixed nodes expanded.
    std::uint64_t max_states = 0;
    // Called on every non-terminal state reached, after either side's move.
    // Throwing GameError from here fails the run at that state.
    std::function<void(const GameState&)> on_state;
};

struct VerificationReport {
    BoardSpec spec;
    StrategyKind kind;
    Player seat;
    Claim claim;
    std::uint64_t states_visited = 0;
    int max_game_length = 0;
    bool passed = false;
    // On failure: moves from the empty board to the offending state.
    std::vector<int> counterexample;
    std::string failure;
    double seconds = 0;

    // One line of JSON.
    std::string certificate() const;
};

// Exhaustive check over every opponent line with the strategist's replies
// fixed. Throws NotApplicable when the kind gives the seat no guarantee, and
// BudgetExceeded past max_states.
VerificationReport verify_strategy(const BoardSpec& spec, StrategyKind kind, Player seat, Claim claim,
                                   const VerifyOptions& options = {});

// The claim a strategy's guarantee corresponds to.
Claim claim_for(Guarantee g);

struct TableCheck {
    BoardSpec spec;
    Outcome oracle;
    std::optional<Outcome> solver;
    std::string error;  // solver failure, sweep continues
    bool match() const { return solver && *solver == oracle; }
    std::string certificate() const;
};

std::vector<TableCheck> verify_table(const std::vector<BoardSpec>& grid, const SolverConfig& config = {});

// Finite specs with w*h <= max_cells, w,h >= 1, for each k.
std::vector<BoardSpec> spec_grid(int max_cells, const std::vector<int>& ks);

struct DuelRecord {
    std::vector<int> moves;
    Outcome result;
    Outcome expected;
    bool ok() const { return result == expected; }
};

// Strategy for `seat` against solver-optimal opposition.
DuelRecord strategy_vs_solver_duel(const BoardSpec& spec, StrategyKind kind, Player seat,
                                   const SolverConfig& config = {});

}  // namespace misere
