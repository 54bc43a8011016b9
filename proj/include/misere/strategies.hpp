#pragma once

#include <optional>
#include <string_view>

#include "misere/core.hpp"

namespace misere {

enum class StrategyKind {
    TakeEven,
    DelayedTakeEven,
    PairTwoRule,
    K2Template,
    AutomataOdd,
    AutomataEven,
};

// What a strategy promises for a seat on a spec.
enum class Guarantee {
    None,        // not applicable
    Wins,        // the strategist always wins
    NeverLoses,  // win or draw
};

std::string_view to_string(StrategyKind kind);
std::string_view to_string(Guarantee g);

// Stable protocol names: take-even, delayed-take-even, pair, k2, automata.
// Both automata kinds share "automata"; the seat's parity picks one.
std::string_view protocol_name(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(std::string_view name, const BoardSpec& spec, Player seat);

Guarantee guarantee(StrategyKind kind, const BoardSpec& spec, Player seat);
inline bool applicable(StrategyKind kind, const BoardSpec& spec, Player seat) {
    return guarantee(kind, spec, seat) != Guarantee::None;
}

// The strategy the "auto" setting uses for a seat, if any has a guarantee.
std::optional<StrategyKind> auto_strategy(const BoardSpec& spec, Player seat);

// P2 stacks on P1's last piece. Requires P2 to move, h even, w >= k.
int take_even_move(const GameState& state);

// Odd h >= 3: answer a row-0 move in row 0 (pair strategy for k >= 3, the
// k=2 policy for k = 2), otherwise stack on the opponent. Throws Stuck if the
// rule's target is unavailable.
int delayed_take_even_move(const GameState& state);

// Dispatch for the side to move. Throws NotApplicable when `kind` gives that
// seat no guarantee on this spec.
int strategy_move(StrategyKind kind, const GameState& state);

}  // namespace misere
