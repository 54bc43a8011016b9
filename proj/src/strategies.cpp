#include "misere/strategies.hpp"

#include "misere/automata.hpp"
#include "misere/k2.hpp"
#include "misere/pair.hpp"
#include "misere/row.hpp"

namespace misere {

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::TakeEven: return "TakeEven";
        case StrategyKind::DelayedTakeEven: return "DelayedTakeEven";
        case StrategyKind::PairTwoRule: return "PairTwoRule";
        case StrategyKind::K2Template: return "K2Template";
        case StrategyKind::AutomataOdd: return "AutomataOdd";
        case StrategyKind::AutomataEven: return "AutomataEven";
    }
    return "?";
}

std::string_view to_string(Guarantee g) {
    switch (g) {
        case Guarantee::None: return "None";
        case Guarantee::Wins: return "Wins";
        case Guarantee::NeverLoses: return "NeverLoses";
    }
    return "?";
}

std::string_view protocol_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::TakeEven: return "take-even";
        case StrategyKind::DelayedTakeEven: return "delayed-take-even";
        case StrategyKind::PairTwoRule: return "pair";
        case StrategyKind::K2Template: return "k2";
        case StrategyKind::AutomataOdd:
        case StrategyKind::AutomataEven: return "automata";
    }
    return "?";
}

namespace {

// The automata kind matching the number of empty cells the seat faces.
StrategyKind automata_kind(int width, Player seat) {
    const int faced = seat == Player::P1 ? width : width - 1;
    return faced % 2 == 1 ? StrategyKind::AutomataOdd : StrategyKind::AutomataEven;
}

}  // namespace

std::optional<StrategyKind> parse_strategy(std::string_view name, const BoardSpec& spec, Player seat) {
    if (name == "take-even") return StrategyKind::TakeEven;
    if (name == "delayed-take-even") return StrategyKind::DelayedTakeEven;
    if (name == "pair") return StrategyKind::PairTwoRule;
    if (name == "k2") return StrategyKind::K2Template;
    if (name == "automata") {
        if (spec.width.is_infinite()) return std::nullopt;
        return automata_kind(spec.width.value(), seat);
    }
    return std::nullopt;
}

Guarantee guarantee(StrategyKind kind, const BoardSpec& spec, Player seat) {
    if (!spec.is_finite() || spec.k < 2) return Guarantee::None;
    const int w = spec.width.value();
    const int h = spec.height.value();
    const int k = spec.k;
    switch (kind) {
        case StrategyKind::TakeEven:
            return seat == Player::P2 && h % 2 == 0 && w >= k ? Guarantee::Wins : Guarantee::None;
        case StrategyKind::DelayedTakeEven: {
            if (h < 3 || h % 2 == 0 || w < k) return Guarantee::None;
            const Player owner = k == 2 ? Player::P2 : (w % 2 == 0 ? Player::P2 : Player::P1);
            return seat == owner ? Guarantee::Wins : Guarantee::None;
        }
        case StrategyKind::PairTwoRule:
            return h == 1 && k >= 3 ? Guarantee::NeverLoses : Guarantee::None;
        case StrategyKind::K2Template:
            if (k != 2 || h != 1) return Guarantee::None;
            if (k2::uses_policy_table(w)) return Guarantee::NeverLoses;
            return seat == Player::P2 ? Guarantee::Wins : Guarantee::None;
        case StrategyKind::AutomataOdd:
        case StrategyKind::AutomataEven:
            if (h != 1 || k < 3) return Guarantee::None;
            return automata_kind(w, seat) == kind ? Guarantee::NeverLoses : Guarantee::None;
    }
    return Guarantee::None;
}

std::optional<StrategyKind> auto_strategy(const BoardSpec& spec, Player seat) {
    for (StrategyKind kind : {StrategyKind::TakeEven, StrategyKind::DelayedTakeEven,
                              StrategyKind::PairTwoRule, StrategyKind::K2Template})
        if (applicable(kind, spec, seat)) return kind;
    return std::nullopt;
}

int take_even_move(const GameState& state) {
    if (!applicable(StrategyKind::TakeEven, state.spec(), state.to_move()))
        throw GameError(ErrorCode::NotApplicable, "take-even needs P2 to move, even h and w >= k");
    const auto last = state.last_move();
    if (!last) throw GameError(ErrorCode::NotApplicable, "take-even answers a previous move");
    if (state.column_height(*last) >= state.height())
        throw GameError(ErrorCode::Stuck, "column above the opponent is full");
    return *last;
}

namespace {

int row0_policy(const GameState& state) {
    const Row row = row_of(state, 0);
    const Player me = state.to_move();
    int col;
    try {
        col = state.k() == 2 ? k2::k2_move(row, me) : pair_move(row, PairLabeling(state.width()), me);
    } catch (const GameError& e) {
        if (e.code() == ErrorCode::BoardFull) throw GameError(ErrorCode::Stuck, "row 0 is full");
        throw;
    }
    if (state.column_height(col) != 0) throw GameError(ErrorCode::Stuck, "row-0 policy chose a filled cell");
    if (state.k() == 2) {
        const Cell mine = cell_of(me);
        if ((col > 0 && row[col - 1] == mine) || (col + 1 < state.width() && row[col + 1] == mine))
            throw GameError(ErrorCode::Stuck, "row-0 policy chose a cell next to its own piece");
    }
    return col;
}

}  // namespace

int delayed_take_even_move(const GameState& state) {
    if (!applicable(StrategyKind::DelayedTakeEven, state.spec(), state.to_move()))
        throw GameError(ErrorCode::NotApplicable,
                        "delayed take-even does not cover this seat on " + state.spec().str());
    const auto last = state.last_square();
    if (!last) return row0_policy(state);
    if (last->row == 0) return row0_policy(state);
    if (state.column_height(last->col) >= state.height())
        throw GameError(ErrorCode::Stuck, "column above the opponent is full");
    return last->col;
}

int strategy_move(StrategyKind kind, const GameState& state) {
    if (state.ended()) throw GameError(ErrorCode::NotApplicable, "game is over");
    const Player me = state.to_move();
    if (!applicable(kind, state.spec(), me))
        throw GameError(ErrorCode::NotApplicable, std::string(to_string(kind)) + " gives " +
                                                      std::string(to_string(me)) + " no guarantee on " +
                                                      state.spec().str());
    switch (kind) {
        case StrategyKind::TakeEven: return take_even_move(state);
        case StrategyKind::DelayedTakeEven: return delayed_take_even_move(state);
        case StrategyKind::PairTwoRule: return pair_move(row_of(state), PairLabeling(state.width()), me);
        case StrategyKind::K2Template: return k2::k2_move(row_of(state), me);
        case StrategyKind::AutomataOdd:
        case StrategyKind::AutomataEven: {
            const Row row = row_of(state);
            const bool odd = automata::parity_of(row) == automata::Parity::Odd;
            if (odd != (kind == StrategyKind::AutomataOdd))
                throw GameError(ErrorCode::NotApplicable, "automata parity does not match the position");
            return automata::automata_row_move(row, me);
        }
    }
    throw GameError(ErrorCode::NotApplicable, "unknown strategy");
}

}  // namespace misere
