#pragma once

// Single-row, k=2 analysis. A drawn k=2 row strictly alternates X and O, so
// one placed piece fixes the owner of every cell of its empty neighbourhood:
// that alternation is the piece's template. Bookkeeping follows counts of
// non-losing in-template moves per player.

#include <optional>
#include <string>
#include <vector>

#include "misere/core.hpp"
#include "misere/row.hpp"

namespace misere::k2 {

// Maximal run of empty cells [first, last] and the pieces bounding it
// (nullopt = board edge).
struct Stretch {
    int first;
    int last;
    std::optional<Cell> left;
    std::optional<Cell> right;

    int size() const { return last - first + 1; }
    bool bounded_both() const { return left && right; }
    // Both bounds are pieces and their alternations disagree.
    bool contradictory() const;
    // Owner prescribed at `col` by the alternation from the left bound piece.
    Cell from_left(int col) const;
    Cell from_right(int col) const;
};

std::vector<Stretch> stretches(const Row& row);

// Prescriptions per column. A cell inside a contradictory stretch carries both
// alternations; cells in consistent or one-sided stretches carry one.
struct Template {
    std::vector<std::optional<Cell>> primary;
    std::vector<std::optional<Cell>> secondary;

    // "O  XO" style: prescribed owner, ' ' for none, '?' where two disagree.
    std::string render() const;
};

// Throws EmptyBoard when the row has no pieces yet.
Template template_of(const Row& row);

struct Tally {
    int x_moves = 0;
    int o_moves = 0;

    int for_player(Player p) const { return p == Player::P1 ? x_moves : o_moves; }
    friend bool operator==(const Tally&, const Tally&) = default;
    friend Tally operator-(const Tally& a, const Tally& b) {
        return {a.x_moves - b.x_moves, a.o_moves - b.o_moves};
    }
};

// Non-losing in-template moves per player. Throws EmptyBoard on an empty row.
Tally tally_of(const Row& row);

// Annotation orders for contradictory stretches: assert the left piece's
// template, the right piece's, or both from the outside in. Counting is a
// sequential simulation in annotation order, so it is an independent route to
// the closed form in tally_of.
enum class TallyOrder { LeftToRight, RightToLeft, OutsideIn };
Tally tally_by_annotation(const Row& row, TallyOrder order);

enum class PlayKind { InTemplate, DoubleContradiction, Offensive, SelfImmolation };

struct PlayClass {
    PlayKind kind;
    bool exclusive = false;  // offensive play on the wall cell itself

    // Tally change caused by `mover` making this play.
    Tally delta(Player mover) const;
};

std::string_view to_string(PlayKind kind);

// Throws IllegalMove on an occupied cell, LosingPlay if `player` would sit next
// to its own piece, EmptyBoard on the opening move.
PlayClass classify_play(const Row& row, int col, Player player);

// Cells `player` can take without touching its own pieces.
std::vector<int> non_losing_cells(const Row& row, Player player);

// k=2, h=1 policy. P2: scripted tally play for odd w >= 3 and even w >= 8,
// exact-solver table for w in {1, 2, 4, 6}. P1: exact-solver table for
// w in {1, 2, 4, 6}. Throws NotApplicable otherwise.
int k2_move(const Row& row, Player seat);

// Widths backed by the solver policy table instead of the script.
bool uses_policy_table(int width);

}  // namespace misere::k2
