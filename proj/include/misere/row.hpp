#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "misere/core.hpp"

namespace misere {

// A single board row viewed on its own (the h=1 game, or row 0 of a taller
// board).
using Row = std::vector<Cell>;

// Parses "X-O--" style text. Throws ParseError on other characters.
Row parse_row(std::string_view text);
std::string render(const Row& row);
Row row_of(const GameState& state, int row = 0);

inline bool occupied(const Row& row, int col) { return row[col] != Cell::Empty; }
int count(const Row& row, Cell c);
// True iff `who` at `col` would sit horizontally next to one of its own pieces.
bool touches_own(const Row& row, int col, Cell who);

}  // namespace misere
