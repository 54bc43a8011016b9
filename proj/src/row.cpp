#include "misere/row.hpp"

#include <algorithm>

namespace misere {

Row parse_row(std::string_view text) {
    Row row;
    row.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'X': row.push_back(Cell::P1); break;
            case 'O': row.push_back(Cell::P2); break;
            case '-': case '.': row.push_back(Cell::Empty); break;
            default: throw GameError(ErrorCode::ParseError, std::string("bad row character '") + ch + "'");
        }
    }
    return row;
}

std::string render(const Row& row) {
    std::string s;
    for (Cell c : row) s += glyph(c);
    return s;
}

Row row_of(const GameState& state, int row) {
    Row out(state.width());
    for (int c = 0; c < state.width(); ++c) out[c] = state.at(c, row);
    return out;
}

int count(const Row& row, Cell c) { return static_cast<int>(std::count(row.begin(), row.end(), c)); }

bool touches_own(const Row& row, int col, Cell who) {
    const int w = static_cast<int>(row.size());
    return (col > 0 && row[col - 1] == who) || (col + 1 < w && row[col + 1] == who);
}

}  // namespace misere
