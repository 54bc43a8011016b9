#include "misere/pair.hpp"

namespace misere {

PairLabeling::PairLabeling(int width) : width_(width) {
    if (width < 1) throw GameError(ErrorCode::InvalidSpec, "pair labeling needs a positive width");
}

std::optional<int> PairLabeling::singleton() const {
    if (width_ % 2 == 0) return std::nullopt;
    return width_ - 1;
}

std::optional<int> PairLabeling::pair_of(int col) const {
    if (singleton() == col) return std::nullopt;
    return col / 2;
}

bool PairLabeling::balanced(const Row& row) const {
    for (int p = 0; p < pair_count(); ++p) {
        const Cell a = row[2 * p];
        const Cell b = row[2 * p + 1];
        if (a == Cell::Empty || b == Cell::Empty || a == b) return false;
    }
    return true;
}

int PairLabeling::half_filled_by(const Row& row, Cell who) const {
    int n = 0;
    for (int p = 0; p < pair_count(); ++p) {
        const Cell a = row[2 * p];
        const Cell b = row[2 * p + 1];
        if ((a == who && b == Cell::Empty) || (b == who && a == Cell::Empty)) ++n;
    }
    return n;
}

int pair_move(const Row& row, const PairLabeling& labeling, Player strategist) {
    const Cell theirs = cell_of(opponent(strategist));
    for (int p = 0; p < labeling.pair_count(); ++p) {
        const int a = 2 * p;
        const int b = a + 1;
        if (row[a] == theirs && row[b] == Cell::Empty) return b;
        if (row[b] == theirs && row[a] == Cell::Empty) return a;
    }
    for (int c = labeling.width() - 1; c >= 0; --c)
        if (row[c] == Cell::Empty) return c;
    throw GameError(ErrorCode::BoardFull, "no empty cell in the row");
}

}  // namespace misere
