#include "misere/packed.hpp"

#include <algorithm>
#include <string>

namespace misere {

PackedPosition PackedPosition::encode(const GameState& state) {
    const int w = state.width();
    const int h = state.height();
    if (!fits(w, h))
        throw GameError(ErrorCode::TooLarge, "board needs " + std::to_string(w * (h + 1)) +
                                                 " bits; budget is 64");
    PackedPosition p;
    p.width = w;
    p.height = h;
    p.to_move = state.to_move();
    for (int c = 0; c < w; ++c) {
        for (int r = 0; r < state.column_height(c); ++r) {
            const std::uint64_t bit = std::uint64_t{1} << (c * (h + 1) + r);
            p.planes[state.at(c, r) == Cell::P1 ? 0 : 1] |= bit;
        }
    }
    return p;
}

GameState PackedPosition::decode(int k, Rules rules) const {
    std::string text;
    for (int r = height - 1; r >= 0; --r) {
        for (int c = 0; c < width; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << (c * (height + 1) + r);
            text += (planes[0] & bit) ? 'X' : (planes[1] & bit) ? 'O' : '-';
        }
        text += '\n';
    }
    GameState s = GameState::from_text(text, k, rules);
    if (s.to_move() != to_move)
        throw GameError(ErrorCode::ParseError, "side to move disagrees with piece counts");
    return s;
}

std::uint64_t PackedPosition::key() const {
    const std::uint64_t mover = planes[to_move == Player::P1 ? 0 : 1];
    return mover + occupied() + bits::bottom_mask(width, height);
}

PackedPosition PackedPosition::mirrored() const {
    PackedPosition m = *this;
    m.planes[0] = bits::mirror_columns(planes[0], width, height);
    m.planes[1] = bits::mirror_columns(planes[1], width, height);
    return m;
}

std::uint64_t PackedPosition::canonical_key() const {
    return std::min(key(), mirrored().key());
}

}  // namespace misere
