#pragma once

#include <cstdint>

#include "misere/core.hpp"

namespace misere {

// Column-major bit layout: column c owns bits [c*(h+1), c*(h+1)+h]; bit
// c*(h+1)+r is cell (c, r) and the top bit of each column is an always-zero
// sentinel. Requires w*(h+1) <= 64.
struct PackedPosition {
    int width = 0;
    int height = 0;
    std::uint64_t planes[2] = {0, 0};  // indexed by Player
    Player to_move = Player::P1;

    static constexpr int kMaxBits = 64;
    static bool fits(int width, int height) { return width * (height + 1) <= kMaxBits; }

    // Throws TooLarge when the board does not fit the bit budget.
    static PackedPosition encode(const GameState& state);
    // History is not part of the encoding; the decoded state has none.
    GameState decode(int k, Rules rules = {}) const;

    std::uint64_t occupied() const { return planes[0] | planes[1]; }
    // Mover's stones plus one marker bit above each column's top stone.
    // Unique per (cells, to_move) for reachable positions.
    std::uint64_t key() const;
    PackedPosition mirrored() const;
    std::uint64_t canonical_key() const;

    friend bool operator==(const PackedPosition& a, const PackedPosition& b) {
        return a.width == b.width && a.height == b.height && a.planes[0] == b.planes[0] &&
               a.planes[1] == b.planes[1] && a.to_move == b.to_move;
    }
};

namespace bits {

inline std::uint64_t bottom_mask(int width, int height) {
    std::uint64_t m = 0;
    for (int c = 0; c < width; ++c) m |= std::uint64_t{1} << (c * (height + 1));
    return m;
}

inline std::uint64_t board_mask(int width, int height) {
    return bottom_mask(width, height) * ((std::uint64_t{1} << height) - 1);
}

// Reverses the order of the (h+1)-bit column groups.
inline std::uint64_t mirror_columns(std::uint64_t x, int width, int height) {
    const int h1 = height + 1;
    const std::uint64_t col = (std::uint64_t{1} << h1) - 1;
    std::uint64_t out = 0;
    for (int c = 0; c < width; ++c) out |= ((x >> (c * h1)) & col) << ((width - 1 - c) * h1);
    return out;
}

// True iff `stones` contains k consecutive bits stepping by `shift`.
// Log-step AND folding: after each round `run` marks the starts of runs of
// length `len`.
inline bool has_run(std::uint64_t stones, int shift, int k) {
    std::uint64_t run = stones;
    int len = 1;
    while (len * 2 <= k) {
        if (len * shift >= 64) return false;
        run &= run >> (len * shift);
        len *= 2;
    }
    if (len < k) {
        if ((k - len) * shift >= 64) return false;
        run &= run >> ((k - len) * shift);
    }
    return run != 0;
}

}  // namespace bits

}  // namespace misere
