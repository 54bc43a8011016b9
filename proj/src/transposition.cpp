#include "misere/transposition.hpp"

#include <cassert>

namespace misere {

TranspositionTable::TranspositionTable(int log2_slots)
    : slots_(std::size_t{1} << log2_slots), index_mask_((std::uint64_t{1} << log2_slots) - 1) {
    clear();
}

std::size_t TranspositionTable::slot_of(std::uint64_t key) const {
    // Fibonacci hashing spreads the structured bitboard keys.
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 20) & index_mask_;
}

void TranspositionTable::store(std::uint64_t key, int value) {
    assert(key >> kMaxKeyBits == 0);
    assert(value >= -1 && value <= 1);
    // Value code 1..3 keeps an all-zero word meaning "empty".
    const std::uint64_t word = (key << 2) | static_cast<std::uint64_t>(value + 2);
    slots_[slot_of(key)].store(word, std::memory_order_relaxed);
}

std::optional<int> TranspositionTable::probe(std::uint64_t key) const {
    const std::uint64_t word = slots_[slot_of(key)].load(std::memory_order_relaxed);
    if (word == 0 || (word >> 2) != key) return std::nullopt;
    return static_cast<int>(word & 3) - 2;
}

void TranspositionTable::clear() {
    for (auto& s : slots_) s.store(0, std::memory_order_relaxed);
}

}  // namespace misere
