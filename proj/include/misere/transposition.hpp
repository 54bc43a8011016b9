#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

namespace misere {

// Fixed-capacity, always-replace store of exact solved values (-1, 0, +1
// from the mover's view). Each slot is one atomic word packing a 62-bit key
// with the value, so concurrent probes and stores never observe a torn entry:
// a lost store race only costs recomputation.
class TranspositionTable {
  public:
    static constexpr int kMaxKeyBits = 62;

    explicit TranspositionTable(int log2_slots);

    void store(std::uint64_t key, int value);
    std::optional<int> probe(std::uint64_t key) const;
    void clear();
    std::size_t capacity() const { return slots_.size(); }

  private:
    std::size_t slot_of(std::uint64_t key) const;

    std::vector<std::atomic<std::uint64_t>> slots_;
    std::uint64_t index_mask_;
};

}  // namespace misere
