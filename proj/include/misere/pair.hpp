#pragma once

#include <optional>

#include "misere/core.hpp"
#include "misere/row.hpp"

namespace misere {

// Columns 2i and 2i+1 form pair i; an odd width leaves the rightmost column
// unpaired.
class PairLabeling {
  public:
    explicit PairLabeling(int width);

    int width() const { return width_; }
    int pair_count() const { return width_ / 2; }
    std::optional<int> singleton() const;
    // Pair id of `col`, or nullopt for the singleton.
    std::optional<int> pair_of(int col) const;
    int partner(int col) const { return col ^ 1; }

    // Every pair holds one X and one O (the singleton is unconstrained).
    bool balanced(const Row& row) const;
    // Pairs with exactly one `who` piece and an empty partner.
    int half_filled_by(const Row& row, Cell who) const;

  private:
    int width_;
};

// Two-rule draw strategy for a single row: take the other half of any pair the
// opponent half-filled, otherwise the rightmost empty cell. Throws BoardFull.
int pair_move(const Row& row, const PairLabeling& labeling, Player strategist);

}  // namespace misere
