#pragma once

#include <string_view>

#include "misere/core.hpp"

namespace misere {

// Which closed-form rule decided a configuration. Exactly one fires per spec.
enum class OutcomeRule {
    InfiniteExtent,
    NarrowBoard,       // k >= 3, w < k
    K2SingleRowDraw,   // k = 2, h = 1, w in {1, 2, 4, 6}
    K2SingleRowP2,     // k = 2, h = 1, other widths
    K2SingleColumn,    // k = 2, h > 1, w = 1
    K2Tall,            // k = 2, h > 1, w > 1
    SingleRow,         // k >= 3, w >= k, h = 1
    EvenHeight,        // k >= 3, w >= k, h even
    OddHeightOddWidth, // k >= 3, w >= k, h odd >= 3, w odd
    OddHeightEvenWidth,
};

std::string_view to_string(OutcomeRule rule);
// Short human label, e.g. "k≥3, even h".
std::string_view describe(OutcomeRule rule);

struct ConfigOutcome {
    BoardSpec spec;
    Outcome outcome;
    OutcomeRule rule;
};

// Value of the empty board under optimal play, for any valid spec including
// infinite extents.
ConfigOutcome outcome(const BoardSpec& spec);

}  // namespace misere
