#include "misere/oracle.hpp"

namespace misere {

std::string_view to_string(OutcomeRule rule) {
    switch (rule) {
        case OutcomeRule::InfiniteExtent: return "infinite-extent";
        case OutcomeRule::NarrowBoard: return "narrow-board";
        case OutcomeRule::K2SingleRowDraw: return "k2-single-row-draw";
        case OutcomeRule::K2SingleRowP2: return "k2-single-row-p2";
        case OutcomeRule::K2SingleColumn: return "k2-single-column";
        case OutcomeRule::K2Tall: return "k2-tall";
        case OutcomeRule::SingleRow: return "single-row";
        case OutcomeRule::EvenHeight: return "even-height";
        case OutcomeRule::OddHeightOddWidth: return "odd-height-odd-width";
        case OutcomeRule::OddHeightEvenWidth: return "odd-height-even-width";
    }
    return "?";
}

std::string_view describe(OutcomeRule rule) {
    switch (rule) {
        case OutcomeRule::InfiniteExtent: return "infinite extent";
        case OutcomeRule::NarrowBoard: return "k≥3, w<k";
        case OutcomeRule::K2SingleRowDraw: return "k=2, h=1, w∈{1,2,4,6}";
        case OutcomeRule::K2SingleRowP2: return "k=2, h=1";
        case OutcomeRule::K2SingleColumn: return "k=2, h>1, w=1";
        case OutcomeRule::K2Tall: return "k=2, h>1, w>1";
        case OutcomeRule::SingleRow: return "k≥3, h=1";
        case OutcomeRule::EvenHeight: return "k≥3, even h";
        case OutcomeRule::OddHeightOddWidth: return "k≥3, odd h≥3, odd w";
        case OutcomeRule::OddHeightEvenWidth: return "k≥3, odd h≥3, even w";
    }
    return "?";
}

ConfigOutcome outcome(const BoardSpec& spec) {
    spec.validate();
    auto result = [&](Outcome o, OutcomeRule r) { return ConfigOutcome{spec, o, r}; };

    if (!spec.is_finite()) return result(Outcome::Draw, OutcomeRule::InfiniteExtent);
    const int w = spec.width.value();
    const int h = spec.height.value();
    const int k = spec.k;

    if (k >= 3 && w < k) return result(Outcome::Draw, OutcomeRule::NarrowBoard);
    if (k == 2) {
        if (h == 1) {
            const bool draw = w == 1 || w == 2 || w == 4 || w == 6;
            return draw ? result(Outcome::Draw, OutcomeRule::K2SingleRowDraw)
                        : result(Outcome::P2Win, OutcomeRule::K2SingleRowP2);
        }
        return w == 1 ? result(Outcome::Draw, OutcomeRule::K2SingleColumn)
                      : result(Outcome::P2Win, OutcomeRule::K2Tall);
    }
    if (h == 1) return result(Outcome::Draw, OutcomeRule::SingleRow);
    if (h % 2 == 0) return result(Outcome::P2Win, OutcomeRule::EvenHeight);
    return w % 2 == 1 ? result(Outcome::P1Win, OutcomeRule::OddHeightOddWidth)
                      : result(Outcome::P2Win, OutcomeRule::OddHeightEvenWidth);
}

}  // namespace misere
