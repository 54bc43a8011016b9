#include <doctest.h>

#include "misere/automata.hpp"
#include "misere/verifier.hpp"

using namespace misere;
using namespace misere::automata;

TEST_SUITE("automata") {

TEST_CASE("segment classes") {
    CHECK(classify_segment("F----F").name() == "A_4");
    CHECK(classify_segment("FX--F").name() == "B_2");
    CHECK(classify_segment("F---XF").name() == "B_3");
    CHECK(classify_segment("FX--XF").name() == "C_2");
    CHECK(classify_segment("FXX--F").name() == "D_2");
    CHECK(classify_segment("F-XXF").name() == "D_1");
    CHECK(classify_segment("FXX-XF").name() == "E_1");
    CHECK(classify_segment("X-").cls == SegmentClass::B);
    CHECK(classify_segment("FX--F").heavy_left);
    CHECK_FALSE(classify_segment("F---XF").heavy_left);
}

TEST_CASE("non-canonical segments") {
    for (const char* bad : {"F-X-F", "FXXX-F", "FXX-XXF", "FXXF", "F-X--X-F"}) {
        CAPTURE(bad);
        try {
            classify_segment(bad);
            FAIL("expected throw");
        } catch (const GameError& e) {
            CHECK(e.code() == ErrorCode::NonCanonical);
        }
    }
}

TEST_CASE("splitting a row") {
    const auto segs = split_segments(parse_row("X-O---X"), Player::P1);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].name() == "B_1");
    CHECK(segs[0].begin == 0);
    CHECK(segs[0].end == 2);
    CHECK(segs[1].name() == "B_3");
    CHECK(segs[1].first_empty() == 3);
    CHECK(segs[1].last_empty() == 5);
    // From O's side the X pieces are filler.
    const auto theirs = split_segments(parse_row("X-XO---X"), Player::P2);
    REQUIRE(theirs.size() == 2);
    CHECK(theirs[0].name() == "A_1");
    CHECK(theirs[1].name() == "B_3");
    CHECK(theirs[1].heavy_left);
    // Full stretches of own pieces are dropped.
    CHECK(split_segments(parse_row("XOX"), Player::P1).empty());
}

TEST_CASE("odd mode") {
    const auto segs = split_segments(parse_row("-----"), Player::P1);
    CHECK(automata_move(segs, Parity::Odd).cell == 0);  // A_5 -> B_4
    // A_2 is skipped; B_3 closes into C_2.
    const auto b = split_segments(parse_row("X---O--"), Player::P1);
    CHECK(automata_move(b, Parity::Odd).cell == 3);
}

TEST_CASE("even mode priority") {
    // D_2 beats A_3.
    auto segs = split_segments(parse_row("XX--O---"), Player::P1);
    auto pick = automata_move(segs, Parity::Even);
    CHECK(pick.segment == 0);
    CHECK(pick.cell == 3);
    // B_3 then A_4: the leftmost of the second tier.
    segs = split_segments(parse_row("X---O----"), Player::P1);
    pick = automata_move(segs, Parity::Even);
    CHECK(pick.cell == 3);
    // Only C_2 left.
    segs = split_segments(parse_row("X--X"), Player::P1);
    CHECK(automata_move(segs, Parity::Even).cell == 1);
}

TEST_CASE("no safe move is reported") {
    const auto segs = split_segments(parse_row("--"), Player::P1);
    try {
        automata_move(segs, Parity::Odd);
        FAIL("expected throw");
    } catch (const GameError& e) {
        CHECK(e.code() == ErrorCode::NoSafeMove);
    }
}

TEST_CASE("closure on small rows") {
    for (int w = 3; w <= 9; ++w)
        for (Player seat : {Player::P1, Player::P2}) {
            const BoardSpec spec{w, 1, 3};
            const StrategyKind kind =
                applicable(StrategyKind::AutomataOdd, spec, seat) ? StrategyKind::AutomataOdd : StrategyKind::AutomataEven;
            VerifyOptions opt;
            opt.on_state = [seat](const GameState& s) {
                for (const auto& seg : split_segments(row_of(s), seat))
                    if (seg.cls == SegmentClass::E && !seg.odd())
                        throw GameError(ErrorCode::NonCanonical, "E_even at " + s.render_row());
            };
            const auto r = verify_strategy(spec, kind, seat, Claim::NeverConnectsKRelaxed, opt);
            CAPTURE(r.certificate());
            CHECK(r.passed);
        }
}

}
