#include <doctest.h>

#include "misere/oracle.hpp"

using namespace misere;

namespace {
Outcome out(Extent w, Extent h, int k) { return outcome({w, h, k}).outcome; }
}

TEST_SUITE("oracle") {

TEST_CASE("headline cases") {
    const auto o = outcome({7, 6, 4});
    CHECK(o.outcome == Outcome::P2Win);
    CHECK(describe(o.rule) == "k≥3, even h");
    CHECK(out(Extent::infinite(), 6, 4) == Outcome::Draw);
    CHECK(describe(outcome({Extent::infinite(), 6, 4}).rule) == "infinite extent");
    CHECK(out(7, Extent::infinite(), 4) == Outcome::Draw);
}

TEST_CASE("k=2 rows") {
    for (int w = 1; w <= 12; ++w) {
        const bool draw = w == 1 || w == 2 || w == 4 || w == 6;
        CHECK(out(w, 1, 2) == (draw ? Outcome::Draw : Outcome::P2Win));
    }
    CHECK(out(1, 5, 2) == Outcome::Draw);
    for (int w = 2; w <= 6; ++w)
        for (int h = 2; h <= 5; ++h) CHECK(out(w, h, 2) == Outcome::P2Win);
}

TEST_CASE("k>=3") {
    CHECK(out(2, 6, 3) == Outcome::Draw);   // too narrow
    CHECK(out(9, 1, 3) == Outcome::Draw);   // single row
    CHECK(out(4, 4, 3) == Outcome::P2Win);  // even h
    CHECK(out(5, 3, 3) == Outcome::P1Win);  // odd h, odd w
    CHECK(out(6, 3, 3) == Outcome::P2Win);  // odd h, even w
    CHECK(out(7, 5, 4) == Outcome::P1Win);
    CHECK(out(3, 7, 4) == Outcome::Draw);
}

TEST_CASE("rule labels are distinct") {
    CHECK(to_string(outcome({5, 3, 3}).rule) != to_string(outcome({6, 3, 3}).rule));
    CHECK(outcome({9, 1, 3}).rule == OutcomeRule::SingleRow);
}

TEST_CASE("invalid specs throw") {
    CHECK_THROWS_AS((outcome({7, 0, 4})), GameError);
    CHECK_THROWS_AS((outcome({7, 6, 1})), GameError);
}

}
