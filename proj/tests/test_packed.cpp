#include <doctest.h>

#include <map>
#include <random>

#include "misere/packed.hpp"
#include "misere/transposition.hpp"

using namespace misere;

namespace {
GameState random_state(std::mt19937& rng, BoardSpec spec, int plies) {
    GameState s = GameState::new_game(spec);
    for (int i = 0; i < plies && !s.ended(); ++i) {
        auto m = s.legal_moves();
        s = s.apply_move(m[rng() % m.size()]);
    }
    return s;
}
}  // namespace

TEST_SUITE("packed") {

TEST_CASE("encode/decode round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 7);
        const int h = 1 + static_cast<int>(rng() % 7);
        const int k = 2 + static_cast<int>(rng() % 3);
        const GameState s = random_state(rng, {w, h, k}, static_cast<int>(rng() % (w * h + 1)));
        const PackedPosition p = PackedPosition::encode(s);
        const GameState back = p.decode(k);
        CHECK(back.render() == s.render());
        CHECK(back.to_move() == s.to_move());
        CHECK(back.result() == s.result());
        CHECK(PackedPosition::encode(back) == p);
    }
}

TEST_CASE("keys are unique over distinct positions") {
    std::mt19937 rng(9);
    std::map<std::uint64_t, std::string> seen;
    for (int trial = 0; trial < 3000; ++trial) {
        const GameState s = random_state(rng, {5, 4, 4}, static_cast<int>(rng() % 21));
        const auto key = PackedPosition::encode(s).key();
        auto [it, fresh] = seen.emplace(key, s.render());
        if (!fresh) CHECK(it->second == s.render());
    }
}

TEST_CASE("mirror and canonical key") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const GameState s = random_state(rng, {6, 5, 4}, static_cast<int>(rng() % 25));
        const PackedPosition p = PackedPosition::encode(s);
        CHECK(p.mirrored() == PackedPosition::encode(s.mirror()));
        CHECK(p.mirrored().mirrored() == p);
        CHECK(p.canonical_key() == p.mirrored().canonical_key());
    }
}

TEST_CASE("too large boards") {
    CHECK(PackedPosition::fits(7, 6));
    CHECK_FALSE(PackedPosition::fits(9, 7));
    try {
        PackedPosition::encode(GameState::new_game({9, 7, 4}));
        FAIL("expected throw");
    } catch (const GameError& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("bit run detection") {
    CHECK(bits::has_run(0b0111, 1, 3));
    CHECK_FALSE(bits::has_run(0b1011, 1, 3));
    CHECK(bits::has_run(0b1111'0000, 1, 4));
    CHECK(bits::has_run(std::uint64_t{1} | (std::uint64_t{1} << 7) | (std::uint64_t{1} << 14), 7, 3));
    CHECK_FALSE(bits::has_run(1, 40, 3));
}

TEST_CASE("transposition table") {
    TranspositionTable tt(10);
    CHECK_FALSE(tt.probe(12345).has_value());
    tt.store(12345, -1);
    REQUIRE(tt.probe(12345).has_value());
    CHECK(*tt.probe(12345) == -1);
    tt.store(12345, 1);
    CHECK(*tt.probe(12345) == 1);
    tt.clear();
    CHECK_FALSE(tt.probe(12345).has_value());
}

}
