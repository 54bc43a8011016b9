#pragma once

// Segment view of a single row for the k>=3 draw strategy. Written from the
// strategist's side: its pieces are X, the opponent's are O. Opponent pieces
// and board edges act as filler that no X run can cross, so the row splits
// into independent segments of empty cells flanked by up to two X on each
// side.
//
//   A  F----F    no X at either edge
//   B  FX---F    one X at one edge
//   C  FX--XF    one X at each edge
//   D  FXX--F    two X at one edge
//   E  FXX-XF    two X at one edge, one at the other
//
// The subscript is the number of empty cells. Left-right reflections share a
// class.

#include <string>
#include <string_view>
#include <vector>

#include "misere/core.hpp"
#include "misere/row.hpp"

namespace misere::automata {

enum class SegmentClass { A, B, C, D, E };

struct Segment {
    SegmentClass cls;
    int empties = 0;
    // Columns of the segment in the row, X pieces included: [begin, end).
    int begin = 0;
    int end = 0;
    // For B/D/E: the heavier edge (the lone X of B, the XX of D/E) is on the left.
    bool heavy_left = false;

    bool odd() const { return empties % 2 == 1; }
    std::string name() const;  // e.g. "B_3"
    int first_empty() const;
    int last_empty() const;
};

std::string_view to_string(SegmentClass c);

// Classifies one segment given as text: optional 'F' ends, then the segment's
// cells ("FX--F", "--XX", "XX-X"). Throws NonCanonical for anything outside
// A..E.
Segment classify_segment(std::string_view cells);

// Splits a row into segments from `strategist`'s point of view. Stretches with
// no empty cell are filler and dropped. Throws NonCanonical if a stretch fits
// no class.
std::vector<Segment> split_segments(const Row& row, Player strategist);

enum class Parity { Odd, Even };

struct AutomataChoice {
    int segment;
    int cell;  // column in the row
};

// Odd: play A_odd (A->B) or B_odd (B->C). Even: priority D_even (D->E), then
// A_even / A_odd / B_odd, then B_even / C_even (C->E). Within a tier the
// leftmost segment is taken. Throws NoSafeMove when no tier applies.
AutomataChoice automata_move(const std::vector<Segment>& segments, Parity parity);

// Parity mode for the side to move: odd iff the row has an odd number of
// empty cells.
Parity parity_of(const Row& row);

// Full move for `strategist` on a row.
int automata_row_move(const Row& row, Player strategist);

}  // namespace misere::automata
