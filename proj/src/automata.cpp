#include "misere/automata.hpp"

#include <algorithm>
#include <optional>

namespace misere::automata {

namespace {

struct Shape {
    int lead;
    int trail;
    int empties;
};

Shape shape_of(std::string_view inner) {
    Shape s{0, 0, 0};
    const int n = static_cast<int>(inner.size());
    while (s.lead < n && inner[s.lead] == 'X') ++s.lead;
    while (s.trail < n - s.lead && inner[n - 1 - s.trail] == 'X') ++s.trail;
    for (int i = s.lead; i < n - s.trail; ++i) {
        if (inner[i] != '-')
            throw GameError(ErrorCode::NonCanonical, "segment '" + std::string(inner) + "' has an interior X");
        ++s.empties;
    }
    if (s.empties == 0)
        throw GameError(ErrorCode::NonCanonical, "segment '" + std::string(inner) + "' has no empty cell");
    return s;
}

Segment from_shape(const Shape& s, std::string_view inner) {
    Segment seg;
    seg.empties = s.empties;
    const int heavy = std::max(s.lead, s.trail);
    const int light = std::min(s.lead, s.trail);
    seg.heavy_left = s.lead > s.trail;
    if (heavy == 0) seg.cls = SegmentClass::A;
    else if (heavy == 1 && light == 0) seg.cls = SegmentClass::B;
    else if (heavy == 1 && light == 1) seg.cls = SegmentClass::C;
    else if (heavy == 2 && light == 0) seg.cls = SegmentClass::D;
    else if (heavy == 2 && light == 1) seg.cls = SegmentClass::E;
    else throw GameError(ErrorCode::NonCanonical, "segment '" + std::string(inner) + "' fits no class");
    return seg;
}

}  // namespace

std::string_view to_string(SegmentClass c) {
    static constexpr std::string_view names[] = {"A", "B", "C", "D", "E"};
    return names[static_cast<int>(c)];
}

std::string Segment::name() const { return std::string(to_string(cls)) + "_" + std::to_string(empties); }

int Segment::first_empty() const {
    const int x_left = cls == SegmentClass::A ? 0
                       : cls == SegmentClass::C ? 1
                       : heavy_left ? (cls == SegmentClass::B ? 1 : 2)
                                    : (cls == SegmentClass::E ? 1 : 0);
    return begin + x_left;
}

int Segment::last_empty() const { return first_empty() + empties - 1; }

Segment classify_segment(std::string_view cells) {
    std::string_view inner = cells;
    if (!inner.empty() && inner.front() == 'F') inner.remove_prefix(1);
    if (!inner.empty() && inner.back() == 'F') inner.remove_suffix(1);
    Segment seg = from_shape(shape_of(inner), inner);
    seg.begin = 0;
    seg.end = static_cast<int>(inner.size());
    return seg;
}

std::vector<Segment> split_segments(const Row& row, Player strategist) {
    const Cell theirs = cell_of(opponent(strategist));
    const int w = static_cast<int>(row.size());
    std::vector<Segment> out;
    int c = 0;
    while (c < w) {
        if (row[c] == theirs) {
            ++c;
            continue;
        }
        const int begin = c;
        std::string inner;
        bool any_empty = false;
        while (c < w && row[c] != theirs) {
            any_empty |= row[c] == Cell::Empty;
            inner += row[c] == Cell::Empty ? '-' : 'X';
            ++c;
        }
        if (!any_empty) continue;  // filler
        Segment seg = from_shape(shape_of(inner), inner);
        seg.begin = begin;
        seg.end = c;
        out.push_back(seg);
    }
    return out;
}

Parity parity_of(const Row& row) { return count(row, Cell::Empty) % 2 == 1 ? Parity::Odd : Parity::Even; }

namespace {

// The prescribed X play inside a segment.
int play_in(const Segment& s) {
    switch (s.cls) {
        case SegmentClass::A: return s.first_empty();                            // A -> B
        case SegmentClass::B: return s.heavy_left ? s.last_empty() : s.first_empty();  // B -> C
        case SegmentClass::C: return s.first_empty();                            // C -> E
        case SegmentClass::D: return s.heavy_left ? s.last_empty() : s.first_empty();  // D -> E
        case SegmentClass::E: break;
    }
    throw GameError(ErrorCode::NoSafeMove, "no prescribed play in an E segment");
}

}  // namespace

AutomataChoice automata_move(const std::vector<Segment>& segments, Parity parity) {
    using C = SegmentClass;
    auto first_where = [&](auto pred) -> std::optional<AutomataChoice> {
        for (int i = 0; i < static_cast<int>(segments.size()); ++i)
            if (pred(segments[i])) return AutomataChoice{i, play_in(segments[i])};
        return std::nullopt;
    };

    if (parity == Parity::Odd) {
        if (auto c = first_where([](const Segment& s) {
                return s.odd() && (s.cls == C::A || s.cls == C::B);
            }))
            return *c;
        throw GameError(ErrorCode::NoSafeMove, "no A_odd or B_odd segment");
    }

    if (auto c = first_where([](const Segment& s) { return s.cls == C::D && !s.odd(); })) return *c;
    if (auto c = first_where([](const Segment& s) {
            return s.cls == C::A || (s.cls == C::B && s.odd());
        }))
        return *c;
    if (auto c = first_where([](const Segment& s) {
            return !s.odd() && (s.cls == C::B || s.cls == C::C);
        }))
        return *c;
    throw GameError(ErrorCode::NoSafeMove, "no safe segment in even mode");
}

int automata_row_move(const Row& row, Player strategist) {
    const auto segments = split_segments(row, strategist);
    if (segments.empty()) throw GameError(ErrorCode::BoardFull, "no empty cell in the row");
    return automata_move(segments, parity_of(row)).cell;
}

}  // namespace misere::automata
