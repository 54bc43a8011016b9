#include "misere/k2.hpp"

#include <map>
#include <mutex>
#include <queue>

#include "misere/solver.hpp"

namespace misere::k2 {

namespace {

Cell other(Cell c) { return c == Cell::P1 ? Cell::P2 : c == Cell::P2 ? Cell::P1 : Cell::Empty; }

const Stretch& stretch_at(const std::vector<Stretch>& all, int col) {
    for (const auto& s : all)
        if (col >= s.first && col <= s.last) return s;
    throw GameError(ErrorCode::IllegalMove, "cell is not empty");
}

void require_pieces(const Row& row) {
    if (count(row, Cell::Empty) == static_cast<int>(row.size()))
        throw GameError(ErrorCode::EmptyBoard, "no piece has asserted a template yet");
}

}  // namespace

bool Stretch::contradictory() const {
    if (!bounded_both()) return false;
    const bool same = *left == *right;
    const bool odd = size() % 2 == 1;
    return same != odd;
}

Cell Stretch::from_left(int col) const {
    return (col - first) % 2 == 0 ? other(*left) : *left;
}

Cell Stretch::from_right(int col) const {
    return (last - col) % 2 == 0 ? other(*right) : *right;
}

std::vector<Stretch> stretches(const Row& row) {
    std::vector<Stretch> out;
    const int w = static_cast<int>(row.size());
    int c = 0;
    while (c < w) {
        if (row[c] != Cell::Empty) {
            ++c;
            continue;
        }
        Stretch s{c, c, std::nullopt, std::nullopt};
        if (c > 0) s.left = row[c - 1];
        while (s.last + 1 < w && row[s.last + 1] == Cell::Empty) ++s.last;
        if (s.last + 1 < w) s.right = row[s.last + 1];
        out.push_back(s);
        c = s.last + 1;
    }
    return out;
}

std::string Template::render() const {
    std::string out;
    for (std::size_t i = 0; i < primary.size(); ++i) {
        if (!primary[i]) out += ' ';
        else if (secondary[i] && *secondary[i] != *primary[i]) out += '?';
        else out += glyph(*primary[i]);
    }
    return out;
}

Template template_of(const Row& row) {
    require_pieces(row);
    Template t;
    t.primary.assign(row.size(), std::nullopt);
    t.secondary.assign(row.size(), std::nullopt);
    for (const auto& s : stretches(row)) {
        for (int c = s.first; c <= s.last; ++c) {
            if (s.left) {
                t.primary[c] = s.from_left(c);
                if (s.contradictory()) t.secondary[c] = s.from_right(c);
            } else {
                t.primary[c] = s.from_right(c);
            }
        }
    }
    return t;
}

Tally tally_of(const Row& row) {
    require_pieces(row);
    Tally t;
    auto credit = [&t](Cell who) { (who == Cell::P1 ? t.x_moves : t.o_moves) += 1; };
    for (const auto& s : stretches(row)) {
        if (!s.left) {
            for (int c = s.first; c <= s.last; ++c) credit(s.from_right(c));
        } else {
            // A contradiction leaves one dead cell: the alternation from the
            // left reaches the right bound with that bound's own colour.
            const int end = s.contradictory() ? s.last - 1 : s.last;
            for (int c = s.first; c <= end; ++c) credit(s.from_left(c));
        }
    }
    return t;
}

Tally tally_by_annotation(const Row& row, TallyOrder order) {
    require_pieces(row);
    std::vector<std::pair<int, Cell>> plan;
    for (const auto& s : stretches(row)) {
        auto left_run = [&] {
            for (int c = s.first; c <= s.last; ++c) plan.emplace_back(c, s.from_left(c));
        };
        auto right_run = [&] {
            for (int c = s.last; c >= s.first; --c) plan.emplace_back(c, s.from_right(c));
        };
        if (!s.left) {
            right_run();
        } else if (!s.right) {
            left_run();
        } else if (order == TallyOrder::LeftToRight) {
            left_run();
        } else if (order == TallyOrder::RightToLeft) {
            right_run();
        } else {
            int lo = s.first;
            int hi = s.last;
            while (lo < hi) {
                plan.emplace_back(lo, s.from_left(lo));
                plan.emplace_back(hi, s.from_right(hi));
                ++lo;
                --hi;
            }
            if (lo == hi) plan.emplace_back(lo, s.from_left(lo));
        }
    }
    Row sim = row;
    Tally t;
    for (const auto& [col, who] : plan) {
        if (touches_own(sim, col, who)) continue;
        sim[col] = who;
        (who == Cell::P1 ? t.x_moves : t.o_moves) += 1;
    }
    return t;
}

std::string_view to_string(PlayKind kind) {
    switch (kind) {
        case PlayKind::InTemplate: return "in-template";
        case PlayKind::DoubleContradiction: return "double-contradiction";
        case PlayKind::Offensive: return "offensive";
        case PlayKind::SelfImmolation: return "self-immolation";
    }
    return "?";
}

Tally PlayClass::delta(Player mover) const {
    Tally d;
    switch (kind) {
        case PlayKind::InTemplate: d = {-1, 0}; break;
        case PlayKind::DoubleContradiction: d = {-2, -1}; break;
        case PlayKind::Offensive: d = {-1, -1}; break;
        case PlayKind::SelfImmolation: d = {-2, 0}; break;
    }
    if (mover == Player::P2) std::swap(d.x_moves, d.o_moves);
    return d;
}

PlayClass classify_play(const Row& row, int col, Player player) {
    if (col < 0 || col >= static_cast<int>(row.size()) || occupied(row, col))
        throw GameError(ErrorCode::IllegalMove, "cell is not empty");
    require_pieces(row);
    const Cell me = cell_of(player);
    if (touches_own(row, col, me))
        throw GameError(ErrorCode::LosingPlay, "play connects two");

    const auto all = stretches(row);
    const Stretch& s = stretch_at(all, col);
    // Inside a contradiction every cell agrees with one of the two templates.
    if (s.contradictory()) return {PlayKind::InTemplate};
    const Cell prescribed = s.left ? s.from_left(col) : s.from_right(col);
    if (prescribed == me) return {PlayKind::InTemplate};
    if (s.bounded_both()) return {PlayKind::DoubleContradiction};

    const int wall_cell = s.left ? s.last : s.first;
    const Cell at_wall = s.left ? s.from_left(wall_cell) : s.from_right(wall_cell);
    if (at_wall == me) return {PlayKind::SelfImmolation};
    return {PlayKind::Offensive, col == wall_cell};
}

std::vector<int> non_losing_cells(const Row& row, Player player) {
    std::vector<int> out;
    const Cell me = cell_of(player);
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (!occupied(row, c) && !touches_own(row, c, me)) out.push_back(c);
    return out;
}

bool uses_policy_table(int width) { return width == 1 || width == 2 || width == 4 || width == 6; }

namespace {

// Best reply for every reachable non-terminal position of the k=2 single row,
// from an exhaustive solve. Built once per width.
class PolicyTable {
  public:
    int lookup(const Row& row) {
        const int w = static_cast<int>(row.size());
        std::lock_guard lock(mu_);
        auto& table = tables_[w];
        if (table.empty()) build(w, table);
        auto it = table.find(render(row));
        if (it == table.end())
            throw GameError(ErrorCode::NotApplicable, "row is not a reachable k=2 position");
        return it->second;
    }

  private:
    static void build(int w, std::map<std::string, int>& table) {
        SolverConfig cfg;
        cfg.tt_log2_slots = 12;
        Solver solver(cfg);
        std::queue<GameState> todo;
        todo.push(GameState::new_game({w, 1, 2}));
        while (!todo.empty()) {
            GameState s = std::move(todo.front());
            todo.pop();
            const std::string key = s.render_row();
            if (s.ended() || table.count(key)) continue;
            table[key] = solver.best_move(s);
            for (int c : s.legal_moves()) todo.push(s.apply_move(c));
        }
    }

    std::mutex mu_;
    std::map<int, std::map<std::string, int>> tables_;
};

PolicyTable& policy_table() {
    static PolicyTable table;
    return table;
}

int leftmost_in_stretch_of_max_size(const Row& row, const std::vector<int>& cells) {
    const auto all = stretches(row);
    int best = -1;
    int best_size = -1;
    for (int c : cells) {
        const int size = stretch_at(all, c).size();
        if (size > best_size) {
            best_size = size;
            best = c;
        }
    }
    return best;
}

int scripted_reply(const Row& row) {
    const int w = static_cast<int>(row.size());
    const int o_count = count(row, Cell::P2);

    if (o_count == 0) {
        int x = 0;
        while (row[x] != Cell::P1) ++x;
        if (w % 2 == 1) {
            // Odd 0-based index: both walls are O's in the template, take one.
            // Even index: a wall is templated for X, so O takes it as an
            // exclusive offensive.
            if (x % 2 == 1) return 0;
            return x != 0 ? 0 : w - 1;
        }
        if (x == 0) return w - 1;
        if (x == w - 1) return 0;
        return x % 2 == 0 ? 0 : w - 1;
    }

    const auto safe = non_losing_cells(row, Player::P2);
    if (safe.empty()) {
        for (int c = 0; c < w; ++c)
            if (!occupied(row, c)) return c;
        throw GameError(ErrorCode::BoardFull, "no empty cell in the row");
    }

    // Even width, X opened on a wall and O took the other: break the longest
    // stretch with a double contradiction on O's second turn.
    const bool walls_split = (row[0] == Cell::P1 && row[w - 1] == Cell::P2) ||
                             (row[0] == Cell::P2 && row[w - 1] == Cell::P1);
    if (w % 2 == 0 && o_count == 1 && walls_split) {
        std::vector<int> dc;
        for (int c : safe)
            if (classify_play(row, c, Player::P2).kind == PlayKind::DoubleContradiction) dc.push_back(c);
        if (!dc.empty()) return leftmost_in_stretch_of_max_size(row, dc);
    }

    for (int c : safe)
        if (classify_play(row, c, Player::P2).kind == PlayKind::InTemplate) return c;
    return safe.front();
}

}  // namespace

int k2_move(const Row& row, Player seat) {
    const int w = static_cast<int>(row.size());
    if (seat == Player::P1 && !uses_policy_table(w))
        throw GameError(ErrorCode::NotApplicable, "P1 has no k=2 guarantee at width " + std::to_string(w));
    const int x = count(row, Cell::P1);
    const int o = count(row, Cell::P2);
    const Player to_move = x == o ? Player::P1 : Player::P2;
    if ((x - o != 0 && x - o != 1) || to_move != seat)
        throw GameError(ErrorCode::NotApplicable, "not the strategist's turn");
    if (x + o == w) throw GameError(ErrorCode::BoardFull, "no empty cell in the row");

    if (uses_policy_table(w)) return policy_table().lookup(row);
    return scripted_reply(row);
}

}  // namespace misere::k2
