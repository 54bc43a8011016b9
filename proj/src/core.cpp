#include "misere/core.hpp"

#include <algorithm>
#include <sstream>

namespace misere {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InfiniteUnsupported: return "InfiniteUnsupported";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::Stuck: return "Stuck";
        case ErrorCode::BoardFull: return "BoardFull";
        case ErrorCode::EmptyBoard: return "EmptyBoard";
        case ErrorCode::LosingPlay: return "LosingPlay";
        case ErrorCode::NonCanonical: return "NonCanonical";
        case ErrorCode::NoSafeMove: return "NoSafeMove";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string_view to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::P1Win: return "P1Win";
        case Outcome::P2Win: return "P2Win";
        case Outcome::Draw: return "Draw";
    }
    return "?";
}

std::optional<Player> parse_player(std::string_view s) {
    if (s == "P1" || s == "p1" || s == "1" || s == "X" || s == "x") return Player::P1;
    if (s == "P2" || s == "p2" || s == "2" || s == "O" || s == "o") return Player::P2;
    return std::nullopt;
}

int score_for(Outcome o, Player p) {
    if (o == Outcome::Draw) return 0;
    return o == win_for(p) ? 1 : -1;
}

void BoardSpec::validate() const {
    if (k < 2) throw GameError(ErrorCode::InvalidSpec, "k must be at least 2");
    if (!width.is_infinite() && width.value() < 1)
        throw GameError(ErrorCode::InvalidSpec, "width must be positive");
    if (!height.is_infinite() && height.value() < 1)
        throw GameError(ErrorCode::InvalidSpec, "height must be positive");
}

std::string BoardSpec::str() const {
    return "(" + width.str() + "," + height.str() + "," + std::to_string(k) + ")";
}

GameState::GameState(int w, int h, int k, Rules rules)
    : w_(w), h_(h), k_(k), rules_(rules), cells_(static_cast<size_t>(w) * h, Cell::Empty),
      heights_(w, 0) {}

GameState GameState::new_game(const BoardSpec& spec, Rules rules) {
    spec.validate();
    if (!spec.is_finite())
        throw GameError(ErrorCode::InfiniteUnsupported, "game play requires finite extents");
    return GameState(spec.width.value(), spec.height.value(), spec.k, rules);
}

GameState GameState::from_text(std::string_view text, int k, Rules rules) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw GameError(ErrorCode::ParseError, "empty board text");
    const int h = static_cast<int>(lines.size());
    const int w = static_cast<int>(lines.front().size());
    for (const auto& l : lines)
        if (static_cast<int>(l.size()) != w)
            throw GameError(ErrorCode::ParseError, "ragged board text");

    GameState s = new_game({w, h, k}, rules);
    for (int r = 0; r < h; ++r) {
        const std::string& l = lines[h - 1 - r];
        for (int c = 0; c < w; ++c) {
            Cell cell;
            switch (l[c]) {
                case 'X': cell = Cell::P1; break;
                case 'O': cell = Cell::P2; break;
                case '-': case '.': cell = Cell::Empty; break;
                default: throw GameError(ErrorCode::ParseError, "bad cell character");
            }
            if (cell != Cell::Empty) {
                if (s.heights_[c] != r)
                    throw GameError(ErrorCode::ParseError, "floating piece in column " +
                                                               std::to_string(c));
                s.heights_[c] = r + 1;
            }
            s.cells_[s.index(c, r)] = cell;
        }
    }
    const int x = s.count(Cell::P1);
    const int o = s.count(Cell::P2);
    if (x - o != 0 && x - o != 1)
        throw GameError(ErrorCode::ParseError, "piece counts are not reachable");
    s.to_move_ = x == o ? Player::P1 : Player::P2;
    // No move order is recoverable from text alone; status comes from a scan.
    const bool x_run = rules.immune != Player::P1 && s.has_run(Player::P1);
    const bool o_run = rules.immune != Player::P2 && s.has_run(Player::P2);
    if (x_run && o_run)
        throw GameError(ErrorCode::ParseError, "both players own a k-run");
    if (x_run) s.result_ = Outcome::P2Win;
    else if (o_run) s.result_ = Outcome::P1Win;
    else if (s.empty_count() == 0) s.result_ = Outcome::Draw;
    return s;
}

std::optional<int> GameState::last_move() const {
    if (history_.empty()) return std::nullopt;
    return history_.back();
}

std::optional<Square> GameState::last_square() const {
    if (history_.empty()) return std::nullopt;
    const int c = history_.back();
    return Square{c, heights_[c] - 1};
}

std::vector<int> GameState::legal_moves() const {
    std::vector<int> moves;
    if (ended()) return moves;
    for (int c = 0; c < w_; ++c)
        if (heights_[c] < h_) moves.push_back(c);
    return moves;
}

bool GameState::is_legal(int col) const {
    return !ended() && col >= 0 && col < w_ && heights_[col] < h_;
}

GameState GameState::apply_move(int col) const {
    if (ended()) throw GameError(ErrorCode::IllegalMove, "game is over");
    if (col < 0 || col >= w_) throw GameError(ErrorCode::IllegalMove, "column out of range");
    if (heights_[col] >= h_)
        throw GameError(ErrorCode::IllegalMove, "column " + std::to_string(col) + " is full");

    GameState next = *this;
    const Player mover = to_move_;
    const Square sq{col, heights_[col]};
    next.cells_[index(sq.col, sq.row)] = cell_of(mover);
    next.heights_[col] += 1;
    next.history_.push_back(col);
    next.to_move_ = opponent(mover);

    if (rules_.immune != mover && next.connects_k(sq, mover)) {
        next.result_ = win_for(opponent(mover));
    } else if (next.empty_count() == 0) {
        next.result_ = Outcome::Draw;
    }
    return next;
}

int GameState::run_length(Square cell, int dc, int dr, Cell owner) const {
    int n = 0;
    int c = cell.col + dc;
    int r = cell.row + dr;
    while (c >= 0 && c < w_ && r >= 0 && r < h_ && cells_[index(c, r)] == owner) {
        ++n;
        c += dc;
        r += dr;
    }
    return n;
}

bool GameState::connects_k(Square cell, Player player) const {
    const Cell owner = cell_of(player);
    if (at(cell) != owner) return false;
    static constexpr int kDirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (const auto& d : kDirs) {
        const int run = 1 + run_length(cell, d[0], d[1], owner) + run_length(cell, -d[0], -d[1], owner);
        if (run >= k_) return true;
    }
    return false;
}

bool GameState::has_run(Player player) const {
    for (int r = 0; r < h_; ++r)
        for (int c = 0; c < w_; ++c)
            if (connects_k({c, r}, player)) return true;
    return false;
}

GameState GameState::mirror() const {
    GameState m = *this;
    for (int r = 0; r < h_; ++r)
        for (int c = 0; c < w_; ++c) m.cells_[index(c, r)] = cells_[index(w_ - 1 - c, r)];
    for (int c = 0; c < w_; ++c) m.heights_[c] = heights_[w_ - 1 - c];
    for (int& c : m.history_) c = w_ - 1 - c;
    return m;
}

std::string GameState::render() const {
    std::string out;
    out.reserve(static_cast<size_t>(h_) * (w_ + 1));
    for (int r = h_ - 1; r >= 0; --r) {
        out += render_row(r);
        if (r > 0) out += '\n';
    }
    return out;
}

std::string GameState::render_row(int row) const {
    std::string out(w_, '-');
    for (int c = 0; c < w_; ++c) out[c] = glyph(at(c, row));
    return out;
}

int GameState::count(Cell c) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), c));
}

int GameState::empty_count() const { return count(Cell::Empty); }

GameState replay(const BoardSpec& spec, const std::vector<int>& moves, Rules rules) {
    GameState s = GameState::new_game(spec, rules);
    for (int m : moves) s = s.apply_move(m);
    return s;
}

}  // namespace misere
