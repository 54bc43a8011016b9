#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace misere {

enum class ErrorCode {
    InvalidSpec,
    InfiniteUnsupported,
    IllegalMove,
    NotApplicable,
    Stuck,
    BoardFull,
    EmptyBoard,
    LosingPlay,
    NonCanonical,
    NoSafeMove,
    BudgetExceeded,
    TooLarge,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class GameError : public std::runtime_error {
  public:
    GameError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// A board dimension: a positive integer or unbounded.
class Extent {
  public:
    constexpr Extent(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    static constexpr Extent infinite() { return Extent(kInfinite); }

    constexpr bool is_infinite() const { return v_ == kInfinite; }
    constexpr int value() const { return v_; }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

    friend constexpr bool operator==(Extent a, Extent b) { return a.v_ == b.v_; }

  private:
    static constexpr int kInfinite = -1;
    int v_;
};

struct BoardSpec {
    Extent width;
    Extent height;
    int k;

    bool is_finite() const { return !width.is_infinite() && !height.is_infinite(); }
    // Throws InvalidSpec on k < 2 or non-positive finite extents.
    void validate() const;
    std::string str() const;

    friend bool operator==(const BoardSpec&, const BoardSpec&) = default;
};

enum class Player : std::uint8_t { P1, P2 };
enum class Cell : std::uint8_t { Empty, P1, P2 };
enum class Outcome : std::uint8_t { P1Win, P2Win, Draw };

constexpr Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
constexpr Cell cell_of(Player p) { return p == Player::P1 ? Cell::P1 : Cell::P2; }
constexpr Outcome win_for(Player p) { return p == Player::P1 ? Outcome::P1Win : Outcome::P2Win; }
constexpr char glyph(Cell c) { return c == Cell::P1 ? 'X' : c == Cell::P2 ? 'O' : '-'; }

std::string_view to_string(Player p);
std::string_view to_string(Outcome o);
std::optional<Player> parse_player(std::string_view s);

// Value of `o` for `p`: +1 win, 0 draw, -1 loss.
int score_for(Outcome o, Player p);

struct Square {
    int col;
    int row;
    friend bool operator==(const Square&, const Square&) = default;
};

// Game rules toggles. `immune` names a player whose k-connections do not end
// the game; only the verifier's relaxed claims set it.
struct Rules {
    std::optional<Player> immune;
    friend bool operator==(const Rules&, const Rules&) = default;
};

// Immutable game position. Columns are 0..w-1 left to right, rows 0..h-1
// bottom-up.
class GameState {
  public:
    static GameState new_game(const BoardSpec& spec, Rules rules = {});

    // Builds a position from the canonical rendering (h lines, top row first,
    // X/O/-). The side to move is inferred from piece counts; status is derived
    // from the board. Throws ParseError on malformed or gravity-violating text.
    static GameState from_text(std::string_view text, int k, Rules rules = {});

    int width() const { return w_; }
    int height() const { return h_; }
    int k() const { return k_; }
    BoardSpec spec() const { return {w_, h_, k_}; }
    const Rules& rules() const { return rules_; }

    Cell at(int col, int row) const { return cells_[index(col, row)]; }
    Cell at(Square s) const { return at(s.col, s.row); }
    int column_height(int col) const { return heights_[col]; }
    const std::vector<int>& heights() const { return heights_; }
    const std::vector<int>& history() const { return history_; }
    int ply() const { return static_cast<int>(history_.size()); }
    Player to_move() const { return to_move_; }

    bool ended() const { return result_.has_value(); }
    std::optional<Outcome> result() const { return result_; }

    std::optional<int> last_move() const;
    // Square of the most recently placed piece.
    std::optional<Square> last_square() const;

    std::vector<int> legal_moves() const;
    bool is_legal(int col) const;
    GameState apply_move(int col) const;

    // True iff `player` owns a run of at least k cells through `cell`.
    bool connects_k(Square cell, Player player) const;
    // Whole-board scan for any run of length >= k owned by `player`.
    bool has_run(Player player) const;

    GameState mirror() const;

    // Canonical text: h lines top-down, one character per cell.
    std::string render() const;
    // The bottom row as a single string ("-XO--").
    std::string render_row(int row = 0) const;
    int count(Cell c) const;
    int empty_count() const;

    friend bool operator==(const GameState& a, const GameState& b) {
        return a.w_ == b.w_ && a.h_ == b.h_ && a.k_ == b.k_ && a.cells_ == b.cells_ &&
               a.to_move_ == b.to_move_ && a.result_ == b.result_ && a.rules_ == b.rules_;
    }

  private:
    GameState(int w, int h, int k, Rules rules);
    int index(int col, int row) const { return row * w_ + col; }
    int run_length(Square cell, int dc, int dr, Cell owner) const;

    int w_;
    int h_;
    int k_;
    Rules rules_;
    std::vector<Cell> cells_;
    std::vector<int> heights_;
    std::vector<int> history_;
    Player to_move_ = Player::P1;
    std::optional<Outcome> result_;
};

// Convenience: plays the columns in order from a fresh game.
GameState replay(const BoardSpec& spec, const std::vector<int>& moves, Rules rules = {});

}  // namespace misere
