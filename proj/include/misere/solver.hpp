#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "misere/core.hpp"
#include "misere/transposition.hpp"

namespace misere {

struct SolverConfig {
    int max_cells = 20;                        // w*h ceiling; above it solve throws TooLarge
    std::uint64_t node_budget = 0;             // 0 = unlimited
    std::chrono::milliseconds time_budget{0};  // 0 = unlimited
    int threads = 1;                           // workers splitting the root moves
    int tt_log2_slots = 22;
    bool use_symmetry = true;
};

struct SolveResult {
    Outcome outcome;
    std::optional<int> best_move;  // lowest column achieving the value; none if terminal
    std::uint64_t nodes = 0;
};

// Exact misère solver: alpha-beta negamax over {loss, draw, win} on packed
// bitboards with a shared exact-value transposition table. Results do not
// depend on move ordering or on the number of threads.
class Solver {
  public:
    explicit Solver(SolverConfig config = {});
    ~Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    SolveResult solve(const GameState& state);
    // Throws IllegalMove on terminal states.
    int best_move(const GameState& state);
    // Exact value of each legal move from the mover's view (+1/0/-1),
    // indexed by column; nullopt for full columns.
    std::vector<std::optional<int>> move_values(const GameState& state);

    const SolverConfig& config() const { return config_; }
    void clear_table();

  private:
    struct Search;
    SolverConfig config_;
    std::unique_ptr<TranspositionTable> table_;
    std::uint64_t last_nodes_ = 0;
    std::optional<std::tuple<int, int, int>> table_shape_;
};

// Optional on-disk cache of empty-board values keyed by (w, h, k). Records are
// [u32 length][i32 w][i32 h][i32 k][u8 outcome], little-endian.
class SolveCache {
  public:
    using Key = std::tuple<int, int, int>;

    std::optional<Outcome> find(int w, int h, int k) const;
    void put(int w, int h, int k, Outcome o);
    std::size_t size() const { return entries_.size(); }

    // Missing file loads as empty; malformed records throw ParseError.
    static SolveCache load(const std::string& path);
    void save(const std::string& path) const;

  private:
    std::map<Key, Outcome> entries_;
};

}  // namespace misere
