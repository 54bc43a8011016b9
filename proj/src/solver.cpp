#include "misere/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <vector>

#include "misere/packed.hpp"

namespace misere {

namespace {

using Clock = std::chrono::steady_clock;

struct Geometry {
    int w, h, h1, k, cells;
    std::uint64_t bottom, board;
    std::vector<std::uint64_t> column;  // full column mask incl. sentinel
    std::vector<int> order;             // center-out
    std::vector<int> shifts;            // directions in which a k-run fits

    Geometry(int w_, int h_, int k_) : w(w_), h(h_), h1(h_ + 1), k(k_), cells(w_ * h_) {
        bottom = bits::bottom_mask(w, h);
        board = bits::board_mask(w, h);
        for (int c = 0; c < w; ++c)
            column.push_back(((std::uint64_t{1} << h1) - 1) << (c * h1));
        // w=7 -> 3,2,4,1,5,0,6
        for (int c = 0; c < w; ++c) order.push_back(c);
        std::stable_sort(order.begin(), order.end(),
                         [n = w_](int a, int b) { return std::abs(2 * a - (n - 1)) < std::abs(2 * b - (n - 1)); });
        if (k <= h) shifts.push_back(1);
        if (k <= w) shifts.push_back(h1);
        if (k <= w && k <= h) {
            shifts.push_back(h1 - 1);
            shifts.push_back(h1 + 1);
        }
    }

    bool connects(std::uint64_t stones) const {
        for (int s : shifts)
            if (bits::has_run(stones, s, k)) return true;
        return false;
    }

    std::uint64_t key(std::uint64_t cur, std::uint64_t mask) const { return cur + mask + bottom; }
};

}  // namespace

struct Solver::Search {
    const Geometry& g;
    TranspositionTable& table;
    bool symmetry;
    std::uint64_t node_budget;
    std::optional<Clock::time_point> deadline;
    std::atomic<std::uint64_t>& shared_nodes;
    std::atomic<bool>& abort;
    std::uint64_t nodes = 0;

    void tick() {
        ++nodes;
        if ((nodes & 0x3FF) != 0) return;
        const std::uint64_t total = shared_nodes.fetch_add(0x400, std::memory_order_relaxed) + 0x400;
        if (abort.load(std::memory_order_relaxed) || (node_budget && total > node_budget) ||
            (deadline && Clock::now() > *deadline)) {
            abort.store(true, std::memory_order_relaxed);
            throw GameError(ErrorCode::BudgetExceeded, "solver budget exceeded");
        }
    }

    std::uint64_t table_key(std::uint64_t cur, std::uint64_t mask) const {
        const std::uint64_t k = g.key(cur, mask);
        if (!symmetry) return k;
        const std::uint64_t mk =
            g.key(bits::mirror_columns(cur, g.w, g.h), bits::mirror_columns(mask, g.w, g.h));
        return std::min(k, mk);
    }

    // Value for the side owning `cur`, which is to move. `moves` stones are placed.
    int negamax(std::uint64_t cur, std::uint64_t mask, int moves, int alpha, int beta) {
        tick();
        if (moves == g.cells) return 0;

        const std::uint64_t possible = (mask + g.bottom) & g.board;
        std::uint64_t safe = 0;
        for (int c = 0; c < g.w; ++c) {
            const std::uint64_t bit = possible & g.column[c];
            if (bit && !g.connects(cur | bit)) safe |= bit;
        }
        // Every legal move completes a k-run for the mover.
        if (safe == 0) return -1;

        const std::uint64_t key = table_key(cur, mask);
        if (auto v = table.probe(key)) return *v;

        const int alpha0 = alpha;
        int best = -1;
        for (int c : g.order) {
            const std::uint64_t bit = safe & g.column[c];
            if (!bit) continue;
            const int v = -negamax(cur ^ mask, mask | bit, moves + 1, -beta, -alpha);
            if (v > best) {
                best = v;
                if (best > alpha) alpha = best;
                if (alpha >= beta) break;
            }
        }
        if (best == 1 || best == -1 || (best > alpha0 && best < beta)) table.store(key, best);
        return best;
    }

    // Exact value of playing column c from (cur, mask), mover's view.
    int move_value(std::uint64_t cur, std::uint64_t mask, int moves, int c) {
        const std::uint64_t bit = ((mask + g.bottom) & g.board) & g.column[c];
        if (g.connects(cur | bit)) return -1;
        return -negamax(cur ^ mask, mask | bit, moves + 1, -1, 1);
    }
};

Solver::Solver(SolverConfig config)
    : config_(config), table_(std::make_unique<TranspositionTable>(config.tt_log2_slots)) {}

Solver::~Solver() = default;

void Solver::clear_table() { table_->clear(); }

std::vector<std::optional<int>> Solver::move_values(const GameState& state) {
    const int w = state.width();
    const int h = state.height();
    if (w * h > config_.max_cells)
        throw GameError(ErrorCode::TooLarge, "board exceeds the solver ceiling of " +
                                                 std::to_string(config_.max_cells) + " cells");
    if (w * (h + 1) > TranspositionTable::kMaxKeyBits)
        throw GameError(ErrorCode::TooLarge, "board exceeds the table key width");

    if (state.rules().immune)
        throw GameError(ErrorCode::NotApplicable, "the solver plays standard rules only");

    std::vector<std::optional<int>> values(w);
    if (state.ended()) return values;

    // Table keys only make sense for one board shape and k.
    const std::tuple<int, int, int> shape{w, h, state.k()};
    if (table_shape_ != shape) {
        table_->clear();
        table_shape_ = shape;
    }

    const PackedPosition p = PackedPosition::encode(state);
    const Geometry g(w, h, state.k());
    const int mover = state.to_move() == Player::P1 ? 0 : 1;
    const std::uint64_t cur = p.planes[mover];
    const std::uint64_t mask = p.occupied();
    const int moves = std::popcount(mask);

    std::optional<Clock::time_point> deadline;
    if (config_.time_budget.count() > 0) deadline = Clock::now() + config_.time_budget;
    std::atomic<std::uint64_t> shared_nodes{0};
    std::atomic<bool> abort{false};

    const std::vector<int> cols = state.legal_moves();
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
        Search s{g, *table_, config_.use_symmetry, config_.node_budget, deadline, shared_nodes, abort};
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < cols.size();)
                values[cols[i]] = s.move_value(cur, mask, moves, cols[i]);
        } catch (...) {
            abort.store(true);
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
        shared_nodes.fetch_add(s.nodes & 0x3FF);
    };

    const int n = std::clamp(config_.threads, 1, std::max<int>(1, static_cast<int>(cols.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    last_nodes_ = shared_nodes.load();
    return values;
}

SolveResult Solver::solve(const GameState& state) {
    if (state.ended()) return {*state.result(), std::nullopt, 0};
    const auto values = move_values(state);
    int best = -2;
    std::optional<int> move;
    for (int c = 0; c < state.width(); ++c) {
        if (values[c] && *values[c] > best) {
            best = *values[c];
            move = c;
        }
    }
    const Player mover = state.to_move();
    const Outcome o = best > 0 ? win_for(mover) : best < 0 ? win_for(opponent(mover)) : Outcome::Draw;
    return {o, move, last_nodes_};
}

int Solver::best_move(const GameState& state) {
    if (state.ended()) throw GameError(ErrorCode::IllegalMove, "no move in a terminal state");
    return *solve(state).best_move;
}

std::optional<Outcome> SolveCache::find(int w, int h, int k) const {
    auto it = entries_.find({w, h, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void SolveCache::put(int w, int h, int k, Outcome o) { entries_[{w, h, k}] = o; }

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
    v = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    return true;
}

constexpr std::uint32_t kRecordSize = 13;

}  // namespace

SolveCache SolveCache::load(const std::string& path) {
    SolveCache cache;
    std::ifstream in(path, std::ios::binary);
    if (!in) return cache;
    std::uint32_t len;
    while (in.peek() != std::char_traits<char>::eof()) {
        if (!get_u32(in, len)) throw GameError(ErrorCode::ParseError, "truncated solve cache record in " + path);
        std::uint32_t w, h, k;
        char o;
        if (len != kRecordSize || !get_u32(in, w) || !get_u32(in, h) || !get_u32(in, k) ||
            !in.get(o) || static_cast<unsigned char>(o) > 2)
            throw GameError(ErrorCode::ParseError, "malformed solve cache record in " + path);
        cache.put(static_cast<int>(w), static_cast<int>(h), static_cast<int>(k),
                  static_cast<Outcome>(o));
    }
    return cache;
}

void SolveCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw GameError(ErrorCode::ParseError, "cannot write " + path);
    for (const auto& [key, o] : entries_) {
        put_u32(out, kRecordSize);
        put_u32(out, static_cast<std::uint32_t>(std::get<0>(key)));
        put_u32(out, static_cast<std::uint32_t>(std::get<1>(key)));
        put_u32(out, static_cast<std::uint32_t>(std::get<2>(key)));
        out.put(static_cast<char>(o));
    }
}

}  // namespace misere
