#pragma once

// Line-delimited JSON engine session. One request per line, exactly one
// response line per request. Every response carries a full "snapshot" of the
// game so clients keep no state of their own.
//
// Requests:
//   {"type":"newgame","w":7,"h":6,"k":4,"engine_seat":"P2","strategy":"auto"}
//   {"type":"move","col":3}
//   {"type":"hint"}  {"type":"state"}  {"type":"outcome"}  {"type":"resign"}
//
// Responses have "type" one of state, engine-move, prediction, error.

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "misere/core.hpp"
#include "misere/solver.hpp"
#include "misere/strategies.hpp"

namespace misere {

struct SessionConfig {
    SolverConfig solver;  // fallback search when no strategy covers the seat
    // Fields a newgame request may leave out (w, h, k, engine_seat, strategy).
    nlohmann::json newgame_defaults = nlohmann::json::object();
};

class Session {
  public:
    explicit Session(SessionConfig config = {});

    // Never throws for bad input; errors come back as responses.
    std::string handle(const std::string& line);

    bool has_game() const { return state_.has_value(); }
    const GameState& state() const { return *state_; }

  private:
    struct EngineChoice {
        int col = -1;
        std::string label;
    };

    nlohmann::json snapshot() const;
    nlohmann::json reply(const char* type, nlohmann::json body = nlohmann::json::object()) const;
    nlohmann::json error(ErrorCode code, const std::string& msg) const;
    nlohmann::json dispatch(const nlohmann::json& req);
    nlohmann::json new_game(const nlohmann::json& req);
    nlohmann::json human_move(const nlohmann::json& req);
    EngineChoice choose();
    bool over() const;

    SessionConfig config_;
    std::optional<GameState> state_;
    Player engine_seat_ = Player::P2;
    std::string strategy_name_ = "auto";
    std::optional<StrategyKind> strategy_;
    std::optional<Player> resigned_;
    std::unique_ptr<Solver> solver_;
};

// Reads requests from `in` until EOF, writes responses to `out`.
void run_session(std::istream& in, std::ostream& out, const SessionConfig& config = {});

// Serves sessions on 127.0.0.1:port, one per connection, until the process
// exits. Throws std::system_error if the socket cannot be opened.
void serve_tcp(int port, const SessionConfig& config = {});

}  // namespace misere
