#include "misere/protocol.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <istream>
#include <ostream>
#include <system_error>
#include <thread>

#include "misere/oracle.hpp"

namespace misere {

using nlohmann::json;

Session::Session(SessionConfig config) : config_(std::move(config)) {}

json Session::snapshot() const {
    if (!state_) return json{{"game", false}};
    const GameState& s = *state_;
    json j;
    j["game"] = true;
    j["w"] = s.width();
    j["h"] = s.height();
    j["k"] = s.k();
    j["board"] = s.render();
    j["to_move"] = to_string(s.to_move());
    j["history"] = s.history();
    j["last_move"] = s.last_move() ? json(*s.last_move()) : json(nullptr);
    j["engine_seat"] = to_string(engine_seat_);
    j["strategy"] = strategy_name_;
    if (resigned_) {
        j["status"] = to_string(win_for(opponent(*resigned_)));
        j["resigned"] = to_string(*resigned_);
    } else if (s.ended()) {
        j["status"] = to_string(*s.result());
    } else {
        j["status"] = "ongoing";
    }
    j["legal"] = over() ? std::vector<int>{} : s.legal_moves();
    return j;
}

json Session::reply(const char* type, json body) const {
    body["type"] = type;
    body["snapshot"] = snapshot();
    return body;
}

json Session::error(ErrorCode code, const std::string& msg) const {
    return reply("error", {{"code", to_string(code)}, {"message", msg}});
}

Session::EngineChoice Session::choose() {
    const GameState& s = *state_;
    if (strategy_) {
        try {
            return {strategy_move(*strategy_, s), std::string(protocol_name(*strategy_))};
        } catch (const GameError&) {
            // Off-script position; fall through to search.
        }
    }
    if (s.width() * s.height() <= config_.solver.max_cells) {
        try {
            if (!solver_) solver_ = std::make_unique<Solver>(config_.solver);
            return {solver_->best_move(s), "solver"};
        } catch (const GameError& e) {
            if (e.code() != ErrorCode::TooLarge && e.code() != ErrorCode::BudgetExceeded) throw;
        }
    }
    // Center-out, avoiding an immediate k-run when possible.
    const int w = s.width();
    std::optional<int> any;
    for (int d = 0; d < w; ++d) {
        const int col = (w - 1) / 2 + (d % 2 == 0 ? d / 2 : -(d + 1) / 2);
        if (col < 0 || col >= w || !s.is_legal(col)) continue;
        if (!any) any = col;
        if (!s.connects_k({col, s.column_height(col)}, s.to_move())) return {col, "fallback"};
    }
    return {*any, "fallback"};
}

json Session::new_game(const json& req) {
    const BoardSpec spec{req.at("w").get<int>(), req.at("h").get<int>(), req.at("k").get<int>()};
    spec.validate();
    if (!spec.is_finite()) throw GameError(ErrorCode::InfiniteUnsupported, "sessions need a finite board");
    const auto seat = parse_player(req.value("engine_seat", std::string("P2")));
    if (!seat) throw GameError(ErrorCode::ParseError, "engine_seat must be P1 or P2");
    const std::string name = req.value("strategy", std::string("auto"));

    std::optional<StrategyKind> kind;
    if (name == "auto") {
        kind = auto_strategy(spec, *seat);
    } else if (name != "solver") {
        kind = parse_strategy(name, spec, *seat);
        if (!kind) throw GameError(ErrorCode::ParseError, "unknown strategy '" + name + "'");
        if (!applicable(*kind, spec, *seat))
            throw GameError(ErrorCode::NotApplicable,
                            name + " gives " + std::string(to_string(*seat)) + " no guarantee on " + spec.str());
    }

    state_ = GameState::new_game(spec);
    engine_seat_ = *seat;
    strategy_name_ = name;
    strategy_ = kind;
    resigned_.reset();
    if (state_->to_move() == engine_seat_) {
        const EngineChoice c = choose();
        state_ = state_->apply_move(c.col);
        return reply("engine-move", {{"col", c.col}, {"strategy_used", c.label}, {"applied", true}});
    }
    return reply("state");
}

json Session::human_move(const json& req) {
    const json& col_field = req.at("col");
    if (!col_field.is_number_integer()) throw GameError(ErrorCode::ParseError, "col must be an integer");
    const int col = col_field.get<int>();
    if (state_->to_move() == engine_seat_) throw GameError(ErrorCode::IllegalMove, "it is the engine's turn");
    if (!state_->is_legal(col)) throw GameError(ErrorCode::IllegalMove, "column " + std::to_string(col) + " is not playable");
    state_ = state_->apply_move(col);
    if (state_->ended()) return reply("state");
    const EngineChoice c = choose();
    state_ = state_->apply_move(c.col);
    return reply("engine-move", {{"col", c.col}, {"strategy_used", c.label}, {"applied", true}});
}

json Session::dispatch(const json& req) {
    if (!req.is_object() || !req.contains("type") || !req["type"].is_string())
        throw GameError(ErrorCode::ParseError, "request needs a string \"type\"");
    const std::string type = req["type"];
    if (type == "newgame") {
        json merged = config_.newgame_defaults;
        merged.update(req);
        return new_game(merged);
    }
    if (type != "move" && type != "hint" && type != "state" && type != "outcome" && type != "resign")
        throw GameError(ErrorCode::ParseError, "unknown request type '" + type + "'");
    if (!state_) throw GameError(ErrorCode::NotApplicable, "no game in progress; send newgame");
    if (type == "state") return reply("state");
    if (type == "outcome") {
        const ConfigOutcome o = outcome(state_->spec());
        return reply("prediction", {{"outcome", to_string(o.outcome)},
                                    {"rule", to_string(o.rule)},
                                    {"label", describe(o.rule)}});
    }
    if (over()) throw GameError(ErrorCode::IllegalMove, "game is over");
    if (type == "resign") {
        resigned_ = opponent(engine_seat_);
        return reply("state");
    }
    if (type == "hint") {
        // Advice for the human's seat, not applied.
        if (state_->to_move() == engine_seat_) throw GameError(ErrorCode::IllegalMove, "it is the engine's turn");
        const auto saved = strategy_;
        strategy_ = auto_strategy(state_->spec(), state_->to_move());
        EngineChoice c;
        try {
            c = choose();
        } catch (...) {
            strategy_ = saved;
            throw;
        }
        strategy_ = saved;
        return reply("engine-move", {{"col", c.col}, {"strategy_used", c.label}, {"applied", false}});
    }
    return human_move(req);
}

bool Session::over() const { return resigned_.has_value() || (state_ && state_->ended()); }

std::string Session::handle(const std::string& line) {
    json out;
    try {
        const json req = json::parse(line);
        out = dispatch(req);
    } catch (const json::exception& e) {
        out = error(ErrorCode::ParseError, e.what());
    } catch (const GameError& e) {
        out = error(e.code(), e.what());
    } catch (const std::exception& e) {
        out = error(ErrorCode::ParseError, e.what());
    }
    return out.dump();
}

void run_session(std::istream& in, std::ostream& out, const SessionConfig& config) {
    Session session(config);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out << session.handle(line) << '\n' << std::flush;
    }
}

namespace {

void serve_connection(int fd, SessionConfig config) {
    Session session(std::move(config));
    std::string buffer;
    char chunk[4096];
    for (;;) {
        const ssize_t n = ::recv(fd, chunk, sizeof chunk, 0);
        if (n <= 0) break;
        buffer.append(chunk, static_cast<std::size_t>(n));
        std::size_t nl;
        while ((nl = buffer.find('\n')) != std::string::npos) {
            std::string line = buffer.substr(0, nl);
            buffer.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const std::string resp = session.handle(line) + "\n";
            std::size_t sent = 0;
            while (sent < resp.size()) {
                const ssize_t m = ::send(fd, resp.data() + sent, resp.size() - sent, MSG_NOSIGNAL);
                if (m <= 0) {
                    ::close(fd);
                    return;
                }
                sent += static_cast<std::size_t>(m);
            }
        }
    }
    ::close(fd);
}

}  // namespace

void serve_tcp(int port, const SessionConfig& config) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw std::system_error(errno, std::generic_category(), "socket");
    const int yes = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<uint16_t>(port));
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(fd, 16) < 0) {
        const int err = errno;
        ::close(fd);
        throw std::system_error(err, std::generic_category(), "bind 127.0.0.1:" + std::to_string(port));
    }
    for (;;) {
        const int conn = ::accept(fd, nullptr, nullptr);
        if (conn < 0) {
            if (errno == EINTR) continue;
            break;
        }
        std::thread(serve_connection, conn, config).detach();
    }
    ::close(fd);
}

}  // namespace misere
