#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "misere/core.hpp"
#include "misere/k2.hpp"
#include "misere/oracle.hpp"
#include "misere/protocol.hpp"
#include "misere/solver.hpp"
#include "misere/strategies.hpp"
#include "misere/suites.hpp"
#include "misere/verifier.hpp"

namespace py = pybind11;
using namespace misere;

namespace {

Extent to_extent(const py::object& o) {
    if (py::isinstance<py::str>(o)) {
        const auto s = o.cast<std::string>();
        if (s == "inf") return Extent::infinite();
        throw GameError(ErrorCode::ParseError, "extent must be an int or 'inf'");
    }
    if (py::isinstance<py::float_>(o) && std::isinf(o.cast<double>())) return Extent::infinite();
    return o.cast<int>();
}

Player seat_of(const std::string& s) {
    auto p = parse_player(s);
    if (!p) throw GameError(ErrorCode::ParseError, "seat must be 'P1' or 'P2'");
    return *p;
}

Claim claim_of(const std::string& s) {
    if (s == "AlwaysWins") return Claim::AlwaysWins;
    if (s == "NeverLoses") return Claim::NeverLoses;
    if (s == "NeverConnectsK-relaxed") return Claim::NeverConnectsKRelaxed;
    throw GameError(ErrorCode::ParseError, "unknown claim '" + s + "'");
}

std::optional<std::string> result_str(const GameState& s) {
    if (!s.ended()) return std::nullopt;
    return std::string(to_string(*s.result()));
}

}  // namespace

PYBIND11_MODULE(misere, m) {
    m.doc() = "Misere connect-k engine";

    // Kept alive for the life of the interpreter.
    static PyObject* game_error = PyErr_NewException("misere.GameError", PyExc_RuntimeError, nullptr);
    m.attr("GameError") = py::handle(game_error);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GameError& e) {
            py::object err = py::handle(game_error)(std::string(to_string(e.code())) + ": " + e.what());
            err.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(game_error, err.ptr());
        }
    });

    m.def(
        "outcome",
        [](const py::object& w, const py::object& h, int k) {
            const auto o = outcome({to_extent(w), to_extent(h), k});
            return py::make_tuple(std::string(to_string(o.outcome)), std::string(describe(o.rule)));
        },
        py::arg("w"), py::arg("h"), py::arg("k"), "Perfect-play outcome and the rule that decides it.");

    py::class_<GameState>(m, "GameState")
        .def_static(
            "new", [](int w, int h, int k) { return GameState::new_game({w, h, k}); }, py::arg("w"),
            py::arg("h"), py::arg("k"))
        .def_static(
            "replay", [](int w, int h, int k, const std::vector<int>& moves) { return replay({w, h, k}, moves); },
            py::arg("w"), py::arg("h"), py::arg("k"), py::arg("moves"))
        .def_static(
            "from_text", [](const std::string& text, int k) { return GameState::from_text(text, k); },
            py::arg("text"), py::arg("k"))
        .def_property_readonly("width", &GameState::width)
        .def_property_readonly("height", &GameState::height)
        .def_property_readonly("k", &GameState::k)
        .def_property_readonly("to_move", [](const GameState& s) { return std::string(to_string(s.to_move())); })
        .def_property_readonly("ended", &GameState::ended)
        .def_property_readonly("result", &result_str)
        .def_property_readonly("history", &GameState::history)
        .def("legal_moves", &GameState::legal_moves)
        .def("play", &GameState::apply_move, py::arg("col"))
        .def("render", &GameState::render)
        .def("__str__", &GameState::render)
        .def("__eq__", [](const GameState& a, const GameState& b) { return a == b; });

    m.def(
        "solve",
        [](const GameState& s, int max_cells, std::uint64_t budget, int threads) {
            SolverConfig cfg;
            cfg.max_cells = max_cells;
            cfg.node_budget = budget;
            cfg.threads = threads;
            Solver solver(cfg);
            const auto r = solver.solve(s);
            py::dict d;
            d["outcome"] = std::string(to_string(r.outcome));
            d["best_move"] = r.best_move;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("state"), py::arg("max_cells") = 20, py::arg("budget") = 0, py::arg("threads") = 1);

    m.def(
        "strategy_move",
        [](const std::string& name, const GameState& s) {
            auto kind = parse_strategy(name, s.spec(), s.to_move());
            if (!kind) throw GameError(ErrorCode::ParseError, "unknown strategy '" + name + "'");
            return strategy_move(*kind, s);
        },
        py::arg("strategy"), py::arg("state"));

    m.def(
        "auto_strategy",
        [](int w, int h, int k, const std::string& seat) -> std::optional<std::string> {
            auto kind = auto_strategy({w, h, k}, seat_of(seat));
            if (!kind) return std::nullopt;
            return std::string(protocol_name(*kind));
        },
        py::arg("w"), py::arg("h"), py::arg("k"), py::arg("seat"));

    m.def(
        "verify",
        [](int w, int h, int k, const std::string& strategy, const std::string& seat, const std::string& claim) {
            const BoardSpec spec{w, h, k};
            const Player p = seat_of(seat);
            auto kind = parse_strategy(strategy, spec, p);
            if (!kind) throw GameError(ErrorCode::ParseError, "unknown strategy '" + strategy + "'");
            const auto r = verify_strategy(spec, *kind, p, claim_of(claim));
            py::dict d;
            d["passed"] = r.passed;
            d["states_visited"] = r.states_visited;
            d["max_game_length"] = r.max_game_length;
            d["counterexample"] = r.counterexample;
            d["failure"] = r.failure;
            d["certificate"] = r.certificate();
            return d;
        },
        py::arg("w"), py::arg("h"), py::arg("k"), py::arg("strategy"), py::arg("seat"), py::arg("claim"));

    m.def(
        "run_suite",
        [](const std::string& name, int max_cells) {
            std::vector<std::string> certs;
            SuiteOptions opt;
            opt.max_cells = max_cells;
            const auto r = run_suite(name, opt, [&](const std::string& c) { certs.push_back(c); });
            return py::make_tuple(r.passed, certs);
        },
        py::arg("name"), py::arg("max_cells") = 16);

    m.def("suite_names", &suite_names);

    m.def(
        "k2_tally",
        [](const std::string& row) {
            const auto t = k2::tally_of(parse_row(row));
            return py::make_tuple(t.x_moves, t.o_moves);
        },
        py::arg("row"));

    py::class_<Session>(m, "Session")
        .def(py::init([](int max_cells) {
                 SessionConfig cfg;
                 cfg.solver.max_cells = max_cells;
                 return std::make_unique<Session>(cfg);
             }),
             py::arg("max_cells") = 20)
        .def("handle", &Session::handle, py::arg("line"),
             "One request line in, one response line out.");
}
