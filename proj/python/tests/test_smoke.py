import json
import os
import socket
import subprocess
import time

import pytest

import misere


def test_outcome():
    assert misere.outcome(7, 6, 4) == ("P2Win", "k≥3, even h")
    assert misere.outcome("inf", 6, 4)[0] == "Draw"
    with pytest.raises(misere.GameError) as err:
        misere.outcome(7, 0, 4)
    assert err.value.code == "InvalidSpec"


def test_play_and_solve():
    s = misere.GameState.new(4, 3, 3)
    assert s.to_move == "P1"
    s = s.play(1)
    assert s.history == [1]
    r = misere.solve(s)
    assert r["outcome"] in ("P1Win", "P2Win", "Draw")
    assert misere.solve(misere.GameState.new(4, 3, 3))["outcome"] == "P2Win"
    with pytest.raises(misere.GameError):
        misere.solve(misere.GameState.new(7, 6, 4))


def test_replay_matches_render():
    s = misere.GameState.replay(3, 2, 3, [0, 0, 1])
    assert s.render() == "O--\nXX-"
    assert misere.GameState.from_text(s.render(), 3) == s


def test_strategies():
    s = misere.GameState.new(7, 6, 4).play(3)
    assert misere.strategy_move("take-even", s) == 3
    assert misere.auto_strategy(9, 1, 3, "P1") == "pair"
    assert misere.auto_strategy(7, 6, 4, "P1") is None


def test_verify():
    r = misere.verify(7, 6, 4, "take-even", "P2", "AlwaysWins")
    assert r["passed"]
    assert r["states_visited"] <= 4 ** 7
    assert r["max_game_length"] <= 37
    bad = misere.verify(6, 1, 3, "pair", "P2", "AlwaysWins")
    assert not bad["passed"]
    assert bad["counterexample"]


def test_suite():
    ok, certs = misere.run_suite("theorem1")
    assert ok
    assert all(json.loads(c)["result"] == "pass" for c in certs)
    assert "table1" in misere.suite_names()


def test_k2_tally():
    assert misere.k2_tally("X------O") == (3, 3)


def test_session():
    sess = misere.Session()
    r = json.loads(sess.handle(json.dumps({"type": "newgame", "w": 7, "h": 6, "k": 4, "engine_seat": "P2"})))
    assert r["type"] == "state"
    r = json.loads(sess.handle(json.dumps({"type": "move", "col": 3})))
    assert r["col"] == 3 and r["strategy_used"] == "take-even"
    r = json.loads(sess.handle("garbage"))
    assert r["type"] == "error"


def _free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.mark.skipif(not os.environ.get("MCK_BIN"), reason="mck binary not built")
def test_tcp_sessions_are_isolated():
    port = _free_port()
    proc = subprocess.Popen([os.environ["MCK_BIN"], "session", "--port", str(port)], stderr=subprocess.DEVNULL)
    try:
        for _ in range(100):
            try:
                a = socket.create_connection(("127.0.0.1", port))
                break
            except OSError:
                time.sleep(0.05)
        b = socket.create_connection(("127.0.0.1", port))
        fa, fb = a.makefile("rw"), b.makefile("rw")

        def ask(f, req):
            f.write(json.dumps(req) + "\n")
            f.flush()
            return json.loads(f.readline())

        ask(fa, {"type": "newgame", "w": 7, "h": 6, "k": 4, "engine_seat": "P2"})
        ask(fb, {"type": "newgame", "w": 9, "h": 1, "k": 3, "engine_seat": "P2"})
        ra = ask(fa, {"type": "move", "col": 2})
        rb = ask(fb, {"type": "outcome"})
        assert ra["col"] == 2
        assert rb["outcome"] == "Draw"
        assert rb["snapshot"]["history"] == []
        a.close()
        b.close()
    finally:
        proc.terminate()
        proc.wait()
