import json

import pytest

from snaketsys.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


SNAKE_UNTW = {
    "flavor": "untwisted",
    "xi": [2, 4, 6],
    "points": [{"i": 2, "k2": 0}, {"i": 2, "k2": 4}, {"i": 1, "k2": 10}],
}
SNAKE_TW = {
    "flavor": "twisted",
    "xi": [2, 3, 4],
    "n0": 2,
    "points": [{"i": 3, "k2": 4}, {"i": 2, "k2": 9}, {"i": 2, "k2": 11}],
}


def test_quiver_text(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "1")
    assert code == 0 and "a1" in out


def test_quiver_dot_window(capsys):
    code, out, _ = run(capsys, "quiver", "--n", "2", "--window", "0:8", "--format", "dot")
    assert code == 0
    assert '"1:0" -> "2:2"' in out


def test_quiver_config_error(capsys):
    code, _, err = run(capsys, "quiver", "--xi", "2,5,6")
    assert code == 2 and "config error" in err


def test_tsystem_golden_json(capsys, tmp_path):
    path = write(tmp_path, "s.json", SNAKE_UNTW)
    code, out, _ = run(capsys, "tsystem", path, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["Q"] == [{"i": 1, "k2": 2}]
    assert obj["R"] == [{"i": 3, "k2": 2}, {"i": 3, "k2": 6}]
    assert obj["D"] == [{"i": 2, "k2": 4}]
    assert obj["hypotheses_ok"] is True


def test_tsystem_twisted_golden(capsys, tmp_path):
    path = write(tmp_path, "s.json", SNAKE_TW)
    code, out, _ = run(capsys, "tsystem", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["Q"] == [{"i": 2, "k2": 5}, {"i": 1, "k2": 10}]
    assert obj["R"] == []


def test_tsystem_with_qdatum(capsys, tmp_path):
    path = write(tmp_path, "s.json", SNAKE_UNTW)
    code, out, _ = run(capsys, "tsystem", path, "--realization", "qdatum")
    assert code == 0 and "Y_{2,0}" in out


def test_tsystem_nonprime_exit3(capsys, tmp_path):
    bad = dict(SNAKE_UNTW, points=[{"i": 2, "k2": 0}, {"i": 2, "k2": 12}])
    path = write(tmp_path, "bad.json", bad)
    code, _, err = run(capsys, "tsystem", path)
    assert code == 3 and "prime segments" in err


def test_tsystem_parse_error_exit4(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("this is not json")
    code, _, err = run(capsys, "tsystem", str(p))
    assert code == 4


def test_snake_check(capsys, tmp_path):
    path = write(tmp_path, "s.json", SNAKE_UNTW)
    code, out, _ = run(capsys, "snake-check", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["snake"] and obj["prime"]
    assert len(obj["splits"]) == 1


def test_qr_command(capsys, tmp_path):
    path = write(tmp_path, "s.json", SNAKE_TW)
    code, out, _ = run(capsys, "qr", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["Q"] == [{"i": 2, "k2": 5}, {"i": 1, "k2": 10}]


def test_rho_golden(capsys, tmp_path):
    datum = {
        "carrier": "gamma-THETA",
        "entries": [
            {"i": 5, "k2": 8, "c": 1},
            {"i": 5, "k2": 12, "c": 1},
            {"i": 4, "k2": 17, "c": 1},
            {"i": 4, "k2": 19, "c": 1},
        ],
    }
    path = write(tmp_path, "d.json", datum)
    code, out, _ = run(capsys, "rho", "--n", "7", path)
    assert code == 0
    obj = json.loads(out)
    assert obj["carrier"] == "gamma-theta"
    assert obj["entries"] == [
        {"i": 5, "k2": 6, "c": 1},
        {"i": 5, "k2": 10, "c": 1},
        {"i": 5, "k2": 14, "c": 1},
        {"i": 4, "k2": 20, "c": 1},
    ]


def test_translate_golden(capsys, tmp_path):
    snake = {
        "flavor": "twisted",
        "xi": [2, 4, 6, 7, 8, 10, 12],
        "n0": 4,
        "points": [{"i": 5, "k2": 8}, {"i": 5, "k2": 12}, {"i": 4, "k2": 17}, {"i": 4, "k2": 19}],
    }
    path = write(tmp_path, "s.json", snake)
    code, out, _ = run(capsys, "translate", path)
    assert code == 0
    obj = json.loads(out)
    assert obj["flavor"] == "untwisted"
    assert obj["points"] == [
        {"i": 5, "k2": 6}, {"i": 5, "k2": 10}, {"i": 5, "k2": 14}, {"i": 4, "k2": 20}
    ]


def test_reineke_command(capsys, tmp_path):
    datum = {"carrier": "gamma-delta:0", "entries": [{"i": 2, "k2": 2, "c": 1}]}
    path = write(tmp_path, "d.json", datum)
    code, out, _ = run(capsys, "reineke", "--n", "5", "--j", "2", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj == {"j": 2, "epsilon": 1, "epsilon_star": 0}


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "moves", "--trials", "10", "--seed", "1")
    assert code == 0 and "moves: ok" in out


def test_quiver_window_figure_labels(capsys):
    code, out, _ = run(capsys, "quiver", "--xi", "4,2,4,6,8")
    assert code == 0
    for label in ("a2", "a1,3", "a2,5", "a4,5", "a5"):
        assert label in out
    # 15 labelled vertices in the window
    assert sum(out.count(f"a{i}") for i in range(1, 6)) >= 15
