import json

import pytest

from stringcrystal.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_z_example(capsys):
    code, out, _ = call(capsys, "z", "--n", "5", "--word", "1,2,3,4,1,2,3,1,2,1", "--j", "3")
    assert code == 0
    assert json.loads(out)["coords"] == [0, 0, 1, 1, 0, 1, 0, 1, 0, 0]


def test_points_example(capsys):
    code, out, _ = call(capsys, "points", "--n", "3", "--word", "2,1,2", "--lambda", "1,1",
                        "--format", "json")
    assert code == 0 and len(json.loads(out)["points"]) == 8


def test_atom_check_example(capsys):
    code, out, _ = call(capsys, "atom-check", "--n", "3", "--word", "2,1,2", "--k", "1",
                        "--i", "2")
    assert code == 0 and json.loads(out)["big_atom"] is True


@pytest.mark.parametrize("argv", [
    ["cone", "--n", "4"],
    ["polytope", "--n", "3", "--lambda", "1,2"],
    ["crystal-graph", "--n", "3", "--lambda", "1,1"],
    ["crystal-graph", "--n", "3", "--lambda", "1,1", "--format", "dot"],
    ["embed-check", "--n", "3", "--lambda", "1,1"],
    ["project", "--n", "4", "--x", "1,2,3,4,5,6", "--which", "last"],
    ["oracle-compare", "--n", "4", "--lambda", "1,0,1"],
    ["z", "--n", "4", "--format", "text"],
])
def test_verbs_are_deterministic(capsys, argv):
    first = call(capsys, *argv)
    second = call(capsys, *argv)
    assert first == second and first[0] == 0
    if "--format" not in argv:
        json.loads(first[1])


def test_jobs_do_not_change_output(capsys):
    a = call(capsys, "atom-check", "--n", "4", "--k", "1")
    b = call(capsys, "atom-check", "--n", "4", "--k", "1", "--jobs", "2")
    assert a == b


def test_json_round_trip(capsys):
    _, out, _ = call(capsys, "points", "--n", "3", "--lambda", "1,1")
    doc = json.loads(out)
    assert json.dumps(doc, sort_keys=True) + "\n" == out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "g.dot"
    code, out, _ = call(capsys, "crystal-graph", "--n", "3", "--lambda", "1,0",
                        "--format", "dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph")


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["points", "--n", "3"],
    ["points", "--n", "3", "--word", "1,1,2", "--lambda", "1,1"],
    ["points", "--n", "3", "--lambda", "1"],
    ["z", "--n", "3", "--j", "7"],
    ["cone", "--n", "3", "--format", "dot"],
    ["cone"],
    ["points", "--n", "3", "--lambda", "a,b"],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 64 and err


def test_false_verdict_exit_code(capsys):
    code, out, _ = call(capsys, "embed-check", "--n", "4", "--word", "1,2,3,2,1,2",
                        "--lambda", "1,0,1", "--j", "2")
    assert code in (0, 1)
    assert json.loads(out)["status"] == ("pass" if code == 0 else "fail")


def test_internal_error_exit_code(capsys, monkeypatch):
    import stringcrystal.cli as cli

    def boom(args):
        raise AssertionError("broken invariant")

    monkeypatch.setattr(cli, "dispatch", boom)
    code, _, err = call(capsys, "cone", "--n", "3")
    assert code == 70 and "internal_error" in json.loads(err)
