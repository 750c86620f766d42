import csv
import io
import json

import pytest

from acquaintance.cli import main, parse_sizes
from acquaintance.graph import build_graph, family, is_connected
from acquaintance.path import path_strategy
from acquaintance.validation import graph_from_dict


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_path(capsys):
    code, out, _ = invoke(capsys, "gen", "path", "5")
    assert code == 0
    assert json.loads(out) == {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}


def test_gen_barbell(capsys):
    _, out, _ = invoke(capsys, "gen", "barbell", "7")
    g = graph_from_dict(json.loads(out))
    assert g == family("barbell", 7)
    assert len(g.edges) == 6 + 3 + 1


def test_gen_gnp_deterministic(capsys):
    _, a, _ = invoke(capsys, "gen", "gnp", "100", "0.03", "--seed", "7")
    _, b, _ = invoke(capsys, "gen", "gnp", "100", "0.03", "--seed", "7")
    assert a == b
    g = graph_from_dict(json.loads(a))
    assert is_connected(g) and g.n > 1


def test_gen_random_needs_seed(capsys):
    code, _, err = invoke(capsys, "gen", "gnp", "10", "0.3")
    assert code == 2 and "seed" in err


def test_gen_too_small(capsys):
    code, _, _ = invoke(capsys, "gen", "cycle", "2")
    assert code == 2


def test_synth_p8(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 8).to_dict())
    code, out, err = invoke(capsys, "synth", graph)
    assert code == 0
    strategy = json.loads(out)
    report = json.loads(err)
    assert report["rounds_used"] == len(strategy["rounds"]) <= 320
    assert report["verified"] is True


def test_synth_k3(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("complete", 3).to_dict())
    code, _, err = invoke(capsys, "synth", graph)
    assert code == 0 and json.loads(err)["completion_round"] == 0


def test_synth_output_files(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("star", 6).to_dict())
    strat, rep = tmp_path / "s.json", tmp_path / "r.json"
    code, out, _ = invoke(capsys, "synth", graph, "-o", str(strat), "--report", str(rep))
    assert code == 0 and out == ""
    assert json.loads(rep.read_text())["verified"] is True
    assert "rounds" in json.loads(strat.read_text())


def test_synth_disconnected(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", build_graph(4, [(0, 1), (2, 3)]).to_dict())
    code, _, err = invoke(capsys, "synth", graph)
    assert code == 2 and "DisconnectedError" in err


def test_verify(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 4).to_dict())
    full = write_json(tmp_path / "full.json", path_strategy(4).to_dict())
    s = path_strategy(4).to_dict()
    s["rounds"] = s["rounds"][:1]
    short = write_json(tmp_path / "short.json", s)

    code, out, _ = invoke(capsys, "verify", graph, full)
    assert code == 0 and json.loads(out)["all_acquainted"] is True
    code, out, _ = invoke(capsys, "verify", graph, short)
    assert code == 1 and json.loads(out)["all_acquainted"] is False


def test_verify_trace(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 4).to_dict())
    full = write_json(tmp_path / "full.json", path_strategy(4).to_dict())
    _, _, err = invoke(capsys, "verify", graph, full, "--trace")
    lines = [json.loads(x) for x in err.splitlines()]
    assert [x["round"] for x in lines] == [1, 2]


def test_verify_invalid_matching(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 4).to_dict())
    bad = write_json(tmp_path / "bad.json", {"graph": family("path", 4).to_dict(), "rounds": [[[0, 2]]]})
    code, _, err = invoke(capsys, "verify", graph, bad)
    assert code == 2 and "round 1" in err


def test_malformed_json(tmp_path, capsys):
    graph = tmp_path / "g.json"
    graph.write_text("{not json")
    code, _, err = invoke(capsys, "synth", str(graph))
    assert code == 2 and "ParseError" in err


def test_missing_file(tmp_path, capsys):
    code, _, _ = invoke(capsys, "synth", str(tmp_path / "absent.json"))
    assert code == 2


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_bench_path(capsys):
    code, out, _ = invoke(capsys, "bench", "--family", "path", "--sizes", "8..64:8")
    rows = read_csv(out)
    assert code == 0
    assert rows[0] == ["n", "graph_max_degree", "tree_max_degree", "rounds_used", "bound", "completion_round"]
    assert [int(r[0]) for r in rows[1:]] == list(range(8, 65, 8))
    for r in rows[1:]:
        assert int(r[3]) <= 20 * 2 * int(r[0])


def test_bench_gnp_tree_degree(capsys):
    _, out, _ = invoke(capsys, "bench", "--family", "gnp", "--sizes", "50,100", "--seed", "3", "--trials", "2")
    rows = read_csv(out)[1:]
    assert len(rows) == 4
    assert all(int(r[2]) <= int(r[1]) for r in rows)


def test_bench_zero_trials(capsys):
    _, out, _ = invoke(capsys, "bench", "--trials", "0")
    assert read_csv(out) == [["n", "graph_max_degree", "tree_max_degree", "rounds_used", "bound", "completion_round"]]


def test_parse_sizes():
    assert parse_sizes("8,16") == [8, 16]
    assert parse_sizes("8..12") == [8, 9, 10, 11, 12]
    assert parse_sizes("8..32:8") == [8, 16, 24, 32]


def test_exact(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 5).to_dict())
    code, out, _ = invoke(capsys, "exact", graph, "--check")
    data = json.loads(out)
    assert code == 0 and data["ac"] == 3 and data["iddfs_ac"] == 3


def test_exact_budget(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("path", 6).to_dict())
    code, out, _ = invoke(capsys, "exact", graph, "--max-states", "5")
    assert code == 3 and json.loads(out)["budget_exceeded"] is True


def test_exact_disconnected(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", build_graph(3, [(0, 1)]).to_dict())
    code, _, _ = invoke(capsys, "exact", graph)
    assert code == 2


def test_bounds(capsys):
    code, out, _ = invoke(capsys, "bounds", "6", "--delta", "3")
    data = json.loads(out)
    assert code == 0
    assert data["barbell"]["lower_bound"] == 4
    assert data["barbell"]["per_k"] == {"0": 9, "1": 6, "2": 5, "3": 6}
    assert data["contour_bound"] == 360


def test_dot(tmp_path, capsys):
    graph = write_json(tmp_path / "g.json", family("star", 4).to_dict())
    code, out, _ = invoke(capsys, "dot", graph)
    assert code == 0 and out.startswith("graph contour {")


def test_round_trip(tmp_path, capsys):
    for i, argv in enumerate([("gnp", "40", "0.1", "--seed", "1"), ("tree", "30", "--seed", "2"), ("cycle", "9")]):
        gpath, spath = tmp_path / f"g{i}.json", tmp_path / f"s{i}.json"
        assert main(["gen", *argv, "-o", str(gpath)]) == 0
        assert main(["synth", str(gpath), "-o", str(spath), "--report", str(tmp_path / "r.json")]) == 0
        assert main(["verify", str(gpath), str(spath)]) == 0
    capsys.readouterr()


def test_byte_identical(tmp_path, capsys):
    outs = []
    for _ in range(2):
        invoke(capsys, "gen", "tree", "25", "--seed", "11", "-o", str(tmp_path / "g.json"))
        _, out, err = invoke(capsys, "synth", str(tmp_path / "g.json"))
        _, bench, _ = invoke(capsys, "bench", "--family", "tree", "--sizes", "10,20", "--seed", "4")
        outs.append((out, err, bench))
    assert outs[0] == outs[1]


def test_help_for_every_subcommand(capsys):
    for cmd in ("gen", "synth", "verify", "exact", "bounds", "bench", "dot"):
        with pytest.raises(SystemExit) as exc:
            main([cmd, "--help"])
        assert exc.value.code == 0
    capsys.readouterr()
