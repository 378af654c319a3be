import json
from pathlib import Path

import pytest

from seplrc.cli import main, read_word
from seplrc.config import build, load_config, parse_config
from seplrc.errors import ConfigError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def cfg(name):
    return str(CONFIGS / f"{name}.json")


def write_json(tmp_path, data, name="c.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_every_shipped_config_builds():
    for path in sorted(CONFIGS.glob("*.json")):
        b = build(load_config(path))
        assert b.code.n > 0


def test_config_rejects_unknown_and_bad_values():
    base = json.loads(Path(cfg("cubic_k2")).read_text())
    parse_config(base)
    for mutate in (
        lambda d: d.update(extra=1),
        lambda d: d["field"].update(q=13),
        lambda d: d.pop("curve"),
        lambda d: d["space"].update(complete_m=3),
        lambda d: d.update(orientation="z"),
        lambda d: d["field"].update(p="13"),
    ):
        data = json.loads(json.dumps(base))
        mutate(data)
        with pytest.raises(ConfigError):
            build(parse_config(data))


def test_params_json(capsys):
    assert main(["params", cfg("kondo_v50"), "--ghw", "5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["n"], data["k"], data["d_lower"], data["defect_upper"]) == (126, 43, 76, 3)
    assert data["ghw"]["lower"][4] == data["ghw"]["upper"][4] == 84


def test_params_strict_falls_back(tmp_path, capsys):
    data = json.loads(Path(cfg("hermitian_d")).read_text())
    del data["gonality_overrides"]
    path = write_json(tmp_path, data)
    assert main(["params", path, "--strict"]) == 0
    captured = capsys.readouterr()
    assert "falling back" in captured.err
    assert "floor" in captured.out


def test_encode_repair_round_trip(tmp_path, capsys):
    word_path = tmp_path / "w.txt"
    mat_path = tmp_path / "G.txt"
    assert main(["encode", cfg("hermitian_c"), "--seed", "3", "-o", str(word_path),
                 "--matrix", str(mat_path)]) == 0
    word = read_word(str(word_path), 64)
    assert mat_path.read_text().startswith("# q=16 n=64 rows=42 k=42")
    damaged = list(word)
    for p in (0, 17, 40):
        damaged[p] = None
    damaged_path = tmp_path / "d.txt"
    damaged_path.write_text(" ".join("?" if v is None else str(v) for v in damaged))
    out_path = tmp_path / "r.txt"
    assert main(["repair", cfg("hermitian_c"), str(damaged_path), "-o", str(out_path),
                 "--cross-check"]) == 0
    assert read_word(str(out_path)) == word
    assert capsys.readouterr().out.count("one-addition") == 3


def test_repair_global_and_ambiguous(tmp_path, capsys):
    word_path = tmp_path / "w.txt"
    assert main(["encode", cfg("cubic_k2"), "-o", str(word_path)]) == 0
    word = read_word(str(word_path))
    two = ["?", "?"] + [str(v) for v in word[2:]]
    (tmp_path / "two.txt").write_text(" ".join(two))
    out = tmp_path / "out.txt"
    assert main(["repair", cfg("cubic_k2"), str(tmp_path / "two.txt"), "-o", str(out)]) == 0
    assert read_word(str(out)) == word
    assert "method global" in capsys.readouterr().out
    (tmp_path / "all.txt").write_text(" ".join(["?"] * 8 + [str(word[8])]))
    assert main(["repair", cfg("cubic_k2"), str(tmp_path / "all.txt")]) == 1
    assert "certificate" in capsys.readouterr().err


def test_verify(capsys):
    assert main(["verify", cfg("elliptic_v8"), "--ghw", "6"]) == 0
    out = capsys.readouterr().out
    assert "exact hierarchy 10,12,14,15,17,18" in out
    assert "mds_rank 5 opt_rank 2" in out
    assert main(["verify", cfg("kondo_v50")]) == 3
    assert main(["verify", cfg("elliptic_v8"), "--max-work", "16", "--max-codewords", "16"]) == 3


def test_simulate(capsys):
    assert main(["simulate", cfg("kondo_v50"), "--nodes", "9", "--count", "10",
                 "--seed", "5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["fallback"] == 0
    assert data["reads_per_local_symbol"] == 8
    assert main(["simulate", cfg("kondo_v50"), "--nodes", "9", "--pattern", "some"]) == 2


def test_simulate_objects_file(tmp_path, capsys):
    word_path = tmp_path / "w.txt"
    main(["encode", cfg("cubic_k2"), "-o", str(word_path)])
    objs = tmp_path / "objs.txt"
    objs.write_text(word_path.read_text() * 2)
    assert main(["simulate", cfg("cubic_k2"), "--nodes", "9", "--objects", str(objs)]) == 0
    assert "verified" in capsys.readouterr().out
    objs.write_text("1 2 x\n")
    assert main(["simulate", cfg("cubic_k2"), "--nodes", "9", "--objects", str(objs)]) == 2


def test_paper_examples(capsys):
    assert main(["paper-examples", "--case", "ex5.4"]) == 0
    assert "expected-divergence" in capsys.readouterr().out
    assert main(["paper-examples", "--case", "nope"]) == 4


def test_config_and_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["params", str(bad)]) == 2
    assert main(["params", str(tmp_path / "missing.json")]) == 2
    assert main(["params", write_json(tmp_path, {"field": {"p": 13}, "bogus": 1})]) == 2
    assert main(["encode", cfg("cubic_k2"), "--message", str(tmp_path / "none.txt")]) == 2
    (tmp_path / "short.txt").write_text("1 2 3")
    assert main(["repair", cfg("cubic_k2"), str(tmp_path / "short.txt")]) == 2
    (tmp_path / "m.txt").write_text("1 2 3")
    assert main(["encode", cfg("cubic_k2"), "--message", str(tmp_path / "m.txt")]) == 2


def test_usage_errors(capsys):
    for argv in ([], ["bogus"], ["simulate", cfg("cubic_k2")], ["params"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 4
