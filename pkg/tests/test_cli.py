"""命令行：子命令输出与退出码"""

import json

import pytest

from PDeLP import __version__
from PDeLP.cli import ExitStatus, main


@pytest.fixture
def engine_file(engine_path):
    return str(engine_path)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def write(tmp_path, text, name="program.pdelp"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


# ==================== check ====================


def test_check_valid(capsys, engine_file):
    status, out, _ = run(capsys, "check", engine_file)
    assert status == ExitStatus.OK
    assert out.strip() == "valid: |Π|=5 |Δ|=11"


def test_check_invalid(capsys, tmp_path):
    status, out, _ = run(capsys, "check", write(tmp_path, "(t <- p, 1).\n"))
    assert status == ExitStatus.INVALID
    assert out.startswith("invalid: 1 violation(s)")
    assert "p" in out.splitlines()[1]


def test_check_empty_program(capsys, tmp_path):
    status, out, _ = run(capsys, "check", write(tmp_path, "% nothing here\n"))
    assert status == ExitStatus.OK
    assert out.strip() == "valid: |Π|=0 |Δ|=0"


def test_check_parse_error(capsys, tmp_path):
    path = write(tmp_path, "(a, 1).\n(b 0.5).\n")
    status, out, err = run(capsys, "check", path)
    assert status == ExitStatus.PARSE_ERROR
    assert out == ""
    assert err.startswith(f"{path}:2:")


def test_missing_file(capsys, tmp_path):
    status, _, err = run(capsys, "check", str(tmp_path / "absent.pdelp"))
    assert status == ExitStatus.PARSE_ERROR
    assert "absent.pdelp" in err


def test_invalid_utf8(capsys, tmp_path):
    path = tmp_path / "latin.pdelp"
    path.write_bytes(b"(sw1, 1).\n(\xff\xfe, 0.5).\n")
    status, out, err = run(capsys, "check", str(path))
    assert status == ExitStatus.PARSE_ERROR
    assert out == ""
    assert err.startswith(f"{path}:2:2:")


def test_utf8_bom_accepted(capsys, tmp_path):
    path = tmp_path / "bom.pdelp"
    path.write_bytes(b"\xef\xbb\xbf(sw1, 1).\n")
    status, out, _ = run(capsys, "check", str(path))
    assert status == ExitStatus.OK
    assert out.strip() == "valid: |Π|=1 |Δ|=0"


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


# ==================== query ====================


@pytest.mark.parametrize(
    "goal, status, text",
    [
        ("engine_ok", ExitStatus.NO, "NO 0.95"),
        ("~engine_ok", ExitStatus.OK, "YES 0.95"),
        ("sw1", ExitStatus.OK, "YES 1"),
        ("fuel_ok", ExitStatus.OK, "YES 0.9"),
        ("pump_clog", ExitStatus.UNDECIDED, "UNDECIDED"),
    ],
)
def test_query(capsys, engine_file, goal, status, text):
    result, out, _ = run(capsys, "query", engine_file, goal)
    assert result == status
    assert out.strip() == text


def test_query_json(capsys, engine_file):
    status, out, _ = run(capsys, "query", engine_file, "engine_ok", "--json")
    assert status == ExitStatus.NO
    assert json.loads(out) == {
        "goal": "engine_ok",
        "verdict": "NO",
        "degree": "0.95",
        "witness": [11],
    }


def test_query_without_pruning_gives_same_answer(capsys, engine_file):
    _, pruned, _ = run(capsys, "query", engine_file, "engine_ok")
    _, full, _ = run(capsys, "query", engine_file, "engine_ok", "--no-prune")
    assert pruned == full


def test_query_on_invalid_program(capsys, tmp_path):
    status, out, err = run(capsys, "query", write(tmp_path, "(q, 1). (~q, 1)."), "q")
    assert status == ExitStatus.INVALID
    assert out == ""
    assert "q" in err


def test_bad_goal(capsys, engine_file):
    status, out, err = run(capsys, "query", engine_file, "~")
    assert status == ExitStatus.PARSE_ERROR
    assert out == ""
    assert err.startswith("<goal>:1:")


def test_node_cap_from_environment(capsys, engine_file, monkeypatch):
    monkeypatch.setenv("PDELP_NODE_CAP", "1")
    status, out, err = run(capsys, "query", engine_file, "engine_ok")
    assert status == ExitStatus.NODE_LIMIT
    assert out == ""
    assert "1" in err


# ==================== tree ====================


def test_tree_json(capsys, engine_file):
    status, out, _ = run(capsys, "tree", engine_file, "engine_ok")
    assert status == ExitStatus.OK
    document = json.loads(out)
    assert document["schema"] == "pdelp-tree/1"
    assert document["goal"] == "engine_ok"
    first, second = document["trees"]
    assert first["root"]["support"] == [6, 7, 8, 9, 10]
    assert first["root"]["mark"] == "D"
    assert first["pruned"] is True
    assert first["nodes"] == 2
    assert second["root"]["support"] == [8, 9, 10, 16]


def test_tree_json_without_pruning(capsys, engine_file):
    _, out, _ = run(capsys, "tree", engine_file, "engine_ok", "--no-prune")
    first = json.loads(out)["trees"][0]
    assert first["nodes"] == 6
    assert first["lines"] == 4
    root = first["root"]
    assert [c["conclusion"] for c in root["children"]] == ["~engine_ok", "~oil_ok", "~fuel_ok"]
    assert root["children"][0]["defeat"] == "proper"
    assert root["children"][2]["disagreement"]["support"] == [6, 7]


def test_tree_single_node(capsys, engine_file):
    _, out, _ = run(capsys, "tree", engine_file, "~engine_ok")
    [tree] = json.loads(out)["trees"]
    assert tree["nodes"] == 1
    assert tree["root"]["mark"] == "U"
    assert tree["root"]["defeat"] is None


def test_tree_without_arguments(capsys, engine_file):
    status, out, err = run(capsys, "tree", engine_file, "zzz")
    assert status == ExitStatus.UNDECIDED
    assert out == ""
    assert "zzz" in err


def test_tree_dot_is_stable(capsys, engine_file):
    status, first, _ = run(capsys, "tree", engine_file, "engine_ok", "--format", "dot")
    _, second, _ = run(capsys, "tree", engine_file, "engine_ok", "--format", "dot")
    assert status == ExitStatus.OK
    assert first == second
    assert first.startswith("digraph tree1 {")
    assert 'label="engine_ok [0.3] D"' in first
    assert '[label="proper"]' in first
    assert "digraph tree2 {" in first


def test_config_file_disables_pruning(capsys, engine_file, tmp_path):
    config = write(tmp_path, "[PDeLP.dialectics]\npruning = false\n", "pdelp.toml")
    _, out, _ = run(capsys, "--config", config, "tree", engine_file, "engine_ok")
    assert json.loads(out)["trees"][0]["nodes"] == 6


def test_missing_config_file(capsys, engine_file, tmp_path):
    status, _, err = run(
        capsys, "--config", str(tmp_path / "absent.toml"), "check", engine_file
    )
    assert status == ExitStatus.PARSE_ERROR
    assert "absent.toml" in err


# ==================== prove / args ====================


def test_prove(capsys, engine_file):
    status, out, _ = run(capsys, "prove", engine_file, "fuel_ok")
    assert status == ExitStatus.OK
    lines = out.splitlines()
    assert lines[0] == "fuel_ok 0.9"
    assert "(16)" in lines[1]


def test_prove_unknown_goal(capsys, engine_file):
    status, out, _ = run(capsys, "prove", engine_file, "zzz")
    assert status == ExitStatus.UNDECIDED
    assert out.strip() == "zzz 0"


def test_args_json(capsys, engine_file):
    status, out, _ = run(capsys, "args", engine_file, "fuel_ok", "--json")
    assert status == ExitStatus.OK
    document = json.loads(out)
    assert document["goal"] == "fuel_ok"
    assert [a["support"] for a in document["arguments"]] == [[6, 7], [16]]
    assert [s["rule"] for s in document["arguments"][1]["steps"]] == ["INTF", "MPA"]


def test_args_text(capsys, engine_file):
    status, out, _ = run(capsys, "args", engine_file, "fuel_ok")
    assert status == ExitStatus.OK
    assert "⟨{6,7}, fuel_ok, 0.3⟩" in out.splitlines()
    assert "⟨{16}, fuel_ok, 0.9⟩" in out.splitlines()


def test_args_without_arguments(capsys, engine_file):
    status, out, _ = run(capsys, "args", engine_file, "~pump_clog")
    assert status == ExitStatus.UNDECIDED
    assert out == ""


# ==================== fmt ====================


def test_fmt_normalizes_program(capsys, tmp_path):
    path = write(tmp_path, "% c\n(q,0.50). (r <- q , 1).\n")
    status, out, _ = run(capsys, "fmt", path)
    assert status == ExitStatus.OK
    assert out == "(q, 0.5).\n(r <- q, 1).\n"


def test_fmt_unicode(capsys, engine_file, tmp_path):
    _, out, _ = run(capsys, "fmt", engine_file, "--unicode")
    assert out.splitlines()[0] == "(∼fuel_ok ← pump_clog, 1)."
    config = write(tmp_path, "[PDeLP.parser]\nunicode = true\n", "pdelp.toml")
    _, again, _ = run(capsys, "--config", config, "fmt", engine_file)
    assert again == out
