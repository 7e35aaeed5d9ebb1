import json
import subprocess
import sys
from pathlib import Path

import pytest

from dyckpairs.cli import main
from dyckpairs.corpus import gen_permutations
from dyckpairs.permutation import canonical_representative

GOLDEN = Path(__file__).parent / "golden"
EXAMPLE_P = "n=9;A=6,8;D=3,5"
EXAMPLE_Q = "n=9;A=6,8;D=2,6"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_map(capsys):
    code, out, _ = run(capsys, "map", "6 2 3 1 7 5 4")
    assert code == 0
    assert out.split() == ["UUDUUUUDDUDDDD", "UUUUDUDUUDDDDD"]
    code, out, _ = run(capsys, "map", "6 2 3 1 7 5 4", "--code")
    assert out.split() == ["n=7;A=2,6;D=1,3", "n=7;A=4,5;D=1,2"]


def test_map_json_golden(capsys):
    code, out, _ = run(capsys, "map", "6 2 3 1 7 5 4", "--json")
    assert json.loads(out) == json.loads((GOLDEN / "map_6231754.json").read_text())


def test_unmap_worked_golden(capsys):
    code, out, _ = run(capsys, "unmap", EXAMPLE_P, EXAMPLE_Q)
    assert code == 0
    assert out == (GOLDEN / "unmap_worked_example.txt").read_text()
    code, out, _ = run(capsys, "unmap", EXAMPLE_P, EXAMPLE_Q, "--json")
    assert json.loads(out) == json.loads((GOLDEN / "unmap_worked_example.json").read_text())


def test_unmap_rejects(capsys):
    code, out, err = run(capsys, "unmap", "UUDD", "UDUD")
    assert code == 2
    assert "not admissible" in err
    assert out == ""


def test_semilength_mismatch_is_rejection(capsys):
    code, _, err = run(capsys, "admissible", "UD", "UUDD")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [["map", "1 1 2"], ["unmap", "UUD", "UD"], ["lprime", "n=5;A=2,3;D=3,4"], ["enumerate", "--n", "11"], ["bogus"], ["map"]],
)
def test_malformed_input_exits_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_admissible_and_leq(capsys):
    assert run(capsys, "admissible", EXAMPLE_P, EXAMPLE_Q)[1].strip() == "yes"
    assert run(capsys, "admissible", "UDUD", "UUDD")[1].strip() == "no"
    assert run(capsys, "leq", "n=9;A=4,7,8;D=3,4,7", "n=9;A=7,8;D=3,7")[1].strip() == "yes"
    _, out, _ = run(capsys, "leq", "UDUD", "UUDD", "--json")
    assert json.loads(out) == {"pathP": "UDUD", "pathQ": "UUDD", "leq": False}


def test_canon(capsys):
    assert run(capsys, "canon", "5 3 4 8 2 1 6 7")[1].strip() == "5 3 6 8 2 1 4 7"
    _, out, _ = run(capsys, "canon", "1 2 3 4", "--json")
    assert json.loads(out) == json.loads((GOLDEN / "canon_1234.json").read_text())


def test_involutions(capsys):
    assert run(capsys, "lprime", EXAMPLE_P, "--code")[1].strip() == "n=9;A=3,5,6,7,8;D=1,2,4,6,7"
    assert run(capsys, "kreweras", "UUDD")[1].strip() == "UDUD"
    _, out, _ = run(capsys, "kreweras", "UD", "--json")
    assert json.loads(out) == {"path": "UD", "code": "n=1;A=;D="}


def test_covers(capsys):
    _, out, _ = run(capsys, "covers", "--list", "n=7;A=2,6;D=1,3", "--code")
    assert "n=7;A=6;D=3" in out.split()
    _, out, _ = run(capsys, "covers", "UUUDDD")
    assert out == ""
    _, out, _ = run(capsys, "covers", "--dot", "--n", "3")
    assert out.startswith("digraph dyck3 {") and '"UUDUDD" -> "UUUDDD";' in out
    assert run(capsys, "covers")[0] == 1


def test_enumerate_and_count(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "3", "--avoid", "123")
    assert out.splitlines() == ["1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
    _, out, _ = run(capsys, "enumerate", "--n", "2", "--paths")
    assert out.splitlines() == ["UUDD", "UDUD"]
    assert run(capsys, "count", "--n", "5", "--avoid", "1234")[1].strip() == "103"
    assert run(capsys, "count", "--n", "4", "--paths")[1].strip() == "14"
    assert run(capsys, "count", "--n", "4")[1].strip() == "24"
    _, out, _ = run(capsys, "count", "--n", "6", "--avoid", "123", "--json")
    assert json.loads(out)["count"] == 132
    assert run(capsys, "count", "--n", "11", "--max-n", "11", "--paths")[1].strip() == "58786"


def test_render_golden(capsys):
    _, out, _ = run(capsys, "render", "UUUDDUDD")
    assert out == (GOLDEN / "render_UUUDDUDD.txt").read_text()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "all", "--jobs", "1")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--n", "5", "--suite", "image", "--json", "--jobs", "1")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["results"][-1]["extra"]["image"] == 103
    assert run(capsys, "verify", "--n", "3", "--suite", "nope")[0] == 1


def test_verify_poset_oracle_n6(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--suite", "poset-oracle", "--jobs", "1")
    assert code == 0 and out.count("[PASS]") == 6


def test_verify_in_worker_pool(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "symmetry", "--jobs", "2")
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_through_cli(capsys, n):
    for s in gen_permutations(n):
        _, out, _ = run(capsys, "map", str(s))
        p, q = out.split()
        code, out, _ = run(capsys, "unmap", p, q)
        assert code == 0
        assert out.strip() == str(canonical_representative(s))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dyckpairs", "unmap", EXAMPLE_P, EXAMPLE_Q], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "4 7 9 2 5 1 8 3 6\n"
    proc = subprocess.run([sys.executable, "-m", "dyckpairs", "unmap", "UUDD", "UDUD"], capture_output=True, text=True)
    assert proc.returncode == 2 and "not admissible" in proc.stderr
