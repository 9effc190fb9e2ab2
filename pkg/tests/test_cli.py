import json
import subprocess
import sys

import pytest

from omegalab.cli import run
from omegalab.descent import DescentTrace
from omegalab.dickson import MonomialState
from omegalab.formula import UniformizationReport, check_uniformization, parse_formula
from omegalab.hierarchies import CallTree, validate_trace


def test_ord():
    assert run(["ord", "cmp", "w^2", "w*5 + 3"]) == (0, "GT")
    assert run(["ord", "add", "1", "w"]) == (0, "w")
    assert run(["ord", "mul", "2", "w*2 + 1"]) == (0, "w*2 + 2")


def test_ack_trace_validate():
    code, out = run(["ack", "2", "3", "--trace", "--validate"])
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 9 and doc["valid"] is True
    tree = CallTree.from_json(doc)
    assert validate_trace(tree).valid


def test_ack_plain_and_caps():
    assert run(["ack", "3", "3"]) == (0, "61")
    code, out = run(["ack", "3", "4", "--cap-m", "3", "--cap-n", "3"])
    assert code == 1 and json.loads(out)["error"] == "CapExceeded"


def test_dickson_rank():
    code, out = run(["dickson", "rank", "(1,1)", "--dim", "2"])
    assert code == 0 and json.loads(out)["ranks"] == ["w*2"]
    code, out = run(["dickson", "rank", "(1,1);(0,2);(3,0)", "--dim", "2"])
    assert MonomialState.from_json(out).ranks


def test_dickson_rejection_is_data():
    code, out = run(["dickson", "rank", "(1,1);(2,2)", "--dim", "2"])
    doc = json.loads(out)
    assert code == 1 and doc["error"] == "Rejected" and doc["index"] == 0


def test_walk():
    code, out = run(["walk", "w^2", "--steps", "2", "--cycle", "--json"])
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) == 8
    assert DescentTrace.from_json(doc).valid
    code, out = run(["walk", "w", "--steps", "2,3,4"])
    assert (code, out) == (0, "w > 2 > 1 > 0")


def test_walk_failures_are_data():
    code, out = run(["walk", "w^w", "--bound", "w^w", "--json"])
    assert code == 1 and json.loads(out)["status"] == {"violation_at": 0}
    code, out = run(["walk", "w^2", "--steps", "2"])
    doc = json.loads(out)
    assert code == 1 and doc["error"] == "StepsExhausted"
    assert DescentTrace.from_json(doc["trace"]).entries


def test_hardy():
    assert run(["hardy", "w^2", "2"]) == (0, "8")
    code, out = run(["hardy", "w^w", "2"])
    assert code == 1 and json.loads(out)["error"] == "NotBelowOmegaOmega"


def test_uniformize():
    code, out = run(["uniformize", "--theta", "x + x = y", "--X", "10", "--N", "300"])
    doc = json.loads(out)
    assert code == 0 and (doc["item1"], doc["item2"], doc["item3"]) == (True, True, True)
    report = UniformizationReport.from_json(doc)
    assert report == check_uniformization(parse_formula(report.theta), report.X, report.N)
    code, out = run(["uniformize", "--theta", "y = x + 20", "--X", "10", "--N", "30"])
    assert code == 1 and json.loads(out)["error"] == "InsufficientBound"
    code, out = run(["uniformize", "--phi", "Ey (x + x = y)"])
    assert code == 0 and json.loads(out)["level"] == "Sigma(1)"


@pytest.mark.parametrize("argv", [
    [], ["nope"], ["ord", "cmp", "w^", "1"], ["ord", "pow", "1", "2"], ["ack", "x", "1"],
    ["walk", "w", "--steps", "a,b"], ["dickson", "rank", "(1,1)"], ["hardy", "1"],
    ["uniformize"], ["uniformize", "--theta", "x +"], ["ord", "cmp", "w + w", "1"],
    ["dickson", "rank", "(1,1);(2)", "--dim", "2"],
])
def test_malformed_input_exits_2(argv):
    code, out = run(argv)
    assert code == 2 and out


def test_help_exits_0():
    code, out = run(["--help"])
    assert code == 0 and "uniformize" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "omegalab.cli", "ord", "cmp", "w", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "GT"
