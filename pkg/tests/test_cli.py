import io
import json
import subprocess
import sys

import pytest

from necklace.cli import run
from conftest import quiver_path


def neck(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_bracket():
    code, out, _ = neck("bracket", "-q", quiver_path("loop"), "cyc(a)", "cyc(a*)")
    assert (code, out) == (0, "idem(v)\n")


def test_coproduct():
    code, out, _ = neck("coproduct", "-q", quiver_path("loop"), "-n", "2", "link([a@1 a*@2])")
    assert code == 0
    assert out == "link([a@1 a*@2])⊗1 + 1⊗link([a@1 a*@2]) + h*(idem(v)⊗idem(v))\n"


def test_verify_lie():
    argv = ("verify", "-q", quiver_path("two_loop"), "--suite", "lie", "--samples", "100", "--max-len", "6", "--seed", "7")
    code, out, _ = neck(*argv)
    assert code == 0
    assert out.rstrip().endswith("overall: pass")
    assert neck(*argv)[1] == out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("cobracket", "cyc(a,a*)"), "0\n"),
        (("reduce", "link([a@2]; [a*@1])"), "link([a@1]; [a*@2]) - idem(v)\n"),
        (("antipode", "idem(v)"), "-idem(v)\n"),
        (("antipode", "--method", "series", "link([a@1 a*@2])"), "-link([a@1 a*@2]) + h*link(idem(v); idem(v))\n"),
        (("counit", "2*h + link([a@1])"), "2*h\n"),
        (("rep", "-d", "v=3", "idem(v)"), "3\n"),
        (("rep", "link([a@2 a*@1])"), "-x[a,1,1] d[a,1,1] - 1\n"),
    ],
)
def test_verbs(argv, expected):
    code, out, _ = neck(argv[0], "-q", quiver_path("loop"), *argv[1:])
    assert (code, out) == (0, expected)


@pytest.mark.parametrize(
    "argv",
    [
        ("bracket", "-q", "LOOP", "cyc(a"),
        ("bracket", "-q", "LOOP", "cyc(a", "cyc(a*)"),
        ("bracket", "-q", "missing.qv", "cyc(a)", "cyc(a*)"),
        ("frobnicate", "-q", "LOOP"),
        ("verify", "-q", "LOOP"),
        ("verify", "-q", "LOOP", "--suite", "lie", "--max-len", "1"),
        ("rep", "-q", "LOOP", "-d", "v=x", "idem(v)"),
        ("coproduct", "-q", "LOOP", "-n", "0", "idem(v)"),
        ("quantize", "-q", "LOOP", "2*cyc(a)"),
        ("cobracket", "-q", "LOOP", "cyc(b)"),
    ],
)
def test_usage_errors_exit_2(argv):
    argv = [quiver_path("loop") if a == "LOOP" else a for a in argv]
    code, out, err = neck(*argv)
    assert code == 2
    assert err


def test_grammar_error_reports_position():
    _, _, err = neck("bracket", "-q", quiver_path("loop"), "cyc(a", "cyc(a*)")
    assert "position 5" in err


def test_failing_suite_exits_1():
    code, out, _ = neck("verify", "-q", quiver_path("loop"), "--suite", "hopf", "--samples", "10", "--max-arrows", "4",
                        "--seed", "1", "--flip-sign")
    assert code == 1
    assert "overall: FAIL" in out


def test_json_envelope():
    code, out, _ = neck("bracket", "-q", quiver_path("loop"), "--json", "cyc(a)", "cyc(a*)")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"command", "inputs", "result", "findings"}
    assert doc["command"] == "bracket"
    assert doc["result"]["text"] == "idem(v)"


def test_json_report():
    code, out, _ = neck("verify", "-q", quiver_path("loop"), "--suite", "rep", "--samples", "5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["passed"]


def test_quantize_single_word():
    code, out, _ = neck("quantize", "-q", quiver_path("loop"), "--json", "cyc(a)")
    doc = json.loads(out)
    assert code == 0
    (finding,) = doc["findings"]
    assert finding["summary"] == "no cutting pairs; D = 0; delta = 0; identity holds"


def test_quantize_ledger():
    code, out, _ = neck("quantize", "-q", quiver_path("loop"), "--json", "cyc(a,a*)")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["passed"]
    (record,) = doc["result"]["records"]
    (entry,) = record["ledger"]
    assert entry["sign"] == 1 and entry["exponent"] == "1"
    assert entry["term"] == "idem(v) ⊗ idem(v)"
    _, text, _ = neck("quantize", "-q", quiver_path("loop"), "cyc(a,a*)")
    assert "word cyc(a,a*): identity holds; 1 cutting coloring(s)" in text


def test_reduce_trace_lists_rewrites():
    code, out, _ = neck("reduce", "--trace", "-q", quiver_path("loop"), "link([a@2 a*@1])")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "link([a@1 a*@2]) - h*link(idem(v); idem(v))"
    assert json.loads(lines[1])["kind"] == "rewrite"


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "necklace", "verify", "-q", quiver_path("two_vertex"),
           "--suite", "hopf", "--samples", "5", "--seed", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout
