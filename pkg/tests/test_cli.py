import json
import subprocess
import sys
from pathlib import Path

from ternops.cli import main
from ternops.structure import parse_structures

CORPUS = Path(__file__).resolve().parents[1] / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "prop39.alg", "-s", "prop39", "--prop", "right-modular")
    assert code == 0
    assert out.strip() == "right-modular: holds"


def test_check_fails_with_counterexample(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "example2.alg", "-s", "ex2", "--prop", "right-modular")
    assert code == 1
    assert "x,x,y" in out


def test_check_clause_and_json(capsys):
    code, out, _ = run(capsys, "check", f"{CORPUS / 'prop39.alg'}#prop39", "--clause", "x*x = l", "--json")
    assert code == 0
    assert json.loads(out)["results"][0]["holds"] is True


def test_check_pinned_constant(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "prop39.alg", "--prop", "left-identity", "--const", "l=a")
    assert code == 1


def test_check_usage_errors(capsys):
    code, _, err = run(capsys, "check", CORPUS / "prop39.alg")
    assert code == 2 and err
    code, _, err = run(capsys, "check", CORPUS / "prop39.alg", "--prop", "nonsense")
    assert code == 2 and "nonsense" in err
    code, _, err = run(capsys, "check", CORPUS / "missing.alg", "--prop", "medial")
    assert code == 2
    code, _, err = run(capsys, "check", CORPUS / "prop39.alg", "-s", "other", "--prop", "medial")
    assert code == 2
    code, _, err = run(capsys, "check", CORPUS / "prop39.alg", "--clause", "x*(y = y")
    assert code == 2 and "position" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("structure s\nelements a b\nop mul arity 2\na b\nb q\nend\n")
    code, _, err = run(capsys, "classify", bad)
    assert code == 2 and "line 5" in err


def test_check_clifford(tmp_path, capsys):
    z = tmp_path / "z.alg"
    assert run(capsys, "construct", "cyclic-group", "--order", 3, "--out", z)[0] == 0
    code, out, _ = run(capsys, "check", "clifford", z)
    assert code == 0 and "group at 0: 0 1 2" in out
    code, out, _ = run(capsys, "check", "clifford", CORPUS / "example2.alg")
    assert code == 1


def test_classify_sorted(capsys):
    code, out, _ = run(capsys, "classify", CORPUS / "prop2.alg")
    lines = out.split()
    assert code == 0 and lines == sorted(lines) and "right-modular" in lines


def test_iso_example1(tmp_path, capsys):
    pair = tmp_path / "pair.alg"
    run(capsys, "construct", "example1-pair", "--order", 2, "--out", pair)
    a, b = tmp_path / "a.alg", tmp_path / "b.alg"
    run(capsys, "construct", "natural-ternary", f"{pair}#left-zero", "--out", a)
    run(capsys, "construct", "natural-ternary", f"{pair}#left-zero-swapped", "--out", b)
    code, out, _ = run(capsys, "iso", a, b, "--kind", "ternary")
    assert code == 0 and out.strip() == "x1->x1 x2->x2"
    code, out, _ = run(capsys, "iso", a, b, "--kind", "binary")
    assert code == 1 and out.strip() == "none"


def test_construct_standard_ternary(tmp_path, capsys):
    z = tmp_path / "z.alg"
    run(capsys, "construct", "cyclic-group", "--order", 3, "--out", z)
    code, out, _ = run(capsys, "construct", "standard-ternary", z)
    assert code == 0
    assert "# idempotents: 0" in out
    (s,) = parse_structures(out)
    assert s.ops["inv"].entries == (0, 2, 1)
    assert s.eval("t", 1, 1, 2) == 2


def test_construct_reconstruct_roundtrip(tmp_path, capsys):
    nt = tmp_path / "nt.alg"
    run(capsys, "construct", "natural-ternary", CORPUS / "prop39.alg", "--out", nt)
    code, out, _ = run(capsys, "construct", "thm67", nt, "--const", "l=l")
    assert code == 0
    (s,) = parse_structures(out)
    (orig,) = parse_structures((CORPUS / "prop39.alg").read_text())
    assert s.ops["mul"] == orig.ops["mul"]


def test_construct_precondition_error(capsys):
    code, _, err = run(capsys, "construct", "psi", CORPUS / "prop2.alg")
    assert code == 2 and "fails" in err
    code, _, err = run(capsys, "construct", "gamma", CORPUS / "prop2.alg")
    assert code == 2


def test_enumerate(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--order", 3, "--props", "right-modular,left-identity",
                       "--pin", "l=0", "--count-only")
    assert code == 0 and out.strip() == "10"
    dest = tmp_path / "groups.alg"
    code, out, _ = run(capsys, "enumerate", "--order", 4, "--props", "group,two-sided-identity",
                       "--up-to-iso", "--pin", "l=0", "--out", dest)
    assert code == 0
    assert len(parse_structures(dest.read_text())) == 2
    code, out, _ = run(capsys, "enumerate", "--order", 2, "--signature", "ternary",
                       "--clause", "[x x y] = y", "--clause", "[y x x] = y", "--count-only", "--json")
    # the two identities fix six of the eight cells; [0 1 0] and [1 0 1] stay free
    assert json.loads(out)["count"] == 4
    code, _, err = run(capsys, "enumerate", "--order", 2, "--props", "bogus")
    assert code == 2


def test_paper_suite_filter(capsys):
    code, out, _ = run(capsys, "paper-suite", "--filter", "prop39", "--json")
    assert code == 0
    report = json.loads(out)
    assert [r["id"] for r in report] == ["prop39", "prop39-dual", "prop39-heap"]
    assert all(r["status"] == "pass" for r in report)
    code, _, err = run(capsys, "paper-suite", "--filter", "nothing-here")
    assert code == 2 and err


def test_usage_exit_code():
    proc = subprocess.run([sys.executable, "-m", "ternops.cli", "frobnicate"], capture_output=True,
                          text=True)
    assert proc.returncode == 2 and proc.stderr


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ternops.cli", "check", str(CORPUS / "example2.alg"),
                           "--prop", "right-modular"], capture_output=True, text=True)
    assert proc.returncode == 1 and "x,x,y" in proc.stdout
