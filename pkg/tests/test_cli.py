import io

import pytest

from reidemeister.cli import main, parse_auto, parse_group
from reidemeister.groups import reidemeister_semidirect
from reidemeister.matrices import parse_matrix


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def doc(tmp_path):
    counter = iter(range(1000))

    def write(text):
        path = tmp_path / f"doc{next(counter)}.txt"
        path.write_text(text)
        return str(path)

    return write


def test_rnum(doc):
    g = doc("# scalar group\nring: Z[1/3]\nn: 1\ntheta: -1\n")
    assert run(["rnum", g, doc("N: 3\neps: -1\n")]) == (0, "R = 6 (= 2 + 4)\n")
    assert run(["rnum", g, doc("N: 3\neps: +1\n")]) == (0, "R = inf\n")
    assert run(["rnum", g, doc("N: 3\neps: -1\n"), "--format", "lines"]) == (0, "R 6\nPARTS 2 4\n")
    g1 = doc("ring: Z[1/p]\np: 3\ntheta: 1\n")
    assert run(["rnum", g1, doc("N: 1\neps: -1\nz: 5\n")])[1] == "R = inf (= inf + inf)\n"


def test_exit_codes(doc, capsys):
    g = doc("ring: Q\ntheta: 2,0;0,3\n")
    assert run(["rnum", g, doc("N: 1,0;0,1\neps: -1\n")])[0] == 3
    assert run(["rnum", g, doc("N: 1\neps: -1\n")])[0] == 2
    assert run(["rnum", g, doc("N: 1,0;0,1\neps: 2\n")])[0] == 2
    assert run(["rnum", doc("ring: Z[1/2]\ntheta: 0,3;1,0\n"), doc("N: 1\neps: 1\n")])[0] == 2
    assert run(["classify", doc("ring: Q\nn: 3\ntheta: 1\n")])[0] == 2
    assert run(["classify", doc("ring: Q\ntheta 1\n")])[0] == 2
    assert run(["classify", "/nonexistent/file"])[0] == 2
    assert run(["spectrum", doc("ring: Z[1/2]\ntheta: 1,1;0,1\n")])[0] == 4
    assert run(["spectrum", doc("ring: Z[1/3]\ntheta: 1\n"), "--bound", "2"])[0] == 5
    assert "general theta requires explicit search bound" in capsys.readouterr().err


def test_spectrum_output(doc):
    code, out = run(["spectrum", doc("ring: Q\ntheta: 2,0;0,3\n"), "--format", "lines"])
    assert (code, out) == (0, "SPEC inf\nCLOSED-FORM EX1 MATCH variant=stated set={}\n")
    code, out = run(["spectrum", doc("ring: Q\ntheta: 2,0;0,1/2\n"), "--format", "lines"])
    assert out.splitlines()[:2] == ["SPEC 2 WITNESS 0,1;2,0", "SPEC inf"]
    code, out = run(["spectrum", doc("ring: Z[1/2]\ntheta: 0,1;1,0\n"), "--bound", "3"])
    assert code == 0 and "CLOSED-FORM P3.6a MATCH" in out


def test_spectrum_witnesses_round_trip(doc):
    text = "ring: Z[1/3]\ntheta: 0,1;1,0\n"
    group = parse_group(text)
    code, out = run(["spectrum", doc(text), "--bound", "2", "--value-cap", "300", "--format", "lines"])
    assert code == 5
    values = 0
    for line in out.splitlines():
        if line.startswith("SPEC ") and "WITNESS" in line:
            _, k, _, n_text = line.split()
            auto = parse_auto(f"N: {n_text}\neps: -1\n", group)
            assert str(reidemeister_semidirect(group, auto).total) == k
            values += 1
    assert values > 5


def test_output_is_deterministic(doc):
    g = doc("ring: Z[1/2]\ntheta: 1,0;0,-1\n")
    assert run(["spectrum", g, "--bound", "2"]) == run(["spectrum", g, "--bound", "2"])


def test_classify(doc):
    code, out = run(["classify", doc("ring: Q\ntheta: 2,0,0;0,3,0;0,0,5\n")])
    assert "R-infinity: yes (centralizer space trivial)" in out
    code, out = run(["classify", doc("ring: Q\ntheta: 1\n")])
    assert "case P3.1a, Spec = {2} u {inf}" in out
    code, out = run(["classify", doc("ring: Z[1/2]\ntheta: 0,4;1,0\n")])
    assert "case P3.6c, Spec = {inf}" in out
    code, out = run(["classify", doc("ring: Z[1/2]\ntheta: 1,0;0,-1\n")])
    assert "case P3.5b" in out and "R-infinity: no" in out
    code, out = run(["classify", doc("ring: Z[1/2]\ntheta: 1,1;0,1\n")])
    assert "R-infinity: undecided" in out


def test_oracle_command():
    assert run(["oracle", "1/2,0;0,3", "--ring", "Z[1/2]"]) == (
        0, "formula 3\ncleared p^1 * M, Smith diagonal 1,6\noracle 3\nagree yes\n")
    assert run(["oracle", "2,4;6,8", "--ring", "Z"])[1].splitlines()[-1] == "agree yes"
    assert run(["oracle", "1,1;1,1"])[1].startswith("formula inf")
    assert run(["oracle", "1/3", "--ring", "Z[1/2]"])[0] == 2


def test_verify_command():
    code, out = run(["verify", "--bound", "1", "--value-cap", "60"])
    assert code == 0
    assert "P2.5a PASS" in out and "P3.1b[r=1] DISCREPANCY" in out
    assert out.splitlines()[-1].endswith("documented discrepancies")


def test_parse_matrix_helper():
    assert parse_matrix("3").rows == 1
