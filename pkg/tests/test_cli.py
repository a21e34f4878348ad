import json
import shutil
import subprocess

import pytest

from matorder.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompare:
    def test_eq_for_every_order(self, capsys, files):
        a = files("a.txt", "rat 2 2\n2 1\n1 2\n")
        for order in ("left-star", "right-star", "loewner", "conrad", "identity", "entrywise"):
            code, out, _ = run(capsys, "compare", a, a, "--order", order)
            assert (code, out.split()[0]) == (0, "EQ"), order

    def test_zero_below_psd_loewner(self, capsys, files):
        z = files("z.txt", "cf64 2 2\n0 0\n0 0\n")
        p = files("p.txt", "cf64 2 2\n2 1\n1 2\n")
        code, out, _ = run(capsys, "compare", z, p, "--order", "loewner")
        lines = out.splitlines()
        assert code == 0 and lines[0].startswith("# tolerances: eps_eq=1e-09")
        assert lines[1] == "LEQ" and "min eigenvalue" in out

    def test_left_star_example(self, capsys, files):
        d = files("d.txt", "gauss 2 2\n1 0\n0 0\n")
        i = files("i.txt", "gauss 2 2\n1 0\n0 1\n")
        code, out, _ = run(capsys, "compare", d, i, "--order", "left-star")
        assert code == 0 and out.splitlines()[0] == "LEQ"
        code, out, _ = run(capsys, "compare", i, d, "--order", "left-star")
        assert code == 0 and out.splitlines()[0] == "GEQ"

    def test_incomparable_conrad_with_unit(self, capsys, files):
        d = files("d.txt", "mod:2 2 2\n1 0\n0 0\n")
        i = files("i.txt", "mod:2 2 2\n1 0\n0 1\n")
        code, out, _ = run(capsys, "compare", d, i, "--order", "conrad")
        assert code == 1 and out.startswith("INCOMPARABLE") and "S=E_12" in out

    def test_json(self, capsys, files):
        d = files("d.txt", "rat 1 1\n1\n")
        e = files("e.txt", "rat 1 1\n2\n")
        code, out, _ = run(capsys, "compare", d, e, "--order", "loewner", "--json", "--seed", "3")
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "LEQ" and data["seed"] == 3
        assert set(data) >= {"verdict", "witnesses", "counts", "tolerances", "seed"}

    def test_input_errors(self, capsys, files):
        a = files("a.txt", "rat 1 1\nx\n")
        b = files("b.txt", "int 1 1\n1\n")
        code, _, err = run(capsys, "compare", a, b, "--order", "conrad")
        assert code == 2 and "a.txt:2:1" in err
        code, _, err = run(capsys, "compare", files("c.txt", "mod:3 1 1\n1\n"), b, "--order", "loewner")
        assert code == 2
        code, _, _ = run(capsys, "compare", b, b, "--order", "nope")
        assert code == 2
        code, _, _ = run(capsys, "compare", b, b, "--order", "conrad", "--bogus")
        assert code == 2


class TestSemigroupCommands:
    def test_check_axioms_conrad_m2z2(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--gen", "mat:2:2:conv", "--order", "conrad")
        assert code == 0 and out.count("PASS") == 4

    def test_check_axioms_null(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--gen", "null:2", "--order", "conrad")
        assert code == 1
        line = next(l for l in out.splitlines() if l.startswith("antisymmetric"))
        assert "FAIL" in line and "witness" in line

    def test_check_axioms_identity(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--gen", "mat:2:2:conv", "--order", "identity")
        assert code == 0 and out.count("PASS") == 4

    def test_check_axioms_file_and_json(self, capsys, files):
        f = files("s.txt", "2\n0 0\n0 0\n")
        code, out, _ = run(capsys, "check-axioms", "--file", f, "--json")
        data = json.loads(out)
        assert code == 1 and data["verdict"] is False
        assert data["witnesses"]["antisymmetric"] == [0, 1]

    def test_source_required(self, capsys):
        assert run(capsys, "check-axioms")[0] == 2
        assert run(capsys, "check-axioms", "--gen", "null:2", "--file", "x")[0] == 2
        assert run(capsys, "check-axioms", "--gen", "bogus:1")[0] == 2

    def test_survey(self, capsys):
        code, out, _ = run(capsys, "survey", "--gen", "tfull:3", "--json")
        data = json.loads(out)["counts"]
        assert code == 0 and data["elements"] == 27 and data["regular"] and data["weakly_separative"]

    def test_hasse(self, capsys, tmp_path):
        code, out, _ = run(capsys, "hasse", "--gen", "mat:2:2:conv")
        assert code == 0 and out.startswith("digraph hasse {") and out.count("->") == 15
        target = tmp_path / "h.dot"
        code, _, _ = run(capsys, "hasse", "--gen", "mat:2:2:conv", "--out", str(target))
        assert code == 0 and target.read_text() == out
        code, _, err = run(capsys, "hasse", "--gen", "null:2")
        assert code == 1 and "antisymmetric=FAIL" in err

    def test_deterministic(self, capsys):
        a = run(capsys, "hasse", "--gen", "tfull:3")
        b = run(capsys, "hasse", "--gen", "tfull:3")
        assert a == b


class TestOracleDiff:
    @pytest.mark.parametrize("target,extra", [
        ("conrad", ["--pairs", "100"]), ("conrad", ["--product", "hadamard", "--m", "5", "--pairs", "100"]),
        ("pinv", ["--n", "3", "--pairs", "10"]), ("p1", ["--pairs", "10"]), ("kernels", []),
    ])
    def test_targets(self, capsys, target, extra):
        code, out, _ = run(capsys, "oracle-diff", target, *extra)
        assert code == 0 and "0 disagreements" in out


class TestReproduce:
    def test_entrywise(self, capsys):
        code, out, _ = run(capsys, "reproduce", "entrywise")
        assert code == 0 and out.rstrip().endswith("PASS") and "counterexample" in out and "CA=" in out

    def test_schur(self, capsys):
        code, out, _ = run(capsys, "reproduce", "schur")
        assert code == 0 and out.rstrip().endswith("PASS")

    def test_conrad_order_counts(self, capsys):
        code, out, _ = run(capsys, "reproduce", "conrad-order", "--json")
        data = json.loads(out)
        assert code == 0 and data["verdict"] is True
        assert data["suites"][0]["counts"]["z5_conventional_pairs"] == 500

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "reproduce", "riemann")
        assert code == 2 and "unknown lemma id" in err

    @pytest.mark.parametrize("lemma", ["weak-sep", "loewner-order", "p1", "s-invariant"])
    def test_passing_catalog(self, capsys, lemma):
        assert run(capsys, "reproduce", lemma)[0] == 0

    def test_star_order_reports_failure(self, capsys):
        code, out, _ = run(capsys, "reproduce", "star-order")
        assert code == 1 and "[FAIL] compatibility" in out


def test_no_subcommand_is_usage_error(capsys):
    assert run(capsys)[0] == 2


@pytest.mark.skipif(shutil.which("matorder") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["matorder", "check-axioms", "--gen", "null:2"], capture_output=True, text=True)
    assert out.returncode == 1 and "antisymmetric  FAIL" in out.stdout
