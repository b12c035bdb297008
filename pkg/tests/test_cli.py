"""CLI behaviour: golden rendering, exit codes, structured round-trips."""

import json
from pathlib import Path

import pytest

from symtrace import cli
from symtrace.matrices import ExactMatrix, matrix_to_json

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestJpoly:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_golden_files(self, capsys, k):
        code, out, _ = run(capsys, "jpoly", str(k))
        assert code == 0
        assert out == (GOLDEN / f"j{k}.txt").read_text()

    def test_plus_variant(self, capsys):
        code, out, _ = run(capsys, "jpoly", "4", "--plus")
        assert code == 0
        assert out.strip() == "x1^4 + 6*x1^2*x2 + 8*x1*x3 + 3*x2^2 + 6*x4"

    def test_closed_form_same_output(self, capsys):
        _, iterative, _ = run(capsys, "jpoly", "6")
        _, closed, _ = run(capsys, "jpoly", "6", "--closed")
        assert iterative == closed

    def test_check_mode(self, capsys):
        code, out, _ = run(capsys, "jpoly", "7", "--check")
        assert code == 0
        assert "agree" in out

    def test_check_mode_plus(self, capsys):
        code, out, _ = run(capsys, "jpoly", "6", "--plus", "--check")
        assert code == 0
        assert "agree" in out

    def test_usage_error_on_bad_k(self, capsys):
        code, _, _ = run(capsys, "jpoly", "0")
        assert code == 2

    def test_structured_roundtrip(self, capsys):
        code, out, _ = run(capsys, "--format", "structured", "jpoly", "3")
        assert code == 0
        doc = json.loads(out)
        assert json.loads(json.dumps(doc)) == doc
        assert doc["polynomial"]["text"] == "x1^3 - 3*x1*x2 + 2*x3"
        assert doc["polynomial"]["terms"][0] == {
            "monomial": [[1, 3]], "coefficient": "1"}
        # strings/ints/arrays/objects only - no floats anywhere
        def no_floats(node):
            if isinstance(node, dict):
                return all(no_floats(v) for v in node.values())
            if isinstance(node, list):
                return all(no_floats(v) for v in node)
            return not isinstance(node, float)
        assert no_floats(doc)


class TestClasses:
    def test_s3_sizes(self, capsys):
        code, out, _ = run(capsys, "classes", "3")
        assert code == 0
        assert "total = 6" in out

    def test_s1(self, capsys):
        code, out, _ = run(capsys, "classes", "1")
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("  ")]
        assert len(rows) == 1 and rows[0].endswith("1")

    def test_s10_contains_example_row(self, capsys):
        code, out, _ = run(capsys, "--format", "structured", "classes", "10")
        assert code == 0
        doc = json.loads(out)
        match = [r for r in doc["rows"]
                 if r["symbol"] == [3, 0, 1, 1, 0, 0, 0, 0, 0, 0]]
        assert match and match[0]["size"] == 50400

    def test_verify_small(self, capsys):
        code, out, _ = run(capsys, "classes", "5", "--verify")
        assert code == 0
        assert "MISMATCH" not in out

    def test_verify_budget(self, capsys):
        code, _, err = run(capsys, "classes", "12", "--verify")
        assert code == 3
        assert "error" in err


class TestInvariants:
    def write(self, tmp_path, matrix):
        path = tmp_path / "m.json"
        path.write_text(matrix_to_json(matrix))
        return str(path)

    def test_identity(self, capsys, tmp_path):
        path = self.write(tmp_path, ExactMatrix.identity(3))
        code, out, _ = run(capsys, "invariants", path)
        assert code == 0
        assert "I: 3 3 3" in out
        assert "3 3 1" in out
        assert out.strip().endswith("verdict: agree")

    def test_diag(self, capsys, tmp_path):
        path = self.write(tmp_path, ExactMatrix.diagonal([1, 2, 3]))
        code, out, _ = run(capsys, "--format", "structured", "invariants", path)
        assert code == 0
        doc = json.loads(out)
        assert doc["prodeterminants"]["minors"] == ["6", "11", "6"]
        assert doc["verdict"] == "agree"

    def test_method_subset(self, capsys, tmp_path):
        path = self.write(tmp_path, ExactMatrix.diagonal([2, 5]))
        code, out, _ = run(capsys, "invariants", path, "--methods", "minors,cauchy")
        assert code == 0
        assert "leverrier" not in out

    def test_unknown_method(self, capsys, tmp_path):
        path = self.write(tmp_path, ExactMatrix.identity(2))
        code, _, err = run(capsys, "invariants", path, "--methods", "magic")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "invariants", "/nonexistent/m.json")
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "entries": [[1.5, 0], [0, 1]]}')
        code, _, err = run(capsys, "invariants", str(path))
        assert code == 2

    def test_disagreement_reports_and_fails(self, capsys, tmp_path, monkeypatch):
        # force a wrong value through one method to exercise the diff path
        monkeypatch.setitem(cli.METHODS, "cauchy", lambda a, k: 999)
        path = self.write(tmp_path, ExactMatrix.identity(2))
        code, out, _ = run(capsys, "invariants", path)
        assert code == 1
        assert "DISAGREE" in out and "diff at k=1" in out


class TestConvert:
    def test_elementary(self, capsys):
        code, out, _ = run(capsys, "convert", "--to", "elementary", "2", "6", "14")
        assert (code, out.strip()) == (0, "11")

    def test_wronski_degree1(self, capsys):
        code, out, _ = run(capsys, "convert", "--to", "wronski", "1", "6")
        assert (code, out.strip()) == (0, "6")

    def test_wronski_degree2(self, capsys):
        code, out, _ = run(capsys, "convert", "--to", "wronski", "2", "6", "14")
        assert (code, out.strip()) == (0, "25")

    def test_rational_inputs(self, capsys):
        # "--" keeps argparse from reading the negative rational as a flag
        code, out, _ = run(capsys, "convert", "--to", "elementary", "--", "2", "1/2", "-3/4")
        assert code == 0
        # (s1^2 - s2)/2 = (1/4 + 3/4)/2
        assert out.strip() == "1/2"

    def test_wrong_value_count(self, capsys):
        code, _, err = run(capsys, "convert", "--to", "elementary", "3", "6", "14")
        assert code == 2

    def test_bad_rational(self, capsys):
        code, _, err = run(capsys, "convert", "--to", "elementary", "1", "1.5")
        assert code == 2


class TestBench:
    def test_methods_table_shape(self, capsys):
        code, out, _ = run(capsys, "bench", "--nmax", "4", "--kmax", "4", "--repeats", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "method,n,k,repeats,seconds,value"
        methods = {line.split(",")[0] for line in lines[1:]}
        assert methods == {"minors", "leverrier", "cauchy", "antisym"}

    def test_antisym_skip_marker(self, capsys, monkeypatch):
        # tighten the budget so the guard trips at modest sizes
        monkeypatch.setattr(cli, "ANTISYM_BUDGET", 10**3)
        code, out, _ = run(capsys, "--format", "structured", "bench",
                           "--nmax", "4", "--kmax", "4", "--repeats", "1")
        assert code == 0
        doc = json.loads(out)
        skipped = [r for r in doc["rows"] if r["value"] == "skipped"]
        assert skipped and all(r["method"] == "antisym" for r in skipped)

    def test_same_seed_same_values(self, capsys):
        _, out1, _ = run(capsys, "--seed", "42", "bench", "--nmax", "3", "--repeats", "1")
        _, out2, _ = run(capsys, "--seed", "42", "bench", "--nmax", "3", "--repeats", "1")
        strip = lambda text: [line.split(",")[:3] + line.split(",")[5:]
                              for line in text.splitlines()]
        assert strip(out1) == strip(out2)

    def test_backend_comparison(self, capsys):
        code, out, _ = run(capsys, "--format", "structured", "bench",
                           "--what", "backends", "--nmax", "4", "--repeats", "1")
        assert code == 0
        doc = json.loads(out)
        backends = {r["backend"] for r in doc["rows"]}
        assert "python" in backends
        values = {r["value"] for r in doc["rows"] if r["kernel"] == "antisym"}
        assert len(values) == 1  # all backends agree on the invariant


class TestVerify:
    def test_full_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--all", "--max-k", "5", "--max-n", "3")
        assert code == 0
        assert out.strip().endswith("overall: pass")

    def test_subset(self, capsys):
        code, out, _ = run(capsys, "--format", "structured", "verify",
                           "--checks", "polynomials,lax", "--max-k", "4", "--max-n", "3")
        assert code == 0
        doc = json.loads(out)
        assert [c["name"] for c in doc["checks"]] == ["polynomials", "lax"]
        assert doc["verdict"] == "pass"

    def test_unknown_check(self, capsys):
        code, _, err = run(capsys, "verify", "--checks", "nope")
        assert code == 2


class TestParser:
    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0

    def test_no_command_is_usage_error(self, capsys):
        assert cli.main([]) == 2

    def test_unknown_command(self, capsys):
        assert cli.main(["frobnicate"]) == 2
