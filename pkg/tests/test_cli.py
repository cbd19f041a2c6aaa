import json
import random

import pytest

from canonform.cli import main
from canonform.domain import Ring
from canonform.matrix import format_matrix, mat_q, mat_z, parse_matrix

from conftest import random_matrix

DIRSUM_TEXT = """\
ring Z
rows 4
cols 4
1 2 0 0
2 3 0 0
0 0 3 4
0 0 4 1
"""

ROT90_TEXT = """\
ring Q
rows 2
cols 2
0 -1
1 0
"""


@pytest.fixture
def dirsum(tmp_path):
    path = tmp_path / "dirsum.mtx"
    path.write_text(DIRSUM_TEXT)
    return str(path)


@pytest.fixture
def rot90(tmp_path):
    path = tmp_path / "rot90.mtx"
    path.write_text(ROT90_TEXT)
    return str(path)


def write(tmp_path, name, matrix):
    path = tmp_path / name
    path.write_text(format_matrix(matrix))
    return str(path)


ENVELOPE_KEYS = {"form", "rank", "diag", "transforms", "verified"}


def run_json(capsys, argv):
    code = main(argv)
    report = json.loads(capsys.readouterr().out)
    assert ENVELOPE_KEYS <= set(report)
    return code, report


class TestDet:
    def test_direct_sum_prints_13(self, dirsum, capsys):
        assert main(["det", dirsum]) == 0
        assert capsys.readouterr().out.strip() == "13"

    def test_json_envelope(self, dirsum, capsys):
        code, report = run_json(capsys, ["det", dirsum, "--json"])
        assert code == 0 and report["form"] == "13"


class TestHermite:
    def test_transforms_file(self, dirsum, tmp_path, capsys):
        out = tmp_path / "t.json"
        code = main(["hermite", dirsum, "--canonical", "--verify",
                     "--transforms", str(out)])
        assert code == 0
        assert "verified true" in capsys.readouterr().out
        payload = json.loads(out.read_text())
        assert set(payload) == {"Q", "H", "rank", "primary_cols"}
        assert payload["rank"] == 4

    def test_replay_matches_library(self, tmp_path, capsys):
        rng = random.Random(317)
        a = random_matrix(rng, Ring.Z, 3, 4)
        path = write(tmp_path, "a.mtx", a)
        code, report = run_json(capsys, ["hermite", path, "--canonical",
                                         "--verify", "--json"])
        assert code == 0 and report["verified"] is True
        q = parse_matrix("ring Z\nrows 3\ncols 3\n" + "\n".join(
            " ".join(row) for row in report["transforms"]["Q"]) + "\n")
        h = parse_matrix("ring Z\nrows 3\ncols 4\n" + "\n".join(
            " ".join(row) for row in report["transforms"]["H"]) + "\n")
        assert q @ a == h


class TestSmith:
    def test_zero_matrix(self, tmp_path, capsys):
        path = write(tmp_path, "zero.mtx", mat_z([[0, 0], [0, 0]]))
        code, report = run_json(capsys, ["smith", path, "--json"])
        assert code == 0
        assert report["rank"] == 0 and report["diag"] == []

    def test_prints_chain_and_rank(self, dirsum, capsys):
        assert main(["smith", dirsum, "--verify"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "1 1 1 13"
        assert "rank 4" in out and "verified true" in out

    def test_transforms_replay(self, tmp_path, capsys):
        rng = random.Random(331)
        a = random_matrix(rng, Ring.Z, 3, 3)
        path = write(tmp_path, "a.mtx", a)
        out = tmp_path / "pq.json"
        assert main(["smith", path, "--transforms", str(out), "--verify"]) == 0
        payload = json.loads(out.read_text())

        def reparse(rows):
            m, n = len(rows), len(rows[0])
            body = "\n".join(" ".join(r) for r in rows)
            return parse_matrix(f"ring Z\nrows {m}\ncols {n}\n{body}\n")

        p, q, d = (reparse(payload[k]) for k in ("P", "Q", "D"))
        assert p @ a @ q == d


class TestInvariants:
    def test_report_lines(self, dirsum, capsys):
        assert main(["invariants", dirsum]) == 0
        out = capsys.readouterr().out
        assert "rank 4" in out
        assert "det_divisors 1 1 1 1 13" in out
        assert "invariant_factors 1 1 1 13" in out
        assert "elementary_divisors 13" in out


class TestSimilarityVerbs:
    def test_jordan_rejects_rotation_naming_the_prime(self, rot90, capsys):
        assert main(["jordan", rot90]) == 1
        assert "x^2+1" in capsys.readouterr().err

    def test_jordan_emits_certificate(self, tmp_path, capsys):
        path = write(tmp_path, "n.mtx", mat_q([[0, 1], [0, 0]]))
        code, report = run_json(capsys, ["jordan", path, "--json"])
        assert code == 0 and report["verified"] is True
        assert report["form"] == [["0", "1"], ["0", "0"]]

    def test_rcf(self, rot90, capsys):
        code, report = run_json(capsys, ["rcf", rot90, "--json"])
        assert code == 0 and report["verified"] is True
        assert report["form"] == [["0", "1"], ["-1", "0"]]

    def test_similar_pair(self, tmp_path, capsys):
        a = write(tmp_path, "a.mtx", mat_q([[1, 1], [0, 1]]))
        b = write(tmp_path, "b.mtx", mat_q([[1, 0], [1, 1]]))
        code, report = run_json(capsys, ["similar", a, b, "--json"])
        assert code == 0 and report["similar"] is True and report["verified"] is True

    def test_not_similar(self, tmp_path, capsys):
        a = write(tmp_path, "a.mtx", mat_q([[1, 0], [0, 1]]))
        b = write(tmp_path, "b.mtx", mat_q([[1, 1], [0, 1]]))
        assert main(["similar", a, b]) == 0
        assert "not similar" in capsys.readouterr().out

    def test_minpoly_charpoly(self, tmp_path, capsys):
        path = write(tmp_path, "j.mtx", mat_q([[1, 1], [0, 1]]))
        assert main(["minpoly", path]) == 0
        assert capsys.readouterr().out.strip() == "x^2-2*x+1"
        assert main(["charpoly", path]) == 0
        assert capsys.readouterr().out.strip() == "x^2-2*x+1"


class TestSolve:
    def test_solve_reports_solution(self, tmp_path, capsys):
        a = write(tmp_path, "a.mtx", mat_q([[1, 1], [0, 1]]))
        y = write(tmp_path, "y.mtx", mat_q([[3], [1]]))
        code, report = run_json(capsys, ["solve", a, y, "--json"])
        assert code == 0
        assert report["form"] == [["2"], ["1"]]
        assert report["nullity"] == 0

    def test_inconsistent(self, tmp_path, capsys):
        a = write(tmp_path, "a.mtx", mat_z([[1], [1]]))
        y = write(tmp_path, "y.mtx", mat_z([[1], [2]]))
        assert main(["solve", a, y]) == 0
        assert "inconsistent" in capsys.readouterr().out


class TestPerm:
    def test_analysis(self, capsys):
        assert main(["perm", "4,2,1,3"]) == 0
        out = capsys.readouterr().out
        assert "cycles (1,4,3)(2)" in out
        assert "index 2" in out
        assert "sign +1" in out

    def test_bad_input_is_parse_error(self, capsys):
        assert main(["perm", "1,1,2"]) == 2


class TestExitCodes:
    def test_parse_error_is_2(self, tmp_path, capsys):
        path = tmp_path / "bad.mtx"
        path.write_text("ring Z\nrows 0\ncols 1\n")
        assert main(["det", str(path)]) == 2

    def test_missing_file_is_2(self, capsys):
        assert main(["det", "/nonexistent/file.mtx"]) == 2

    def test_domain_error_is_1(self, tmp_path, capsys):
        path = write(tmp_path, "wide.mtx", mat_z([[1, 2]]))
        assert main(["det", str(path)]) == 1  # NotSquare

    def test_factorization_incomplete_is_1(self, tmp_path, capsys):
        # companion of x^3 - 2: irreducible cubic elementary divisor
        from canonform.domain import polynomial
        from canonform.similarity import companion
        path = write(tmp_path, "c.mtx", companion(polynomial([-2, 0, 0, 1])))
        assert main(["rcf", str(path)]) == 1
