import json

import pytest

from cactusids.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_transfer(self, capsys):
        code, out, err = run(capsys, "count", "--family", "tri", "--n", "4")
        assert (code, out) == (0, "13\n")

    def test_oracle(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "hex-meta", "--n", "3", "--method", "oracle"
        )
        assert (code, out) == (0, "64\n")

    def test_methods_agree_where_defined(self, capsys):
        values = {}
        for method in ("oracle", "transfer", "recurrence", "gf"):
            code, out, _ = run(
                capsys, "count", "--family", "sq-para", "--n", "5", "--method", method
            )
            assert code == 0
            values[method] = out
        assert len(set(values.values())) == 1

    def test_paper_gf_warns_on_erratum(self, capsys):
        code, out, err = run(
            capsys,
            "count", "--family", "tri", "--n", "3",
            "--method", "gf", "--gf-source", "paper",
        )
        assert code == 0
        assert out == "3\n"
        assert "tri-gf" in err

    def test_printed_recurrence_warns_for_hex_para(self, capsys):
        code, out, err = run(
            capsys,
            "count", "--family", "hex-para", "--n", "4", "--method", "recurrence",
        )
        assert code == 0
        assert out == "311\n"
        assert "hex-para-recurrence" in err

    def test_derived_gf_is_silent(self, capsys):
        code, out, err = run(
            capsys, "count", "--family", "hex-para", "--n", "4", "--method", "gf"
        )
        assert (code, out, err) == (0, "309\n", "")

    def test_defect_count(self, capsys):
        code, out, _ = run(
            capsys,
            "count", "--family", "p-defect", "--m", "1", "--n", "1",
            "--method", "oracle",
        )
        assert (code, out) == (0, "8\n")
        code, out, _ = run(
            capsys,
            "count", "--family", "s-defect", "--m", "1", "--n", "1",
            "--method", "formula",
        )
        assert (code, out) == (0, "6\n")

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "tri", "--n", "4", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc == {"family": "tri", "method": "transfer", "count": 13, "n": 4}

    def test_usage_errors(self, capsys):
        assert run(capsys, "count", "--family", "tri", "--n", "2", "--method", "formula")[0] == 1
        assert run(capsys, "count", "--family", "p-defect", "--n", "2")[0] == 1
        assert run(capsys, "count", "--family", "tri", "--n", "2", "--m", "1")[0] == 1
        assert run(capsys, "count", "--family", "nope", "--n", "1")[0] == 1

    def test_resource_limit_exit_code(self, capsys):
        code, out, err = run(
            capsys, "count", "--family", "hex-para", "--n", "10", "--method", "oracle"
        )
        assert code == 2
        assert "resource limit" in err


class TestSequence:
    def test_csv_exact(self, capsys):
        code, out, _ = run(
            capsys,
            "sequence", "--family", "sq-ortho", "--max-n", "6", "--format", "csv",
        )
        assert code == 0
        assert out == "n,count\n1,2\n2,4\n3,8\n4,16\n5,32\n6,64\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "sequence", "--family", "tri", "--max-n", "3", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["counts"] == [
            {"n": 1, "count": 3},
            {"n": 2, "count": 5},
            {"n": 3, "count": 8},
        ]

    def test_gf_method(self, capsys):
        code, out, _ = run(
            capsys,
            "sequence", "--family", "hex-para", "--max-n", "4", "--method", "gf",
        )
        assert out == "n,count\n1,5\n2,19\n3,76\n4,309\n"


class TestGf:
    def test_published_hex_meta(self, capsys):
        code, out, _ = run(capsys, "gf", "--family", "hex-meta", "--source", "paper")
        assert (code, out) == (0, "(1 - x + 2x^2)/(1 - 3x - x^2 - 2x^3)\n")

    def test_derived_tri(self, capsys):
        code, out, _ = run(capsys, "gf", "--family", "tri")
        assert out == "(3x + 2x^2)/(1 - x - x^2)\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "gf", "--family", "sq-ortho", "--source", "paper", "--format", "json"
        )
        doc = json.loads(out)
        assert doc == {
            "family": "sq-ortho",
            "source": "paper",
            "text": "1/(1 - 2x)",
            "num": [1],
            "den": [1, -2],
        }


class TestBuild:
    def test_edges(self, capsys):
        code, out, _ = run(capsys, "build", "--family", "tri", "--n", "1")
        assert code == 0
        assert out.splitlines() == [
            "# family=tri",
            "# length=1",
            "# vertices=3",
            "0 1",
            "0 2",
            "1 2",
        ]

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "build", "--family", "p-defect", "--m", "1", "--n", "1",
            "--format", "json",
        )
        doc = json.loads(out)
        assert doc["family"] == "p-defect"
        assert doc["n_vertices"] == 10
        assert len(doc["blocks"]) == 3
        assert len(doc["edges"]) == 12


class TestGamma:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "gamma", "--family", "tri", "--max-n", "4")
        assert out == "n,formula,oracle,match\n1,1,1,yes\n2,1,1,yes\n3,2,2,yes\n4,2,2,yes\n"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "gamma", "--family", "hex-ortho", "--max-n", "2", "--format", "json"
        )
        doc = json.loads(out)
        assert doc["rows"] == [
            {"n": 1, "formula_value": 2, "oracle_value": 2, "match": True},
            {"n": 2, "formula_value": 3, "oracle_value": 3, "match": True},
        ]


class TestDefect:
    def test_refuted_table(self, capsys):
        code, out, _ = run(
            capsys, "defect", "--family", "s-defect", "--m", "1", "--n", "1"
        )
        assert code == 0
        lines = out.splitlines()
        assert "formula: 6" in lines
        assert "oracle: 7" in lines
        assert "verdict: refuted" in lines

    def test_confirmed_json(self, capsys):
        code, out, _ = run(
            capsys,
            "defect", "--family", "p-defect", "--m", "2", "--n", "1",
            "--format", "json",
        )
        doc = json.loads(out)
        assert doc["verdict"] == "confirmed"
        assert doc["claimed_value"] == 14
        assert doc["oracle_value"] == 14
        assert doc["witness"] == [2, 1]


@pytest.fixture(scope="module")
def verify_json():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["verify", "--report", "json"])
    return code, buf.getvalue()


class TestVerify:
    def test_exit_code_three_on_errata(self, verify_json):
        code, out = verify_json
        assert code == 3

    def test_report_contents(self, verify_json):
        _, out = verify_json
        doc = json.loads(out)
        assert doc["summary"]["refuted"] == 17
        ids = {c["id"]: c for c in doc["claims"]}
        assert ids["tri-gf"]["verdict"] == "refuted"
        assert ids["hex-meta-gf"]["verdict"] == "refuted"
        assert ids["hex-para-gf"]["verdict"] == "refuted"

    def test_byte_determinism(self, capsys):
        code1, out1, _ = run(capsys, "verify", "--report", "markdown")
        code2, out2, _ = run(capsys, "verify", "--report", "markdown")
        assert code1 == code2 == 3
        assert out1 == out2

    def test_oracle_max_alias(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--report", "json", "--oracle-max", "22"
        )
        assert code == 3
        assert json.loads(out)["oracle_ceiling"] == 22

    def test_ceiling_cap(self, capsys):
        code, _, err = run(capsys, "verify", "--oracle-max-vertices", "90")
        assert code == 2
        assert "hard cap" in err
