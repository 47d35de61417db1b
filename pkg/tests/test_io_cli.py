"""JSON round trips and the command-line interface.

CLI tests invoke main() in-process and parse stdout, asserting on the
documented exit codes: 0 success, 1 domain error, 2 parse/usage error.
"""

import json
import math

import pytest

import tenprod as tp
import tenprod.io as tio
from tenprod import DenseTensor, UniformHypergraph, rational
from tenprod.cli import main


class TestTensorJson:
    def test_exact_round_trip(self):
        t = DenseTensor(3, 2, (0, 1, rational(1, 2), -3,
                               rational(-7, 3), 2, 0, rational(9, 1)))
        doc = tio.tensor_to_json(t)
        back = tio.tensor_from_json(doc)
        assert back.entries == t.entries
        assert back.is_exact()

    def test_integral_rationals_serialize_as_ints(self):
        t = DenseTensor(1, 2, (rational(4, 2), 3))
        doc = tio.tensor_to_json(t)
        assert doc["entries"] == [2, 3]

    def test_float_round_trip(self):
        t = DenseTensor(2, 2, (0.5, -1.25, 3.0, 0.0))
        back = tio.tensor_from_json(tio.tensor_to_json(t), mode="float")
        assert back.entries == t.entries

    def test_sparse_form(self):
        doc = {"order": 3, "dim": 2, "sparse": [[[1, 2, 2], 1], [[2, 1, 1], "1/2"]]}
        t = tio.tensor_from_json(doc)
        assert t.get(1, 2, 2) == 1
        assert t.get(2, 1, 1) == rational(1, 2)
        assert sum(1 for v in t.entries if v != 0) == 2

    def test_exact_mode_rejects_non_integral_float(self):
        doc = {"order": 1, "dim": 2, "entries": [0.5, 1]}
        with pytest.raises(ValueError):
            tio.tensor_from_json(doc)
        # integral floats are fine
        t = tio.tensor_from_json({"order": 1, "dim": 2, "entries": [2.0, 1]})
        assert t.entries == (2, 1)

    def test_wrong_entry_count(self):
        with pytest.raises(ValueError):
            tio.tensor_from_json({"order": 2, "dim": 2, "entries": [1, 2, 3]})

    def test_vector_from_bare_array(self):
        v = tio.vector_from_json(["1/3", 2])
        assert v.order == 1 and v.entries == (rational(1, 3), 2)


def test_hypergraph_round_trip():
    h = UniformHypergraph(4, 3, ((1, 2, 3), (2, 3, 4)))
    back = tio.hypergraph_from_json(tio.hypergraph_to_json(h))
    assert back == h


def test_polynomial_and_roots_serialization():
    p = tp.poly(1, 0, rational(-1, 2))
    doc = tio.polynomial_to_json(p)
    assert doc == {"degree": 2, "coeffs": [1, 0, "-1/2"]}
    out = tio.roots_to_json((complex(1, 2), complex(-1, 0)))
    assert out == [[1.0, 2.0], [-1.0, 0.0]]


def test_dumps_is_deterministic():
    assert tio.dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCli:
    def test_product(self, files, capsys):
        a = files("a.json", {"order": 2, "dim": 2, "entries": [1, 2, 3, 4]})
        code, out = run_cli(capsys, "product", a, a)
        assert code == 0
        doc = json.loads(out)
        assert doc["entries"] == [7, 10, 15, 22]

    def test_apply_and_mode(self, files, capsys):
        a = files("a.json", {"order": 3, "dim": 2, "entries": [1, 0, 0, 1, 0, 1, 1, 0]})
        x = files("x.json", ["1/2", 1])
        code, out = run_cli(capsys, "apply", a, x)
        assert code == 0
        assert json.loads(out)["entries"] == ["5/4", 1]
        code, out = run_cli(capsys, "apply", a, x, "--mode", "float")
        assert code == 0
        assert json.loads(out)["entries"] == [1.25, 1.0]

    def test_power(self, files, capsys):
        a = files("a.json", {"order": 2, "dim": 2, "entries": [1, 1, 0, 1]})
        code, out = run_cli(capsys, "power", a, "3")
        assert code == 0
        assert json.loads(out)["entries"] == [1, 3, 0, 1]

    def test_kron(self, files, capsys):
        a = files("a.json", {"order": 2, "dim": 2, "entries": [1, 1, 0, 1]})
        code, out = run_cli(capsys, "kron", a, a)
        assert code == 0
        assert json.loads(out)["dim"] == 4

    def test_charpoly_known_values(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2,
                             "sparse": [[[1, 2, 2], 1], [[2, 1, 1], 1]]})
        code, out = run_cli(capsys, "charpoly", t)
        assert code == 0
        doc = json.loads(out)
        assert doc["degree"] == 4
        assert doc["coeffs"] == [1, 0, -2, 0, 1]
        roots = [complex(re, im) for re, im in doc["roots"]]
        assert all(min(abs(r - 1), abs(r + 1)) < 1e-8 for r in roots)

    def test_spectrum(self, files, capsys):
        t = files("t.json", {"order": 2, "dim": 2, "entries": [0, 1, 1, 0]})
        code, out = run_cli(capsys, "spectrum", t)
        assert code == 0
        assert json.loads(out)["rho"] == pytest.approx(1.0, abs=1e-8)

    def test_rho_deterministic_and_seeded(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2,
                             "entries": [4, 1, 1, 2, 2, 1, 1, 3]})
        code, out1 = run_cli(capsys, "rho", t)
        assert code == 0
        code, out2 = run_cli(capsys, "rho", t)
        assert out1 == out2
        doc = json.loads(out1)
        assert set(doc) == {"rho", "bracket", "iterations", "residual"}
        code, out3 = run_cli(capsys, "rho", t, "--seed", "5")
        assert code == 0
        assert json.loads(out3)["rho"] == pytest.approx(doc["rho"], abs=1e-8)

    def test_rho_out_file_includes_vector(self, files, capsys, tmp_path):
        t = files("t.json", {"order": 3, "dim": 2,
                             "entries": [4, 1, 1, 2, 2, 1, 1, 3]})
        dest = tmp_path / "res.json"
        code, _ = run_cli(capsys, "rho", t, "--out", str(dest))
        assert code == 0
        saved = json.loads(dest.read_text())
        assert "u" in saved and len(saved["u"]) == 2

    def test_similar_requires_exactly_one_transform(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2, "entries": [1, 0, 0, 1, 0, 1, 1, 0]})
        with pytest.raises(SystemExit):
            main(["similar", t])

    def test_similar_diag_round_trip(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2, "entries": [1, 0, 0, 1, 0, 1, 1, 0]})
        d = files("d.json", ["3/2", 2])
        dinv = files("dinv.json", ["2/3", "1/2"])
        code, out = run_cli(capsys, "similar", t, "--diag", d)
        assert code == 0
        mid = files("mid.json", json.loads(out))
        code, out = run_cli(capsys, "similar", mid, "--diag", dinv)
        assert json.loads(out)["entries"] == [1, 0, 0, 1, 0, 1, 1, 0]

    def test_similar_perm(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2, "entries": [1, 0, 0, 1, 0, 1, 1, 0]})
        p = files("p.json", [2, 1])
        code, out = run_cli(capsys, "similar", t, "--perm", p)
        assert code == 0
        # conjugating twice by the swap returns the original
        mid = files("mid.json", json.loads(out))
        code, out = run_cli(capsys, "similar", mid, "--perm", p)
        assert json.loads(out)["entries"] == [1, 0, 0, 1, 0, 1, 1, 0]

    def test_congruent(self, files, capsys):
        t = files("t.json", {"order": 2, "dim": 2, "entries": [1, 0, 0, 1]})
        p = files("p.json", {"order": 2, "dim": 2, "entries": [1, 1, 0, 1]})
        code, out = run_cli(capsys, "congruent", t, p)
        assert code == 0
        assert json.loads(out)["entries"] == [2, 1, 1, 1]

    def test_hgraph_flow(self, files, capsys):
        g = files("g.json", {"n": 3, "k": 3, "edges": [[1, 2, 3]]})
        h = files("h.json", {"n": 4, "k": 3,
                             "edges": [[1, 2, 3], [1, 2, 4], [2, 3, 4]]})
        code, out = run_cli(capsys, "hgraph", "adj", g)
        assert code == 0
        assert json.loads(out)["dim"] == 3
        code, out = run_cli(capsys, "hgraph", "cartesian", g, h)
        assert code == 0
        assert json.loads(out)["n"] == 12
        code, out = run_cli(capsys, "hgraph", "direct", g, h)
        assert code == 0
        assert json.loads(out)["n"] == 12
        code, out = run_cli(capsys, "hgraph", "spectrum-check", g, h)
        assert code == 0
        doc = json.loads(out)
        assert doc["verified"] is True
        assert doc["sum_value"] == pytest.approx(doc["lambda"] + doc["mu"])
        assert doc["product_value"] == pytest.approx(doc["lambda"] * doc["mu"])

    def test_analyze(self, files, capsys):
        t = files("t.json", {"order": 3, "dim": 2,
                             "sparse": [[[1, 2, 2], 1], [[2, 1, 1], 1]]})
        code, out = run_cli(capsys, "analyze", t)
        assert code == 0
        doc = json.loads(out)
        assert doc["irreducible"] is True
        assert doc["primitive"] is False
        assert doc["majorization"]["cyclic_index"] == 2

    def test_census_stream_and_out(self, capsys, tmp_path):
        code, out = run_cli(capsys, "census", "--order", "2", "--dim", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 17
        assert json.loads(lines[0])["pattern_id"] == 0
        summary = json.loads(lines[-1])["summary"]
        assert summary["total"] == 16
        dest = tmp_path / "census.json"
        code, _ = run_cli(capsys, "census", "--order", "2", "--dim", "2",
                          "--out", str(dest))
        assert code == 0
        saved = json.loads(dest.read_text())
        assert len(saved["rows"]) == 16
        assert saved["summary"] == summary

    def test_domain_error_exit_1(self, files, capsys):
        # unit tensor fails the irreducibility gate
        e = files("e.json", {"order": 3, "dim": 2,
                             "entries": [1, 0, 0, 0, 0, 0, 0, 1]})
        code, out = run_cli(capsys, "rho", e)
        assert code == 1
        doc = json.loads(out)
        assert doc["code"] == "NotIrreducible"

    def test_parse_error_exit_2(self, files, capsys):
        bad = files("bad.json", {"order": 3})
        code, out = run_cli(capsys, "product", bad, bad)
        assert code == 2
        assert json.loads(out)["code"] == "ParseError"

    def test_missing_file_exit_2(self, capsys):
        code, out = run_cli(capsys, "charpoly", "/nonexistent/t.json")
        assert code == 2
        assert json.loads(out)["code"] == "ParseError"

    def test_float_entry_in_exact_mode_exit_2(self, files, capsys):
        t = files("t.json", {"order": 1, "dim": 2, "entries": [0.5, 1]})
        a = files("a.json", {"order": 3, "dim": 2, "entries": [1] * 8})
        code, out = run_cli(capsys, "apply", a, t)
        assert code == 2
