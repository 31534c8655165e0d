"""Command-line interface: schemas, exit codes, determinism."""

import json
import math

import pytest

from napsphere.cli import main

from conftest import NAPOLEONIC_VERTICES, SCALENE_CENTROID_DISTANCES, SCALENE_VERTICES, equilateral_vertices


def _write(tmp_path, doc, name="input.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _vertices_doc(vertices):
    return {"vertices": [[float(x) for x in v] for v in vertices]}


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNapoleonise:
    def test_known_triangle_outward(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, out, _ = _run(capsys, ["napoleonise", path, "--signs", "out"])
        assert code == 0
        doc = json.loads(out)
        rr = doc["centroid_inner_products"]
        for key in ("rr01", "rr12", "rr20"):
            assert rr[key] == pytest.approx(-1.0 / 3.0, abs=1e-12)
        assert doc["equilateral_residual"] < 1e-12

    def test_scalene_outward_distances(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(SCALENE_VERTICES))
        code, out, _ = _run(capsys, ["napoleonise", path, "--signs", "out"])
        assert code == 0
        doc = json.loads(out)
        got = sorted(doc["centroid_distances"])
        assert got == pytest.approx(sorted(SCALENE_CENTROID_DISTANCES), abs=1e-5)

    def test_equilateral_inward_sets_coincidence_flag(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(equilateral_vertices(-1.0 / 3.0)))
        code, out, _ = _run(capsys, ["napoleonise", path, "--signs", "in"])
        assert code == 0
        doc = json.loads(out)
        assert doc["coincident_centroids"] is True

    def test_mixed_sign_string(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, out, _ = _run(capsys, ["napoleonise", path, "--signs", "+-+"])
        assert code == 0
        assert json.loads(out)["signs"] == [1, -1, 1]

    def test_csv_point_cloud(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, out, _ = _run(capsys, ["napoleonise", path, "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "kind,index,x,y,z"
        kinds = [line.split(",")[0] for line in lines[1:]]
        assert kinds == ["P"] * 3 + ["Q"] * 3 + ["R"] * 3 + ["barycentre"] * 2
        first = lines[1].split(",")
        assert [float(x) for x in first[2:]] == pytest.approx([1.0, 0.0, 0.0], abs=1e-15)

    def test_d_input(self, tmp_path, capsys):
        path = _write(tmp_path, {"d": [math.sqrt(2.0) / 5.0, 2.0 * math.sqrt(2.0) / 5.0, 3.0 * math.sqrt(2.0) / 5.0]})
        code, out, _ = _run(capsys, ["napoleonise", path, "--signs", "out"])
        assert code == 0
        doc = json.loads(out)
        assert doc["centroid_inner_products"]["rr01"] == pytest.approx(-1.0 / 3.0, abs=1e-12)

    @pytest.mark.parametrize(
        "argv_tail",
        [
            ["napoleonise", None],
            ["classify", None],
            ["search", None, "--tol", "1e-6"],
            ["sample", "--count", "5", "--seed", "3"],
        ],
        ids=["napoleonise", "classify", "search", "sample"],
    )
    def test_serialisation_round_trip_is_byte_stable(self, tmp_path, capsys, argv_tail):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        argv = [path if a is None else a for a in argv_tail]
        code, out, _ = _run(capsys, argv)
        assert code == 0
        doc = json.loads(out)
        again = json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n"
        assert again == out

    def test_unnormalised_vertices_warn(self, tmp_path, capsys):
        doc = _vertices_doc(NAPOLEONIC_VERTICES)
        doc["vertices"][0] = [1.001, 0.0, 0.0]
        path = _write(tmp_path, doc)
        code, out, err = _run(capsys, ["napoleonise", path])
        assert code == 0
        assert "renormalised" in err

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(_vertices_doc(NAPOLEONIC_VERTICES))))
        code, out, _ = _run(capsys, ["napoleonise", "-", "--signs", "out"])
        assert code == 0
        assert json.loads(out)["equilateral_residual"] < 1e-12


class TestClassify:
    def test_napoleonic_verdict(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "OutwardNapoleonic"
        assert doc["predicted_rr"] == pytest.approx(-1.0 / 3.0, abs=1e-15)

    def test_scalene_verdict(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(SCALENE_VERTICES))
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 0
        assert json.loads(out)["verdict"] == "NotNapoleonic"

    def test_equilateral_verdict(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(equilateral_vertices(-1.0 / 3.0)))
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "Equilateral"
        assert doc["note"]

    def test_env_tolerance_override(self, tmp_path, capsys, monkeypatch):
        # a huge tolerance makes everything look equilateral
        monkeypatch.setenv("NAPOLEON_TOL", "100")
        path = _write(tmp_path, _vertices_doc(SCALENE_VERTICES))
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 0
        assert json.loads(out)["verdict"] == "Equilateral"

    def test_explicit_tol_beats_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("NAPOLEON_TOL", "100")
        path = _write(tmp_path, _vertices_doc(SCALENE_VERTICES))
        code, out, _ = _run(capsys, ["classify", path, "--tol", "1e-9"])
        assert code == 0
        assert json.loads(out)["verdict"] == "NotNapoleonic"


class TestSample:
    def test_deterministic_output(self, capsys):
        code_a, out_a, _ = _run(capsys, ["sample", "--count", "100", "--seed", "7"])
        code_b, out_b, _ = _run(capsys, ["sample", "--count", "100", "--seed", "7"])
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_rows_satisfy_quadric_and_classify_outward(self, capsys):
        code, out, _ = _run(capsys, ["sample", "--count", "25", "--seed", "9"])
        assert code == 0
        doc = json.loads(out)
        assert len(doc["samples"]) == 25
        for row in doc["samples"]:
            x, y, z = row["xyz"]
            assert 2.0 * x * x + y * y / 2.0 + z * z / 2.0 == pytest.approx(2.0, abs=1e-12)

    def test_csv_format_with_realize(self, capsys):
        code, out, _ = _run(capsys, ["sample", "--count", "5", "--seed", "9", "--realize", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("d0,d1,d2,X,Y,Z,p0x")
        assert len(lines) == 6
        cells = [float(x) for x in lines[1].split(",")]
        assert len(cells) == 15
        # realized first vertex is canonical
        assert cells[6:9] == pytest.approx([1.0, 0.0, 0.0], abs=1e-15)


class TestSearch:
    def test_known_triangle_contains_outward(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, out, _ = _run(capsys, ["search", path, "--tol", "1e-9"])
        assert code == 0
        doc = json.loads(out)
        assert [-1, -1, -1] in [m["signs"] for m in doc["matches"]]


class TestVerifyIdentities:
    def test_all_pass_with_exit_zero(self, capsys):
        code, out, _ = _run(capsys, ["verify-identities"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(line.startswith("PASS") for line in lines)


class TestErrors:
    def test_cogeodesic_exit_2(self, tmp_path, capsys):
        doc = {
            "vertices": [
                [1.0, 0.0, 0.0],
                [-0.5, math.sqrt(3.0) / 2.0, 0.0],
                [-0.5, -math.sqrt(3.0) / 2.0, 0.0],
            ]
        }
        path = _write(tmp_path, doc)
        code, out, _ = _run(capsys, ["napoleonise", path])
        assert code == 2
        assert json.loads(out)["error"]["kind"] == "Cogeodesic"

    def test_antipodal_exit_2(self, tmp_path, capsys):
        doc = {"vertices": [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]}
        path = _write(tmp_path, doc)
        code, out, _ = _run(capsys, ["napoleonise", path])
        assert code == 2
        assert json.loads(out)["error"]["kind"] == "Degenerate"

    def test_too_wide_exit_2(self, tmp_path, capsys):
        doc = {"vertices": [[1.0, 0.0, 0.0], [-0.6, 0.8, 0.0], [0.0, 0.0, 1.0]]}
        path = _write(tmp_path, doc)
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 2
        assert json.loads(out)["error"]["kind"] == "TooWide"

    def test_unrealizable_d_exit_2(self, tmp_path, capsys):
        path = _write(tmp_path, {"d": [math.sqrt(2.0), math.sqrt(2.8), math.sqrt(0.4)]})
        code, out, _ = _run(capsys, ["napoleonise", path])
        assert code == 2
        assert json.loads(out)["error"]["kind"] == "Unrealizable"

    def test_out_of_range_d_exit_2(self, tmp_path, capsys):
        path = _write(tmp_path, {"d": [2.0, 1.0, 1.0]})
        code, out, _ = _run(capsys, ["classify", path])
        assert code == 2
        assert json.loads(out)["error"]["kind"] == "OutOfRange"

    def test_malformed_json_exit_1(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = _run(capsys, ["napoleonise", str(path)])
        assert code == 1
        assert "JSON" in err or "json" in err

    def test_missing_keys_exit_1(self, tmp_path, capsys):
        path = _write(tmp_path, {"points": []})
        code, _, err = _run(capsys, ["classify", path])
        assert code == 1

    def test_bad_signs_exit_1(self, tmp_path, capsys):
        path = _write(tmp_path, _vertices_doc(NAPOLEONIC_VERTICES))
        code, _, _ = _run(capsys, ["napoleonise", path, "--signs", "++"])
        assert code == 1
