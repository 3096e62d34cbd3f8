import json

import pytest

from rectdel.cli import main
from rectdel.files import points_from_json, points_to_json
from rectdel.geometry import PointSet


def run(argv):
    return main(argv)


class TestGenerate:
    def test_deterministic_bytes(self, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        assert run(["generate", "--n", "12", "--seed", "5", "--out", str(out1)]) == 0
        assert run(["generate", "--n", "12", "--seed", "5", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_generated_points_validate(self, tmp_path):
        out = tmp_path / "p.json"
        assert run(["generate", "--n", "100", "--seed", "42", "--out", str(out)]) == 0
        ps = points_from_json(out.read_text())
        assert len(ps) == 100
        xs = {p.x for p in ps}
        ys = {p.y for p in ps}
        assert len(xs) == 100 and len(ys) == 100

    def test_clustered(self, tmp_path):
        out = tmp_path / "c.json"
        assert run(["generate", "--n", "30", "--seed", "2",
                    "--distribution", "clustered", "--out", str(out)]) == 0
        assert len(points_from_json(out.read_text())) == 30


class TestBuildAnalyze:
    @pytest.fixture
    def tri_file(self, tmp_path):
        pts = tmp_path / "pts.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (3, 1), ("1.5", "0.6")])))
        tri = tmp_path / "tri.json"
        assert run(["build", "--points", str(pts), "--aspect", "1", "--out", str(tri)]) == 0
        return tri

    def test_build_payload(self, tri_file):
        doc = json.loads(tri_file.read_text())
        assert doc["edges"] == [[0, 2], [1, 2]]
        assert doc["triangles"] == []

    def test_k3_build_has_triangle(self, tmp_path):
        pts = tmp_path / "k3.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (3, 1), (1, 2)])))
        tri = tmp_path / "k3tri.json"
        assert run(["build", "--points", str(pts), "--aspect", "1", "--out", str(tri)]) == 0
        doc = json.loads(tri.read_text())
        assert doc["triangles"] == [[0, 1, 2]]
        assert "0,1,2" in doc["circumhomothets"]

    def test_analyze_max_ratio(self, tri_file, tmp_path, capsys):
        rep = tmp_path / "rep.json"
        assert run(["analyze", "--tri", str(tri_file), "--out", str(rep)]) == 0
        doc = json.loads(rep.read_text())
        assert abs(doc["max_ratio"] - 1.00180) <= 5e-6
        csv_out = tmp_path / "rep.csv"
        assert run(["analyze", "--tri", str(tri_file), "--format", "csv",
                    "--out", str(csv_out)]) == 0
        assert csv_out.read_text().startswith("u,v,d_t")

    def test_invalid_points_rejected(self, tmp_path):
        pts = tmp_path / "bad.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (0, 5)])))
        assert run(["build", "--points", str(pts), "--aspect", "1",
                    "--out", str(tmp_path / "x.json")]) == 2

    def test_degenerate_input_reported(self, tmp_path, capsys):
        pts = tmp_path / "deg.json"
        pts.write_text(points_to_json(PointSet.of([(0, 1), (1, 4), (4, 3), (3, 0)])))
        rc = run(["build", "--points", str(pts), "--aspect", "1",
                  "--out", str(tmp_path / "y.json")])
        assert rc == 2
        assert "degenerate" in capsys.readouterr().err


class TestCertify:
    def test_certify_verify_cycle(self, tmp_path, capsys):
        pts = tmp_path / "pts.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (3, 1), ("1.5", "0.6")])))
        tri = tmp_path / "tri.json"
        run(["build", "--points", str(pts), "--aspect", "1", "--out", str(tri)])
        cert = tmp_path / "cert.json"
        rc = run(["certify", "--tri", str(tri), "--pair", "0,1", "--out", str(cert)])
        assert rc == 0
        out = capsys.readouterr().out
        assert "verification: ok" in out
        assert run(["certify", "--tri", str(tri), "--check", str(cert)]) == 0

    def test_corrupted_certificate_rejected(self, tmp_path, capsys):
        pts = tmp_path / "pts.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (3, 1), ("1.5", "0.6")])))
        tri = tmp_path / "tri.json"
        run(["build", "--points", str(pts), "--aspect", "1", "--out", str(tri)])
        cert = tmp_path / "cert.json"
        run(["certify", "--tri", str(tri), "--pair", "0,1", "--out", str(cert)])
        doc = json.loads(cert.read_text())
        doc["steps"][0]["rhs"] -= 100.0
        cert.write_text(json.dumps(doc))
        rc = run(["certify", "--tri", str(tri), "--check", str(cert)])
        assert rc == 1
        assert "REJECTED" in capsys.readouterr().err


class TestSweepSearchSvg:
    def test_sweep_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert run(["sweep", "--aspects", "1,2", "--n", "8", "--trials", "2",
                    "--seed", "0", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "aspect,trial,n,seed,max_ratio,sigma"
        assert len(lines) == 5

    def test_search_deterministic(self, tmp_path, capsys):
        out1 = tmp_path / "s1.json"
        out2 = tmp_path / "s2.json"
        args = ["search", "--aspect", "1", "--n", "4", "--budget", "40", "--seed", "9"]
        assert run(args + ["--out", str(out1)]) == 0
        assert run(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_export_svg(self, tmp_path):
        pts = tmp_path / "pts.json"
        pts.write_text(points_to_json(PointSet.of([(0, 0), (3, 1), (1, 2)])))
        tri = tmp_path / "tri.json"
        run(["build", "--points", str(pts), "--aspect", "1", "--out", str(tri)])
        svg = tmp_path / "out.svg"
        assert run(["export-svg", "--tri", str(tri), "--out", str(svg)]) == 0
        text = svg.read_text()
        assert text.startswith("<svg") and "<line" in text and "rect" in text
