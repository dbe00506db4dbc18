import json

import numpy as np
import pytest

from quasipack.cli import main, parse_cli


def test_defaults_mirror_the_original_program():
    req = parse_cli([])
    assert req.command == "generate"
    assert req.preset == "icosa3"
    assert req.spec.radii == (1.0, 1.2, 1.5)
    assert req.B.super_dim == 31
    np.testing.assert_array_equal(req.config.tr, np.full(31, 0.1))
    assert req.config.max_enqueued == 10000
    assert req.fmt == "graphics3d"


def test_tr_parsing():
    np.testing.assert_array_equal(parse_cli(["--tr", "0.3"]).config.tr, np.full(31, 0.3))
    vec = ",".join(str(0.01 * i) for i in range(31))
    np.testing.assert_allclose(parse_cli(["--tr", vec]).config.tr, 0.01 * np.arange(31))


@pytest.mark.parametrize(
    "argv",
    [
        ["--tr", "0.1,0.2"],
        ["--tr", "abc"],
        ["--r1", "0"],
        ["--r2", "-1.2"],
        ["--preset", "fibonacci", "--r1", "2"],
        ["--preset", "fibonacci", "--format", "graphics3d"],
        ["--max-points", "0"],
        ["--preset", "penrose"],
    ],
)
def test_bad_arguments_exit_nonzero(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        parse_cli(argv)
    assert exc.value.code != 0
    assert "error" in capsys.readouterr().err


def test_radius_override_keeps_other_defaults():
    req = parse_cli(["--r2", "1.3"])
    assert req.spec.radii == (1.0, 1.3, 1.5)
    assert np.linalg.norm(req.B.columns[6]) == pytest.approx(1.3)


def test_fibonacci_defaults_to_csv():
    req = parse_cli(["--preset", "fibonacci"])
    assert req.fmt == "csv"
    assert req.config.max_enqueued == 200


def _balanced(text):
    depth = 0
    for ch in text:
        depth += {"[": 1, "{": 1, "]": -1, "}": -1}.get(ch, 0)
        if depth < 0:
            return False
    return depth == 0


def test_generate_graphics3d_file(tmp_path, capsys):
    out = tmp_path / "pts.m"
    assert main(["--max-points", "2000", "--out", str(out)]) == 0
    report = capsys.readouterr().out
    obtained = int(report.splitlines()[1].split(":")[1])
    text = out.read_text()
    assert text.startswith("Show[Graphics3D[{ PointSize[0.01],{\n")
    assert text.endswith("}]\n}} ]]\n")
    assert text.count("Point[{") == obtained
    assert _balanced(text)


def test_generate_json_to_stdout(capsys):
    assert main(["--preset", "fibonacci", "--format", "json"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["preset"] == "fibonacci"
    assert doc["stats"]["obtained"] == len(doc["points"])
    assert "NUMBER OF OBTAINED POINTS" in captured.err


def test_all_writers_emit_the_same_points(tmp_path):
    paths = {}
    for fmt in ("xyz", "csv", "json", "graphics3d"):
        paths[fmt] = tmp_path / f"out.{fmt}"
        assert main(["--max-points", "1500", "--format", fmt, "--out", str(paths[fmt])]) == 0
    xyz = np.array([[float(t) for t in line.split()[1:]] for line in paths["xyz"].read_text().splitlines()[2:]])
    csv = np.loadtxt(paths["csv"], delimiter=",", skiprows=1)
    js = np.array(json.loads(paths["json"].read_text())["points"])
    g3 = np.array([
        [float(t) for t in line[len("Point[{"):line.index("}")].split(",")]
        for line in paths["graphics3d"].read_text().splitlines()
        if line.startswith("Point[{")
    ])
    np.testing.assert_array_equal(xyz, csv)
    np.testing.assert_array_equal(xyz, js)
    np.testing.assert_allclose(g3, xyz, atol=5e-6)


def test_unwritable_output_reports_error(tmp_path, capsys):
    assert main(["--preset", "fibonacci", "--out", str(tmp_path / "missing" / "x.csv")]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_benchmark_subcommand_small(tmp_path):
    out = tmp_path / "bench.txt"
    assert main(["benchmark", "--max-points", "300", "--out", str(out)]) == 0
    text = out.read_text()
    assert "optimized" in text and "naive" in text and "identical output: yes" in text
