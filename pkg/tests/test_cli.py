import json

import pytest

from redhotpotato.cli import main

EXAMPLE_MATRIX = {"labels": [1, 2, 3, 4],
                  "rows": [[3, 7, 0, 0], [8, 1, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]]}

WORKED_PAIR = {"n": 4, "slots": [
    {"edges": [{"from": 4, "to": 3, "color": "black"},
               {"from": 3, "to": 0, "color": "black"},
               {"from": 2, "to": 1, "color": "black"},
               {"from": 1, "to": 4, "color": "black"}]},
    {"edges": [{"from": 4, "to": 2, "color": "black"},
               {"from": 3, "to": 4, "color": "black"}]},
]}


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def matrix_file(tmp_path):
    return write_json(tmp_path / "m.json", EXAMPLE_MATRIX)


@pytest.fixture
def weights_file(tmp_path):
    data = {"n": 2, "weights": [
        {"from": i, "to": j, "value": 1}
        for i in range(3) for j in range(3) if i != j]}
    return write_json(tmp_path / "w.json", data)


# --- verify-lc ----------------------------------------------------------------

def test_verify_lc_example(matrix_file, capsys):
    assert main(["verify-lc", matrix_file]) == 0
    out = capsys.readouterr().out
    for line in ("det(M) = -424", "det(M_{12,12}) = 8", "det(M_{2,2}) = 24",
                 "det(M_{1,1}) = 8", "det(M_{2,1}) = 56", "det(M_{1,2}) = 64",
                 "residual = 0", "PASS"):
        assert line in out


def test_verify_lc_identity(tmp_path, capsys):
    path = write_json(tmp_path / "i.json",
                      {"rows": [[int(i == j) for j in range(4)] for i in range(4)]})
    assert main(["verify-lc", path]) == 0
    assert "residual = 0" in capsys.readouterr().out


def test_verify_lc_json_format(matrix_file, capsys):
    assert main(["verify-lc", matrix_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dets"]["det(M)"] == -424 and data["residual"] == 0 and data["passed"]


def test_verify_lc_seeded_random_6x6(tmp_path, capsys):
    import random
    rng = random.Random(0)
    rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)]
    path = write_json(tmp_path / "r6.json", {"rows": rows})
    assert main(["verify-lc", path]) == 0
    assert "residual = 0" in capsys.readouterr().out


def test_verify_lc_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["verify-lc", str(path)]) == 2
    path2 = write_json(tmp_path / "nonsquare.json", {"rows": [[1, 2, 3], [4, 5, 6]]})
    assert main(["verify-lc", path2]) == 2


# --- verify-forest --------------------------------------------------------------

def test_verify_forest_n2(capsys):
    assert main(["verify-forest", "2"]) == 0
    out = capsys.readouterr().out
    assert "3 = 3, bijection verified" in out


def test_verify_forest_n4_json(capsys):
    assert main(["verify-forest", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["s0_size"] == data["s3_size"] == 1875 and data["passed"]


def test_verify_forest_weighted(weights_file, capsys):
    assert main(["verify-forest", "2", "--weights", weights_file]) == 0
    assert "weighted sums: 3 = 3" in capsys.readouterr().out


def test_verify_forest_n1_is_input_error(capsys):
    assert main(["verify-forest", "1"]) == 2


def test_verify_forest_cap_requires_force(capsys):
    assert main(["verify-forest", "7"]) == 2


def test_verify_forest_reports_are_byte_identical(capsys):
    main(["verify-forest", "3", "--format", "json"])
    first = capsys.readouterr().out
    main(["verify-forest", "3", "--format", "json"])
    assert capsys.readouterr().out == first


# --- bijection -------------------------------------------------------------------

def test_bijection_worked_example(tmp_path, capsys):
    path = write_json(tmp_path / "p.json", WORKED_PAIR)
    trace_path = tmp_path / "trace.json"
    dot_dir = tmp_path / "dots"
    assert main(["bijection", path, "--trace", str(trace_path),
                 "--dot-dir", str(dot_dir)]) == 0
    out = capsys.readouterr().out
    final = json.loads(out.splitlines()[0])
    assert final == {"n": 4, "slots": [
        {"edges": [{"from": 2, "to": 1, "color": "black"},
                   {"from": 3, "to": 4, "color": "black"},
                   {"from": 4, "to": 2, "color": "black"}]},
        {"edges": [{"from": 1, "to": 4, "color": "black"},
                   {"from": 3, "to": 0, "color": "black"},
                   {"from": 4, "to": 3, "color": "black"}]},
    ]}
    trace = json.loads(trace_path.read_text())
    assert trace["iterations"] == 15
    assert len(trace["steps"]) == 16
    dots = sorted(dot_dir.iterdir())
    assert len(dots) == 16 and dots[0].name == "step_000.dot"
    assert "digraph" in dots[0].read_text()


def test_bijection_inverse(tmp_path, capsys):
    s3_pair = {"n": 2, "slots": [{"edges": [{"from": 1, "to": 0, "color": "black"}]},
                                 {"edges": [{"from": 2, "to": 0, "color": "black"}]}]}
    path = write_json(tmp_path / "p.json", s3_pair)
    assert main(["bijection", path, "--inverse", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    edges = {(e["from"], e["to"]) for slot in data["final"]["slots"] for e in slot["edges"]}
    assert edges == {(1, 0), (2, 0)}


def test_bijection_rejects_red_input(tmp_path, capsys):
    bad = {"n": 2, "slots": [{"edges": [{"from": 1, "to": 0, "color": "red"},
                                        {"from": 2, "to": 0, "color": "black"}]},
                             {"edges": []}]}
    path = write_json(tmp_path / "p.json", bad)
    assert main(["bijection", path]) == 2


def test_bijection_rejects_s3_without_inverse(tmp_path, capsys):
    s3_pair = {"n": 2, "slots": [{"edges": [{"from": 1, "to": 0, "color": "black"}]},
                                 {"edges": [{"from": 2, "to": 0, "color": "black"}]}]}
    path = write_json(tmp_path / "p.json", s3_pair)
    assert main(["bijection", path]) == 2


# --- det ---------------------------------------------------------------------------

@pytest.mark.parametrize("method", ["bareiss", "cofactor", "condensation"])
def test_det_methods_agree(matrix_file, capsys, method):
    assert main(["det", matrix_file, "--method", method]) == 0
    assert capsys.readouterr().out.strip() == "-424"


def test_det_empty_matrix(tmp_path, capsys):
    path = write_json(tmp_path / "e.json", {"labels": [], "rows": []})
    assert main(["det", path]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_det_rational_output(tmp_path, capsys):
    path = write_json(tmp_path / "r.json", {"rows": [["1/2", 0], [0, "1/3"]]})
    assert main(["det", path, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["det"] == "1/6"


def test_det_methods_agree_on_random_matrix(tmp_path, capsys):
    import random
    rng = random.Random(1)
    rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
    path = write_json(tmp_path / "r5.json", {"rows": rows})
    values = set()
    for method in ("bareiss", "cofactor", "condensation"):
        assert main(["det", path, "--method", method]) == 0
        values.add(capsys.readouterr().out.strip())
    assert len(values) == 1


# --- mtt ---------------------------------------------------------------------------

def test_mtt_same_index(weights_file, capsys):
    assert main(["mtt", weights_file, "--roots", "0"]) == 0
    out = capsys.readouterr().out
    assert "det(A_{U,U}) = 3" in out and "= 3" in out and "PASS" in out


def test_mtt_cross(weights_file, capsys):
    assert main(["mtt", weights_file, "--cross"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_mtt_cross_random_n4(tmp_path, capsys):
    import random
    rng = random.Random(4)
    data = {"n": 4, "weights": [
        {"from": i, "to": j, "value": rng.randint(-9, 9)}
        for i in range(5) for j in range(5) if i != j]}
    path = write_json(tmp_path / "w4.json", data)
    assert main(["mtt", path, "--cross"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_mtt_zero_weights_all_roots(tmp_path, capsys):
    path = write_json(tmp_path / "w0.json", {"n": 2, "weights": []})
    assert main(["mtt", path, "--roots", "0,1,2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["det_value"] == 1 and data["sum_value"] == 1


def test_mtt_requires_mode(weights_file, capsys):
    assert main(["mtt", weights_file]) == 2
    assert main(["mtt", weights_file, "--roots", "0", "--cross"]) == 2


def test_mtt_roots_must_include_zero(weights_file, capsys):
    assert main(["mtt", weights_file, "--roots", "1,2"]) == 2


# --- enumerate ------------------------------------------------------------------------

def test_enumerate_census_n2(capsys):
    assert main(["enumerate", "2"]) == 0
    out = capsys.readouterr().out
    assert "R_0 = 3" in out and "S0 = 3" in out and "S3 = 3" in out


def test_enumerate_census_json_n4(capsys):
    assert main(["enumerate", "4", "--format", "json"]) == 0
    counts = json.loads(capsys.readouterr().out)["counts"]
    assert counts["S0"] == counts["S3"] == 1875
    assert counts["R_02_meta_1_2"] == 25


def test_enumerate_with_roots_and_meta(capsys):
    assert main(["enumerate", "3", "--roots", "0,2", "--meta", "1-2",
                 "--list", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 4 and len(data["forests"]) == 4


def test_enumerate_rejects_large_n_without_force(capsys):
    assert main(["enumerate", "9"]) == 2


def test_enumerate_meta_needs_roots(capsys):
    assert main(["enumerate", "3", "--meta", "1-2"]) == 2
