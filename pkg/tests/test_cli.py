import json

import pytest

from mpulam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_distance_text(capsys):
    code, out, _ = run(capsys, "distance", "--a", "2,1,2,1,3,3", "--b", "3,2,2,1,3,1", "--witness")
    assert code == 0
    assert "distance 2" in out and "a@1,3,4,5  b@2,3,4,5" in out


def test_distance_json_carries_config(capsys):
    code, out, _ = run(capsys, "distance", "--a", "2,1,2,1,3,3", "--b", "3,2,2,1,3,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["distance"] == 2 and data["lcs"] == 4
    assert data["config"]["subcommand"] == "distance" and data["config"]["r"] == 2


def test_distance_projects_permutations(capsys):
    code, out, _ = run(capsys, "distance", "--a", "1,5,2,4,3,6", "--b", "6,5,4,3,2,1",
                       "--r", "2", "--project", "--format", "json")
    assert code == 0 and json.loads(out)["a"] == "1,3,1,2,2,3"


@pytest.mark.parametrize("argv", [
    ["distance", "--a", "1,1,2", "--b", "1,2,2"],
    ["distance", "--a", "1,x", "--b", "1,2"],
    ["sphere", "--center", "1,2,1,2", "--method", "rsk"],
    ["sphere", "--identity", "--n", "6", "--r", "2", "--t", "2", "--method", "formula"],
    ["bounds", "--n", "6", "--r", "4", "--d", "2"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_sphere_example_center(capsys):
    code, out, _ = run(capsys, "sphere", "--center", "1,1,1,2,3,2,3,2,4,4,3,4", "--method", "all", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["duplication"]["size_D"] == 48 and data["duplication"]["size_E"] == 2
    assert set(data["sizes"].values()) == {72}


def test_sphere_identity_all_methods(capsys):
    code, out, _ = run(capsys, "sphere", "--identity", "--n", "6", "--r", "2", "--method", "all", "--format", "json")
    assert code == 0 and json.loads(out)["sizes"] == {"formula": 11, "rsk": 11, "enumerate": 11}


def test_bounds_two_symbol_rows_flagged(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "6", "--r", "3", "--d", "2", "--format", "json")
    rows = json.loads(out)["bounds"]
    assert code == 0
    assert [row["supported"] for row in rows] == [True, False, False]


def test_bounds_example(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "6", "--r", "2", "--d", "2", "--format", "json")
    rows = {row["bound_kind"]: row for row in json.loads(out)["bounds"]}
    assert rows["sphere_packing_upper"]["bound_integer"] == "8"
    assert rows["gv_lower"]["bound_integer"] == "5"


def test_greedy_code_output_file(capsys, tmp_path):
    target = tmp_path / "code.txt"
    code, out, _ = run(capsys, "greedy-code", "--n", "6", "--r", "2", "--d", "3", "--output", str(target), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["verified"] and data["size"] == 4
    assert target.read_text().splitlines() == data["codewords"]


def test_scan_extremes(capsys):
    code, out, _ = run(capsys, "scan-extremes", "--n", "6", "--r", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["min_size"] == 11 and data["max_size"] == 20


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert [s["suite"] for s in data["suites"]] == ["metric", "rsk", "spheres", "bounds"]


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--r", "2", "--what", "space", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "tuple" and len(lines) == 7


def test_enumerate_histogram(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--r", "2", "--what", "histogram", "--t", "1", "--format", "json")
    assert code == 0
    assert sum(int(v) for v in json.loads(out)["histogram"].values()) == 90


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--n", "6"])
    assert exc.value.code == 2
