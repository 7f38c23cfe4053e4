import csv
import io
import json
import subprocess
import sys

import pytest

from colored_diagrams.cli import main, offsets_from_dimension_vector
from colored_diagrams.series import MultiSeries, specialize_uniform

from oracles import brute_series, pair_series, partition_counts


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of_csv(text):
    r = list(csv.reader(io.StringIO(text)))
    return r[0], [tuple(map(int, row)) for row in r[1:]]


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--offsets", "0", "--max-degree", "0")
    assert code == 0
    assert json.loads(out) == {"n": 2, "max_degree": 0,
                               "terms": [{"exponents": [0, 0], "coefficient": "1"}]}


def test_table_csv_n2(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--offsets", "0", "--max-degree", "3",
                       "--format", "csv")
    assert code == 0
    assert out == "e0,e1,coefficient\n0,0,1\n1,0,1\n1,1,2\n2,1,2\n1,2,1\n"


def test_table_pair(capsys):
    _, out, _ = run(capsys, "table", "--n", "2", "--offsets", "0,1", "--max-degree", "1",
                    "--format", "csv")
    assert rows_of_csv(out)[1] == [(0, 0, 1), (1, 0, 1), (0, 1, 1)]


@pytest.mark.parametrize("n", [2, 3])
def test_table_matches_pair_oracle_bytewise(capsys, n):
    K = 8
    for a1 in range(n):
        for a2 in range(n):
            expected = MultiSeries(n, K, pair_series(n, (a1, a2), K))
            offs = "%d,%d" % (a1, a2)
            _, js, _ = run(capsys, "table", "--n", str(n), "--offsets", offs,
                           "--max-degree", str(K), "--format", "json")
            _, cs, _ = run(capsys, "table", "--n", str(n), "--offsets", offs,
                           "--max-degree", str(K), "--format", "csv")
            assert js == expected.to_json()
            assert cs == expected.to_csv()


def test_csv_and_json_agree(capsys):
    args = ["--n", "3", "--offsets", "0,2,2", "--max-degree", "6"]
    _, js, _ = run(capsys, "table", *args, "--format", "json")
    _, cs, _ = run(capsys, "table", *args, "--format", "csv")
    from_json = sorted((tuple(t["exponents"]), int(t["coefficient"]))
                       for t in json.loads(js)["terms"])
    header, rows = rows_of_csv(cs)
    assert header == ["e0", "e1", "e2", "coefficient"]
    assert from_json == sorted((r[:3], r[3]) for r in rows)


def test_table_specializes_to_partition_counts(capsys):
    _, js, _ = run(capsys, "table", "--n", "3", "--offsets", "1", "--max-degree", "12")
    assert specialize_uniform(MultiSeries.from_json(js)) == partition_counts(12)


@pytest.mark.parametrize("argv", [
    ["table", "--n", "1", "--offsets", "0", "--max-degree", "2"],
    ["table", "--n", "2", "--offsets", "2", "--max-degree", "2"],
    ["table", "--n", "2", "--offsets", "", "--max-degree", "2"],
    ["table", "--n", "2", "--offsets", "0", "--max-degree", "-1"],
    ["table", "--n", "2", "--offsets", "a", "--max-degree", "2"],
    ["core", "--partition", "1,2", "--n", "2"],
    ["core", "--partition", "1,,2", "--n", "2"],
    ["euler", "--n", "2", "--w", "1", "--max-degree", "2"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_euler(capsys):
    assert offsets_from_dimension_vector([2, 0, 1]) == [0, 0, 2]
    _, a, _ = run(capsys, "euler", "--n", "3", "--w", "2,0,1", "--max-degree", "5")
    _, b, _ = run(capsys, "table", "--n", "3", "--offsets", "0,0,2", "--max-degree", "5")
    assert a == b
    # chi(M(v, w)) for w = (1, 0): single 0-colored diagrams of weight v
    terms = brute_series(2, 0, 6)
    _, out, _ = run(capsys, "euler", "--n", "2", "--w", "1,0", "--max-degree", "6", "--v", "2,2")
    assert int(out) == terms[(2, 2)]


def test_core_reports(capsys):
    code, out, _ = run(capsys, "core", "--partition", "2", "--n", "2", "--a", "0")
    assert code == 0
    assert "2-core           ()" in out
    assert "quotient weight  1" in out
    assert "charges          (0, 0)" in out

    _, out, _ = run(capsys, "core", "--partition", "", "--n", "3", "--a", "1")
    assert "3-core           ()" in out
    assert "3-quotient       ((), (), ())" in out
    assert "charges          (0, 0, 0)" in out

    _, out, _ = run(capsys, "core", "--partition", "4,3,2", "--n", "3", "--a", "2")
    assert "weight           9" in out
    assert "colored weight   (3, 3, 3)" in out
    assert "ok" in out and "FAILED" not in out

    code, _, err = run(capsys, "core", "--partition", "2", "--n", "2", "--a", "2")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("suite", ["theorem1", "products", "jacobi", "core-quotient",
                                   "frobenius", "all"])
def test_verify(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--n-max", "3", "--max-degree", "6")
    assert code == 0
    assert "FAIL " not in out
    assert "passed" in out


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "colored_diagrams", "table", "--n", "3", "--offsets", "0,1",
           "--max-degree", "5", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"e0,e1,e2,coefficient\n")
