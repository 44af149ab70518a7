import csv
import io
import json

import pytest

from jackd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.rstrip("\n"), out.err


def test_eta_plain(capsys):
    assert run(capsys, "eta", "--shape", "10,6,3,1", "--alpha", "1") == (0, "4242315", "")
    assert run(capsys, "eta", "--shape", "2,1", "--alpha", "sym")[1] == "-1*a^1"
    assert run(capsys, "eta", "--shape", "2,1", "--alpha", "1/2")[1] == "-1/2"


@pytest.mark.parametrize("method", ["auto", "colored", "minors", "rencontres", "closed1", "det1"])
def test_methods_agree(capsys, method):
    assert run(capsys, "eta", "--shape", "4,2,1", "--alpha", "1", "--method", method)[1] == "-18"


def test_eta_json(capsys):
    code, out, _ = run(capsys, "eta", "--shape", "3,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"shape": "3,2", "alpha": "sym", "method": "auto", "eta": "2*a^1 + 2*a^2"}


def test_spectrum_formats(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "3", "--alpha", "1", "--format", "json")
    data = json.loads(out)
    assert data == {
        "n": 3,
        "alpha": "1",
        "rows": [
            {"shape": "3", "eta": "2", "mult": 1},
            {"shape": "2,1", "eta": "-1", "mult": 4},
            {"shape": "1,1,1", "eta": "2", "mult": 1},
        ],
    }
    code, out, _ = run(capsys, "spectrum", "--n", "2", "--alpha", "2", "--format", "csv")
    assert list(csv.reader(io.StringIO(out))) == [["shape", "eta", "mult"], ["2", "2", "1"], ["1,1", "-1", "2"]]
    code, out, _ = run(capsys, "spectrum", "--n", "3", "--format", "json")
    assert all(r["mult"] is None for r in json.loads(out)["rows"])


def test_output_is_deterministic(capsys):
    first = run(capsys, "spectrum", "--n", "5", "--alpha", "2", "--format", "json")
    assert run(capsys, "spectrum", "--n", "5", "--alpha", "2", "--format", "json") == first


def test_profile_and_immanant(capsys, tmp_path):
    assert json.loads(run(capsys, "profile", "--shape", "3,2", "--format", "json")[1]) == {"shape": "3,2", "d": [2, 2, 0]}
    code, out, _ = run(capsys, "immanant", "--shape", "2,1,1", "--format", "json", "--cache-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["d"] == 3
    assert (tmp_path / "chartable-4.json").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["eta", "--shape", "2,x"],
        ["eta", "--shape", "1,2"],
        ["eta", "--bogus"],
        ["eta", "--shape", "2,1", "--alpha", "sym", "--method", "closed1"],
        ["eta", "--shape", "2,1", "--alpha", "1/0"],
        ["spectrum", "--n", "13"],
        ["nothing"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("jackd:")


def test_check_graphs(capsys):
    code, out, _ = run(capsys, "check", "--suite", "graphs", "--max-n", "4")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "check", "--suite", "extrema", "--max-n", "7", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True
