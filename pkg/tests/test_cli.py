import json

import numpy as np
from click.testing import CliRunner

import polytrans.transforms as tf
from polytrans.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_transform_csv_round_trip_bit_exact():
    for spec in ("dct2:8", "dft2:5", "dct3:4:r=1/3", "gnn-legendre:5",
                 "tensor(dct2:3,dst2:3)"):
        res = run("transform", spec, "--format", "csv")
        assert res.exit_code == 0, res.output
        header, M = tf.from_csv(res.output)
        expect = np.asarray(tf.generate(spec).entries, dtype=M.dtype)
        assert np.array_equal(M, expect)          # 17 digits survive re-parse


def test_transform_json():
    res = run("transform", "dct2:4", "--format", "json")
    payload = json.loads(res.output)
    assert payload["spec"] == "dct2:4" and len(payload["entries"]) == 4


def test_unknown_family_is_usage_error():
    res = run("transform", "nosuch:4")
    assert res.exit_code == 2
    assert "valid families" in res.output


def test_missing_size_is_usage_error():
    assert run("transform", "dct2").exit_code == 2


def test_shift_matrix_and_graph():
    res = run("shift-matrix", "dct2:4", "--format", "csv")
    assert res.exit_code == 0
    assert res.output.splitlines()[0] == "shift(dct2:4),4,unscaled"
    res = run("graph", "dct2:4")
    assert res.exit_code == 0 and res.output.startswith("graph model {")
    res = run("graph", "tensor(dct2:2,dct2:2)")
    assert res.exit_code == 0 and '"0,1"' in res.output


def test_extension_command():
    res = run("extension", "dct2:4", "5", "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["coords"] == [0.0, 0.0, 1.0, 0.0]


def test_check_pass_and_list():
    res = run("check", "pairing")
    assert res.exit_code == 0 and "[PASS] pairing" in res.output
    res = run("check", "--list")
    assert "chebyshev" in res.output and "tensor" in res.output
    assert run("check", "nosuch").exit_code == 2


def test_convolve_json():
    res = run("convolve", "dct2:4", "--filter", "1,0,0,0",
              "--signal", "1,2,3,4", "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert np.allclose(payload["direct"], [1, 2, 3, 4])
    assert payload["residual"] < 1e-10


def test_convolve_bad_vector():
    res = run("convolve", "dct2:4", "--filter", "1,2", "--signal", "1,2,3,4")
    assert res.exit_code == 2


def test_gmrf_command():
    res = run("gmrf", "dct2:6", "--output", "klt", "--format", "csv")
    assert res.exit_code == 0
    _, F = tf.from_csv(res.output)
    assert np.abs(F @ F.T - np.eye(6)).max() < 1e-9
