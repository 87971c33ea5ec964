"""End-to-end CLI behavior: exact JSON bytes, exit codes, determinism."""
import json

import pytest

from strathom.cli import main
from strathom.complexes import complex_to_json
from strathom.corpus import by_name
from strathom.facelattice import flag_vector, from_simplicial_facets, lattice_to_json

OCTA_FACETS = [
    ("a", "b", "c"), ("a", "b", "f"), ("a", "c", "e"), ("a", "e", "f"),
    ("b", "c", "d"), ("b", "d", "f"), ("c", "d", "e"), ("d", "e", "f"),
]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_word(capsys):
    code, out, err = run(capsys, ["word", "--word", "III"])
    assert code == 0 and err == ""
    assert out == '{"h": [1, 3, 3, 1]}\n'
    code, out, _ = run(capsys, ["word", "--word", "CIC"])
    assert code == 0 and out == '{"h": [1, 2, 2, 1]}\n'


def test_iccheck(capsys):
    code, out, err = run(capsys, ["iccheck", "--max-len", "4"])
    assert code == 0 and err == ""
    assert out == '{"all_hold": true, "max_len": 4, "words": 30}\n'


def test_fibrank(capsys):
    code, out, err = run(capsys, ["fibrank", "--dim", "3"])
    assert code == 0 and err == ""
    assert out == '{"fibonacci": 3, "match": true, "rank": 3}\n'


def test_flag(capsys, tmp_path):
    lattice = from_simplicial_facets(OCTA_FACETS)
    path = write_json(tmp_path, "octa.json", lattice_to_json(lattice))
    code, out, err = run(capsys, ["flag", "--in", path])
    assert code == 0 and err == ""
    assert out == ('{"dim": 3, "entries": {"": 1, "0": 6, "0,1": 24, '
                   '"0,1,2": 48, "0,2": 24, "1": 12, "1,2": 24, "2": 8}}\n')


def test_fit_accepts_lattice_or_flag_vector(capsys, tmp_path):
    lattice = from_simplicial_facets(OCTA_FACETS)
    lat_path = write_json(tmp_path, "octa_lattice.json", lattice_to_json(lattice))
    code, out, _ = run(capsys, ["fit", "--dim", "3", "--predict", lat_path])
    assert code == 0 and out == '{"h": [1, 3, 3, 1]}\n'
    flag_path = write_json(tmp_path, "octa_flag.json", flag_vector(lattice).to_json())
    code, out, _ = run(capsys, ["fit", "--dim", "3", "--predict", flag_path])
    assert code == 0 and out == '{"h": [1, 3, 3, 1]}\n'


def test_ih(capsys, tmp_path):
    path = write_json(tmp_path, "st7.json", complex_to_json(by_name("susp_torus7")))
    code, out, err = run(capsys, ["ih", "--in", path])
    assert code == 0 and err == ""
    assert out == ('{"boundaries": [6, 13, 1, 0], "cycles": [7, 15, 1, 1], '
                   '"perversity": "middle", "ranks": [1, 2, 0, 1]}\n')


def test_lg(capsys, tmp_path):
    path = write_json(tmp_path, "ch.json", complex_to_json(by_name("cone_hexagon")))
    code, out, err = run(capsys, ["lg", "--in", path, "--dim-seq", "0,0", "--w", "0"])
    assert code == 0 and err == ""
    assert out == ('{"cells": {"(0,0)": 24, "(0,1)": 168, "(1,0)": 18}, '
                   '"rank": 1, "w": [0]}\n')


def test_shapes(capsys):
    code, out, err = run(capsys, ["shapes", "--dd-check", "--max-total-dim", "4"])
    assert code == 0 and err == ""
    assert out == '{"all_zero": true}\n'


def test_identical_invocations_are_byte_identical(capsys, tmp_path):
    path = write_json(tmp_path, "st7.json", complex_to_json(by_name("susp_torus7")))
    _, first, _ = run(capsys, ["ih", "--in", path])
    _, second, _ = run(capsys, ["ih", "--in", path])
    assert first == second


@pytest.mark.parametrize("argv", [
    ["word", "--word", "IXC"],
    ["iccheck", "--max-len", "0"],
    ["ih", "--in", "/does/not/exist.json"],
    ["shapes", "--max-total-dim", "3"],
])
def test_validation_failures_exit_one_with_message(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")


def test_bad_dim_seq_exits_one(capsys, tmp_path):
    path = write_json(tmp_path, "ch.json", complex_to_json(by_name("cone_hexagon")))
    code, _, err = run(capsys, ["lg", "--in", path, "--dim-seq", "1,1", "--w", "0"])
    assert code == 1 and "dim-seq" in err


def test_usage_errors_and_help(capsys):
    assert run(capsys, ["nosuchcommand"])[0] == 1
    assert run(capsys, [])[0] == 1
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["word"])[0] == 1
