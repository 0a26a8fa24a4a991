import io
import json

import pytest

from latkit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

A2 = "rank 2\n2 -1\n-1 2\n"
NIKULIN = ("rank 8\n"
           + "\n".join(" ".join("-2" if i == j else "0" for j in range(8))
                       for i in range(8))
           + "\nglue " + " ".join(["1/2"] * 8) + "\n")
FAMILY = """\
vars 4
weights 0 3 1 2
mono 3 0 1 0
mono 2 2 0 0
mono 1 0 0 3
mono 1 1 1 1
mono 0 3 0 1
mono 0 1 3 0
mono 0 0 2 2
map sigma
1 0 0 0
0 w^3 0 0
0 0 w 0
0 0 0 w^2
map iota
0 1 0 0
1 0 0 0
0 0 0 1
0 0 1 0
"""


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_disc_text_and_json(tmp_path):
    f = write(tmp_path, "a2.lat", A2)
    code, text = run(["disc", f])
    assert code == EXIT_OK
    assert "disc/group: 3" in text
    code, text = run(["disc", f, "--json"])
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["schema"] == 1
    assert payload["exit"] == EXIT_OK
    ids = {r["id"] for r in payload["results"]}
    assert "disc/group" in ids and "disc/q[0]" in ids


def test_shortvec(tmp_path):
    f = write(tmp_path, "a2.lat", A2)
    code, text = run(["shortvec", f, "--bound", "2"])
    assert code == EXIT_OK
    assert "norm 2: 3 pairs" in text
    code, text = run(["shortvec", f, "--bound", "2", "--count-only", "--json"])
    payload = json.loads(text)
    ids = [r["id"] for r in payload["results"]]
    assert "shortvec/vector" not in ids


def test_overlattice_command(tmp_path):
    f = write(tmp_path, "nik.lat", NIKULIN)
    code, text = run(["overlattice", f, "--json"])
    assert code == EXIT_OK
    payload = json.loads(text)
    got = {r["id"]: r["value"] for r in payload["results"] if "value" in r}
    assert got["overlattice/index"] == "2"
    assert got["overlattice/even"] == "True"
    assert got["overlattice/disc"] == "2,2,2,2,2,2"


def test_family_command(tmp_path):
    f = write(tmp_path, "fam.fam", FAMILY)
    code, text = run(["family", f])
    assert code == EXIT_OK
    assert "family/invariant" in text
    assert "family/dihedral" in text
    assert "FAIL" not in text


def test_family_command_fails_on_mixed_weights(tmp_path):
    bad = "vars 2\nweights 0 1\nmono 1 1\nmono 2 0\n"
    f = write(tmp_path, "bad.fam", bad)
    code, text = run(["family", f])
    assert code == EXIT_FAIL
    assert "FAIL" in text


def test_repro_filter_and_json():
    code, text = run(["repro", "--filter", "md5", "--json"])
    assert code == EXIT_OK
    payload = json.loads(text)
    assert all(r["pass"] for r in payload["results"])
    assert {r["id"] for r in payload["results"]} == {
        "md5/rank", "md5/disc-primary", "md5/disc-chain"}


def test_repro_fault_injection_exits_nonzero():
    code, text = run(["repro", "--filter", "L/index", "--inject-fault", "nu-coord"])
    assert code == EXIT_FAIL
    assert "FAIL" in text


def test_usage_errors(tmp_path):
    code, _ = run(["repro", "--filter", "no-such-prefix"])
    assert code == EXIT_USAGE
    code, _ = run(["repro", "--inject-fault", "no-such-fault"])
    assert code == EXIT_USAGE
    code, _ = run(["disc", str(tmp_path / "missing.lat")])
    assert code == EXIT_USAGE
    f = write(tmp_path, "bad.lat", "rank 2\n1 2\n3 1\n")
    code, _ = run(["disc", f])
    assert code == EXIT_USAGE
    code, _ = run(["no-such-command"])
    assert code == EXIT_USAGE


def test_text_json_parity(tmp_path):
    f = write(tmp_path, "a2.lat", A2)
    code_t, text = run(["disc", f])
    code_j, js = run(["disc", f, "--json"])
    assert code_t == code_j
    payload = json.loads(js)
    for r in payload["results"]:
        assert r["id"] in text
