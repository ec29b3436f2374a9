import json
import os

import pytest

from dyntwist.cli import main


def run(args):
    return main(args)


def test_example_and_verify_hopf(tmp_path, capsys):
    out = str(tmp_path)
    assert run(["example", "E0", "--out-dir", out]) == 0
    capsys.readouterr()
    assert run(["verify", "hopf", os.path.join(out, "e0_hopf.json")]) == 0
    text = capsys.readouterr().out
    assert "PASS" in text and "FAIL" not in text


def test_verify_comodule_and_report(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    capsys.readouterr()
    report_path = os.path.join(out, "report.json")
    rc = run(["--report", report_path, "verify", "comodule",
              os.path.join(out, "e1_hopf.json"),
              os.path.join(out, "e1_comodule.json")])
    assert rc == 0
    doc = json.loads(open(report_path).read())
    assert doc["command"] == "verify comodule"
    assert all(c["status"] == "PASS" for c in doc["checks"])
    assert all(c["residual_nonzero_count"] == 0 for c in doc["checks"]
               if c["status"] == "PASS")
    assert set(doc["inputs"]) == {os.path.join(out, "e1_hopf.json"),
                                  os.path.join(out, "e1_comodule.json")}


def test_compute_twist_and_verify_roundtrip(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E0", "--out-dir", out])
    twist_path = os.path.join(out, "twist.json")
    rc = run(["compute-twist", os.path.join(out, "e0_datum.json"),
              "--out", twist_path])
    assert rc == 0
    capsys.readouterr()
    rc = run(["verify", "twist", os.path.join(out, "e0_hopf.json"),
              os.path.join(out, "e0_base.json"), twist_path])
    assert rc == 0


def test_malformed_scalar_is_input_error(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E0", "--out-dir", out])
    path = os.path.join(out, "e0_hopf.json")
    doc = json.loads(open(path).read())
    doc["mult"][0][3] = "1/0"
    with open(path, "w") as fh:
        json.dump(doc, fh)
    rc = run(["verify", "hopf", path])
    assert rc == 2


def test_corrupt_twist_exits_one(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E0", "--out-dir", out])
    twist_path = os.path.join(out, "twist.json")
    run(["compute-twist", os.path.join(out, "e0_datum.json"), "--out", twist_path])
    doc = json.loads(open(twist_path).read())
    doc["coeffs"] = [[0, 0, 0, "1"], [1, 1, 0, "1"]]
    doc.pop("inverse", None)
    with open(twist_path, "w") as fh:
        json.dump(doc, fh)
    rc = run(["verify", "twist", os.path.join(out, "e0_hopf.json"),
              os.path.join(out, "e0_base.json"), twist_path])
    assert rc == 1


def test_trivial_twist_verifies(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    twist_path = os.path.join(out, "trivial.json")
    with open(twist_path, "w") as fh:
        json.dump({"format": "twist", "order": 2,
                   "coeffs": [[0, 0, 0, "1"]]}, fh)
    rc = run(["verify", "twist", os.path.join(out, "e1_hopf.json"),
              os.path.join(out, "e1_base.json"), twist_path])
    assert rc == 0


def test_determinism_byte_identical(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    t1 = os.path.join(out, "t1.json")
    t2 = os.path.join(out, "t2.json")
    run(["compute-twist", os.path.join(out, "e1_datum.json"), "--out", t1])
    run(["compute-twist", os.path.join(out, "e1_datum.json"), "--out", t2])
    assert open(t1, "rb").read() == open(t2, "rb").read()


def test_example_files_reparse(tmp_path, capsys):
    from dyntwist.cli import (
        comodule_from_json,
        comodule_to_json,
        hopf_from_json,
        hopf_to_json,
        read_json,
        twist_from_json,
        twist_to_json,
    )
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    doc = read_json(os.path.join(out, "e1_hopf.json"))
    h = hopf_from_json(doc)
    assert hopf_to_json(h) == doc
    kdoc = read_json(os.path.join(out, "e1_comodule.json"))
    k = comodule_from_json(kdoc, h)
    assert comodule_to_json(k) == kdoc
    sdoc = read_json(os.path.join(out, "e1_base.json"))
    s = comodule_from_json(sdoc, h)
    twist_path = os.path.join(out, "twist.json")
    run(["compute-twist", os.path.join(out, "e1_datum.json"), "--out", twist_path])
    tdoc = read_json(twist_path)
    t = twist_from_json(tdoc, h, s)
    assert twist_to_json(t) == tdoc


def test_stab_command(tmp_path, capsys):
    from dyntwist.cli import module_to_json, write_json
    from dyntwist.datum import MonomialDatum
    from dyntwist.monomial import make_t_module
    from dyntwist.rep import trivial_module
    from conftest import e1_spec
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    datum = MonomialDatum(e1_spec())
    triv = trivial_module(datum.kb, name="triv")
    tv = datum.engine.t(triv)
    vpath = os.path.join(out, "v.json")
    write_json(vpath, module_to_json(tv))
    capsys.readouterr()
    rc = run(["stab", os.path.join(out, "e1_hopf.json"),
              os.path.join(out, "e1_comodule.json"), vpath, vpath])
    text = capsys.readouterr().out
    assert rc == 0
    assert "realizations agree in dimension (4 vs 4)" in text


def test_twisted_galois_command(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    twist_path = os.path.join(out, "twist.json")
    run(["compute-twist", os.path.join(out, "e1_datum.json"), "--out", twist_path])
    capsys.readouterr()
    rc = run(["twisted-galois", os.path.join(out, "e1_hopf.json"),
              os.path.join(out, "e1_base.json"), twist_path])
    assert rc == 0


def test_custom_example_needs_field(tmp_path, capsys):
    out = str(tmp_path)
    # zeta3 as mu requires a field of order divisible by 3: accepted
    rc = run(["example", "custom", "--out-dir", out, "--group-order", "3",
              "--n", "3", "--chi-gen", "[0,1]@3", "--mu", "1"])
    assert rc == 0


def test_custom_example_invalid_orders(tmp_path):
    rc = run(["example", "custom", "--out-dir", str(tmp_path),
              "--group-order", "4", "--n", "3", "--chi-gen", "-1", "--mu", "1"])
    assert rc == 2


def test_verify_gauge_command(tmp_path, capsys):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    twist_path = os.path.join(out, "twist.json")
    run(["compute-twist", os.path.join(out, "e1_datum.json"), "--out", twist_path])
    gauge_path = os.path.join(out, "gauge.json")
    with open(gauge_path, "w") as fh:
        json.dump({"format": "gauge", "order": 2, "coeffs": [[0, 0, "1"]]}, fh)
    capsys.readouterr()
    rc = run(["verify", "gauge", os.path.join(out, "e1_hopf.json"),
              os.path.join(out, "e1_base.json"), twist_path, twist_path,
              gauge_path])
    assert rc == 0


def test_max_dim_guard(tmp_path, monkeypatch):
    out = str(tmp_path)
    run(["example", "E1", "--out-dir", out])
    monkeypatch.setenv("DYNTWIST_MAX_DIM", "100")
    rc = run(["verify", "hopf", os.path.join(out, "e1_hopf.json")])
    assert rc == 2
    monkeypatch.delenv("DYNTWIST_MAX_DIM")
    assert run(["verify", "hopf", os.path.join(out, "e1_hopf.json")]) == 0
