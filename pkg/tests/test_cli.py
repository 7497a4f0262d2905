import json

import pytest

from ncross.cli import main


def rat(n, d=1):
    return {"ring": "rational", "num": n, "den": d}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def compute(capsys, tmp_path, op, payload):
    path = write(tmp_path, "in.json", payload)
    code = main(["compute", "--op", op, "--input", path])
    return code, capsys.readouterr().out


def test_cross_ratio_four_thirds(capsys, tmp_path):
    vecs = [{"x1": rat(p), "x2": rat(1)} for p in (0, 1, 2, 3)]
    code, out = compute(capsys, tmp_path, "cross_ratio", {"vectors": vecs})
    assert code == 0
    assert json.loads(out) == {"ring": "rational", "num": 4, "den": 3}


def test_quasidet_identity(capsys, tmp_path):
    m = {"entries": [[rat(1), rat(0)], [rat(0), rat(1)]]}
    code, out = compute(capsys, tmp_path, "quasidet",
                        {"matrix": m, "p": 0, "q": 0})
    assert code == 0
    assert json.loads(out) == {"ring": "rational", "num": 1, "den": 1}


def test_malformed_json_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{ not json")
    code = main(["compute", "--op", "cross_ratio", "--input", str(path)])
    assert code == 2
    assert "malformed JSON at line" in capsys.readouterr().err


def test_unknown_op_exit_2(capsys, tmp_path):
    path = write(tmp_path, "in.json", {})
    code = main(["compute", "--op", "frobnicate", "--input", path])
    assert code == 2
    assert "unknown op" in capsys.readouterr().err


def test_operation_error_exit_1(capsys, tmp_path):
    # two points instead of three: structured error object, exit 1
    pts = [{"x1": rat(0), "x2": rat(0)}, {"x1": rat(1), "x2": rat(1)}]
    code, out = compute(capsys, tmp_path, "collinear", {"points": pts})
    assert code == 1
    err = json.loads(out)
    assert err["error"] == "ValueError"
    assert "3 points" in err["message"]


def test_degenerate_input_exit_1(capsys, tmp_path):
    # coincident vectors make the cross-ratio undefined
    v = {"x1": rat(1), "x2": rat(1)}
    code, out = compute(capsys, tmp_path, "cross_ratio", {"vectors": [v] * 4})
    assert code == 1
    assert "error" in json.loads(out)


def test_leapfrog_compute(capsys, tmp_path):
    pts = [rat(-1), rat(0), rat(1), rat(3), rat(-3)]
    code, out = compute(capsys, tmp_path, "leapfrog", {"points": pts})
    assert code == 0
    assert json.loads(out) == {"compatible": True}


def test_pentagram_classical_compute(capsys, tmp_path):
    code, out = compute(capsys, tmp_path, "pentagram_classical",
                        {"points": [rat(p) for p in range(5)]})
    assert code == 0
    doc = json.loads(out)
    assert [c["num"] for c in doc["y"]] == [3, 1, 8, 1, 3]
    assert [c["den"] for c in doc["y"]] == [1, 2, 1, 2, 1]
    assert doc["residuals"] == [0.0] * 5


def test_missing_subcommand_exit_2(capsys):
    assert main([]) == 2


def test_bad_flag_exit_2(capsys):
    assert main(["verify", "--suite", "menelaus", "--ring", "octonion"]) == 2


def test_list_suites(capsys):
    assert main(["list-suites"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 18
    assert any(line.startswith("plucker-properties") for line in lines)


def test_verify_pass_json(capsys, tmp_path):
    out_path = tmp_path / "rep.json"
    code = main(["verify", "--suite", "dv-equivalence", "--ring", "quaternion",
                 "--trials", "25", "--seed", "7", "--out", str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["suite"] == "dv-equivalence"
    assert doc["ring"] == "quaternion"
    assert doc["pass"] is True
    assert doc["trials_run"] >= 24
    assert doc["max_residual"] <= 1e-9


def test_verify_text_format(capsys):
    code = main(["verify", "--suite", "leapfrog", "--ring", "rational",
                 "--trials", "10", "--format", "text"])
    assert code == 0
    out = capsys.readouterr().out
    assert "pass          True" in out


def test_verify_fail_exit_1(capsys):
    # an impossible tolerance forces failures
    code = main(["verify", "--suite", "crossratio-cocycles",
                 "--ring", "quaternion", "--trials", "10", "--tol", "1e-30"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is False
    assert doc["failures"] or doc["notes"]


def test_verify_unknown_suite_exit_1(capsys):
    assert main(["verify", "--suite", "no-such-suite", "--trials", "5"]) == 1
    assert "UnknownSuite" in capsys.readouterr().err


def test_verify_unsupported_ring_exit_1(capsys):
    code = main(["verify", "--suite", "pentagram-classical",
                 "--ring", "quaternion", "--trials", "5"])
    assert code == 1
    assert "UnsupportedRingForSuite" in capsys.readouterr().err


def test_verify_deterministic_output(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code = main(["verify", "--suite", "plucker-properties",
                     "--ring", "quaternion", "--trials", "30",
                     "--seed", "11", "--out", str(p)])
        assert code == 0
    docs = [json.loads(p.read_text()) for p in paths]
    for d in docs:
        d.pop("wall_time")
    assert docs[0] == docs[1]


def test_verify_parallel_matches_serial(capsys, tmp_path):
    docs = []
    for workers in ("1", "4"):
        p = tmp_path / f"w{workers}.json"
        main(["verify", "--suite", "crossratio-cocycles", "--ring",
              "quaternion", "--trials", "40", "--seed", "3",
              "--workers", workers, "--out", str(p)])
        doc = json.loads(p.read_text())
        doc.pop("wall_time")
        docs.append(doc)
    assert docs[0] == docs[1]
