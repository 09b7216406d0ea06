import json
import os

import pytest

from euclid4.cli import main


def test_field_list(capsys):
    assert main(["field", "list"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 40
    assert out[0].startswith("K_1")


def test_field_info(capsys):
    assert main(["field", "info", "K_1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["expected_p1_p2"] == ["29", "17"]
    assert doc["field"]["m"] == "-1" and doc["field"]["n"] == "13"


def test_field_info_unknown(capsys):
    assert main(["field", "info", "K_99"]) == 2


def test_search_verify_roundtrip(tmp_path, capsys):
    cert = tmp_path / "k1.json"
    assert main(["search", "K_1", "--bound", "100", "--emit", str(cert)]) == 0
    capsys.readouterr()
    assert main(["verify", str(cert), "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "oracle-confirmed" in out

    doc = json.loads(cert.read_text())
    doc["orders"]["ord_eps_P2"] = str(int(doc["orders"]["ord_eps_P2"]) * 2)
    cert.write_text(json.dumps(doc))
    assert main(["verify", str(cert)]) == 1


def test_search_exhausted_exit_code(capsys):
    assert main(["search", "K_1", "--bound", "3"]) == 1
    assert "search exhausted" in capsys.readouterr().err


def test_search_conductor_label(tmp_path, capsys):
    cert = tmp_path / "c5.json"
    assert main(["search", "5", "--bound", "50", "--emit", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    assert doc["field"]["conductor"] == "5"


def test_search_default_cert_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("EUCLID_CERT_DIR", str(tmp_path))
    assert main(["search", "K_1", "--bound", "100"]) == 0
    files = os.listdir(tmp_path)
    assert files == ["K_1_29_17.json"]


def test_verify_missing_file(capsys):
    assert main(["verify", "/nonexistent/cert.json"]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_search_is_byte_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["search", "K_20", "--bound", "200", "--emit", str(a)]) == 0
    assert main(["search", "K_20", "--bound", "200", "--emit", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_reproduce_tables_subset_outputs(tmp_path, capsys):
    out = tmp_path / "reports"
    assert main(["reproduce-tables", "--out", str(out), "--bound", "1000"]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["total"] == 40
    assert summary["valid_certificates"] == 40
    assert summary["counts"]["Failed"] == 0
    assert (out / "K_1.json").exists() and (out / "61.json").exists()
    # every emitted certificate re-verifies
    assert main(["verify", str(out / "K_8.json")]) == 0
    # deterministic artifacts
    out2 = tmp_path / "reports2"
    assert main(["reproduce-tables", "--out", str(out2), "--bound", "1000"]) == 0
    assert (out / "summary.json").read_bytes() == (out2 / "summary.json").read_bytes()
    assert (out / "K_33.json").read_bytes() == (out2 / "K_33.json").read_bytes()
