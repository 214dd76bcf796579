from __future__ import annotations

import json
import sys

import pytest

from scripts.pbwforge import main
from src.cli import dump_report, load_document, make_job, run_job, write_report
from src.cli.io import document_to_data
from src.errors import InputError
from src.models import DeformationDocument, ErrorReport, WedgeReport
from src.pbwcheck import check_J1
from src.utils.paths import get_mocks_dir
from src.utils.settings import get_settings, max_threads


def mock_file(name: str):
    return get_mocks_dir() / "algebras" / f"{name}.json"


# ---------- job validation ----------

def test_verify_needs_input():
    with pytest.raises(InputError) as info:
        make_job(command="verify")
    assert "needs an input document" in str(info.value)


def test_unknown_family_is_rejected():
    with pytest.raises(InputError):
        make_job(command="solve-as", family="Q")


def test_build_wedge_needs_input_or_example():
    with pytest.raises(InputError):
        make_job(command="build-wedge")
    assert make_job(command="build-wedge", family="heisenberg").input is None


def test_maxdeg_range_is_checked():
    with pytest.raises(InputError) as info:
        make_job(command="verify", input=mock_file("so3"), maxdeg=40)
    assert info.value.path == "maxdeg"


def test_default_report_name():
    job = make_job(command="verify", input=mock_file("so3"))
    assert job.default_out().name == "verify-so3.json"
    assert job.rng_seed == get_settings().seed


# ---------- commands ----------

def test_verify_so3_exits_zero():
    code, report = run_job(make_job(command="verify", input=mock_file("so3"), maxdeg=4))
    assert code == 0
    assert report.verdict == "pass"


def test_verify_counterexample_exits_one():
    code, report = run_job(make_job(command="verify", input=mock_file("counterexample"), maxdeg=4))
    assert code == 1
    assert report.dims.verdict == "fail"


def test_bad_alpha_shape_names_the_row():
    code, report = run_job(make_job(command="verify", input=mock_file("bad_alpha_shape")))
    assert code == 2
    assert isinstance(report, ErrorReport)
    assert report.kind == "input"
    assert report.path == "alpha.0.matrix.1"


def test_invalid_json_reports_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "v": 3,\n  oops\n}\n', encoding="utf-8")
    code, report = run_job(make_job(command="verify", input=path))
    assert code == 2
    assert report.path == "line 3"


def test_missing_file_is_input_error(tmp_path):
    code, report = run_job(make_job(command="verify", input=tmp_path / "absent.json"))
    assert code == 2
    assert report.error_type == "InputError"


def test_field_override_is_applied():
    data = document_to_data(load_document(mock_file("so3")), conductor=5)
    assert data.field_spec.conductor == 5


def test_hilbert_rejects_symbolic_documents():
    code, report = run_job(make_job(command="hilbert", input=mock_file("type_e_symbolic")))
    assert code == 2
    assert report.path == "parameters"


def test_hilbert_type_e():
    code, report = run_job(make_job(command="hilbert", input=mock_file("type_e_undeformed"), maxdeg=4))
    assert code == 0
    assert report.rows["A"] == [1, 2, 4, 6, 9]


def test_build_wedge_refuses_non_jacobi_bracket():
    code, report = run_job(make_job(command="build-wedge", input=mock_file("wedge_even_nonjacobi")))
    assert code == 1
    assert isinstance(report, WedgeReport)
    assert report.refusal.startswith("JacobiError")
    assert report.document is None


def test_build_wedge_document_can_be_verified(tmp_path):
    code, report = run_job(make_job(command="build-wedge", input=mock_file("wedge_odd"), maxdeg=3, margin=1))
    assert code == 0
    assert report.parity == "odd"
    path = tmp_path / "wedge.json"
    path.write_text(json.dumps(report.document.model_dump(mode="json")), encoding="utf-8")
    data = document_to_data(load_document(path))
    assert data.dim_R == 10
    assert check_J1(data).passed


def test_build_wedge_small_v_override(tmp_path):
    path = tmp_path / "small.json"
    path.write_text(json.dumps({"v": 3, "N": 3, "l": {"x": "1"}}), encoding="utf-8")
    code, report = run_job(make_job(command="build-wedge", input=path))
    assert code == 1
    assert report.refusal.startswith("DimensionHypothesisError")
    code, report = run_job(make_job(command="build-wedge", input=path, allow_small_v=True, maxdeg=3))
    assert report.refusal is None
    assert len(report.warnings) == 1


# ---------- reports ----------

def test_write_report_is_atomic_and_sorted(reports_dir):
    report = ErrorReport(command="verify", kind="input", error="x", error_type="InputError", path="v")
    out = write_report(report, reports_dir / "r.json")
    text = out.read_text(encoding="utf-8")
    assert text == dump_report(report)
    assert text.endswith("\n")
    keys = list(json.loads(text))
    assert keys == sorted(keys)
    assert [p.name for p in reports_dir.iterdir()] == ["r.json"]


def test_document_loads_alpha_blocks():
    doc = load_document(mock_file("type_e_deformed"))
    assert isinstance(doc, DeformationDocument)
    assert len(doc.alpha) == 2


# ---------- settings ----------

def test_thread_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PBWFORGE_THREADS", "3")
    assert max_threads() == 3
    monkeypatch.setenv("PBWFORGE_THREADS", "many")
    with pytest.raises(InputError):
        max_threads()
    monkeypatch.setenv("PBWFORGE_THREADS", "0")
    with pytest.raises(InputError):
        max_threads()


def test_settings_defaults():
    settings = get_settings()
    assert settings.default_margin(3) == 3 + settings.margin_offset
    assert settings.default_degbound(3) == 6 + settings.degbound_offset


# ---------- script ----------

def test_script_writes_report(tmp_path, monkeypatch):
    out = tmp_path / "so3.json"
    monkeypatch.setattr(sys, "argv", ["pbwforge.py", "verify", str(mock_file("so3")), "--maxdeg", "3",
                                      "--out", str(out)])
    assert main() == 0
    assert json.loads(out.read_text(encoding="utf-8"))["verdict"] == "pass"


def test_script_rejects_bad_options(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["pbwforge.py", "verify"])
    assert main() == 2


@pytest.mark.slow
def test_selftest_passes(reports_dir):
    code, report = run_job(make_job(command="selftest", out=reports_dir / "selftest.json"))
    assert code == 0, [item for item in report.items if item.verdict == "fail"]
    assert len(report.items) == 11


def test_solve_as_report_is_byte_identical_to_golden(reports_dir, monkeypatch, golden):
    out = reports_dir / "as_E.json"
    monkeypatch.setattr(sys, "argv", ["pbwforge.py", "solve-as", "--family", "E", "--out", str(out)])
    assert main() == 0
    golden("as_E.json", out.read_text(encoding="utf-8"))
