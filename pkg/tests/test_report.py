import pytest
from pydantic import ValidationError

from src.algebra import AlgebraElement
from src.inequalities import CheckReport, ReportBuilder, report_tol


def test_report_tol_scales_with_largest_quantity():
    assert report_tol(0.0, 0.5) == pytest.approx(5e-8)
    assert report_tol(1e3, -2e3) == pytest.approx(2e-4)
    assert report_tol(float("inf"), 1.0) == pytest.approx(1e-7)
    assert report_tol(10.0, rel=1e-3, abs_=0.0) == pytest.approx(1e-2)


def test_builder_records_slacks(nilpotent):
    b = ReportBuilder("demo", nilpotent)
    b.quantity("a", 1.0)
    b.le("a<=b", 1.0, 2.0)
    b.eq("a=c", 1.0, 1.0 + 1e-12)
    b.flag("informational", False)
    report = b.build()
    assert report.passed and report.status == "pass"
    assert report.slacks["a<=b"] == pytest.approx(1.0)
    assert report.slacks["a=c"] == pytest.approx(-1e-12)
    assert report.inputs == [nilpotent.digest()]
    assert report.worst_slack == pytest.approx(-1e-12)


def test_failed_requirement_fails_the_report():
    b = ReportBuilder("demo", AlgebraElement.identity(1))
    b.le("ok", 0.0, 1.0)
    b.require("identity", False)
    report = b.build()
    assert not report.passed
    assert report.status == "fail"


def test_negative_slack_beyond_tolerance_fails():
    b = ReportBuilder("demo")
    b.quantity("v", 1.0)
    b.le("v<=w", 1.0, 1.0 - 1e-6)
    report = b.build()
    assert not report.passed
    assert report.retolerate(1e-5).passed
    assert not report.retolerate(1e-8).passed


def test_report_validators_reject_inconsistent_records():
    with pytest.raises(ValidationError):
        CheckReport(name="x", slacks={"s": -1.0}, tol=1e-9, passed=True, status="pass")
    with pytest.raises(ValidationError):
        CheckReport(name="x", quantities={"q": float("nan")}, passed=True, status="pass")
    with pytest.raises(ValidationError):
        CheckReport(name="x", passed=True, status="fail")


def test_inapplicable_report_is_neither_pass_nor_fail():
    report = CheckReport.inapplicable("cor24", ["abc"], "x² ≠ 0")
    assert report.status == "inapplicable"
    assert not report.passed
    assert report.retolerate(1.0) is report
    assert report.details["reason"] == "x² ≠ 0"
