import json

import pytest

from src.catalog.config import SessionConfig
from src.errors import VerificationFailed
from src.hopf.hopf_data import HopfData
from src.verify.report import VerifyReport, merge_reports
from src.verify.suites import (
    HOPF_SUITE,
    verify_bundle,
    verify_confluence,
    verify_hopf,
    verify_same_hopf,
)


@pytest.fixture
def mixed_report():
    report = VerifyReport("demo")
    report.add("suite b", "second", "n=1", True)
    report.add("suite a", "first", "n=2", False, (0, 1), "x*y")
    return report


def test_report_status(mixed_report):
    assert not mixed_report.ok
    assert mixed_report.suites() == ["suite a", "suite b"]
    assert [r.check for r in mixed_report.failures] == ["first"]
    assert mixed_report.summary_lines() == ["suite a: FAIL", "suite b: pass"]


def test_report_text_shows_witnesses(mixed_report):
    text = mixed_report.to_text()
    assert text.splitlines()[0] == "demo: FAIL"
    assert "[FAIL] first (n=2)" in text
    assert "witness (0, 1): x*y" in text
    assert "[pass] second" not in text
    assert "[pass] second (n=1)" in mixed_report.to_text(verbose=True)


def test_report_records_are_json_lines(mixed_report):
    lines = mixed_report.to_records().splitlines()
    records = [json.loads(line) for line in lines]
    assert [r["check"] for r in records] == ["first", "second"]
    assert records[0]["passed"] is False
    assert records[0]["witness"] == "(0, 1)"


def test_empty_report_records():
    assert json.loads(VerifyReport("nothing").to_records()) == {"subject": "nothing", "passed": True, "checks": 0}


def test_require_raises_with_the_report(mixed_report):
    with pytest.raises(VerificationFailed) as info:
        mixed_report.require()
    assert info.value.report is mixed_report


def test_merge_keeps_every_record(mixed_report):
    merged = merge_reports("all", [mixed_report, VerifyReport("empty")])
    assert merged.subject == "all"
    assert len(merged.records) == 2


def test_wrong_antipode_is_caught_with_a_witness(z2prime):
    host = z2prime.hopf
    broken = HopfData(
        z2prime.pres, host.coproduct_table, host.counit_table, {0: {(): z2prime.ctx.one}}, name="broken"
    )
    report = verify_hopf(broken, 2)
    failures = [r for r in report.failures if r.check == "antipode"]
    assert failures
    assert failures[0].suite == HOPF_SUITE
    assert failures[0].witness == (0,)


def test_confluence_report(aq2):
    assert verify_confluence(aq2.pres, 3).ok


def test_same_hopf_needs_the_same_generators(glq2, z2prime):
    report = verify_same_hopf(glq2.hopf, z2prime.hopf, 2)
    assert not report.ok
    assert report.failures[0].check == "same generators"


def test_same_hopf_against_itself(z2prime):
    assert verify_same_hopf(z2prime.hopf, z2prime.hopf, 2).ok


def test_bundle_gates(aq2):
    report = verify_bundle(aq2, SessionConfig().with_degrees(2))
    assert report.ok, report.to_text()
    assert {"braided Hopf axioms", "braiding", "coaction", "confluence"} <= set(report.suites())


def test_host_bundle_gates(z2prime):
    report = verify_bundle(z2prime, SessionConfig().with_degrees(2), workers=1)
    assert report.ok
    assert {"Hopf axioms", "dual quasitriangular", "quasitriangular"} <= set(report.suites())
