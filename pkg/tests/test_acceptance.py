"""Replications of recorded counts, dimensions and verdicts."""

import pytest

from core.exceptions import SpecError
from terracini.golden import GOLDEN, golden_names, run_golden
from terracini.models import GoldenCheck

FAST = ["cubic-veronese", "veronese-corollary", "threefold", "coloop-extension", "lines", "two-by-two"]
SLOW = ["table1", "laface", "nonnormal", "bolker-roth", "rigidity", "curves"]


def _assert_passed(report):
    failed = [(c.label, c.expected, c.actual) for c in report.checks if not c.passed]
    assert report.passed, failed
    assert not report.rechecked_symbolically


def test_every_entry_is_classified():
    assert sorted(FAST + SLOW) == sorted(golden_names())


@pytest.mark.parametrize("name", FAST)
def test_fast_replication(service, name):
    _assert_passed(run_golden(name, service))


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW)
def test_slow_replication(service, name):
    _assert_passed(run_golden(name, service))


def test_unknown_entry(service):
    with pytest.raises(SpecError):
        run_golden("no-such-example", service)


def test_mismatch_is_rechecked_symbolically(service, monkeypatch):
    calls = []

    def flaky(svc):
        calls.append(svc.cfg.verify_symbolic)
        return [GoldenCheck(label="value", expected=1, actual=1 if svc.cfg.verify_symbolic else 0,
                            passed=svc.cfg.verify_symbolic)]

    monkeypatch.setitem(GOLDEN, "flaky", flaky)
    report = run_golden("flaky", service)
    assert calls == [False, True]
    assert report.passed
    assert report.rechecked_symbolically


def test_persistent_mismatch_is_reported(service, monkeypatch):
    monkeypatch.setitem(GOLDEN, "broken", lambda svc: [GoldenCheck(label="value", expected=1, actual=2, passed=False)])
    report = run_golden("broken", service)
    assert not report.passed
    assert report.checks[0].actual == 2
