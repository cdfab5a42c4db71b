"""Acceptance gate: the six criteria at full parameters, zero tolerance.

Each test prints one PASS/FAIL line (run pytest with -s or -v to see
them) and asserts the criterion outcome.  Conjecture evidence is
asserted too: at these parameters the conjectural congruences are
expected to hold, and a counterexample would be a reportable finding.
"""

import pytest

from qcong import suite


def _run(number, criterion):
    result = criterion("full")
    marker = "PASS" if result.ok and not result.findings else "FAIL"
    print(f"{marker} criterion {number}: {result.name} ({result.detail})")
    for line in result.failures:
        print(f"    failure: {line}")
    for line in result.findings:
        print(f"    finding (conjectural): {line}")
    return result


def test_criterion_1_exponent_table():
    result = _run(1, suite.criterion_exponent_table)
    assert result.ok, result.failures


def test_criterion_2_proven_congruences():
    result = _run(2, suite.criterion_proven_congruences)
    assert result.ok, result.failures


def test_criterion_3_exact_identities():
    result = _run(3, suite.criterion_exact_identities)
    assert result.ok, result.failures


def test_criterion_4_conjecture_evidence():
    result = _run(4, suite.criterion_conjecture_evidence)
    assert result.ok, result.failures
    assert not result.findings, result.findings


def test_criterion_5_classical():
    result = _run(5, suite.criterion_classical)
    assert result.ok, result.failures


def test_criterion_6_oracles():
    result = _run(6, suite.criterion_oracles)
    assert result.ok, result.failures
