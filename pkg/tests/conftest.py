"""Shared fixtures and exact-arithmetic helpers for the test suite."""

import random
from fractions import Fraction

import pytest

from artifact.exactalg import FieldSpec, QuadExt, RatFunc, UPoly

_GATE_RESULTS = {}


def pytest_runtest_logreport(report):
    """Record acceptance-gate outcomes for the end-of-run summary."""
    if report.when != "call":
        return
    nodeid = report.nodeid.replace("\\", "/")
    if "test_acceptance.py::test_gate_" in nodeid:
        _GATE_RESULTS[nodeid.split("::")[-1]] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _GATE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance gate")
    for name, (outcome, duration) in sorted(_GATE_RESULTS.items()):
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{tag}  {name}  ({duration:.2f} s)")


@pytest.fixture(scope="session")
def F1() -> FieldSpec:
    return FieldSpec(1)


@pytest.fixture(scope="session")
def F2() -> FieldSpec:
    return FieldSpec(2)


@pytest.fixture(scope="session")
def rt2(F2) -> QuadExt:
    return F2.surd()


def rand_fraction(rng: random.Random, span: int = 6) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, 4)
    return Fraction(num, den)


def rand_scalar(
    rng: random.Random, field: FieldSpec, span: int = 6, nonzero: bool = False
) -> QuadExt:
    while True:
        b = rand_fraction(rng, span) if field.d != 1 else Fraction(0)
        value = QuadExt(rand_fraction(rng, span), b, field.d)
        if not nonzero or value:
            return value


def rand_upoly(
    rng: random.Random,
    field: FieldSpec,
    max_degree: int = 4,
    nonzero: bool = False,
) -> UPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [rand_scalar(rng, field) for _ in range(degree + 1)]
    p = UPoly(coeffs, field.d)
    if nonzero and p.is_zero():
        return rand_upoly(rng, field, max_degree, nonzero=True)
    return p


def rand_ratfunc(
    rng: random.Random, field: FieldSpec, max_degree: int = 3
) -> RatFunc:
    num = rand_upoly(rng, field, max_degree)
    den = rand_upoly(rng, field, max_degree, nonzero=True)
    return RatFunc(num, den)
