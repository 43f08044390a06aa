from __future__ import annotations

import pytest

from ciforge import QQ, GeneratorSystem, PolynomialRing, ProjectivePoint, parse_polynomial


@pytest.fixture
def p3():
    return PolynomialRing(QQ, ("T0", "T1", "T2", "T3"))


@pytest.fixture
def ones(p3):
    return ProjectivePoint(tuple(QQ.scalar(1) for _ in range(4)))


@pytest.fixture
def twisted_cubic(p3):
    exprs = ("T0*T2 - T1^2", "T1*T3 - T2^2", "T0*T3 - T1*T2")
    return tuple(parse_polynomial(s, p3) for s in exprs)


@pytest.fixture
def twisted_cubic_system(p3, twisted_cubic):
    return GeneratorSystem(p3, twisted_cubic)
