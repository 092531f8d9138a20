from __future__ import annotations

import pytest

from levy_laplace import RationalOrder


@pytest.fixture
def half():
    return RationalOrder(1, 2)


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / abs(b)
