"""Benchmark boundary-value problems with known harmonic solutions.

Each problem supplies an exact harmonic function u on the closed unit disk,
its hand-differentiated gradient, and therefore the exact outward normal flux
on the unit circle, q(p) = grad_u(p) . p for |p| = 1.  Problem 4 is smooth but
carries enormous hyperbolic-function amplitudes, which makes it a deliberate
stress case for absolute accuracy.

All callables accept arrays of points with shape (..., 2) and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["TestProblem", "PROBLEM_IDS", "get_problem", "constant_problem"]

_PI = np.pi
_CSCH_6PI = 1.0 / np.sinh(6.0 * _PI)
_3COSH_4PI = 3.0 * np.cosh(4.0 * _PI)


@dataclass(frozen=True)
class TestProblem:
    """Exact solution u, its gradient, and the induced circle flux."""

    id: int
    u: Callable[[np.ndarray], np.ndarray]
    grad_u: Callable[[np.ndarray], np.ndarray]

    def q(self, points) -> np.ndarray:
        """Outward normal flux on the unit circle: grad_u(p) . p."""
        points = np.asarray(points, dtype=float)
        return np.sum(self.grad_u(points) * points, axis=-1)


def _split(points):
    points = np.asarray(points, dtype=float)
    return points[..., 0], points[..., 1]


def _u1(p):
    x, y = _split(p)
    return 1.0 + x * x - y * y


def _grad1(p):
    x, y = _split(p)
    return np.stack([2.0 * x, -2.0 * y], axis=-1)


def _u2(p):
    x, y = _split(p)
    return np.exp(y) * np.cos(x)


def _grad2(p):
    x, y = _split(p)
    ey = np.exp(y)
    return np.stack([-ey * np.sin(x), ey * np.cos(x)], axis=-1)


def _u3(p):
    x, y = _split(p)
    return 1.0 + np.sin(_PI * x) * np.sinh(_PI * y)


def _grad3(p):
    x, y = _split(p)
    return np.stack(
        [_PI * np.cos(_PI * x) * np.sinh(_PI * y), _PI * np.sin(_PI * x) * np.cosh(_PI * y)],
        axis=-1,
    )


def _u4(p):
    x, y = _split(p)
    return (
        1.0
        - _3COSH_4PI * np.sin(2.0 * _PI * x) * np.sinh(2.0 * _PI * (y - 2.0))
        + _CSCH_6PI * np.sin(3.0 * _PI * x) * np.sinh(3.0 * _PI * y)
    )


def _grad4(p):
    x, y = _split(p)
    gx = (
        -2.0 * _PI * _3COSH_4PI * np.cos(2.0 * _PI * x) * np.sinh(2.0 * _PI * (y - 2.0))
        + 3.0 * _PI * _CSCH_6PI * np.cos(3.0 * _PI * x) * np.sinh(3.0 * _PI * y)
    )
    gy = (
        -2.0 * _PI * _3COSH_4PI * np.sin(2.0 * _PI * x) * np.cosh(2.0 * _PI * (y - 2.0))
        + 3.0 * _PI * _CSCH_6PI * np.sin(3.0 * _PI * x) * np.cosh(3.0 * _PI * y)
    )
    return np.stack([gx, gy], axis=-1)


def _u5(p):
    x, y = _split(p)
    return (
        _PI * np.exp(y) * np.cos(x - _PI / 7.0)
        + np.exp(1.0 - _PI * x) * np.cos(_PI * y - 0.5 * _PI)
        + np.exp(5.0 * x) / 100.0 * np.cos(5.0 * y - 0.5 * _PI)
    )


def _grad5(p):
    x, y = _split(p)
    gx = (
        -_PI * np.exp(y) * np.sin(x - _PI / 7.0)
        - _PI * np.exp(1.0 - _PI * x) * np.cos(_PI * y - 0.5 * _PI)
        + 0.05 * np.exp(5.0 * x) * np.cos(5.0 * y - 0.5 * _PI)
    )
    gy = (
        _PI * np.exp(y) * np.cos(x - _PI / 7.0)
        - _PI * np.exp(1.0 - _PI * x) * np.sin(_PI * y - 0.5 * _PI)
        - 0.05 * np.exp(5.0 * x) * np.sin(5.0 * y - 0.5 * _PI)
    )
    return np.stack([gx, gy], axis=-1)


_CATALOG = {
    1: TestProblem(1, _u1, _grad1),
    2: TestProblem(2, _u2, _grad2),
    3: TestProblem(3, _u3, _grad3),
    4: TestProblem(4, _u4, _grad4),
    5: TestProblem(5, _u5, _grad5),
}

PROBLEM_IDS = tuple(sorted(_CATALOG))


def get_problem(problem_id: int) -> TestProblem:
    """Look up one of the benchmark problems by its 1-based id."""
    try:
        return _CATALOG[problem_id]
    except KeyError:
        raise ValueError(
            f"unknown problem id {problem_id!r}; available ids are {PROBLEM_IDS}"
        ) from None


def constant_problem() -> TestProblem:
    """u == 1 everywhere; its exact flux vanishes.  Used for identity checks."""

    def u(p):
        p = np.asarray(p, dtype=float)
        return np.ones(p.shape[:-1])

    def grad(p):
        p = np.asarray(p, dtype=float)
        return np.zeros(p.shape)

    return TestProblem(0, u, grad)
