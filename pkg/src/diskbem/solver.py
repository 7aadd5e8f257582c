"""Direct solution of the assembled system and interior field evaluation.

With Dirichlet data u prescribed, the collocation system is solved for the
nodal fluxes q from G q = c u + H u by dense LU factorization with partial
pivoting.  The interior representation then reads

    u(p) = sum_j G_p[j] q_j - sum_j H_p[j] u_j,

where the influence rows G_p, H_p are the same element integrals evaluated at
the interior point p (whose free term is exactly 1, already folded in).  No
singular integrals arise for strictly interior points, but quadrature accuracy
degrades as p approaches the boundary; points closer than half an element
length are flagged rather than rejected.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .assembly import BemSystem, _frames, _regular_rows
from .geometry import BoundaryMesh, InteriorGrid
from .problems import TestProblem
from .quadrature import QuadratureRule

__all__ = [
    "REL_EXCLUSION_THRESHOLD",
    "PIVOT_THRESHOLD",
    "SolveError",
    "BoundarySolution",
    "FieldReport",
    "solve_flux",
    "near_boundary",
    "evaluate_interior",
    "evaluate_field",
]

# Exact values with magnitude below this threshold are excluded from relative
# error statistics (the ratio would be meaningless).
REL_EXCLUSION_THRESHOLD = 1e-12

# Smallest acceptable LU pivot magnitude before the system is declared singular.
PIVOT_THRESHOLD = 1e-12

_RESIDUAL_FACTOR = 1e-10


class SolveError(RuntimeError):
    """Dense solve failed; ``smallest_pivot`` carries the offending pivot."""

    def __init__(self, message: str, smallest_pivot: float | None = None):
        super().__init__(message)
        self.smallest_pivot = smallest_pivot


@dataclass(frozen=True)
class BoundarySolution:
    """Nodal Dirichlet data and the solved nodal fluxes on a mesh."""

    mesh: BoundaryMesh
    u_nodes: np.ndarray
    q_nodes: np.ndarray


@dataclass(frozen=True)
class FieldReport:
    """Interior evaluation against the exact solution.

    abs_err and rel_err are derived from u_bem and u_exact on construction;
    rel_err is NaN wherever |u_exact| < REL_EXCLUSION_THRESHOLD.
    near_boundary flags points within half an element length of the boundary.
    """

    points: np.ndarray
    u_bem: np.ndarray
    u_exact: np.ndarray
    near_boundary: np.ndarray
    abs_err: np.ndarray = field(init=False)
    rel_err: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=float).reshape(-1, 2)
        u_bem = np.asarray(self.u_bem, dtype=float).reshape(-1)
        u_exact = np.asarray(self.u_exact, dtype=float).reshape(-1)
        flags = np.asarray(self.near_boundary, dtype=bool).reshape(-1)
        if not (len(points) == len(u_bem) == len(u_exact) == len(flags)):
            raise ValueError("field report arrays must have matching lengths")
        abs_err = np.abs(u_bem - u_exact)
        rel_err = np.full_like(abs_err, np.nan)
        defined = np.abs(u_exact) >= REL_EXCLUSION_THRESHOLD
        rel_err[defined] = abs_err[defined] / np.abs(u_exact[defined])
        for name, arr in (
            ("points", points),
            ("u_bem", u_bem),
            ("u_exact", u_exact),
            ("near_boundary", flags),
            ("abs_err", abs_err),
            ("rel_err", rel_err),
        ):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self) -> int:
        return len(self.points)


def solve_flux(system: BemSystem) -> BoundarySolution:
    """Solve G q = (c + H) u for the nodal fluxes by LU with partial pivoting."""
    rhs = system.c * system.u_nodes + system.H @ system.u_nodes
    with warnings.catch_warnings():
        # an exactly singular G is reported through SolveError below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(system.G)
    smallest = float(np.min(np.abs(np.diag(lu))))
    if smallest < PIVOT_THRESHOLD:
        raise SolveError(
            f"influence matrix is numerically singular: smallest pivot {smallest:.3e}",
            smallest_pivot=smallest,
        )
    q = scipy.linalg.lu_solve((lu, piv), rhs)
    residual = float(np.max(np.abs(system.G @ q - rhs)))
    bound = _RESIDUAL_FACTOR * float(np.max(np.abs(rhs)))
    if residual > bound:
        raise SolveError(
            f"solve residual {residual:.3e} exceeds {bound:.3e}",
            smallest_pivot=smallest,
        )
    return BoundarySolution(system.mesh, system.u_nodes, q)


def near_boundary(mesh: BoundaryMesh, point) -> bool:
    """True when the point is within half an element length of the unit circle."""
    point = np.asarray(point, dtype=float)
    half_length = float(np.max(_frames(mesh.nodes)[2]))
    return bool(1.0 - np.hypot(point[0], point[1]) < half_length)


def evaluate_interior(solution: BoundarySolution, point, rule: QuadratureRule) -> float:
    """Evaluate the boundary-integral representation at a strictly interior point."""
    point = np.asarray(point, dtype=float)
    if np.hypot(point[0], point[1]) >= 1.0:
        raise ValueError(f"point {point.tolist()} is not strictly inside the unit disk")
    nodes = solution.mesh.nodes
    h_start, h_end, g_start, g_end = _regular_rows(nodes, point, rule)
    u = solution.u_nodes
    q = solution.q_nodes
    u_next = np.roll(u, -1)
    q_next = np.roll(q, -1)
    single_layer = float(np.sum(g_start * q + g_end * q_next))
    double_layer = float(np.sum(h_start * u + h_end * u_next))
    return single_layer - double_layer


def evaluate_field(
    solution: BoundarySolution,
    grid: InteriorGrid,
    problem: TestProblem,
    rule: QuadratureRule,
) -> FieldReport:
    """Evaluate the solution on a grid and compare with the exact field."""
    points = grid.points
    u_bem = np.array([evaluate_interior(solution, p, rule) for p in points])
    u_exact = np.asarray(problem.u(points), dtype=float)
    half_length = float(np.max(_frames(solution.mesh.nodes)[2]))
    flags = 1.0 - np.hypot(points[:, 0], points[:, 1]) < half_length
    return FieldReport(points, u_bem, u_exact, flags)
