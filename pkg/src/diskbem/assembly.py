"""Collocation assembly of the dense boundary-influence system.

For Dirichlet data u on the boundary, collocating the boundary integral
identity at every node gives

    c * u_k + sum_j H[k, j] * u_j = sum_j G[k, j] * q_j,

where q is the unknown outward normal flux, H accumulates flux-kernel element
integrals, G accumulates potential-kernel element integrals, and the free term
c is the interior-angle fraction of the polygon vertex.  For the regular n-gon
every vertex angle is pi*(n-2)/n, hence c = (n-2)/(2n), which is why assembly
insists on the uniform circle mesh.

Element integrals are regular Gauss-Legendre quadratures except where the
collocation node is an endpoint of the element:

* the flux kernel is orthogonal to its own chord there, so both H
  contributions are exactly zero and are written as exact zeros;
* the potential kernel has an integrable log singularity, replaced by the
  closed forms in :mod:`diskbem.quadrature` (``singular_g_pair``).

Entry H[k, j] receives contributions from the two elements sharing node j,
accumulated in element order, so two assemblies of the same inputs are
bitwise identical.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .geometry import BoundaryMesh
from .problems import TestProblem
from .quadrature import QuadratureRule, basis_end, basis_start, singular_g_pair

__all__ = [
    "BemSystem",
    "free_term",
    "element_h_contributions",
    "element_g_contributions",
    "assemble",
]

_TWO_PI = 2.0 * np.pi

# Distance below which a source point is snapped to an element endpoint and
# the integral is treated as singular.
ENDPOINT_SNAP = 1e-12


@dataclass(frozen=True)
class BemSystem:
    """Assembled dense system relating nodal potentials to nodal fluxes.

    H and G are n-by-n float64 arrays; row k collocates at node k.  c is the
    free-term coefficient shared by all rows of the uniform circle mesh, and
    u_nodes holds the Dirichlet data sampled at the nodes.
    """

    mesh: BoundaryMesh
    H: np.ndarray
    G: np.ndarray
    c: float
    u_nodes: np.ndarray

    @property
    def n(self) -> int:
        return self.mesh.n


def free_term(n: int) -> float:
    """Free-term coefficient at a vertex of the regular n-gon: (n-2)/(2n).

    This is the vertex interior angle pi*(n-2)/n divided by 2*pi, i.e. the
    fraction of a neighborhood of the vertex that lies inside the polygon.
    It tends to 1/2, the smooth-boundary value, as n grows.
    """
    if n < 3:
        raise ValueError(f"free term needs a polygon with n >= 3 vertices, got {n}")
    return (n - 2) / (2.0 * n)


# ----------------------------------------------------------------------
# element frames and regular-quadrature contributions
# ----------------------------------------------------------------------


def _frames(nodes: np.ndarray):
    """Midpoints, half-chords, jacobians and outward normals of all elements."""
    nxt = np.roll(nodes, -1, axis=0)
    mids = 0.5 * (nodes + nxt)
    halves = 0.5 * (nxt - nodes)
    jacs = np.hypot(halves[:, 0], halves[:, 1])
    deltas = nxt - nodes
    normals = np.column_stack([deltas[:, 1], -deltas[:, 0]]) / (2.0 * jacs[:, np.newaxis])
    return mids, halves, jacs, normals


def _regular_rows(nodes: np.ndarray, source: np.ndarray, rule: QuadratureRule):
    """Gauss contributions of every element to the collocation row at ``source``.

    Returns (h_start, h_end, g_start, g_end), each of shape (n,): the flux and
    potential integrals weighted by the shape functions of the element's first
    and second node.  Elements that contain ``source`` as an endpoint come out
    finite but meaningless here; ``assemble`` overwrites them.
    """
    mids, halves, jacs, normals = _frames(nodes)
    t = rule.points
    field = mids[np.newaxis, :, :] + t[:, np.newaxis, np.newaxis] * halves[np.newaxis, :, :]
    diff = field - source[np.newaxis, np.newaxis, :]
    r2 = np.sum(diff * diff, axis=-1)
    toward_normal = np.einsum("tej,ej->te", diff, normals)
    flux = -toward_normal / (_TWO_PI * r2)
    potential = -0.25 * np.log(r2) / np.pi
    w_start = (rule.weights * basis_start(t))[:, np.newaxis]
    w_end = (rule.weights * basis_end(t))[:, np.newaxis]
    h_start = jacs * np.sum(flux * w_start, axis=0)
    h_end = jacs * np.sum(flux * w_end, axis=0)
    g_start = jacs * np.sum(potential * w_start, axis=0)
    g_end = jacs * np.sum(potential * w_end, axis=0)
    return h_start, h_end, g_start, g_end


def _single_element(mesh: BoundaryMesh, i: int):
    n = mesh.n
    if not 0 <= i < n:
        raise IndexError(f"element index {i} out of range for {n} elements")
    first = mesh.nodes[i]
    second = mesh.nodes[(i + 1) % n]
    return first, second


def _check_regular_source(first, second, source, what: str) -> None:
    """Reject endpoint sources and warn when the source sits on the open chord."""
    source = np.asarray(source, dtype=float)
    if np.hypot(*(source - first)) <= ENDPOINT_SNAP or np.hypot(*(source - second)) <= ENDPOINT_SNAP:
        raise ValueError(
            f"{what}: source coincides with an element endpoint; "
            "use the singular closed form instead"
        )
    chord = second - first
    rel = source - first
    span2 = float(chord @ chord)
    s = float(rel @ chord) / span2
    perp = float(np.hypot(*(rel - s * chord)))
    if 0.0 < s < 1.0 and perp <= ENDPOINT_SNAP:
        warnings.warn(
            f"{what}: source lies on the element chord; the quadrature is "
            "near-singular and the result may lose accuracy",
            RuntimeWarning,
            stacklevel=3,
        )


def element_h_contributions(
    mesh: BoundaryMesh, i: int, source, rule: QuadratureRule
) -> tuple[float, float]:
    """Flux-kernel integrals of element i against a collocation point.

    Returns the pair destined for the element's first and second node.  The
    source must not be an element endpoint: that case is identically zero by
    chord-normal orthogonality, and the caller is expected to write the zeros.
    """
    first, second = _single_element(mesh, i)
    _check_regular_source(first, second, source, "element_h_contributions")
    pair = np.vstack([first, second])
    h_start, h_end, _, _ = _regular_rows(pair, np.asarray(source, dtype=float), rule)
    return float(h_start[0]), float(h_end[0])


def element_g_contributions(
    mesh: BoundaryMesh, i: int, source, rule: QuadratureRule
) -> tuple[float, float]:
    """Potential-kernel integrals of element i against a collocation point.

    If the source coincides with an element endpoint (within 1e-12) the
    closed-form singular pair is used, with the shape function peaking at the
    singular endpoint taking the near value.  Otherwise regular quadrature.
    """
    first, second = _single_element(mesh, i)
    source = np.asarray(source, dtype=float)
    length = float(np.hypot(*(second - first)))
    if np.hypot(*(source - first)) <= ENDPOINT_SNAP:
        g_near, g_far = singular_g_pair(length)
        return g_near, g_far
    if np.hypot(*(source - second)) <= ENDPOINT_SNAP:
        g_near, g_far = singular_g_pair(length)
        return g_far, g_near
    _check_regular_source(first, second, source, "element_g_contributions")
    pair = np.vstack([first, second])
    _, _, g_start, g_end = _regular_rows(pair, source, rule)
    return float(g_start[0]), float(g_end[0])


# ----------------------------------------------------------------------
# full system assembly
# ----------------------------------------------------------------------


def _require_uniform_circle(mesh: BoundaryMesh) -> None:
    """The free-term formula is a vertex-angle statement about the regular n-gon."""
    radii = np.hypot(mesh.nodes[:, 0], mesh.nodes[:, 1])
    if np.any(np.abs(radii - 1.0) > 1e-9):
        raise ValueError("assembly requires nodes on the unit circle")
    chords = np.hypot(*(np.roll(mesh.nodes, -1, axis=0) - mesh.nodes).T)
    expected = 2.0 * np.sin(np.pi / mesh.n)
    if np.any(np.abs(chords - expected) > 1e-9):
        raise ValueError("assembly requires equally spaced circle nodes")


def assemble(mesh: BoundaryMesh, problem: TestProblem, rule: QuadratureRule) -> BemSystem:
    """Build the dense H and G matrices and sample the Dirichlet data.

    Collocation row k uses node k as source.  The two elements adjacent to
    node k are singular for that row: their H contributions are exact zeros
    and their G contributions come from ``singular_g_pair``.  All remaining
    elements are integrated with ``rule``.
    """
    _require_uniform_circle(mesh)
    nodes = mesh.nodes
    n = mesh.n
    lengths = 2.0 * _frames(nodes)[2]
    element = np.arange(n)
    successor = (element + 1) % n

    H = np.zeros((n, n))
    G = np.zeros((n, n))
    for k in range(n):
        h_start, h_end, g_start, g_end = _regular_rows(nodes, nodes[k], rule)
        before = (k - 1) % n
        # elements sharing node k: flux integrals vanish by orthogonality
        h_start[k] = h_end[k] = 0.0
        h_start[before] = h_end[before] = 0.0
        # potential integrals: exact log moments, near value at the singular node
        g_near, g_far = singular_g_pair(lengths[k])
        g_start[k], g_end[k] = g_near, g_far
        g_near, g_far = singular_g_pair(lengths[before])
        g_start[before], g_end[before] = g_far, g_near
        np.add.at(H[k], element, h_start)
        np.add.at(H[k], successor, h_end)
        np.add.at(G[k], element, g_start)
        np.add.at(G[k], successor, g_end)

    u_nodes = np.asarray(problem.u(nodes), dtype=float)
    return BemSystem(mesh, H, G, free_term(n), u_nodes)
