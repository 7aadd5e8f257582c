"""Shared fixtures: meshes, rules, and solved pipelines reused across tests."""

import numpy as np
import pytest

from diskbem import (
    assemble,
    discretize_circle,
    error_stats,
    evaluate_field,
    gauss_legendre,
    get_problem,
    interior_grid,
    solve_flux,
)


@pytest.fixture(scope="session")
def rule8():
    return gauss_legendre(8)


@pytest.fixture(scope="session")
def mesh30():
    return discretize_circle(30)


@pytest.fixture(scope="session")
def problem1():
    return get_problem(1)


@pytest.fixture(scope="session")
def grid11():
    return interior_grid(11)


@pytest.fixture(scope="session")
def system30(mesh30, problem1, rule8):
    return assemble(mesh30, problem1, rule8)


@pytest.fixture(scope="session")
def solution30(system30):
    return solve_flux(system30)


@pytest.fixture(scope="session")
def report30(solution30, grid11, problem1, rule8):
    return evaluate_field(solution30, grid11, problem1, rule8)


@pytest.fixture(scope="session")
def refinement_errors(problem1, grid11, rule8):
    """Interior max_abs for problem 1 over n in {15, 30, 60, 120} at m = 11."""
    errors = {}
    for n in (15, 30, 60, 120):
        mesh = discretize_circle(n)
        solution = solve_flux(assemble(mesh, problem1, rule8))
        report = evaluate_field(solution, grid11, problem1, rule8)
        errors[n] = error_stats(report).max_abs
    return errors


@pytest.fixture(scope="session")
def row_identity_errors(problem1, rule8):
    """max_k |c + sum_j H[k, j]| over n in {15, 30, 60, 120}."""
    out = {}
    for n in (15, 30, 60, 120):
        system = assemble(discretize_circle(n), problem1, rule8)
        out[n] = float(np.max(np.abs(system.c + system.H.sum(axis=1))))
    return out
