from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog as scipy_linprog

from dunklarr import simplex


def test_small_exact():
    # max x + y, x + 2y <= 4, 3x + y <= 6
    r = simplex.linprog([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert r.status == simplex.OPTIMAL
    assert r.x == (Fraction(8, 5), Fraction(6, 5)) and r.value == Fraction(14, 5)


def test_free_variables_and_equalities():
    # max -x, x + y = 1, y <= 3 -> x = -2
    r = simplex.linprog([-1, 0], [[0, 1]], [3], [[1, 1]], [1])
    assert r.status == simplex.OPTIMAL and r.x == (-2, 3)


def test_infeasible_and_unbounded():
    assert simplex.linprog([1], [[1], [-1]], [1, -2]).status == simplex.INFEASIBLE
    assert simplex.linprog([1, 0], [[0, 1]], [1]).status == simplex.UNBOUNDED


def test_redundant_equalities():
    r = simplex.linprog([1, 1], [[1, 0], [0, 1]], [5, 5], [[1, -1], [2, -2]], [0, 0])
    assert r.status == simplex.OPTIMAL and r.value == 10


@pytest.mark.parametrize("exact", [True, False])
def test_against_scipy(exact):
    rng = np.random.default_rng(5)
    for _ in range(40):
        nv, m = int(rng.integers(2, 5)), int(rng.integers(1, 6))
        A = rng.integers(-5, 6, size=(m, nv))
        b = rng.integers(-3, 10, size=m)
        box = np.vstack([np.eye(nv), -np.eye(nv)])
        A_ub = np.vstack([A, box]).astype(int)
        b_ub = np.concatenate([b, [10] * (2 * nv)]).astype(int)
        c = rng.integers(-5, 6, size=nv)
        eq = rng.random() < 0.5
        A_eq = [rng.integers(-3, 4, size=nv).tolist()] if eq else []
        b_eq = [int(rng.integers(-3, 4))] if eq else []
        ours = simplex.linprog(c.tolist(), A_ub.tolist(), b_ub.tolist(), A_eq, b_eq, exact=exact)
        ref = scipy_linprog(-c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq or None, b_eq=b_eq or None,
                            bounds=[(None, None)] * nv, method="highs")
        if ref.status == 2:
            assert ours.status == simplex.INFEASIBLE
            continue
        assert ref.status == 0 and ours.status == simplex.OPTIMAL
        assert float(ours.value) == pytest.approx(-ref.fun, abs=1e-8)
        x = np.array([float(v) for v in ours.x])
        assert np.all(A_ub @ x <= b_ub + 1e-9)
