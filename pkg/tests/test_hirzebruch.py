import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import poset
from dunklarr.arrangement import enumerate_flats, validate_arrangement
from dunklarr.catalog import generic, random_lines
from dunklarr.errors import WrongDimension
from dunklarr.hirzebruch import langer_statistic, local_weight, q_evaluate
from oracles import central_difference_grad

CATALOG = [
    "braid:4", "braid:5", "full_monomial_B:3", "generic:5:3", "generic:6:4",
    "dihedral_lines:3", "dihedral_lines:6",
]


def test_local_weight_examples():
    p = poset("braid:4")
    triple = next(f for f in p.flats if f.multiplicity == 3)
    assert local_weight([1] * 6, triple) == Fraction(3, 2)
    assert local_weight([Fraction(5, 2)] * 6, triple) == Fraction(15, 4)
    b3 = poset("full_monomial_B:3")
    a, b = Fraction(2, 7), Fraction(3, 5)
    w = [a] * 6 + [b] * 3  # +/- type first, coordinate hyperplanes last
    quad = [f for f in b3.of_rank(2) if f.multiplicity == 4]
    assert len(quad) == 3 and all(local_weight(w, f) == a + b for f in quad)


def test_braid4_unit_weights():
    q = q_evaluate(poset("braid:4"), [1] * 6)
    assert q.Q == 0
    assert q.s == (4,) * 6
    assert q.critQ_residual == (0,) * 6
    assert q.B == (1,) * 6
    assert len(q.local_weights) == 4


def test_generic_5_3():
    q = q_evaluate(poset("generic:5:3"), [1] * 5)
    assert q.Q == Fraction(-5, 3)
    assert q.B == (-1,) * 5
    assert q.critQ_residual == (Fraction(2, 3),) * 5


def test_braid4_nonuniform_residual():
    q = q_evaluate(poset("braid:4"), [2, 1, 1, 1, 1, 1])
    assert q.s[0] == 5
    assert q.critQ_residual[0] == 5 - Fraction(14, 3)


def _rand_vec(rng, n, positive=False):
    lo = 1 if positive else -30
    return [Fraction(rng.randint(lo, 30), rng.randint(1, 12)) for _ in range(n)]


@pytest.mark.parametrize("name", CATALOG)
def test_exact_identities(name):
    p = poset(name)
    d = p.dim
    rng = random.Random(name)
    for _ in range(50):
        a = _rand_vec(rng, p.n)
        q = q_evaluate(p, a)
        total = sum(a)
        assert all(si + gi == Fraction(d - 1, d) * total for si, gi in zip(q.s, q.grad))
        assert 2 * q.Q == sum(x * g for x, g in zip(a, q.grad))
        assert q.Q == Fraction(1, 2) * sum(x * (Fraction(d - 1, d) * total - si) for x, si in zip(a, q.s))
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert q_evaluate(p, [t * x for x in a]).Q == t * t * q.Q


@pytest.mark.parametrize("name", CATALOG)
def test_gradient_matches_finite_differences(name):
    p = poset(name)
    rng = random.Random(7)

    def Q(a):
        return q_evaluate(p, a).Q

    for _ in range(100):
        a = [rng.uniform(0.2, 3.0) for _ in range(p.n)]
        fd = central_difference_grad(Q, a)
        grad = q_evaluate(p, a).grad
        for g, f in zip(grad, fd):
            assert abs(g - f) <= 1e-6 * max(1.0, abs(g))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 8), st.integers(0, 10**6))
def test_plane_arrangements_have_vanishing_form(n, seed):
    p = enumerate_flats(random_lines(n, seed))
    rng = random.Random(seed)
    for _ in range(100):
        assert q_evaluate(p, _rand_vec(rng, n, positive=True)).Q == 0


def test_langer_braid4():
    s = langer_statistic(poset("braid:4"))
    assert s.sum_mult == 18 and s.bound == 18 and s.equality and s.max_mult_ok


def test_langer_generic():
    for n in range(3, 9):
        p = enumerate_flats(generic(n, 3, seed=n))
        s = langer_statistic(p)
        assert s.sum_mult == n * (n - 1)
        assert s.holds and s.equality == (n == 3)


def test_langer_gate_and_dimension():
    normals = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0], [0, 0, 1]]
    s = langer_statistic(enumerate_flats(validate_arrangement(3, normals)))
    assert not s.max_mult_ok
    with pytest.raises(WrongDimension):
        langer_statistic(poset("braid:5"))
