import itertools
from fractions import Fraction

import pytest

from conftest import arrangement, poset
from dunklarr.dunkl import dunkl_decision
from dunklarr.errors import NotFeasible
from dunklarr.hirzebruch import q_evaluate
from dunklarr.stability import stability_report
from dunklarr.weightfinder import critq_system, find_dunkl_weights, sample_feasible


def _find(name, **kw):
    return find_dunkl_weights(arrangement(name), poset(name), **kw)


def test_braid4_feasible_with_ones_interior():
    r = _find("braid:4")
    assert r.feasible and r.dimension == 4 and r.slack > 0
    assert r.sample == (Fraction(1, 2),) * 6
    assert r.cone.contains([1] * 6)
    # the all-ones direction lies in the null space
    assert all(sum(row) == 0 for row in r.system.matrix)


def test_generic53_infeasible():
    r = _find("generic:5:3")
    assert not r.feasible and r.dimension == 0 and r.sample is None
    with pytest.raises(NotFeasible):
        sample_feasible(arrangement("generic:5:3"), r, 3)


def test_generic53_grid_search_finds_nothing():
    p = poset("generic:5:3")
    n, res = p.n, 20
    hits = 0
    for cut in itertools.combinations(range(1, res), n - 1):
        k = [b - a for a, b in zip((0,) + cut, cut + (res,))]
        a = [Fraction(x, res) for x in k]
        if not stability_report(p, a).stable:
            continue
        q = q_evaluate(p, a)
        hits += max(abs(x) for x in q.critQ_residual) < 1e-9
    assert hits == 0


def test_b3_samples_are_dunkl():
    name = "full_monomial_B:3"
    r = _find(name)
    assert r.feasible and r.dimension >= 2
    samples = sample_feasible(arrangement(name), r, 10, seed=1, poset=poset(name))
    assert len(set(samples)) == 10
    for w in samples:
        assert dunkl_decision(arrangement(name), w, poset=poset(name)).decision == "dunkl"


def test_float_mode_matches_exact():
    for name in ("braid:4", "full_monomial_B:3", "generic:5:3"):
        ex, fl = _find(name), _find(name, exact=False)
        assert ex.feasible == fl.feasible and ex.dimension == fl.dimension
        if ex.feasible:
            assert float(ex.slack) == pytest.approx(fl.slack, abs=1e-9)


def test_sampling_is_seeded():
    name = "braid:4"
    r = _find(name)
    a = sample_feasible(arrangement(name), r, 5, seed=3, poset=poset(name))
    b = sample_feasible(arrangement(name), r, 5, seed=3, poset=poset(name))
    assert a == b


def test_nullity_matches_float_svd():
    for name in ("braid:4", "braid:5", "dihedral_lines:5", "generic:6:3"):
        p = poset(name)
        assert critq_system(p).nullity == critq_system(p, exact=False).nullity
