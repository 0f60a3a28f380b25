import numpy as np
import pytest

from conftest import arrangement, poset
from dunklarr.arrangement import validate_arrangement
from dunklarr.balance import balance, metric_projections, unit_frame, weighted_frame_operator
from dunklarr.errors import NonPositiveWeight, NotEssentialOrReducible

STABLE = [
    ("braid:4", [1] * 6),
    ("braid:5", [1] * 10),
    ("full_monomial_B:3", [1] * 9),
    ("generic:5:3", [1, 2, 1, 2, 1]),
    ("dihedral_lines:5", [1, 2, 3, 2, 1]),
    ("braid:4", [2, 1, 1, 1, 1, 1]),
]


def _solve(name, w, **kw):
    return balance(arrangement(name), w, poset=poset(name), **kw)


def test_tight_normals_converge_immediately():
    r = _solve("dihedral_lines:3", [1, 1, 1])
    assert r.converged and r.iterations == 0
    assert r.c == pytest.approx(1.5)


def test_braid4_converges():
    r = _solve("braid:4", [1] * 6)
    assert r.converged and r.residual < 1e-12 and r.iterations <= 10000
    assert r.c == 2
    assert np.allclose(r.metric, r.metric.conj().T)
    assert np.linalg.eigvalsh(r.metric).min() > 0


def test_unstable_input_diverges_with_certificate():
    r = _solve("dihedral_lines:3", [3, 1, 1])
    assert r.status == "diverged"
    assert r.certificate.flat.members == (0,)


def test_unstable_without_precheck_does_not_converge():
    r = _solve("dihedral_lines:3", [3, 1, 1], precheck=False, max_iter=3000)
    assert not r.converged
    assert r.certificate is not None and r.certificate.flat.members == (0,)


@pytest.mark.parametrize("name,w", STABLE)
def test_balanced_fixed_point_in_both_gauges(name, w):
    tol = 1e-12
    r = _solve(name, w, tol=tol)
    assert r.converged
    a = np.array(w, dtype=float)
    d = arrangement(name).dim
    s = weighted_frame_operator(r.balanced_frame, a)
    assert np.linalg.norm(s - r.c * np.eye(d)) / r.c < 10 * tol
    # independent check in original coordinates through the metric; the
    # change of gauge costs a factor of cond(M)
    normals = arrangement(name).complex_normals()
    total = sum(ai * p for ai, p in zip(a, metric_projections(normals, r.metric)))
    assert np.linalg.norm(total - r.c * np.eye(d)) / r.c < 10 * tol * np.linalg.cond(r.metric)
    # gauge relation: M^{-1} v_i is M-orthogonal to H_i
    minv = np.linalg.inv(r.metric)
    for v in normals:
        w_perp = minv @ v
        for x in np.linalg.svd(v.conj()[None, :])[2][1:].conj():  # basis of H_i
            assert abs(w_perp.conj() @ r.metric @ x) < 1e-9 * np.linalg.norm(w_perp)


def _trace_normalized(m):
    return m / np.trace(m).real


def test_uniqueness_up_to_scale():
    rng = np.random.default_rng(3)
    metrics = []
    for _ in range(2):
        g0 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        r = _solve("braid:4", [1] * 6, g0=g0)
        assert r.converged
        metrics.append(_trace_normalized(r.metric))
    assert np.linalg.norm(metrics[0] - metrics[1]) < 1e-8


def test_equivariance_of_balanced_configuration():
    name, w = "braid:5", [1, 2, 1, 3, 1, 2, 2, 1, 1, 1]
    arr = arrangement(name)
    rng = np.random.default_rng(11)
    t = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    moved = validate_arrangement(4, [t @ v for v in arr.complex_normals()], "float")
    r1 = _solve(name, w)
    r2 = balance(moved, w)
    a = np.array(w, dtype=float)

    def gram(r):
        g = np.abs(r.balanced_frame.conj() @ r.balanced_frame.T) ** 2
        return np.outer(a, a) * g

    assert np.max(np.abs(gram(r1) - gram(r2))) < 1e-8


@pytest.mark.parametrize("name,w", STABLE)
def test_residual_trend(name, w):
    r = _solve(name, w)
    tr = r.trace
    assert tr[-1] < tr[0] or len(tr) == 1
    ups = sum(b > a * (1 + 1e-6) for a, b in zip(tr, tr[1:]))
    assert ups <= len(tr) // 10


def test_unit_frame_rows_are_unit():
    arr = arrangement("braid:4")
    u = unit_frame(arr.complex_normals(), np.diag([1, 2, 3]).astype(complex))
    assert np.allclose(np.linalg.norm(u, axis=1), 1)


def test_input_errors():
    with pytest.raises(NotEssentialOrReducible):
        balance(validate_arrangement(2, [[1, 0], [0, 1]]), [1, 1])
    with pytest.raises(NonPositiveWeight):
        balance(arrangement("braid:4"), [1, 1, 1, 0, 1, 1])


@pytest.mark.parametrize("eps", [1e-2, 1e-4, 1e-6])
def test_near_boundary_still_converges(eps):
    w = [1 - eps, 0.5 + eps / 2, 0.5 + eps / 2]
    r = _solve("dihedral_lines:3", w)
    assert r.converged and r.iterations < 100
    assert r.metric_residual < 1e-10


@pytest.mark.parametrize("name,w", STABLE[:4])
def test_plain_scaling_agrees_with_accelerated(name, w):
    plain = _solve(name, w, accelerate=False)
    fast = _solve(name, w)
    assert plain.converged and fast.converged
    assert plain.iterations >= fast.iterations
    diff = _trace_normalized(plain.metric) - _trace_normalized(fast.metric)
    assert np.linalg.norm(diff) < 1e-8


def test_plain_scaling_residual_trend():
    tr = _solve("generic:5:3", [1, 2, 1, 2, 1], accelerate=False).trace
    assert all(b <= a * (1 + 1e-9) for a, b in zip(tr, tr[1:]))
