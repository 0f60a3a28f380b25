import numpy as np
import pytest

from dunklarr.errors import NotPositiveDefinite
from dunklarr.frames import frame_operator, hpd_inv_sqrt, tightness_defect, welch_gap

MERCEDES = [[np.cos(t), np.sin(t)] for t in (np.pi / 2, np.pi / 2 + 2 * np.pi / 3, np.pi / 2 + 4 * np.pi / 3)]


def test_frame_operator_examples():
    assert np.allclose(frame_operator(np.eye(3)), np.eye(3))
    assert np.allclose(frame_operator([[1, 0], [1, 0]]), np.diag([2, 0]))
    assert np.allclose(frame_operator(MERCEDES), 1.5 * np.eye(2))


def test_frame_operator_convention():
    # S x = sum <x, v> v with <x, v> = v^* x
    rng = np.random.default_rng(0)
    v = rng.normal(size=(4, 3)) + 1j * rng.normal(size=(4, 3))
    x = rng.normal(size=3) + 1j * rng.normal(size=3)
    direct = sum(np.vdot(vi, x) * vi for vi in v)
    assert np.allclose(frame_operator(v) @ x, direct)


def test_welch_examples():
    g = welch_gap(np.eye(4))
    assert g.lhs == pytest.approx(4) and g.rhs == pytest.approx(4) and g.is_tight
    g = welch_gap([[1, 0], [1, 0]])
    assert (g.lhs, g.rhs, g.gap, g.is_tight) == (4, 2, 2, False)
    g = welch_gap(MERCEDES)
    assert g.lhs == pytest.approx(4.5) and g.rhs == pytest.approx(4.5) and g.is_tight


def _tight(v):
    s = frame_operator(v)
    return v @ hpd_inv_sqrt(s).T


def test_welch_battery_agrees_with_frame_operator():
    rng = np.random.default_rng(42)
    disagreements = 0
    for k in range(1000):
        d = int(rng.integers(2, 6))
        n = int(rng.integers(d, 3 * d + 1))
        v = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
        v *= rng.uniform(0.1, 10, size=(n, 1))
        if k % 2:
            v = _tight(v) * rng.uniform(0.1, 10)
        g = welch_gap(v)
        assert g.lhs >= g.rhs - 1e-12 * g.rhs
        disagreements += g.is_tight != (tightness_defect(v) <= 1e-10)
    assert disagreements == 0


def test_hpd_inv_sqrt():
    assert np.allclose(hpd_inv_sqrt(np.eye(3)), np.eye(3))
    assert np.allclose(hpd_inv_sqrt(np.diag([4.0, 1.0])), np.diag([0.5, 1.0]))
    rng = np.random.default_rng(1)
    for _ in range(50):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = a @ a.conj().T + 0.1 * np.eye(4)
        x = hpd_inv_sqrt(h)
        assert np.linalg.norm(x @ h @ x - np.eye(4)) < 1e-12
        assert np.allclose(x, x.conj().T)
        assert np.linalg.eigvalsh(x).min() > 0
    with pytest.raises(NotPositiveDefinite):
        hpd_inv_sqrt(np.diag([1.0, 0.0]))
    with pytest.raises(NotPositiveDefinite):
        hpd_inv_sqrt(np.diag([1.0, -1.0]))
