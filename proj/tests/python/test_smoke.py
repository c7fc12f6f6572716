import math

import numpy as np
import pytest

import diamondlab as dl


def test_pinv_penrose_identities():
    a = np.array([[0, 2], [0, 0]], dtype=complex)
    p = dl.pinv(a)
    assert np.allclose(p, [[0, 0], [0.5, 0]])
    r = dl.sample("fixed_rank", 4, seed=1, r=2)
    q = dl.pinv(r)
    assert np.allclose(r @ q @ r, r, atol=1e-10)
    assert np.allclose(q @ r @ q, q, atol=1e-10)


def test_group_inverse():
    nil = np.array([[0, 1], [0, 0]], dtype=complex)
    assert dl.group_inverse(nil) is None
    d = np.diag([2.0, 0.0]).astype(complex)
    g = dl.group_inverse(d)
    assert np.allclose(g, np.diag([0.5, 0.0]))


def test_worked_example_orders():
    s = 1 / math.sqrt(2)
    a = np.array([[1, 0], [0, 0]], dtype=complex)
    u = np.array([[0, s], [0, s]], dtype=complex)
    assert np.linalg.norm(a @ u.conj().T @ a) <= 1e-12
    assert dl.check_order("diamond", a, a + u).holds()
    assert not dl.check_order("star", a, a + u).holds()
    assert not dl.orthogonal(a, u)


def test_order_report_fields():
    a = np.diag([1.0, 0.0]).astype(complex)
    rep = dl.check_order("space", a, np.eye(2, dtype=complex))
    assert rep.verdict == "holds"
    assert "col_incl" in rep.residuals
    assert "x" in rep.witnesses


def test_sharp_inapplicable():
    nil = np.array([[0, 1], [0, 0]], dtype=complex)
    rep = dl.check_order("sharp", nil, np.eye(2, dtype=complex))
    assert rep.verdict == "inapplicable"


def test_generated_pairs_and_witness():
    a, b = dl.gen_diamond_pair(3, seed=5)
    assert dl.check_order("diamond", a, b).holds()
    w = dl.minus_witness(dl.pinv(a), dl.pinv(b))
    assert w is not None


def test_structure_helpers():
    a = np.diag([2.0, 0.0, 1.0]).astype(complex)
    u = dl.minimal_below(a)
    assert dl.matrix_rank(u) == 1
    assert dl.check_order("diamond", u, a).holds()
    assert dl.is_minimal_diamond(u)
    maximal, above = dl.is_maximal_diamond(a)
    assert not maximal
    assert dl.check_order("diamond", a, above).holds()
    invertible, _ = dl.invertibility_probe(a)
    assert not invertible


def test_preserver_roundtrip():
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
    t = dl.make_canonical(1.5, q, q.conj().T, False)
    fwd, bwd, cex = dl.preserves_diamond(t, pairs=40)
    assert fwd and bwd and cex is None
    rep = dl.decompose_preserver(t)
    assert rep["flavor"] == "iso"
    assert rep["scale"] == pytest.approx(1.5, abs=1e-8)


def test_suites_entry_point():
    rows = dl.run_suites("example", seed=0)
    assert rows and all(r["violations"] == 0 for r in rows)
