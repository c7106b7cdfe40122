import random

import pytest

from hdilog.quantum import (
    PsiParams,
    QRing,
    QTorusContext,
    psi_coeffs,
    psi_series,
    qtorus_mul,
    series_inverse,
    verify_quantum_identity,
)
from hdilog.seed import make_initial_seed, run_sequence

B2 = [[0, -1], [1, 0]]


def test_qrat_arithmetic():
    R = QRing(["a"])
    q = R.q_power(1)
    x = q.over_q_power_minus_one(2)  # q / (q^2 - 1)
    # q/(q^2-1) - 1/(q-1) + ... : check (q^2 - 1) x = q
    assert (x * R.q_power_minus_one(2)).reduced() == q
    assert (x - x).is_zero()
    assert (x + x) == x * R.const(2)
    assert R.symbol("a") * R.q_power(-3) == R.symbol("a").times_q(-3)
    # cancellation of a cyclotomic factor: (q^2 - 1)/(q - 1) = q + 1
    assert R.q_power_minus_one(2).over_q_power_minus_one(1).reduced() == R.q_power(1) + R.one()


def test_psi_low_coefficients():
    R = QRing(["a"])
    c = psi_coeffs(PsiParams(1, (1, 1), 1, (1,)), 2, R)
    q = R.q_power(1)
    assert c[1] == q.over_q_power_minus_one(2)
    # c_2 (q^4 - 1) = q c_1
    assert (c[2] * R.q_power_minus_one(4)).reduced() == (c[1] * q).reduced()
    c = psi_coeffs(PsiParams(2, (1, "a", 1), 1, (1,)), 2, R)
    assert c[1] == (R.symbol("a") * q).over_q_power_minus_one(2)


@pytest.mark.parametrize("z", [(1, 1), (1, "a", 1), (1, "a", "b", 1), (1, 2, 1)])
@pytest.mark.parametrize("r", [1, 2])
def test_psi_functional_equation(z, r):
    """Psi(q^2 x) = Psi(x) P(q x), compared coefficientwise as a convolution."""
    R = QRing(["a", "b"])
    d = len(z) - 1
    N = 6
    c = psi_coeffs(PsiParams(d, z, r, (1,)), N, R)
    zq = [R.symbol(v) if isinstance(v, str) else R.const(v) for v in z]
    for n in range(N + 1):
        lhs = c[n].times_q(2 * n * r)
        rhs = R.zero()
        for s in range(min(d, n) + 1):
            rhs = rhs + (c[n - s] * zq[s]).times_q(s * r)
        assert (lhs - rhs).reduced().is_zero()


def test_torus_commutation():
    ctx = QTorusContext.create(B2, 4, QRing())
    y1, y2 = ctx.monomial((1, 0)), ctx.monomial((0, 1))
    # Y1 Y2 = q^{-<e1,e2>} Y^{e1+e2}, <e1, e2> = b_12 = -1
    assert (y1 * y2).equals(ctx.monomial((1, 1), ctx.ring.q_power(1)))
    assert (y2 * y1).equals(ctx.monomial((1, 1), ctx.ring.q_power(-1)))
    assert ctx.pairing((1, 0), (0, 1)) == -ctx.pairing((0, 1), (1, 0))


def _rand_series(ctx, rng):
    """1 plus a few random terms of positive degree."""
    R = ctx.ring
    out = ctx.one()
    for _ in range(3):
        a = (rng.randint(0, 2), rng.randint(1, 2))
        coeff = R.const(rng.randint(-3, 3) or 1).times_q(rng.randint(-2, 2))
        out = out + ctx.monomial(a, coeff)
    return out


def test_associativity_and_inverse():
    ctx = QTorusContext.create([[0, -2], [1, 0]], 5, QRing())
    rng = random.Random(3)
    for _ in range(5):
        a, b, c = (_rand_series(ctx, rng) for _ in range(3))
        assert ((a * b) * c).equals(a * (b * c))
        inv = series_inverse(a)
        assert (a * inv).is_one() and (inv * a).is_one()


def test_pentagon_identity():
    ctx = QTorusContext.create(B2, 6, QRing())
    p = lambda alpha: psi_series(PsiParams(1, (1, 1), 1, alpha), ctx)
    # with Y^a Y^b = q^{-<a,b>} Y^{a+b} and <e1, e2> = -1
    assert (p((1, 0)) * p((0, 1))).equals(p((0, 1)) * p((1, 1)) * p((1, 0)))
    assert not (p((0, 1)) * p((1, 0))).equals(p((1, 0)) * p((1, 1)) * p((0, 1)))


@pytest.mark.parametrize("name,N", [("involution", 8), ("a2", 8), ("b2", 6), ("g2", 4)])
def test_quantum_identity_on_fixtures(traj, name, N):
    rep = verify_quantum_identity(traj(name), N=N)
    assert rep.ok, rep.nonzero
    assert len(rep.factors) == traj(name).m


def test_literal_z_convention_fails_on_g2(traj):
    rep = verify_quantum_identity(traj("g2"), N=4, z_convention="literal")
    assert not rep.ok
    alpha, coeff = rep.first_residual
    assert "alpha" in coeff and "beta" in coeff


def test_non_period_has_residual(traj):
    rep = verify_quantum_identity(traj("b2-truncated"), N=3)
    assert not rep.ok


def test_rational_z_and_nontrivial_symmetrizer():
    # d = (1, 1) with B = [[0,-1],[2,0]]: B2 cluster type, period 6
    s = make_initial_seed([[0, -1], [2, 0]], (1, 1))
    t = run_sequence(s, [1, 2, 1, 2, 1, 2])
    assert verify_quantum_identity(t, N=5).ok
