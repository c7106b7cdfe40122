import pytest

from conftest import parse, to_sympy
from hdilog.exact import MPoly, RatFunc
from hdilog.fpoly import (
    check_f_periodicity,
    check_separation,
    f_polynomials,
    f_polynomials_by_specialization,
)
from hdilog.seed import make_initial_seed, run_sequence
from hdilog.tropical import c_matrices, g_matrices

FIXTURES = ["involution", "a2", "b2", "g2", "b2-truncated"]


@pytest.mark.parametrize("name", FIXTURES)
def test_recursion_matches_specialization_oracle(traj, name):
    t = traj(name)
    assert f_polynomials(t) == f_polynomials_by_specialization(t)


@pytest.mark.parametrize("name", FIXTURES)
def test_constant_term_one_and_positive(traj, name):
    t = traj(name)
    zero = (0,) * t.alphabet.nvars
    for row in f_polynomials(t):
        for f in row:
            assert f.coefficient(zero) == 1
            assert f.coeffs_nonneg()


@pytest.mark.parametrize("name", FIXTURES)
def test_separation(traj, name):
    assert check_separation(traj(name))


def test_separation_detects_tampering(traj):
    t = traj("b2")
    fs = [list(row) for row in f_polynomials(t)]
    fs[2][0] = fs[2][0] + MPoly.var(t.alphabet.nvars, t.alphabet.y_slots[0])
    res = check_separation(t, fs=[tuple(r) for r in fs])
    assert not res and res.failure[1] == 3


@pytest.mark.parametrize("name", ["involution", "a2", "b2", "g2"])
def test_periodic_fixtures_end_at_one(traj, name):
    assert check_f_periodicity(traj(name))


def test_truncated_prefix_does_not_end_at_one(traj):
    assert not check_f_periodicity(traj("b2-truncated"))


def test_pentagon_f_polynomials(traj):
    t = traj("a2")
    got = {str(to_sympy(f, t.alphabet)) for row in f_polynomials(t) for f in row}
    expected = {parse(e) for e in ["1", "1 + y1", "1 + y2", "1 + y2 + y1*y2"]}
    assert {parse(g) for g in got} == expected


def test_b2_f_polynomials(traj):
    t = traj("b2")
    fs = f_polynomials(t)
    assert parse(str(to_sympy(fs[3][0], t.alphabet))) == parse(
        "1 + 2*y2 + y2**2 + alpha*y1*y2 + alpha*y1*y2**2 + y1**2*y2**2"
    )


def _eval_at(f: MPoly, values: dict[int, RatFunc], nv: int) -> RatFunc:
    total = RatFunc.const(nv, 0)
    for e, c in f.terms.items():
        term = RatFunc.const(nv, c)
        for slot, k in enumerate(e):
            if k:
                term = term * (values[slot] ** k if slot in values else RatFunc.var(nv, slot) ** k)
        total = total + term
    return total


@pytest.mark.parametrize("name", ["a2", "b2"])
def test_cluster_variable_separation(traj, name):
    """x_i[t] = x^{g_i[t]} F_i[t](yhat) / F_i[t](y), yhat_j = y_j prod_k x_k^{b_kj}."""
    t = traj(name, True)
    a = t.alphabet
    nv, n = a.nvars, t.n
    B0 = t.seeds[0].B
    yhat = {}
    for j in range(n):
        v = RatFunc.var(nv, a.y_slots[j])
        for k in range(n):
            if B0[k, j]:
                v = v * RatFunc.var(nv, a.x_slots[k]) ** int(B0[k, j])
        yhat[a.y_slots[j]] = v
    gs = g_matrices(t)
    for s, G, F in zip(t.seeds, gs, f_polynomials(t)):
        for i in range(n):
            mono = RatFunc.const(nv, 1)
            for k in range(n):
                mono = mono * RatFunc.var(nv, a.x_slots[k]) ** int(G[k, i])
            expected = mono * _eval_at(F[i], yhat, nv) / RatFunc(F[i])
            assert s.x[i] == expected


def test_symbolic_default_z_rank_two():
    # affine type: the sequence never closes, F-polynomials keep growing
    s = make_initial_seed([[0, -1], [1, 0]], (2, 2), track_x=False)
    t = run_sequence(s, [1, 2, 1, 2, 1])
    assert f_polynomials(t) == f_polynomials_by_specialization(t, c_matrices(t))
    assert check_separation(t)
