import pytest

from hdilog.exact import MPoly
from hdilog.seed import make_initial_seed, run_sequence
from hdilog.fpoly import f_polynomials
from hdilog.wedge import (
    WedgeSpace,
    constancy_terms,
    is_zero_in_wedge,
    v_sequence,
    verify_constancy,
    wedge_sum,
)

N = 3
x, y, z = (MPoly.var(N, i) for i in range(N))
one = MPoly.const(N, 1)


def c(v):
    return MPoly.const(N, v)


def test_symmetric_tensors_vanish():
    f, g = 1 + x, 1 + x * y
    assert wedge_sum([(1, f, f)]).is_zero_in_wedge()
    assert wedge_sum([(1, f, g), (1, g, f)]).is_zero_in_wedge()
    assert not wedge_sum([(1, f, g)]).is_zero_in_wedge()


def test_multiplicativity_in_each_slot():
    f, g, h = 1 + x, 1 + y, 2 + z
    lhs = wedge_sum([(1, f * g, h), (-1, f, h), (-1, g, h)])
    assert lhs.is_zero_in_wedge()
    # constants factor through primes: 6 = 2 * 3
    assert wedge_sum([(1, c(6), f), (-1, c(2), f), (-1, c(3), f)]).is_zero_in_wedge()
    assert not wedge_sum([(1, c(2), c(3))]).is_zero_in_wedge()


def test_coprime_refinement_detects_hidden_relations():
    # (1+x)^2 ^ (1+x)(1+y) = 2 (1+x) ^ (1+y), so the difference vanishes
    f = (1 + x) ** 2
    g = (1 + x) * (1 + y)
    e = wedge_sum([(1, f, g), (-2, 1 + x, 1 + y)])
    assert e.is_zero_in_wedge()
    # as a tensor it is (1+x) (x) (1+x) + ..., not zero
    assert not e.equals_as_tensor(e - e)


def test_rational_function_elements(traj):
    t = traj("b2")
    ys = t.seeds[2].y
    e = wedge_sum([(1, ys[0], ys[1]), (1, ys[1], ys[0])])
    assert is_zero_in_wedge(e)


def test_space_arithmetic_and_describe():
    sp = WedgeSpace([1 + x, 1 + y, c(2)])
    e = sp.element([(1, 1 + x, 1 + y)])
    assert (e + e - 2 * e).is_zero_in_wedge()
    assert (-e + e).is_zero_in_wedge()
    text = e.describe(["x", "y", "z"])
    assert "1 + x" in text and "1 + y" in text
    with pytest.raises(KeyError):
        sp.vector(1 + z)
    other = WedgeSpace([1 + x])
    with pytest.raises(ValueError):
        e + other.element([(1, 1 + x, 1 + x)])


def test_zero_element_rejected():
    with pytest.raises(ValueError):
        WedgeSpace([MPoly.zero(N)])


@pytest.mark.parametrize("name", ["involution", "a2", "b2", "g2"])
def test_constancy_on_periods(traj, name):
    assert verify_constancy(traj(name))


def test_constancy_fails_on_prefix(traj):
    t = traj("b2")
    prefix = run_sequence(t.seeds[0], t.ks[:3])
    assert not verify_constancy(prefix)
    assert not verify_constancy(traj("b2-truncated"))


def test_constancy_terms_use_rtilde():
    s = make_initial_seed([[0, -1], [3, 0]], (1, 1))
    t = run_sequence(s, [1, 2])
    weights = [w for w, _, _ in constancy_terms(t)]
    assert weights == [1, 3]


@pytest.mark.parametrize("name", ["involution", "a2", "b2", "g2", "b2-truncated"])
def test_v_telescoping(traj, name):
    t = traj(name)
    rep = v_sequence(t, f_polynomials(t))
    assert rep.v1_zero and all(rep.step_ok) and rep.telescopes and rep.ok
    periodic = name != "b2-truncated"
    assert rep.V[-1].is_zero_in_wedge() == periodic
