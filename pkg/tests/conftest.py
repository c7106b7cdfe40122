import functools

import pytest
import sympy

from hdilog import fixture_config, run_sequence


@functools.lru_cache(maxsize=None)
def trajectory(name: str, track_x: bool = False):
    cfg = fixture_config(name)
    return run_sequence(cfg.initial_seed(track_x), cfg.ks, cfg.sigma)


def to_sympy(elem, alphabet):
    """Independent reading of an exact element through its printed form."""
    return parse(elem.to_str(alphabet.names).replace("^", "**"))


def parse(text: str):
    """sympify with every identifier read as a plain symbol (``beta`` is a function otherwise)."""
    import re

    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text))
    return sympy.sympify(text, locals={n: sympy.Symbol(n) for n in names})


def sympy_symbols(alphabet):
    return {n: sympy.Symbol(n) for n in alphabet.names}


@pytest.fixture
def traj():
    return trajectory
