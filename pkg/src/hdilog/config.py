"""Seed configurations (JSON) and the builtin fixtures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Any

from .seed import NotSkewSymmetrizableError, SymmetrizerData, make_initial_seed, skew_symmetrizer

__all__ = ["ConfigError", "SeedConfig", "Options", "parse_config", "load_config", "FIXTURES", "fixture_config"]


class ConfigError(ValueError):
    """Invalid configuration; ``location`` names the offending field."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass(frozen=True)
class Options:
    forms: tuple[str, ...] = ("gid5", "gid6")
    tol: float = 1e-8
    quantum_N: int = 8
    trials: int = 20
    seed: int = 0


@dataclass(frozen=True)
class SeedConfig:
    name: str
    rank: int
    d: tuple[int, ...]
    B: tuple[tuple[int, ...], ...]
    z: tuple[tuple[Any, ...], ...]  # symbol names or Fractions
    ks: tuple[int, ...]
    sigma: tuple[int, ...] | None = None
    r: tuple[int, ...] | None = None
    options: Options = field(default_factory=Options)

    def initial_seed(self, track_x: bool = False):
        return make_initial_seed(self.B, self.d, self.z, track_x=track_x)

    def symmetrizer(self) -> SymmetrizerData:
        if self.r is None:
            return skew_symmetrizer(self.B)
        m = lcm(*self.r)
        return SymmetrizerData(self.r, m, tuple(m // v for v in self.r))

    def to_json(self) -> dict:
        def zv(v):
            return v if isinstance(v, str) else str(v)

        out = {
            "name": self.name,
            "rank": self.rank,
            "d": list(self.d),
            "B": [list(row) for row in self.B],
            "z": [[zv(v) for v in row] for row in self.z],
            "ks": list(self.ks),
        }
        if self.sigma is not None:
            out["sigma"] = list(self.sigma)
        if self.r is not None:
            out["r"] = list(self.r)
        o = self.options
        out["options"] = {
            "forms": list(o.forms), "tol": o.tol, "quantum_N": o.quantum_N,
            "trials": o.trials, "seed": o.seed,
        }
        return out


def _int(v, loc):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(loc, f"expected an integer, got {v!r}")
    return v


def _int_list(v, loc, length=None):
    if not isinstance(v, list):
        raise ConfigError(loc, "expected a list")
    if length is not None and len(v) != length:
        raise ConfigError(loc, f"expected {length} entries, got {len(v)}")
    return tuple(_int(x, f"{loc}[{i}]") for i, x in enumerate(v))


def _z_entry(v, loc):
    if isinstance(v, bool):
        raise ConfigError(loc, f"invalid z entry {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            if not v.isidentifier():
                raise ConfigError(loc, f"{v!r} is neither a rational nor a symbol name") from None
            return v
    raise ConfigError(loc, f"invalid z entry {v!r}")


def parse_config(data: dict, name: str = "config") -> SeedConfig:
    if not isinstance(data, dict):
        raise ConfigError("$", "configuration must be a JSON object")
    for key in ("rank", "d", "B", "ks"):
        if key not in data:
            raise ConfigError(key, "missing field")
    n = _int(data["rank"], "rank")
    if n < 1:
        raise ConfigError("rank", "must be positive")
    d = _int_list(data["d"], "d", n)
    if any(v < 1 for v in d):
        raise ConfigError("d", "mutation degrees must be positive")
    if not isinstance(data["B"], list) or len(data["B"]) != n:
        raise ConfigError("B", f"expected {n} rows")
    B = tuple(_int_list(row, f"B[{i}]", n) for i, row in enumerate(data["B"]))
    try:
        skew_symmetrizer(B)
    except NotSkewSymmetrizableError as e:
        raise ConfigError("B", str(e)) from None
    r = None
    if data.get("r") is not None:
        r = _int_list(data["r"], "r", n)
        if any(v < 1 for v in r):
            raise ConfigError("r", "entries must be positive")
        if any(r[i] * B[i][j] != -r[j] * B[j][i] for i in range(n) for j in range(n)):
            raise ConfigError("r", "R B is not skew-symmetric")
    zs = data.get("z")
    if zs is None:
        zs = [[1] + [f"z{i + 1}_{s}" for s in range(1, di)] + [1] for i, di in enumerate(d)]
    if not isinstance(zs, list) or len(zs) != n:
        raise ConfigError("z", f"expected {n} rows")
    z = []
    for i, (row, di) in enumerate(zip(zs, d)):
        if not isinstance(row, list) or len(row) != di + 1:
            raise ConfigError(f"z[{i}]", f"expected {di + 1} entries")
        vals = tuple(_z_entry(v, f"z[{i}][{s}]") for s, v in enumerate(row))
        for s in (0, di):
            if vals[s] != 1:
                raise ConfigError(f"z[{i}][{s}]", "endpoints must equal 1")
        for s, v in enumerate(vals):
            if not isinstance(v, str) and v < 0:
                raise ConfigError(f"z[{i}][{s}]", "coefficients must be nonnegative")
        z.append(vals)
    ks = _int_list(data["ks"], "ks")
    for t, k in enumerate(ks):
        if not 1 <= k <= n:
            raise ConfigError(f"ks[{t}]", f"index {k} out of range 1..{n}")
    sigma = None
    if data.get("sigma") is not None:
        sigma = _int_list(data["sigma"], "sigma", n)
        if sorted(sigma) != list(range(1, n + 1)):
            raise ConfigError("sigma", "not a permutation of 1..n")
    raw = data.get("options") or {}
    if not isinstance(raw, dict):
        raise ConfigError("options", "expected an object")
    unknown = set(raw) - {"forms", "tol", "quantum_N", "trials", "seed"}
    if unknown:
        raise ConfigError("options", f"unknown keys {sorted(unknown)}")
    forms = tuple(raw.get("forms", ("gid5", "gid6")))
    if any(f not in ("gid5", "gid6") for f in forms):
        raise ConfigError("options.forms", "entries must be 'gid5' or 'gid6'")
    tol = raw.get("tol", 1e-8)
    if not isinstance(tol, (int, float)) or isinstance(tol, bool) or tol <= 0:
        raise ConfigError("options.tol", "must be a positive number")
    opts = Options(
        forms=forms,
        tol=float(tol),
        quantum_N=_int(raw.get("quantum_N", 8), "options.quantum_N"),
        trials=_int(raw.get("trials", 20), "options.trials"),
        seed=_int(raw.get("seed", 0), "options.seed"),
    )
    if opts.quantum_N < 0 or opts.trials < 0:
        raise ConfigError("options", "quantum_N and trials must be nonnegative")
    return SeedConfig(str(data.get("name", name)), n, d, B, tuple(z), ks, sigma, r, opts)


def load_config(path: str | Path) -> SeedConfig:
    p = Path(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError(f"{p}:{e.lineno}:{e.colno}", e.msg) from None
    return parse_config(data, p.stem)


_B2 = [[0, -1], [1, 0]]

FIXTURES: dict[str, dict] = {
    "involution": {
        "rank": 2, "d": [3, 1], "B": _B2,
        "z": [[1, "alpha", "beta", 1], [1, 1]], "ks": [1, 1],
    },
    "a2": {
        "rank": 2, "d": [1, 1], "B": _B2,
        "z": [[1, 1], [1, 1]], "ks": [1, 2, 1, 2, 1], "sigma": [2, 1],
    },
    "b2": {
        "rank": 2, "d": [2, 1], "B": _B2,
        "z": [[1, "alpha", 1], [1, 1]], "ks": [1, 2, 1, 2, 1, 2], "sigma": [1, 2],
        "options": {"quantum_N": 6},
    },
    "g2": {
        "rank": 2, "d": [3, 1], "B": _B2,
        "z": [[1, "alpha", "beta", 1], [1, 1]], "ks": [1, 2, 1, 2, 1, 2, 1, 2], "sigma": [1, 2],
        "options": {"quantum_N": 4},
    },
    "b2-truncated": {
        "rank": 2, "d": [2, 1], "B": _B2,
        "z": [[1, "alpha", 1], [1, 1]], "ks": [1, 2, 1, 2, 1],
    },
}


def fixture_config(name: str) -> SeedConfig:
    try:
        data = FIXTURES[name]
    except KeyError:
        raise ConfigError("fixture", f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return parse_config(data, name)
