"""The full verification battery for one seed configuration.

Checks run in dependency order (mutation, tropical data, F-polynomials,
exterior square, dilogarithms, quantum product).  The report is a plain
dict with checks keyed by name; serialized with sorted keys it is
byte-identical across runs with the same configuration and seed.
"""

from __future__ import annotations

import random
import time
from typing import Iterable

from .config import SeedConfig
from .dilog import GenericConditionError, random_phi, verify_identity
from .fpoly import PolynomialityError, check_f_periodicity, check_separation, f_polynomials
from .quantum import verify_quantum_identity
from .seed import check_sigma_period, run_sequence
from .tropical import ConsistencyError, SignCoherenceError, c_matrices, g_matrices, tropical_signs
from .wedge import v_sequence, verify_constancy

__all__ = ["CHECKS", "run_battery", "exit_code"]

CHECKS = (
    "period", "sign_coherence", "duality", "separation", "f_periodicity",
    "constancy", "v_telescoping", "gid5", "gid6", "quantum",
)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def run_battery(
    cfg: SeedConfig,
    skip: Iterable[str] = (),
    trials: int | None = None,
    seed: int | None = None,
    track_x: bool = True,
    timings: bool = False,
) -> dict:
    skip = set(skip)
    opts = cfg.options
    trials = opts.trials if trials is None else trials
    seed = opts.seed if seed is None else seed
    checks: dict[str, dict] = {}
    clock: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        clock[name] = round(time.perf_counter() - t0, 6)
        return out

    sym = cfg.symmetrizer()
    traj = timed("mutation", lambda: run_sequence(cfg.initial_seed(track_x), cfg.ks, cfg.sigma))

    per = timed("period", lambda: check_sigma_period(traj, cfg.sigma or "search"))
    periodic = per.periodic
    checks["period"] = {
        "status": _status(periodic),
        "sigma": list(per.sigma) if per.sigma else None,
        "x_tracked": per.x_ok is not None,
        "r_preserved": per.r_ok,
        "z_returns": per.z_returns,
    }

    def skipped(reason):
        return {"status": "skipped", "reason": reason}

    cs = signs = fs = None
    try:
        cs = timed("c_matrices", lambda: c_matrices(traj))
        signs = timed("sign_coherence", lambda: tropical_signs(traj, cs))
        checks["sign_coherence"] = {"status": "pass", "signs": list(signs)}
    except (SignCoherenceError, ConsistencyError) as e:
        checks["sign_coherence"] = {"status": "fail", "error": str(e)}

    if signs is None:
        checks["duality"] = skipped("no tropical signs")
    else:
        try:
            timed("duality", lambda: g_matrices(traj, signs, cs))
            checks["duality"] = {"status": "pass"}
        except ConsistencyError as e:
            checks["duality"] = {"status": "fail", "error": str(e)}

    if cs is None:
        checks["separation"] = skipped("no C-matrices")
    else:
        try:
            fs = timed("f_polynomials", lambda: f_polynomials(traj, cs))
            sep = timed("separation", lambda: check_separation(traj, cs, fs))
            entry = {"status": _status(sep.ok)}
            if not sep.ok:
                entry["failure"] = list(sep.failure)
            checks["separation"] = entry
        except PolynomialityError as e:
            checks["separation"] = {"status": "fail", "error": str(e)}

    if not periodic:
        checks["f_periodicity"] = skipped("not periodic")
    elif fs is None:
        checks["f_periodicity"] = skipped("no F-polynomials")
    else:
        checks["f_periodicity"] = {"status": _status(check_f_periodicity(traj, fs, per.sigma))}

    zero = timed("constancy", lambda: verify_constancy(traj, signs, sym))
    if periodic:
        checks["constancy"] = {"status": _status(zero), "zero": zero}
    else:
        checks["constancy"] = {"status": "skipped", "reason": "not periodic", "zero": zero}

    if fs is None:
        checks["v_telescoping"] = skipped("no F-polynomials")
    else:
        rep = timed("v_telescoping", lambda: v_sequence(traj, fs, sym))
        checks["v_telescoping"] = {
            "status": _status(rep.ok),
            "steps": [bool(v) for v in rep.step_ok],
            "v_final_zero": rep.V[-1].is_zero_in_wedge(),
        }

    for form in ("gid5", "gid6"):
        if form not in opts.forms or form in skip:
            checks[form] = skipped("not requested")
        elif not periodic or signs is None:
            checks[form] = skipped("not periodic")
        else:
            def run_form(form=form):
                rng = random.Random(seed)
                worst, constant = 0.0, None
                for _ in range(trials):
                    phi = random_phi(traj, rng)
                    r = verify_identity(traj, signs, sym, phi, form, opts.tol)
                    worst = max(worst, abs(r.residual))
                    if form == "gid5" and constant is None:
                        constant = r.rhs
                return worst, constant

            try:
                worst, constant = timed(form, run_form)
                entry = {"status": _status(worst < opts.tol), "max_residual": worst,
                         "trials": trials, "tol": opts.tol}
                if constant is not None:
                    entry["constant_term_first_trial"] = constant
                checks[form] = entry
            except GenericConditionError as e:
                checks[form] = {"status": "fail", "error": str(e)}

    if "quantum" in skip:
        checks["quantum"] = skipped("skipped on request")
    elif not periodic or signs is None:
        checks["quantum"] = skipped("not periodic")
    else:
        q = timed("quantum", lambda: verify_quantum_identity(
            traj, opts.quantum_N, cs, signs, symmetrizer=sym))
        entry = {"status": _status(q.ok), "N": q.N}
        if not q.ok:
            entry["first_residual"] = {"alpha": list(q.first_residual[0]), "coefficient": q.first_residual[1]}
        checks["quantum"] = entry

    failed = sorted(k for k, v in checks.items() if v["status"] == "fail")
    report = {
        "config": cfg.to_json(),
        "random_seed": seed,
        "trials": trials,
        "checks": checks,
        "failed": failed,
        "status": "fail" if failed else "pass",
    }
    if timings:
        report["timings"] = clock
    return report


def exit_code(report: dict) -> int:
    return 1 if report["status"] == "fail" else 0
