"""The G2 dilogarithm identity, numerically.

Eight mutations with degrees (1, 3).  For a random positive specialization
of the coefficients, the signed sum of higher-degree Rogers functions
equals a constant built from values at infinity.  Both identity forms are
printed with their residuals.
"""

import random

from hdilog import fixture_config, random_phi, run_sequence, tropical_signs, verify_identity

cfg = fixture_config("g2")
traj = run_sequence(cfg.initial_seed(track_x=False), cfg.ks, cfg.sigma)
signs = tropical_signs(traj)
rng = random.Random(7)

for trial in range(3):
    phi = random_phi(traj, rng)
    shown = ", ".join(f"{k}={v}" for k, v in sorted(phi.items()))
    print(f"trial {trial + 1}: {shown}")
    for form in ("gid5", "gid6"):
        r = verify_identity(traj, signs, phi=phi, form=form)
        print(f"  {form}: lhs {r.lhs:.12f}  rhs {r.rhs:.12f}  residual {r.residual:.1e}")
