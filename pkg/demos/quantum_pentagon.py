"""Truncated quantum dilogarithm identities.

The product of quantum dilogarithms along a period is the identity in the
completed quantum torus.  We verify it exactly, coefficient by coefficient
in Q(q), up to a total degree N, and show that an incomplete sequence
leaves a nonzero residual.
"""

from hdilog import fixture_config, run_sequence, verify_quantum_identity

for name, N in (("a2", 8), ("b2", 6), ("g2", 4)):
    cfg = fixture_config(name)
    traj = run_sequence(cfg.initial_seed(track_x=False), cfg.ks, cfg.sigma)
    rep = verify_quantum_identity(traj, N=N)
    print(f"{name}: {len(traj.ks)} factors, product == 1 up to degree {N}: {rep.ok}")
    for k, eps, alpha, z in rep.factors:
        print(f"    Psi(Y^{alpha}; z={','.join(z)})^{eps:+d}")

cfg = fixture_config("b2-truncated")
traj = run_sequence(cfg.initial_seed(track_x=False), cfg.ks)
rep = verify_quantum_identity(traj, N=4)
print("b2-truncated:", rep.ok, " first residual:", rep.first_residual)
