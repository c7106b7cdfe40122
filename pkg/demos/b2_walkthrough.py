"""Walk once around the B2 period.

Mutating alternately at 1 and 2 with degrees (2, 1) returns to the initial
seed after six steps.  Along the way we print each exchanged y-variable,
the C-matrix and the tropical sign.
"""

from hdilog import c_matrices, check_sigma_period, fixture_config, run_sequence, tropical_signs

cfg = fixture_config("b2")
traj = run_sequence(cfg.initial_seed(track_x=True), cfg.ks, cfg.sigma)
names = traj.alphabet.names
cs = c_matrices(traj)
signs = tropical_signs(traj, cs)

print("B =", traj.seeds[0].B.tolist(), " d =", traj.seeds[0].d)
for t, k in enumerate(traj.ks):
    s = traj.seeds[t]
    print(f"\nt={t + 1}  mutate at k={k}  sign {signs[t]:+d}")
    print("  C =", cs[t].tolist())
    print(f"  y{k} =", s.y[k - 1].to_str(names))

per = check_sigma_period(traj, cfg.sigma)
print("\nperiodic:", per.periodic, " sigma:", per.sigma, " x checked:", per.x_ok)
