"""Population stepping under a train of identical pi-pulses.

Each member of the train is an exact time-translated copy of the same
pulse, so the population ratchets between the levels, one inversion per
pulse.  The per-pulse envelope areas are verified numerically.
"""

import numpy as np

from tlspulse import pulsecraft
from tlspulse.integrate import IntegratorConfig
from tlspulse.params import TlsParams
from tlspulse.schrodinger import AmplitudePair, propagate_rotating

params = TlsParams(omega0=1.0)
pulse = pulsecraft.make_pi_pulse(0.1, 1.1)
train = pulsecraft.make_pulse_train(pulse, 3, spacing=8.0 * pulse.sigma0)

areas, _, _ = pulsecraft.verify_pulse_area(train)
print("per-pulse envelope areas / pi:", np.round(areas / np.pi, 6))

cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-10, abs_tol=1e-12,
                       record_points=4001)
t_end = train.pulses[-1].t_center + 5.0 * pulse.sigma0
traj = propagate_rotating(params, train, AmplitudePair(1.0, 0.0),
                          (0.0, t_end), cfg)
n2 = np.abs(traj.states[:, 1]) ** 2

print()
print("excited population between pulses:")
for k, p in enumerate(train.pulses):
    t_mid = p.t_center + 4.0 * pulse.sigma0
    idx = int(np.searchsorted(traj.times, t_mid))
    print(f"  after pulse {k + 1}: N2 = {n2[idx]:.4f}")
print()
print("each off-resonant pi-pulse transfers only part of the population;")
print("with a detuned carrier the steps fall short of full inversion and")
print("the train visits intermediate superpositions between pulses")
