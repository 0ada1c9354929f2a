"""Strong-pulse inversion error and the chirped-carrier fix.

A resonant Gaussian pi-pulse inverts a TLS almost perfectly when the
peak Rabi rate is small.  As the pulse gets stronger (and shorter) the
drive-induced resonance shift detunes the carrier mid-pulse and the
inversion degrades.  Chirping the carrier along the instantaneous
shifted resonance restores the inversion.
"""

import warnings

import numpy as np

from tlspulse import drives, pulsecraft
from tlspulse.integrate import IntegratorConfig
from tlspulse.params import TlsParams
from tlspulse.schrodinger import AmplitudePair, populations, propagate_lab

params = TlsParams(omega0=1.0)
cfg = IntegratorConfig(mode="adaptive", rel_tol=1e-10, abs_tol=1e-12,
                       record_points=2001)

print(" peak Omega0   residual N1 (plain)   residual N1 (chirped)")
for peak in (0.05, 0.1, 0.2, 0.3, 0.4):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # fast-envelope advisory at 0.4
        plain = pulsecraft.make_pi_pulse(peak, params.omega0)
        chirped = pulsecraft.make_chirped_pi_pulse(peak, params.omega0)
    row = []
    for pulse in (plain, chirped):
        span = (0.0, pulse.t_center + 5.0 * pulse.sigma0)
        traj = propagate_lab(params, pulse, AmplitudePair(1.0, 0.0),
                             span, cfg)
        n1_end, _ = populations(traj.states[-1])
        row.append(n1_end)
    print(f"    {peak:.2f}      {row[0]:16.6f}      {row[1]:16.6f}")

print()
print("the chirped pulse holds the inversion error at the 1e-2 level even")
print("where the plain pulse leaves ~10% of the population behind")

# the chirp profile itself
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    pulse = pulsecraft.make_chirped_pi_pulse(0.4, params.omega0)
t = np.linspace(pulse.t_center - 3 * pulse.sigma0,
                pulse.t_center + 3 * pulse.sigma0, 7)
w_inst = np.asarray(drives.instantaneous_frequency(pulse, t))
print()
print("instantaneous carrier across the pulse (peak Omega0 = 0.4):")
for ti, wi in zip(t, w_inst):
    print(f"  t - t_c = {ti - pulse.t_center:+7.3f}   omega(t) = {wi:.5f}")
