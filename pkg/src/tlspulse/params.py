"""System parameters of the driven two-level system.

Units: hbar = 1 and the transition frequency defaults to omega0 = 1, so
times are measured in 1/omega0 and all rates are angular frequencies.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TlsParams:
    """Two-level system with relaxation in the two-rate approximation.

    Attributes
    ----------
    omega0 : float
        Transition (angular) frequency E2 - E1, > 0.
    gamma1 : float
        Depopulation rate 1/T1, >= 0.
    gamma2 : float
        Decoherence rate 1/T2, >= 0.
    delta0 : float
        Equilibrium population difference N1 - N2, in [-1, 1].
    """

    omega0: float = 1.0
    gamma1: float = 0.0
    gamma2: float = 0.0
    delta0: float = 1.0

    def __post_init__(self):
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0}")
        if self.gamma1 < 0:
            raise ValueError(f"gamma1 must be nonnegative, got {self.gamma1}")
        if self.gamma2 < 0:
            raise ValueError(f"gamma2 must be nonnegative, got {self.gamma2}")
        if abs(self.delta0) > 1:
            raise ValueError(f"|delta0| must not exceed 1, got {self.delta0}")

    @property
    def energies(self) -> tuple[float, float]:
        """Level energies with the symmetric convention E1 = -omega0/2."""
        return (-0.5 * self.omega0, +0.5 * self.omega0)
