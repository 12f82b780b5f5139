"""Per-mode adaptive control of the damping spectrum.

Each Fourier mode is adjusted from the noise it shows: above the threshold
the damping is raised by a large factor, otherwise it is lowered by a small
one, so the spectrum creeps down toward the least damping that still keeps
every mode quiet.  Conjugate pairs are moved together (from the larger of
the pair's noise readings) so filtered real fields stay real.

Also home to the analytic stability oracles: the marginal damping
lambda_c(k) = (2/3) e(k) of the extrapolated scheme, and the wavenumber
boundary k_e below which the undamped scheme is already stable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError


@dataclass(frozen=True)
class ControllerConfig:
    """Thresholds and rates for the per-mode damping update.

    zero_seed is the value a mode is kicked to when it shows noise while
    its damping is exactly zero (a multiplicative update cannot escape
    zero); the driver defaults it to 2/(3*dt), the marginal damping of a
    mode at the explicit stability boundary.
    """

    epsilon_u: float
    up_factor: float = 1.2
    down_factor: float = 1.02
    lambda_floor: float = 0.0
    zero_seed: float | None = None

    def __post_init__(self):
        if not self.epsilon_u > 0:
            raise ConfigurationError(f"epsilon_u must be positive, got {self.epsilon_u}")
        if not self.up_factor > 1:
            raise ConfigurationError(f"up_factor must exceed 1, got {self.up_factor}")
        if not self.down_factor > 1:
            raise ConfigurationError(f"down_factor must exceed 1, got {self.down_factor}")
        if self.lambda_floor < 0:
            raise ConfigurationError("lambda_floor must be nonnegative")


def mirror_spectrum(arr):
    """arr evaluated at the conjugate index (-k mod n, per axis)."""
    arr = np.asarray(arr)
    if arr.ndim == 1:
        n = arr.shape[0]
        return arr[(-np.arange(n)) % n]
    nx, ny = arr.shape
    return arr[np.ix_((-np.arange(nx)) % nx, (-np.arange(ny)) % ny)]


def symmetrize_spectrum(arr):
    """Make a damping spectrum symmetric under k -> -k (max of each pair)."""
    return np.maximum(np.asarray(arr, dtype=float), mirror_spectrum(arr))


def update_lambda(lam, eps, cfg):
    """One controller step: raise noisy modes, decay quiet ones.

    Conjugate pairs are driven by the max of the pair's noise, so a
    symmetric input stays symmetric.  The mean mode is pinned at zero.
    """
    lam = np.asarray(lam, dtype=float)
    eps = np.asarray(eps, dtype=float)
    if lam.shape != eps.shape:
        raise ConfigurationError(f"damping shape {lam.shape} != noise shape {eps.shape}")
    eps_pair = np.maximum(eps, mirror_spectrum(eps))
    noisy = eps_pair > cfg.epsilon_u
    out = np.where(noisy, lam * cfg.up_factor, lam / cfg.down_factor)
    if cfg.zero_seed is not None:
        out = np.where(noisy & (lam == 0.0), cfg.zero_seed, out)
    out = np.maximum(out, cfg.lambda_floor)
    out[(0,) * out.ndim] = 0.0
    return out


def lambda_critical(e):
    """Marginal damping of the extrapolated scheme for eigenvalue spectrum e."""
    return (2.0 / 3.0) * np.asarray(e, dtype=float)


def explicit_boundary_ke(e_of_k, dt, smallk=None):
    """Largest wavenumber whose undamped update is still stable: e(k) < 2/dt.

    e_of_k holds the eigenvalue at integer modes k = 0..len-1 along the
    monotone low-k branch.  The crossing is interpolated: through the
    analytic small-k form `smallk` (a callable of real k) when supplied,
    otherwise log-log between the bracketing integer modes.  If no mode
    reaches the threshold the top of the branch (Nyquist) is returned.
    """
    e_of_k = np.asarray(e_of_k, dtype=float)
    threshold = 2.0 / dt
    if smallk is not None:
        lo, hi = 0.0, float(len(e_of_k) - 1)
        if smallk(hi) < threshold:
            return hi
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if smallk(mid) < threshold:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
    above = np.nonzero(e_of_k >= threshold)[0]
    if len(above) == 0:
        return float(len(e_of_k) - 1)
    k_hi = int(above[0])
    if k_hi <= 1:
        # No interior bracket with positive e; fall back to a power-law
        # through the first two nonzero modes.
        if len(e_of_k) < 3 or e_of_k[1] <= 0 or e_of_k[2] <= 0:
            return 0.0
        p = np.log(e_of_k[2] / e_of_k[1]) / np.log(2.0)
        return float((threshold / e_of_k[1]) ** (1.0 / p))
    k_lo = k_hi - 1
    e_lo, e_hi = e_of_k[k_lo], e_of_k[k_hi]
    frac = (np.log(threshold) - np.log(e_lo)) / (np.log(e_hi) - np.log(e_lo))
    return float(np.exp(np.log(k_lo) + frac * (np.log(k_hi) - np.log(k_lo))))


def init_power_law(lambda0, power, grid):
    """Damping spectrum lambda0 * |k|^power over signed wavenumbers.

    Symmetric by construction; the mean mode is zero.
    """
    if lambda0 < 0:
        raise ConfigurationError("lambda0 must be nonnegative")
    if power < 0:
        raise ConfigurationError("power must be nonnegative")
    freqs = grid.frequencies()
    if isinstance(freqs, tuple):
        kx, ky = freqs
        mag = np.hypot(np.abs(kx), np.abs(ky))
    else:
        mag = np.abs(freqs).astype(float)
    lam = lambda0 * mag**power
    lam[(0,) * lam.ndim] = 0.0
    return lam
