"""Constructors for the multimode photon states used throughout the package.

Conventions: the locked linear phase ladder assigns mode m the phase
``theta_m = m * step`` (mode 0 is the reference).  Single-photon states
carry ``exp(-i*theta_m)`` amplitudes, coherent states carry per-mode
amplitudes ``exp(+i*theta_m) * alpha``; the field-operator magnitudes are
identical for both choices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import CutoffError, DegenerateInputError
from .fock import ModePhases, StateVector


@dataclass(frozen=True)
class CoherentSpec:
    """Per-mode coherent amplitude ``alpha`` with a phase ladder on top.

    ``cutoff_prob`` bounds the Poisson tail mass discarded by truncating at
    ``n_max`` total photons; if ``n_max`` is None it is chosen automatically.
    """

    alpha: complex
    phases: ModePhases
    cutoff_prob: float = 1e-12
    n_max: int | None = None

    def __post_init__(self):
        if not 0.0 < self.cutoff_prob < 1.0:
            raise ValueError(f"cutoff_prob must be in (0, 1), got {self.cutoff_prob}")
        a = complex(self.alpha)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise ValueError(f"alpha must be finite, got {self.alpha}")

    @property
    def mean_total_photons(self) -> float:
        return self.phases.modes * abs(self.alpha) ** 2

    def required_cutoff(self) -> int:
        """Smallest N with Poisson tail P(total > N) below cutoff_prob."""
        return _poisson_cutoff(self.mean_total_photons, self.cutoff_prob)

    def resolved_cutoff(self) -> int:
        needed = self.required_cutoff()
        if self.n_max is None:
            return needed
        if self.n_max < needed:
            raise CutoffError(
                f"n_max={self.n_max} keeps more than {self.cutoff_prob} of the "
                f"photon-number tail; need n_max >= {needed}",
                required_cutoff=needed,
            )
        return self.n_max


def _poisson_cutoff(mean: float, tail: float) -> int:
    if mean == 0.0:
        return 0
    term = math.exp(-mean)
    cdf = term
    n = 0
    while 1.0 - cdf >= tail:
        n += 1
        term *= mean / n
        cdf += term
        if n > 10_000:
            raise CutoffError(
                f"tail bound {tail} unreachable for mean {mean}", required_cutoff=n
            )
    return n


def single_photon_state(phases: ModePhases) -> StateVector:
    """One photon spread evenly over M modes: sum_m exp(-i*theta_m)|m> / sqrt(M)."""
    m_modes = phases.modes
    if m_modes < 2:
        raise DegenerateInputError(
            f"single-photon interference needs at least 2 modes, got {m_modes}"
        )
    root = math.sqrt(m_modes)
    terms = {}
    for m in range(m_modes):
        occ = tuple(1 if k == m else 0 for k in range(m_modes))
        terms[occ] = cmath.exp(-1j * phases.theta[m]) / root
    return StateVector(m_modes, terms, cutoff=1)


def _occupations(modes: int, total_max: int):
    """All occupation tuples of given length with sum <= total_max."""
    if modes == 1:
        for n in range(total_max + 1):
            yield (n,)
        return
    for n in range(total_max + 1):
        for rest in _occupations(modes - 1, total_max - n):
            yield (n,) + rest


def coherent_state(spec: CoherentSpec) -> StateVector:
    """Tensor product of per-mode coherent states ``|exp(i*theta_m) alpha>``.

    Expanded in the Fock basis and truncated at the resolved total-photon
    cutoff, so the norm is within ``cutoff_prob`` of 1.
    """
    modes = spec.phases.modes
    n_max = spec.resolved_cutoff()
    alpha = complex(spec.alpha)
    mode_amp = [alpha * cmath.exp(1j * t) for t in spec.phases.theta]
    prefactor = math.exp(-modes * abs(alpha) ** 2 / 2.0)

    # Single-mode Fock coefficients alpha^n / sqrt(n!) per mode, reused below.
    per_mode = []
    for a in mode_amp:
        coeffs = [1.0 + 0.0j]
        for n in range(1, n_max + 1):
            coeffs.append(coeffs[-1] * a / math.sqrt(n))
        per_mode.append(coeffs)

    terms = {}
    for occ in _occupations(modes, n_max):
        amp = prefactor
        for m, n in enumerate(occ):
            amp *= per_mode[m][n]
        terms[occ] = amp
    return StateVector(modes, terms, cutoff=n_max)


def _two_mode_sum(n_photons: int, phi_tilde: float, signs: bool) -> StateVector:
    if n_photons < 0:
        raise ValueError(f"photon number must be non-negative, got {n_photons}")
    scale = math.sqrt(math.factorial(n_photons) / 2.0**n_photons)
    terms = {}
    for n in range(n_photons + 1):
        amp = scale * cmath.exp(1j * n * phi_tilde)
        amp /= math.sqrt(math.factorial(n) * math.factorial(n_photons - n))
        if signs and n % 2:
            amp = -amp
        terms[(n, n_photons - n)] = amp
    return StateVector(2, terms, cutoff=n_photons)


def two_mode_bright(n_photons: int, phi_tilde: float = 0.0) -> StateVector:
    """N-photon two-mode state with maximal field coupling sqrt(2N).

    ``exp(-i*N*phi) * sqrt(N!/2^N) * sum_n exp(i*n*phi) / sqrt(n!(N-n)!) |n, N-n>``.
    """
    state = _two_mode_sum(n_photons, phi_tilde, signs=False)
    global_phase = cmath.exp(-1j * n_photons * phi_tilde)
    return StateVector(
        2, {occ: global_phase * amp for occ, amp in state.terms.items()}, n_photons
    )


def two_mode_dark(n_photons: int, phi_tilde: float = 0.0) -> StateVector:
    """N-photon two-mode state annihilated by the field operator when the
    detection phase difference equals ``phi_tilde``; alternating-sign partner
    of :func:`two_mode_bright`."""
    return _two_mode_sum(n_photons, phi_tilde, signs=True)


def coherent_bright_dark_expansion(
    alpha: complex, n_max: int, branch: str
) -> list[complex]:
    """Coefficients ``exp(-|alpha|^2) sqrt(2^N) alpha^N / sqrt(N!)`` for N=0..n_max.

    These are the weights of the two-mode N-photon bright (dark) states in the
    phase-aligned (phase-opposed) two-mode coherent state.  Both branches share
    the same closed form; the dark pairing puts the pi phase on mode 0, i.e.
    ``|-alpha, alpha>``.
    """
    if branch not in ("bright", "dark"):
        raise ValueError(f"branch must be 'bright' or 'dark', got {branch!r}")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    a = complex(alpha)
    out = []
    coeff = complex(math.exp(-abs(a) ** 2))
    out.append(coeff)
    for n in range(1, n_max + 1):
        coeff *= a * math.sqrt(2.0 / n)
        out.append(coeff)
    return out
