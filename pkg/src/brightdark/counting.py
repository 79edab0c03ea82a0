"""Counting dark states: exact combinatorics plus exhaustive verification.

Two regimes.  With phases free to be any multiple of pi, a single photon
over M modes (M even) is dark whenever the +1 and -1 weights balance,
giving ``M! / (2 * ((M/2)!)^2)`` states up to a global sign.  Locking the
phases to a linear ladder collapses this to M - 1 dark phase steps
``2*pi*K/M`` against a single bright one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import DEFAULT_TOL, Label, classify_coherent
from .errors import ResourceLimitError
from .fock import ModePhases
from .states import CoherentSpec

ENUMERATION_MAX_MODES = 24


def count_pi_phase_dark(modes: int) -> int:
    """Balanced +-1 weight vectors modulo global sign: C(M, M/2) / 2, exact."""
    if modes < 2 or modes % 2:
        raise ValueError(
            f"closed-form count needs an even mode count >= 2, got {modes}; "
            "enumerate_sign_states handles odd counts (empty result)"
        )
    return math.comb(modes, modes // 2) // 2


def enumerate_sign_states(modes: int) -> list[tuple[int, ...]]:
    """Exhaustively list every zero-sum vector in {+1,-1}^M, first entry +1.

    Scans all 2^(M-1) assignments of the remaining entries, so the result is
    an independent check of :func:`count_pi_phase_dark`.
    """
    if modes < 1:
        raise ValueError(f"need at least one mode, got {modes}")
    if modes > ENUMERATION_MAX_MODES:
        raise ResourceLimitError(
            f"enumeration over 2^{modes - 1} sign vectors exceeds the "
            f"{ENUMERATION_MAX_MODES}-mode bound"
        )
    out = []
    rest = modes - 1
    for mask in range(1 << rest):
        # Component sum is 1 + (rest - k) - k with k minus-signs among the rest.
        if modes - 2 * mask.bit_count() != 0:
            continue
        signs = (1,) + tuple(-1 if mask >> b & 1 else 1 for b in range(rest))
        out.append(signs)
    return out


def locked_dark_phases(
    modes: int, verify: bool = True, tol: float = DEFAULT_TOL
) -> list[float]:
    """Phase steps 2*pi*K/M, K = 1..M-1, that make the locked ladder dark.

    With ``verify`` set, each phase is classified through the coherent-state
    route (cost O(M) per phase) and the K = 0 endpoint is confirmed bright.
    """
    if modes < 2:
        raise ValueError(f"need at least 2 modes, got {modes}")
    phases = [2.0 * math.pi * k / modes for k in range(1, modes)]
    if verify:
        zero_det = ModePhases.zero(modes)
        for phi in phases:
            spec = CoherentSpec(1.0 + 0.0j, ModePhases.locked(modes, phi))
            got = classify_coherent(spec, zero_det, tol).label
            if got is not Label.DARK:
                raise AssertionError(f"phase {phi} classified {got.value}, not Dark")
        bright = classify_coherent(
            CoherentSpec(1.0 + 0.0j, ModePhases.locked(modes, 0.0)), zero_det, tol
        ).label
        if bright is not Label.BRIGHT:
            raise AssertionError(f"zero phase classified {bright.value}, not Bright")
    return phases


def bright_to_dark_ratio(modes: int) -> float:
    """Locked ladder: one bright phase per period against M - 1 dark ones."""
    if modes < 2:
        raise ValueError(f"need at least 2 modes, got {modes}")
    return 1.0 / (modes - 1)


@dataclass(frozen=True)
class DarkCensus:
    """Summary of dark-state counts for M modes.

    ``pi_phase_count`` is the closed-form count for free pi-multiple phases
    (None for odd M, where that formula does not apply); ``enumerated_count``
    is the exhaustive tally (None when enumeration was skipped).  The locked
    ladder always has M - 1 dark steps against one bright.
    """

    modes: int
    pi_phase_count: int | None
    enumerated_count: int | None
    locked_dark_count: int
    bright_count: int
    ratio: float


def dark_census(modes: int, enumerate_states: bool = False) -> DarkCensus:
    analytic = count_pi_phase_dark(modes) if modes % 2 == 0 and modes >= 2 else None
    enumerated = len(enumerate_sign_states(modes)) if enumerate_states else None
    if analytic is not None and enumerated is not None and analytic != enumerated:
        raise AssertionError(
            f"closed form {analytic} disagrees with enumeration {enumerated}"
        )
    return DarkCensus(
        modes=modes,
        pi_phase_count=analytic,
        enumerated_count=enumerated,
        locked_dark_count=modes - 1,
        bright_count=1,
        ratio=bright_to_dark_ratio(modes),
    )
