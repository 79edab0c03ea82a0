"""Sparse truncated Fock space for M bosonic modes.

States are stored as a map from occupation tuples ``(n_0, ..., n_{M-1})``
to complex amplitudes; only nonzero terms are kept.  The detection-point
field operator is ``E = sum_m exp(i*theta_m) a_m`` with ``a_m`` the
annihilation operator of mode ``m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DimensionMismatchError

# Amplitudes below this magnitude are dropped after every operation so that
# exact zeros stay exact in sparse comparisons.
PRUNE_THRESHOLD = 1e-15

TWO_PI = 2.0 * math.pi


def _reduce_phase(x: float) -> float:
    """Reduce a phase to [0, 2*pi); guards the x % 2pi == 2pi rounding case."""
    r = x % TWO_PI
    if r >= TWO_PI:
        r = 0.0
    return r


@dataclass(frozen=True)
class ModePhases:
    """Per-mode phase assignment theta_m in radians, stored in [0, 2*pi)."""

    modes: int
    theta: tuple[float, ...]

    def __post_init__(self):
        if self.modes < 1:
            raise ValueError(f"need at least one mode, got {self.modes}")
        if len(self.theta) != self.modes:
            raise DimensionMismatchError(
                f"{len(self.theta)} phases for {self.modes} modes"
            )
        object.__setattr__(
            self, "theta", tuple(_reduce_phase(t) for t in self.theta)
        )

    @classmethod
    def zero(cls, modes: int) -> "ModePhases":
        return cls(modes, (0.0,) * modes)

    @classmethod
    def locked(cls, modes: int, step: float) -> "ModePhases":
        """Linear phase ladder theta_m = m * step (equal spacing between modes)."""
        return cls(modes, tuple(m * step for m in range(modes)))


@dataclass(frozen=True)
class StateVector:
    """Pure state of ``modes`` bosonic modes, truncated at ``cutoff`` total photons.

    ``terms`` maps occupation tuples to amplitudes.  Instances are treated as
    immutable values: every operation returns a new StateVector.
    """

    modes: int
    terms: dict[tuple[int, ...], complex] = field(default_factory=dict)
    cutoff: int = 1

    def __post_init__(self):
        if self.modes < 1:
            raise ValueError(f"need at least one mode, got {self.modes}")
        if self.cutoff < 0:
            raise ValueError(f"cutoff must be non-negative, got {self.cutoff}")
        clean: dict[tuple[int, ...], complex] = {}
        for occ, amp in self.terms.items():
            occ = tuple(int(n) for n in occ)
            if len(occ) != self.modes:
                raise DimensionMismatchError(
                    f"occupation {occ} has {len(occ)} entries for {self.modes} modes"
                )
            if any(n < 0 for n in occ):
                raise ValueError(f"negative occupation in {occ}")
            if sum(occ) > self.cutoff:
                raise ValueError(
                    f"occupation {occ} exceeds photon cutoff {self.cutoff}"
                )
            a = complex(amp)
            if abs(a) >= PRUNE_THRESHOLD:
                clean[occ] = a
        object.__setattr__(self, "terms", clean)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.terms.values()))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero vector")
        return StateVector(
            self.modes, {occ: a / n for occ, a in self.terms.items()}, self.cutoff
        )

    def is_zero(self) -> bool:
        return not self.terms

    def top_sector(self) -> int:
        """Largest total photon number carried by any stored term (0 if empty)."""
        return max((sum(occ) for occ in self.terms), default=0)

    def amplitude(self, occ: tuple[int, ...]) -> complex:
        return self.terms.get(tuple(occ), 0.0 + 0.0j)


def vacuum(modes: int, cutoff: int = 0) -> StateVector:
    return StateVector(modes, {(0,) * modes: 1.0 + 0.0j}, cutoff)


def _check_mode(state: StateVector, mode: int) -> None:
    if not 0 <= mode < state.modes:
        raise IndexError(f"mode {mode} out of range for {state.modes} modes")


def annihilate(state: StateVector, mode: int) -> StateVector:
    """Apply a_mode: |..., n, ...> -> sqrt(n) |..., n-1, ...>."""
    _check_mode(state, mode)
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.terms.items():
        n = occ[mode]
        if n == 0:
            continue
        lowered = occ[:mode] + (n - 1,) + occ[mode + 1 :]
        out[lowered] = out.get(lowered, 0.0) + math.sqrt(n) * amp
    return StateVector(state.modes, out, state.cutoff)


def create(state: StateVector, mode: int) -> StateVector:
    """Apply a_mode^dagger; terms raised past the cutoff are truncated away."""
    _check_mode(state, mode)
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.terms.items():
        if sum(occ) >= state.cutoff:
            continue
        n = occ[mode]
        raised = occ[:mode] + (n + 1,) + occ[mode + 1 :]
        out[raised] = out.get(raised, 0.0) + math.sqrt(n + 1) * amp
    return StateVector(state.modes, out, state.cutoff)


def apply_field(state: StateVector, phases: ModePhases) -> StateVector:
    """Detection-point field operator: sum_m exp(i*theta_m) a_m, linear in the state."""
    if phases.modes != state.modes:
        raise DimensionMismatchError(
            f"{phases.modes} phases for a {state.modes}-mode state"
        )
    factors = [complex(math.cos(t), math.sin(t)) for t in phases.theta]
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state.terms.items():
        for mode, n in enumerate(occ):
            if n == 0:
                continue
            lowered = occ[:mode] + (n - 1,) + occ[mode + 1 :]
            out[lowered] = out.get(lowered, 0.0) + factors[mode] * math.sqrt(n) * amp
    return StateVector(state.modes, out, state.cutoff)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    if a.modes != b.modes:
        raise DimensionMismatchError(
            f"inner product between {a.modes}- and {b.modes}-mode states"
        )
    small, large = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    total = 0.0 + 0.0j
    for occ in small:
        if occ in large:
            total += a.terms[occ].conjugate() * b.terms[occ]
    return total


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Tensor product; modes of ``b`` are appended after those of ``a``."""
    out: dict[tuple[int, ...], complex] = {}
    for occ_a, amp_a in a.terms.items():
        for occ_b, amp_b in b.terms.items():
            out[occ_a + occ_b] = amp_a * amp_b
    return StateVector(a.modes + b.modes, out, a.cutoff + b.cutoff)
