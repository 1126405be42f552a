"""Mirror-symmetric chains of a poristic family and their printed formulas.

Every family contains chains fixed by reflection in the axis through the
parent centers: for odd n two axial chains (one holding the largest circle,
one the smallest), for even n a single axial chain holding both extremes
plus a lateral chain whose circles touch the axis. The geometric
construction is authoritative here; published closed forms are evaluated
alongside it and disagreements are reported, not silently corrected.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .porism import Gauge, SteinerChain, chain_at_phase


class SymmetricChainKind(enum.Enum):
    AXIAL_MAX = "axial-max"  # odd n, contains the largest circle
    AXIAL_MIN = "axial-min"  # odd n, contains the smallest circle
    AXIAL_EVEN = "axial"  # even n, contains both extremes
    LATERAL = "lateral"  # even n, circles tangent to the axis


def symmetric_chain(g: Gauge, kind: SymmetricChainKind) -> SteinerChain:
    """Build the requested symmetric chain via the phase construction.

    Phase 0 is the axial chain through the largest circle (+x side); phase
    pi/n is the other axial chain for odd n and the lateral chain for even n.
    """
    odd = g.n % 2 == 1
    if kind in (SymmetricChainKind.AXIAL_MAX, SymmetricChainKind.AXIAL_MIN) and not odd:
        raise ValueError(f"{kind.value} requires odd chain length, got n={g.n}")
    if kind in (SymmetricChainKind.AXIAL_EVEN, SymmetricChainKind.LATERAL) and odd:
        raise ValueError(f"{kind.value} requires even chain length, got n={g.n}")
    if kind in (SymmetricChainKind.AXIAL_MAX, SymmetricChainKind.AXIAL_EVEN):
        theta = 0.0
    else:
        theta = math.pi / g.n
    return chain_at_phase(g, theta)


def axial_closed_form_n4(g: Gauge) -> tuple[tuple[float, float, float, float], tuple[float, float, float, float]]:
    """Radii and bends of the 4-chain axial quadruple, in cyclic order
    (smallest, side, largest, side)."""
    if g.n != 4:
        raise ValueError("axial_closed_form_n4 requires n = 4")
    R, r, d = g.R, g.r, g.d
    side = 2.0 * R * r / (R - r)
    radii = ((R - d - r) / 2.0, side, (R + d - r) / 2.0, side)
    bends = (2.0 / (R - d - r), (R - r) / (2.0 * R * r), 2.0 / (R + d - r), (R - r) / (2.0 * R * r))
    return radii, bends


def lateral_chain_n4(g: Gauge) -> tuple[tuple[float, float], SteinerChain]:
    """Closed-form lateral bend pair b_-, b_+ and the constructed chain.

    The two bends solve x^2 - (A + a) x + (A - a)^2 / 8 = 0, which reduces to
    (R - r)/(2 R r) +- d/(2 sqrt(2) R r); each occurs twice in the chain.
    """
    if g.n != 4:
        raise ValueError("lateral_chain_n4 requires n = 4")
    R, r, d = g.R, g.r, g.d
    mid = (R - r) / (2.0 * R * r)
    half = d / (2.0 * math.sqrt(2.0) * R * r)
    chain = chain_at_phase(g, math.pi / 4.0)
    return (mid - half, mid + half), chain


def _axis_first_triple(chain: SteinerChain) -> tuple[float, float, float]:
    """Radii of a 3-chain ordered (axis circle, companion, companion)."""
    axis = min(chain.circles, key=lambda c: abs(c.center.y))
    companions = sorted(c.radius for c in chain.circles if c is not axis)
    return (axis.radius, companions[0], companions[1])


@dataclass(frozen=True, slots=True)
class AxialTriplesN3Report:
    """Published 3-chain axial formulas next to the constructed chains.

    printed_* evaluate the literature formulas verbatim; solver_* come from
    the phase construction. Discrepancies are reported for both ways of
    pairing the printed triples with the two solver chains.
    """

    printed_radii: tuple[tuple[float, float, float], tuple[float, float, float]]
    printed_bends: tuple[tuple[float, float, float], tuple[float, float, float]]
    solver_radii: tuple[tuple[float, float, float], tuple[float, float, float]]
    max_relative_discrepancy: float
    swapped_pairing_discrepancy: float

    @property
    def discrepant(self) -> bool:
        return self.max_relative_discrepancy > 1e-6


def axial_triples_n3_printed(g: Gauge) -> AxialTriplesN3Report:
    if g.n != 3:
        raise ValueError("axial_triples_n3_printed requires n = 3")
    R, r, d = g.R, g.r, g.d
    comp1 = 4.0 * R * r * (R - r + d) / (R * R - r * r - 4.0 * R * r + d * (R - r))
    comp2 = 4.0 * R * r * (R - r - d) / (R * R - r * r - 4.0 * R * r - d * (R - r))
    printed_radii = (
        ((R - r + d) / 2.0, comp1, comp1),
        ((R - r - d) / 2.0, comp2, comp2),
    )
    printed_bends = tuple(tuple(1.0 / v for v in triple) for triple in printed_radii)
    solver_max = _axis_first_triple(chain_at_phase(g, 0.0))
    solver_min = _axis_first_triple(chain_at_phase(g, math.pi / 3.0))
    solver_radii = (solver_max, solver_min)

    def pair_disc(printed, solver):
        return max(
            abs(p - s) / abs(s) for p, s in zip(printed, solver)
        )

    direct = max(pair_disc(printed_radii[0], solver_max), pair_disc(printed_radii[1], solver_min))
    swapped = max(pair_disc(printed_radii[0], solver_min), pair_disc(printed_radii[1], solver_max))
    return AxialTriplesN3Report(printed_radii, printed_bends, solver_radii, direct, swapped)


@dataclass(frozen=True, slots=True)
class AxialBendsN6Report:
    """Published axial 6-chain bends next to the constructed chain's bends,
    both in cyclic order starting at the largest circle."""

    printed: tuple[float, ...]
    solver: tuple[float, ...]
    max_relative_discrepancy: float


def axial_bends_n6(g: Gauge) -> AxialBendsN6Report:
    if g.n != 6:
        raise ValueError("axial_bends_n6 requires n = 6")
    R, r, d = g.R, g.r, g.d
    plus_mid = (3.0 * R * R + 3.0 * R * d - 2.0 * R * r - 3.0 * d * r + 3.0 * r * r) / (
        4.0 * R * r * (R - r + d)
    )
    minus_mid = (3.0 * R * R - 3.0 * R * d - 2.0 * R * r + 3.0 * d * r + 3.0 * r * r) / (
        4.0 * R * r * (R - r - d)
    )
    printed = (
        2.0 / (R + d - r),
        plus_mid,
        minus_mid,
        2.0 / (R - r - d),
        minus_mid,
        plus_mid,
    )
    solver = chain_at_phase(g, 0.0).bends
    disc = max(abs(p - s) / max(abs(s), 1e-300) for p, s in zip(printed, solver))
    return AxialBendsN6Report(printed, solver, disc)
