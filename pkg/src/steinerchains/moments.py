"""Bend-power moments of chains, their closed forms, and invariance sweeps.

I_k sums the k-th powers of the chain bends; J_{k,m} additionally weights
each term by the m-th power of the circle center taken as a complex number.
For an n-chain the I_k with k <= n-1 and the J_{k,m} with 0 <= m <= k <= n-1
do not depend on the phase of the family, and the invariant J_{k,m} are real
in the canonical frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .porism import TAU, Gauge, SteinerChain, chain_at_phase


def bending_moment(chain: SteinerChain, k: int) -> float:
    """Sum of k-th powers of the chain bends."""
    if k < 0:
        raise ValueError("moment order k must be non-negative")
    return sum(b**k for b in chain.bends)


def complex_moment(chain: SteinerChain, k: int, m: int) -> complex:
    """Sum of bend^k * center^m over the chain, centers as complex numbers.

    The m = 0 column reproduces bending_moment exactly: the same float
    powers are accumulated in the same order.
    """
    if k < 0 or m < 0:
        raise ValueError("moment orders must be non-negative")
    total = 0j
    for c in chain.circles:
        total += (c.bend**k) * (c.center.as_complex() ** m)
    return total


@dataclass(frozen=True, slots=True)
class MomentSet:
    """All moments of one chain: I_1..I_K and J_{k,m} for 0 <= m <= k <= n-1."""

    n: int
    bending: tuple[float, ...]
    complex_map: dict[tuple[int, int], complex]


def invariant_pairs(n: int) -> list[tuple[int, int]]:
    """(k, m) index pairs whose complex moments are phase-invariant."""
    return [(k, m) for k in range(n) for m in range(k + 1)]


def moment_set(chain: SteinerChain, max_k: int | None = None) -> MomentSet:
    n = chain.gauge.n
    top = n if max_k is None else max_k
    bending = tuple(bending_moment(chain, k) for k in range(1, top + 1))
    cmap = {(k, m): complex_moment(chain, k, m) for k, m in invariant_pairs(n)}
    return MomentSet(n, bending, cmap)


def closed_form_I(n: int, k: int, g: Gauge) -> float:
    """Printed closed forms of the invariant bending moments in R and r.

    Available for (n, k) in {(3,1), (3,2), (4,1), (4,2), (4,3)}.
    """
    R, r = g.R, g.r
    if (n, k) == (3, 1):
        return (R - r) / (2.0 * R * r)
    if (n, k) == (3, 2):
        return (R * R - 6.0 * R * r + r * r) / (8.0 * R * R * r * r)
    if (n, k) == (4, 1):
        return 2.0 * (R - r) / (R * r)
    if (n, k) == (4, 2):
        return (3.0 * R * R - 10.0 * R * r + 3.0 * r * r) / (2.0 * R * R * r * r)
    if (n, k) == (4, 3):
        return (5.0 * R**3 - 27.0 * R * R * r + 27.0 * R * r * r - 5.0 * r**3) / (
            4.0 * R**3 * r**3
        )
    raise ValueError(f"no closed form implemented for (n, k) = ({n}, {k})")


@dataclass(frozen=True, slots=True)
class GeneralMomentParams:
    """Scaled parent-bend symmetric functions: s = cot^2(pi/n) (A + a)/2 and
    p = cot^2(pi/n) A a, with a = 1/r, A = -1/R."""

    s: float
    p: float


def first_two_moments_general(g: Gauge) -> tuple[float, float, GeneralMomentParams]:
    """I_1 = n s and I_2 = (n/2)(3 s^2 + p), valid for every n >= 3."""
    cot2 = 1.0 / math.tan(math.pi / g.n) ** 2
    A, a = g.outer_bend, g.inner_bend
    s = cot2 * (A + a) / 2.0
    p = cot2 * A * a
    return g.n * s, (g.n / 2.0) * (3.0 * s * s + p), GeneralMomentParams(s, p)


def third_moment_relation_residual(I1: float, I2: float, I3: float) -> float:
    """I3 - (3/4 I1 I2 - 1/8 I1^3); vanishes for genuine 4-chain moments."""
    return I3 - (0.75 * I1 * I2 - 0.125 * I1**3)


def sweep_header(n: int) -> list[str]:
    cols = ["phase"] + [f"I{k}" for k in range(1, n + 1)]
    for k, m in invariant_pairs(n):
        cols.append(f"ReJ{k}_{m}")
        cols.append(f"ImJ{k}_{m}")
    return cols


def sweep_rows(g: Gauge, samples: int) -> list[list[float]]:
    """Per-phase moment table over `samples` uniform phases of one period."""
    if samples < 2:
        raise ValueError("a sweep needs at least 2 samples")
    n = g.n
    pairs = invariant_pairs(n)
    rows = []
    for j in range(samples):
        theta = (TAU / n) * j / samples
        chain = chain_at_phase(g, theta)
        row = [theta]
        row.extend(bending_moment(chain, k) for k in range(1, n + 1))
        for k, m in pairs:
            val = complex_moment(chain, k, m)
            row.append(val.real)
            row.append(val.imag)
        rows.append(row)
    return rows


@dataclass(frozen=True, slots=True)
class InvarianceReport:
    """Max-min deviations of all moments over a phase sweep.

    bending_deviation[k] covers I_k for k = 1..n; complex_deviation covers
    the invariant (k, m) pairs componentwise. max_imag is the largest |Im J|
    seen among invariant pairs. The deviation of I_n (not an invariant)
    doubles as the negative control.
    """

    n: int
    samples: int
    bending_deviation: dict[int, float]
    complex_deviation: dict[tuple[int, int], float]
    max_imag: float
    negative_control: float

    def invariants_ok(self, threshold: float) -> bool:
        real_ok = all(self.bending_deviation[k] <= threshold for k in range(1, self.n))
        cplx_ok = all(v <= threshold for v in self.complex_deviation.values())
        return real_ok and cplx_ok and self.max_imag <= threshold


def invariance_sweep(g: Gauge, samples: int) -> InvarianceReport:
    rows = sweep_rows(g, samples)
    n = g.n
    pairs = invariant_pairs(n)
    bending_dev = {}
    for k in range(1, n + 1):
        col = [row[k] for row in rows]
        bending_dev[k] = max(col) - min(col)
    complex_dev = {}
    max_imag = 0.0
    base = 1 + n
    for idx, pair in enumerate(pairs):
        re_col = [row[base + 2 * idx] for row in rows]
        im_col = [row[base + 2 * idx + 1] for row in rows]
        complex_dev[pair] = max(max(re_col) - min(re_col), max(im_col) - min(im_col))
        max_imag = max(max_imag, max(abs(v) for v in im_col))
    return InvarianceReport(n, samples, bending_dev, complex_dev, max_imag, bending_dev[n])
