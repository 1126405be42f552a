"""Shared oracles and gauge strategies for the test suite.

The oracles here re-derive geometry from first principles (tangency
equations solved by the quadratic formula, exact rational arithmetic where
it matters) so that they stay independent of the library code paths they
check.
"""

from __future__ import annotations

import math
from fractions import Fraction

from hypothesis import strategies as st

from steinerchains import Gauge

# Smallest outer radius (r = 1) admitting a closed chain, by chain length:
# R must exceed 1 + 2q + 2 sqrt(q + q^2) with q = tan^2(pi/n).
GAUGE_DOMAINS = {
    3: (14.5, 60.0),
    4: (6.5, 40.0),
    5: (4.2, 30.0),
    6: (3.4, 12.0),
}


def make_gauge(n: int, R: float) -> Gauge:
    return Gauge.from_radii(n, R, 1.0)


def gauge_strategy(n: int) -> st.SearchStrategy[Gauge]:
    lo, hi = GAUGE_DOMAINS[n]
    return st.floats(min_value=lo, max_value=hi, allow_nan=False).map(
        lambda R: make_gauge(n, R)
    )


def any_gauge_strategy() -> st.SearchStrategy[Gauge]:
    return st.sampled_from([3, 4, 5, 6]).flatmap(gauge_strategy)


def mirror_pair_radii(R: float, r: float, d: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Circles tangent to both parents whose center height equals the radius.

    Solves the tangency equations directly: a circle at (x, rho) of radius
    rho satisfies x^2 = r^2 + 2 r rho (inner contact) and
    2 d x = r^2 + d^2 - R^2 + 2 (R + r) rho (outer contact), which combine
    into one quadratic in rho. Returns ((rho_small, x), (rho_large, x)).
    """
    K = r * r + d * d - R * R
    M = 2.0 * (R + r)
    A2 = M * M
    B2 = 2.0 * K * M - 8.0 * d * d * r
    C2 = K * K - 4.0 * d * d * r * r
    s = math.sqrt(B2 * B2 - 4.0 * A2 * C2)
    lo, hi = sorted([(-B2 - s) / (2.0 * A2), (-B2 + s) / (2.0 * A2)])

    def x_of(rho: float) -> float:
        return (K + M * rho) / (2.0 * d)

    return (lo, x_of(lo)), (hi, x_of(hi))


def n4_axial_side_circle(R: float, r: float, d: float) -> tuple[float, float, float]:
    """Radius and center (x, y) of the off-axis circle of the 4-chain axial
    configuration, from three tangency equations (inner, outer, largest)."""
    K = r * r + d * d - R * R
    M = 2.0 * (R + r)
    Xs = (R + d + r) / 2.0
    rs = (R + d - r) / 2.0
    # 2 d x - M rho = K  and  2 Xs x - 2 (r - rs) rho = Xs^2 + r^2 - rs^2
    a1, b1, c1 = 2.0 * d, -M, K
    a2, b2, c2 = 2.0 * Xs, -2.0 * (r - rs), Xs * Xs + r * r - rs * rs
    det = a1 * b2 - a2 * b1
    x = (c1 * b2 - c2 * b1) / det
    rho = (a1 * c2 - a2 * c1) / det
    y = math.sqrt((r + rho) ** 2 - x * x)
    return rho, x, y


def yiu_roots_oracle(n: int, R: float, r: float, u: float) -> tuple[float, float]:
    """Neighbor bends via the literal quadratic formula in exact rationals.

    Independent of the library's factored-discriminant evaluation; the only
    rounding left is in tan(pi/n) and the final square root.
    """
    q = Fraction(math.tan(math.pi / n)) ** 2
    Rf, rf, uf = Fraction(R), Fraction(r), Fraction(u)
    alpha = (q + 1) ** 2 * Rf * Rf * rf * rf * uf * uf
    beta = 2 * (q + 1) * Rf * rf * uf * ((q - 1) * Rf * rf - (Rf - rf) * uf)
    gamma = ((q + 1) * Rf * rf - (Rf - rf) * uf) ** 2 + 4 * Rf * rf * uf * uf
    disc = beta * beta - 4 * alpha * gamma
    s = math.sqrt(max(float(disc), 0.0))
    lo = (-float(beta) - s) / (2.0 * float(alpha))
    hi = (-float(beta) + s) / (2.0 * float(alpha))
    return (lo, hi) if lo <= hi else (hi, lo)


def radius_multisets_close(a, b, tol: float) -> bool:
    return len(a) == len(b) and all(
        abs(x - y) <= tol for x, y in zip(sorted(a), sorted(b))
    )


def circle_sets_close(chain_a, chain_b, tol: float) -> bool:
    """Match circles of two chains as unordered sets, greedily by distance.

    Lexicographic sorting would mispair mirror circles whose x coordinates
    tie only up to roundoff, so each circle grabs its nearest unused partner.
    """
    remaining = list(chain_b.circles)
    for a in chain_a.circles:
        def gap(b):
            return max(
                abs(a.center.x - b.center.x),
                abs(a.center.y - b.center.y),
                abs(a.radius - b.radius),
            )
        best = min(remaining, key=gap)
        if gap(best) > tol:
            return False
        remaining.remove(best)
    return True
