"""JSON chain documents, CSV moment sweeps, and static SVG figures.

Numbers are serialized as the shortest decimal that round-trips the exact
double, so written artifacts are reproducible bit for bit across platforms.
"""

from __future__ import annotations

import json
from pathlib import Path

from .config import tolerance
from .geometry import Orientation, OrientedCircle, PlanePoint
from .moments import sweep_header, sweep_rows
from .porism import Gauge, SteinerChain, chain_residuals, parent_circles


def chain_to_document(chain: SteinerChain) -> dict:
    g = chain.gauge
    return {
        "gauge": {"n": g.n, "R": g.R, "r": g.r, "d": g.d},
        "phase": chain.phase,
        "circles": [
            {"x": c.center.x, "y": c.center.y, "radius": c.radius}
            for c in chain.circles
        ],
    }


def document_to_chain(doc: dict, validate: bool = True, tol: float | None = None) -> SteinerChain:
    """Rebuild a chain from its document form, revalidating its tangencies."""
    try:
        g = Gauge(
            int(doc["gauge"]["n"]),
            float(doc["gauge"]["R"]),
            float(doc["gauge"]["r"]),
            float(doc["gauge"]["d"]),
        )
        phase = float(doc["phase"])
        circles = tuple(
            OrientedCircle(
                PlanePoint(float(c["x"]), float(c["y"])),
                float(c["radius"]),
                Orientation.CHAIN_OR_INNER,
            )
            for c in doc["circles"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed chain document: {exc}") from exc
    if len(circles) != g.n:
        raise ValueError(f"document lists {len(circles)} circles for an n={g.n} gauge")
    chain = SteinerChain(g, phase, circles)
    if validate:
        res = chain_residuals(chain)
        if res.max() > tolerance(tol) * g.R:
            raise ValueError(
                "chain document fails revalidation: residuals "
                f"adjacent={res.adjacent:.3g} inner={res.inner:.3g} "
                f"outer={res.outer:.3g} range={res.range_excess:.3g}"
            )
    return chain


def save_chain(chain: SteinerChain, path: str | Path) -> None:
    Path(path).write_text(json.dumps(chain_to_document(chain), indent=2) + "\n")


def load_chain(path: str | Path, validate: bool = True) -> SteinerChain:
    return document_to_chain(json.loads(Path(path).read_text()), validate=validate)


def sweep_csv_text(g: Gauge, samples: int) -> str:
    """Moment sweep as CSV: one row per phase, shortest round-trip decimals."""
    lines = [",".join(sweep_header(g.n))]
    for row in sweep_rows(g, samples):
        lines.append(",".join(repr(v) for v in row))
    return "\n".join(lines) + "\n"


def write_sweep_csv(g: Gauge, samples: int, path: str | Path) -> None:
    Path(path).write_text(sweep_csv_text(g, samples))


def render_svg(chain: SteinerChain) -> bytes:
    """Stroked-circle figure of the chain and its parents.

    The viewBox is the outer parent's bounding box padded by 5%; the y-axis
    is flipped so the figure appears in mathematical orientation. Output is
    deterministic for identical input.
    """
    inner, outer = parent_circles(chain.gauge)
    half = outer.radius * 1.05
    x0 = outer.center.x - half
    y0 = -outer.center.y - half + 0.0
    stroke = outer.radius / 200.0
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0!r} {y0!r} {2 * half!r} {2 * half!r}">',
        f'<g fill="none" stroke-width="{stroke!r}">',
    ]

    def circle(c: OrientedCircle, color: str) -> str:
        cy = -c.center.y + 0.0  # avoid repr of negative zero
        return (
            f'<circle cx="{c.center.x!r}" cy="{cy!r}" '
            f'r="{c.radius!r}" stroke="{color}"/>'
        )

    parts.append(circle(outer, "#303030"))
    parts.append(circle(inner, "#909090"))
    for c in chain.circles:
        parts.append(circle(c, "#1f6fb4"))
    parts.append("</g>")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
