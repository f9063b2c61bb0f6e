"""Assembling the Morse polytope: vertices, projections, and SVG output."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cones import enumerate_types
from .errors import BadAxes, HyperplaneViolation
from .rationals import rational_to_json
from .support_function import ShiftConfig, mu_coeffs
from .tropical import CombinatorialType, Covector, SupportSet


@dataclass(frozen=True)
class ConeRecord:
    """One enumerated cone with its witness and the vertex it maps to."""

    ctype: CombinatorialType
    witness: Covector
    vertex_index: int


@dataclass(frozen=True)
class MorsePolytope:
    """Deduplicated vertex set plus the cone-to-vertex surjection table.

    Every vertex lies on the same two hyperplanes: coordinate sum d1 and
    exponent-weighted sum d2.
    """

    support: SupportSet
    shift: ShiftConfig
    vertices: tuple[tuple[int, ...], ...]
    cones: tuple[ConeRecord, ...]
    d1: int
    d2: int

    @cached_property
    def _cone_index(self) -> dict[CombinatorialType, int]:
        return {record.ctype: record.vertex_index for record in self.cones}

    def vertex_of(self, ctype: CombinatorialType) -> tuple[int, ...]:
        try:
            return self.vertices[self._cone_index[ctype]]
        except KeyError:
            raise KeyError(f"no cone for {ctype}") from None

    def to_json(self) -> dict:
        return {
            "A": list(self.support.points),
            "shift": [self.shift.c1, self.shift.c2],
            "d1": self.d1,
            "d2": self.d2,
            "vertices": [list(v) for v in self.vertices],
            "cones": [
                {
                    **record.ctype.to_json(),
                    "witness": record.witness.to_json(),
                    "vertex_index": record.vertex_index,
                }
                for record in self.cones
            ],
        }


def build_polytope(
    support: SupportSet,
    shift: ShiftConfig = ShiftConfig(),
    *,
    max_support_size: int = 7,
    jobs: int | None = None,
) -> MorsePolytope:
    """Enumerate cones, evaluate the vertex of each, dedup, and verify.

    Vertices are ordered lexicographically; the cone table keeps the
    canonical enumeration order so the surjection stays inspectable.
    """
    enumerated = enumerate_types(
        support, max_support_size=max_support_size, jobs=jobs
    )
    raw = [mu_coeffs(support, ctype, shift) for ctype, _ in enumerated]
    vertices = tuple(sorted(set(raw)))
    index = {v: i for i, v in enumerate(vertices)}
    cones = tuple(
        ConeRecord(ctype, witness, index[vertex])
        for (ctype, witness), vertex in zip(enumerated, raw)
    )
    d1 = sum(vertices[0])
    d2 = sum(a * c for a, c in zip(support.points, vertices[0]))
    for v in vertices[1:]:
        if sum(v) != d1 or sum(a * c for a, c in zip(support.points, v)) != d2:
            raise HyperplaneViolation(
                f"vertex {v} violates the hyperplane constants d1={d1}, d2={d2}"
            )
    return MorsePolytope(support, shift, vertices, cones, d1, d2)


# --- 2D hull and projections -----------------------------------------------------


def _orient(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points, return_collinear: bool = False):
    """Convex hull in counterclockwise order, exact monotone chain.

    Collinear boundary points are dropped from the vertex list; pass
    return_collinear=True to also get them back as a side channel.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return (list(pts), []) if return_collinear else list(pts)

    def half(sequence):
        chain = []
        for p in sequence:
            while len(chain) >= 2 and _orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if return_collinear:
        interior_or_edge = [p for p in pts if p not in set(hull)]
        on_edge = [
            p
            for p in interior_or_edge
            if any(
                _orient(hull[i], hull[(i + 1) % len(hull)], p) == 0
                and min(hull[i][0], hull[(i + 1) % len(hull)][0]) <= p[0]
                <= max(hull[i][0], hull[(i + 1) % len(hull)][0])
                and min(hull[i][1], hull[(i + 1) % len(hull)][1]) <= p[1]
                <= max(hull[i][1], hull[(i + 1) % len(hull)][1])
                for i in range(len(hull))
            )
        ]
        return hull, on_edge
    return hull


def default_axes(support: SupportSet) -> tuple[int, int]:
    """Forget the first and last coordinates where that leaves a plane."""
    n = len(support)
    return (1, n - 2) if n >= 4 else (0, 1)


def project_and_hull(
    polytope: MorsePolytope, axes: tuple[int, int] | None = None
) -> list[tuple[int, int]]:
    """Drop all but two coordinates and hull the image, counterclockwise."""
    n = len(polytope.support)
    if axes is None:
        axes = default_axes(polytope.support)
    i, j = axes
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise BadAxes(f"axes {axes} invalid for dimension {n}")
    return convex_hull_2d([(v[i], v[j]) for v in polytope.vertices])


# --- SVG rendering -----------------------------------------------------------------


@dataclass(frozen=True)
class RenderOptions:
    scale: int = 40
    margin: int = 30
    grid: bool = True
    labels: bool = True


def _fmt(x) -> str:
    return f"{float(x):.3f}"


def render_svg(polygon, options: RenderOptions = RenderOptions()) -> str:
    """Self-contained SVG for a planar polygon (vertex cycle).

    Accepts any sequence of exact-rational points; also accepts a
    FiberPolygon, in which case each horizontal base is drawn as well.
    Output bytes depend only on the input and the options.
    """
    bases = None
    if hasattr(polygon, "vertices") and hasattr(polygon, "bases"):
        fp = polygon
        pts = fp.vertices()
        y = Fraction(0)
        bases = [(Fraction(0), fp.bases[0], y)]
        for width, h in zip(fp.bases[1:], fp.heights):
            y += h
            bases.append((Fraction(0), width, y))
    else:
        pts = [tuple(map(Fraction, p)) for p in polygon]

    xs = [p[0] for p in pts] or [Fraction(0)]
    ys = [p[1] for p in pts] or [Fraction(0)]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    s, mg = options.scale, options.margin
    width = float((x1 - x0) * s) + 2 * mg
    height = float((y1 - y0) * s) + 2 * mg

    def tx(x):
        return _fmt((x - x0) * s + mg)

    def ty(y):
        return _fmt(height - (float((y - y0) * s) + mg))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if options.grid:
        gx = int(x0)
        while gx <= x1:
            if gx >= x0:
                lines.append(
                    f'<line class="grid" x1="{tx(gx)}" y1="{ty(y0)}" '
                    f'x2="{tx(gx)}" y2="{ty(y1)}" stroke="#ddd" stroke-width="0.5"/>'
                )
            gx += 1
        gy = int(y0)
        while gy <= y1:
            if gy >= y0:
                lines.append(
                    f'<line class="grid" x1="{tx(x0)}" y1="{ty(gy)}" '
                    f'x2="{tx(x1)}" y2="{ty(gy)}" stroke="#ddd" stroke-width="0.5"/>'
                )
            gy += 1
    if len(pts) >= 2:
        path = " ".join(f"{tx(x)},{ty(y)}" for x, y in pts)
        lines.append(
            f'<polygon points="{path}" fill="#9ecbff" fill-opacity="0.45" '
            f'stroke="#1f4e8c" stroke-width="1.5"/>'
        )
    if bases is not None:
        for xa, xb, y in bases:
            lines.append(
                f'<line class="base" x1="{tx(xa)}" y1="{ty(y)}" '
                f'x2="{tx(xb)}" y2="{ty(y)}" stroke="#c34043" stroke-width="1.2"/>'
            )
    for x, y in pts:
        lines.append(
            f'<circle class="vertex" cx="{tx(x)}" cy="{ty(y)}" r="3" fill="#1f4e8c"/>'
        )
        if options.labels:
            lines.append(
                f'<text x="{tx(x)}" y="{ty(y)}" dx="5" dy="-5" font-size="10">'
                f"({rational_to_json(Fraction(x))}, {rational_to_json(Fraction(y))})"
                f"</text>"
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
