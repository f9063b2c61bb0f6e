"""Gcd ladders, fork-sequence Euler characteristics, and correction sums.

Each hull edge j carries a correction term C^j, a linear form in gamma that
accounts for the non-transversal branch crossings sitting over that edge.
Two independent routes compute it:

  * the gcd-ladder route: accumulate gcds along the ordering M^j and weight
    each monomial by the drop in the ladder;
  * the level route: slide the edge's facet hyperplane through the lifted
    support one lattice level at a time, tracking the gcd of the first
    coordinates swept up so far.

The routes must agree exactly; the verify machinery compares them on every
sampled covector and surfaces any discrepancy instead of reconciling it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonIntegerCovector
from .tropical import CombinatorialType, Covector, SupportSet


def gcd_ladder(w: tuple[int, ...], j: int, m_j: tuple[int, ...]) -> tuple[int, ...]:
    """Ladder b_0 = gcd(w_j, w_{j+1}), b_l = gcd(b_{l-1}, m_l) along M^j.

    Returns all |M^j| + 1 entries; affine generation forces the tail to 1.
    """
    b = gcd(abs(w[j]), abs(w[j + 1]))
    ladder = [b]
    for m in m_j:
        b = gcd(b, abs(m))
        ladder.append(b)
    return tuple(ladder)


def c_coeffs(
    support: SupportSet, ctype: CombinatorialType, j: int
) -> tuple[int, ...]:
    """Integer coefficients of the linear form C^j on the support.

    Monomial m at ladder step l contributes (b_{l-1} - b_l) times
    (d_j on gamma(m), (m - w_{j+1}) on gamma(w_j), (w_j - m) on gamma(w_{j+1})).
    The vector is zero whenever gcd(w_j, w_{j+1}) = 1.
    """
    w, m_j = ctype.w, ctype.m[j]
    wj, wj1 = w[j], w[j + 1]
    ladder = gcd_ladder(w, j, m_j)
    coeffs = [0] * len(support)
    idx = {p: i for i, p in enumerate(support.points)}
    for l, m in enumerate(m_j, start=1):
        drop = ladder[l - 1] - ladder[l]
        if drop == 0:
            continue
        coeffs[idx[m]] += (wj1 - wj) * drop
        coeffs[idx[wj]] += (m - wj1) * drop
        coeffs[idx[wj1]] += (wj - m) * drop
    return tuple(coeffs)


def c_value(
    support: SupportSet, gamma: Covector, ctype: CombinatorialType, j: int
) -> Fraction:
    """C^j evaluated at gamma (dot product of c_coeffs with the values)."""
    return sum(
        (c * v for c, v in zip(c_coeffs(support, ctype, j), gamma.values)),
        start=Fraction(0),
    )


def validate_fork_sequence(entries) -> tuple[int, ...]:
    """Check a fork sequence: positive, divisibility chain, stabilizes at 1."""
    seq = tuple(int(e) for e in entries)
    if not seq or any(e < 1 for e in seq):
        raise ValueError(f"fork sequence entries must be positive: {entries}")
    for a, b in zip(seq, seq[1:]):
        if a % b != 0:
            raise ValueError(f"{b} does not divide {a} in {entries}")
    if seq[-1] != 1:
        raise ValueError(f"fork sequence must stabilize at 1: {entries}")
    return seq


def chi_fork(entries) -> int:
    """Euler characteristic of the Milnor fiber of a fork-path singularity.

    chi(i) = i_1 - i_1 * sum_n (i_n - 1); trailing 1s contribute nothing.
    """
    seq = validate_fork_sequence(entries)
    return seq[0] - seq[0] * sum(e - 1 for e in seq)


@dataclass(frozen=True)
class FacetFunctional:
    """Primitive supporting functional of the facet over hull edge j.

    coeffs is the content-reduced normal; level is the reduced facet height;
    volume is the content itself, which equals the facet's lattice area.
    """

    coeffs: tuple[int, int, int]
    level: int
    volume: int


def _lifted_support(support: SupportSet, gamma: Covector) -> list[tuple[int, int, int]]:
    """The 3D support: apex (0,1,0), both base points, and the lifted points."""
    pts = {(0, 1, 0), (support.low, 0, 0), (support.high, 0, 0)}
    for p, v in zip(support.points, gamma.values):
        pts.add((p, 0, int(v)))
    return sorted(pts)


def _require_integral(gamma: Covector) -> None:
    if not gamma.is_integral():
        raise NonIntegerCovector(
            "integer covector required; scale by the lcm of denominators"
        )


def facet_functional(
    support: SupportSet, gamma: Covector, ctype: CombinatorialType, j: int
) -> FacetFunctional:
    """Reduced hyperplane functional of the facet spanned by hull edge j.

    The unreduced normal is (gamma(w_j) - gamma(w_{j+1}), S_j, d_j) at level
    S_j; dividing by the content yields coprime coefficients, and the content
    is the facet's lattice area.
    """
    _require_integral(gamma)
    w = ctype.w
    u, v = w[j], w[j + 1]
    gu, gv = int(gamma(u)), int(gamma(v))
    s = v * gu - u * gv
    d = v - u
    content = gcd(gcd(abs(gu - gv), abs(s)), d)
    h = (gu - gv) // content, s // content, d // content
    level = s // content
    for pt in _lifted_support(support, gamma):
        value = h[0] * pt[0] + h[1] * pt[1] + h[2] * pt[2]
        if value > level:
            raise AssertionError(
                f"lifted point {pt} above facet level {level} (internal bug)"
            )
    return FacetFunctional(h, level, content)


def level_scan(
    support: SupportSet, gamma: Covector, ctype: CombinatorialType, j: int
) -> tuple[tuple[int, ...], FacetFunctional]:
    """Fork sequence of facet j by sweeping its hyperplane down the levels.

    Level l of the sweep accumulates every lifted-support point at reduced
    height >= level - (l - 1); the l-th entry is the gcd of the accumulated
    first coordinates.  The scan stops at the first 1.
    """
    ff = facet_functional(support, gamma, ctype, j)
    h1, h2, h3 = ff.coeffs
    by_level: dict[int, list[int]] = {}
    for x, y, z in _lifted_support(support, gamma):
        by_level.setdefault(h1 * x + h2 * y + h3 * z, []).append(x)
    floor = min(by_level)
    seq = []
    g = 0
    level = ff.level
    while True:
        for x in by_level.get(level, ()):
            g = gcd(g, abs(x))
        seq.append(g)
        if g == 1:
            return tuple(seq), ff
        if level < floor:
            raise AssertionError(
                "level scan ran past the support without reaching gcd 1"
            )
        level -= 1


def c_value_via_levels(
    support: SupportSet, gamma: Covector, ctype: CombinatorialType, j: int
) -> Fraction:
    """C^j through the level route: -Vol(facet) * sum_l (i_l - 1)."""
    seq, ff = level_scan(support, gamma, ctype, j)
    return Fraction(-ff.volume * sum(i - 1 for i in seq))


def c_value_via_levels_scaled(
    support: SupportSet, gamma: Covector, ctype: CombinatorialType, j: int
) -> Fraction:
    """Level-route C^j for rational gamma, via scaling and linearity."""
    if gamma.is_integral():
        return c_value_via_levels(support, gamma, ctype, j)
    from .rationals import common_denominator

    q = common_denominator(gamma.values)
    return c_value_via_levels(support, gamma.scaled(q), ctype, j) / q
