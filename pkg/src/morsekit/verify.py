"""Seeded property suite cross-checking every dual-route computation.

Samples integer covectors uniformly from {0, ..., bound}^|A|, resampling on
degeneracy (walls have measure zero but positive probability on a grid), and
checks on each sample:

  * dominance: the maximum of <vertex, gamma> over the polytope equals the
    support-function value, attained exactly at the extracted cone's vertex;
  * the gcd-ladder and level-scan routes to every C^j agree;
  * the closed-form and trapezoid-stack fiber areas agree;
  * the shoelace and edge-sum Newton areas agree;
  * the three stratum-count relations hold, with the parity diagnostic.

Reports are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegeneracyError
from .fiber import (
    area_newton,
    area_newton_formula,
    strata_counts,
    vol_fiber_closed,
    vol_fiber_trapezoids,
)
from .polytope import MorsePolytope, build_polytope
from .singularity import c_value, c_value_via_levels, gcd_ladder, level_scan
from .support_function import ShiftConfig, mu_value
from .tropical import Covector, SupportSet, extract


def sample_morse_covector(
    support: SupportSet,
    rng: random.Random,
    *,
    bound: int = 50,
    rational: bool = False,
) -> tuple[Covector, int]:
    """A Morse covector from the seeded grid, plus the resample count."""
    resamples = 0
    while True:
        if rational:
            values = tuple(
                Fraction(rng.randint(0, 4 * bound), rng.randint(1, 12))
                for _ in support.points
            )
        else:
            values = tuple(
                Fraction(rng.randint(0, bound)) for _ in support.points
            )
        gamma = Covector(support, values)
        try:
            extract(support, gamma)
            return gamma, resamples
        except DegeneracyError:
            resamples += 1


@dataclass
class PropertyReport:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, gamma: Covector, detail: str = ""):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = {
                    "gamma": gamma.to_json(),
                    "detail": detail,
                }

    def to_json(self) -> dict:
        out = {"property": self.name, "passed": self.passed, "failed": self.failed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteResult:
    support: SupportSet
    seed: int
    samples: int
    resamples: int = 0
    reports: list[PropertyReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_json(self) -> dict:
        return {
            "A": list(self.support.points),
            "seed": self.seed,
            "samples": self.samples,
            "resamples": self.resamples,
            "ok": self.ok,
            "properties": [r.to_json() for r in self.reports],
        }


def _dot(coeffs, values) -> Fraction:
    return sum((c * v for c, v in zip(coeffs, values)), start=Fraction(0))


def run_property_suite(
    support: SupportSet,
    samples: int,
    seed: int,
    *,
    bound: int = 50,
    shift: ShiftConfig = ShiftConfig(),
    polytope: MorsePolytope | None = None,
    jobs: int | None = None,
) -> SuiteResult:
    """Run every property on `samples` seeded integer Morse covectors."""
    rng = random.Random(seed)
    if polytope is None:
        polytope = build_polytope(support, shift, jobs=jobs)
    result = SuiteResult(support, seed, samples)
    dominance = PropertyReport("dominance")
    dual_c = PropertyReport("cj_dual_route")
    dual_vol = PropertyReport("fiber_volume_dual_route")
    dual_area = PropertyReport("newton_area_dual_route")
    strata = PropertyReport("strata_consistency")
    result.reports = [dominance, dual_c, dual_vol, dual_area, strata]

    for _ in range(samples):
        gamma, extra = sample_morse_covector(support, rng, bound=bound)
        result.resamples += extra
        ctype = extract(support, gamma)

        mu = mu_value(support, gamma, shift)
        best = max(_dot(v, gamma.values) for v in polytope.vertices)
        own = _dot(polytope.vertex_of(ctype), gamma.values)
        argmax = [
            v for v in polytope.vertices if _dot(v, gamma.values) == best
        ]
        dominance.record(
            best == mu and own == mu and len(argmax) == 1,
            gamma,
            f"max={best} mu={mu} own={own} argmax_count={len(argmax)}",
        )

        ok = True
        detail = ""
        for j in range(ctype.k):
            lhs = c_value(support, gamma, ctype, j)
            rhs = c_value_via_levels(support, gamma, ctype, j)
            if lhs != rhs:
                seq, _ = level_scan(support, gamma, ctype, j)
                ladder = gcd_ladder(ctype.w, j, ctype.m[j])
                ok = False
                detail = (
                    f"j={j} ladder_route={lhs} level_route={rhs} "
                    f"ladder={ladder} i_sequence={seq}"
                )
                break
        dual_c.record(ok, gamma, detail)

        closed = vol_fiber_closed(support, gamma, ctype)
        stacked = vol_fiber_trapezoids(support, gamma)
        dual_vol.record(closed == stacked, gamma, f"closed={closed} stack={stacked}")

        shoelace = area_newton(support, gamma)
        formula = area_newton_formula(support, gamma)
        dual_area.record(
            shoelace == formula, gamma, f"shoelace={shoelace} formula={formula}"
        )

        counts = strata_counts(support, gamma, shift)
        w0, wk = ctype.w[0], ctype.w[-1]
        eq1 = (
            counts.chi_a1 + 2 * counts.n_2a1 + 2 * counts.n_a2 == -shoelace
        )
        eq2 = counts.n_a2 == shoelace - gamma(w0) - gamma(wk)
        # third relation, endpoint constants rebased to the raw convention
        c1_raw = shift.c1 - 3 * w0 - 2
        c2_raw = shift.c2 + 3 * wk - 2
        corrections = sum(
            (c_value(support, gamma, ctype, j) for j in range(ctype.k)),
            start=Fraction(0),
        )
        eq3 = counts.chi_a1 - counts.n_a2 == (
            -stacked - c1_raw * gamma(w0) - c2_raw * gamma(wk) - corrections
        )
        strata.record(
            eq1 and eq2 and eq3 and counts.parity_ok,
            gamma,
            f"eq1={eq1} eq2={eq2} eq3={eq3} parity={counts.parity_ok}",
        )
    return result
