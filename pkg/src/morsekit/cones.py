"""Enumeration of realizable combinatorial types by exact cone feasibility.

A combinatorial type (W, Z, M) is realizable iff the open cone cut out by
its defining strict inequalities meets the nonnegative orthant.  Feasibility
of a homogeneous strict system {l_i(g) > 0, g >= 0} is equivalent to
feasibility of {l_i(g) >= 1, g >= 0}, which a small phase-1 simplex over
exact rationals decides; the phase-1 solution doubles as an interior witness.

The search is a backtracking tree: hull constraints first (they kill most
subdivisions cheaply), then the root-order chain, then the per-root monomial
chains grown one element at a time with a feasibility test per extension.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import SlopeDegenerate, SupportTooLarge
from .tropical import CombinatorialType, Covector, SupportSet, extract

Form = tuple[int, ...]


@dataclass(frozen=True)
class StrictSystem:
    """Homogeneous forms required strictly positive, on g >= 0 variables."""

    nvars: int
    forms: tuple[Form, ...] = field(default_factory=tuple)

    def extended(self, extra) -> "StrictSystem":
        return StrictSystem(self.nvars, self.forms + tuple(extra))

    def holds_strictly(self, point) -> bool:
        return all(
            sum(c * x for c, x in zip(form, point)) > 0 for form in self.forms
        ) and all(x >= 0 for x in point)


# --- exact phase-1 simplex ------------------------------------------------------


def _integer_form(form) -> tuple[int, ...]:
    """Clear denominators of a rational form (positive scaling is harmless)."""
    if all(isinstance(c, int) for c in form):
        return tuple(form)
    fracs = [Fraction(c) for c in form]
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    return tuple(int(f * scale) for f in fracs)


_REDUCE_BITS = 32


def _reduce_row(nums: list[int], den: int) -> tuple[list[int], int]:
    # content reduction is only worth its gcd cost once entries get large
    if den.bit_length() <= _REDUCE_BITS:
        return nums, den
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                return nums, den
    if g > 1:
        return [v // g for v in nums], den // g
    return nums, den


def feasible(system: StrictSystem) -> tuple[Fraction, ...] | None:
    """Interior witness of the open cone, or None if it is empty.

    Solves {l_i(g) >= 1, g >= 0} by a phase-1 simplex with Bland's rule.
    Each tableau row is kept as integer numerators over one positive
    denominator, so every pivot is integer arithmetic and ratio tests are
    cross-multiplications; content reduction keeps the entries small.
    """
    n = system.nvars
    forms = system.forms
    if any(not isinstance(c, int) for form in forms for c in form):
        forms = tuple(_integer_form(f) for f in forms)
    if not forms:
        return (Fraction(1),) * n
    m = len(forms)
    # columns: n structural | m surplus | rhs.  The artificial variables that
    # seed the basis are never allowed back in, so their identity block is
    # never materialized; basis entry n + m + i marks "artificial of row i".
    width = n + m + 1
    nums: list[list[int]] = []
    dens: list[int] = []
    for i, form in enumerate(forms):
        row = [0] * width
        row[: len(form)] = form
        row[n + i] = -1
        row[-1] = 1
        nums.append(row)
        dens.append(1)
    basis = [n + m + i for i in range(m)]

    # reduced costs for min(sum of artificials): obj[j] = sum_i rows[i][j]
    onums = [sum(nums[i][j] for i in range(m)) for j in range(width)]
    oden = 1

    while True:
        enter = next((j for j in range(width - 1) if onums[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        for i in range(m):
            if nums[i][enter] <= 0:
                continue
            if pivot_row is None:
                pivot_row = i
                continue
            # compare nums[i][-1]/nums[i][enter] with the incumbent ratio
            lhs = nums[i][-1] * nums[pivot_row][enter]
            rhs = nums[pivot_row][-1] * nums[i][enter]
            if lhs < rhs or (lhs == rhs and basis[i] < basis[pivot_row]):
                pivot_row = i
        if pivot_row is None:
            raise AssertionError("phase-1 objective unbounded (internal bug)")
        prow = nums[pivot_row]
        piv = prow[enter]
        for i in range(m):
            if i == pivot_row or nums[i][enter] == 0:
                continue
            f = nums[i][enter]
            row = nums[i]
            nums[i], dens[i] = _reduce_row(
                [piv * a - f * b for a, b in zip(row, prow)], dens[i] * piv
            )
        f = onums[enter]
        onums, oden = _reduce_row(
            [piv * a - f * b for a, b in zip(onums, prow)], oden * piv
        )
        nums[pivot_row], dens[pivot_row] = _reduce_row(prow, piv)
        basis[pivot_row] = enter

    if onums[-1] != 0:
        return None
    point = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            # the basis column entry equals the row denominator exactly
            point[var] = Fraction(nums[i][-1], nums[i][var])
    return tuple(point)


# --- constraint assembly ---------------------------------------------------------


def cone_constraints(support: SupportSet, ctype: CombinatorialType) -> StrictSystem:
    """All strict forms pinning a covector to the cone of `ctype`.

    (a) strict concavity on consecutive hull triples, (b) strictly-below-hull
    for each skipped exponent over its covering edge, (c) the root-value
    chain in the order Z, (d) each monomial chain M^j, denominators cleared.
    """
    forms = list(_hull_forms(support, ctype.w))
    forms.extend(_z_chain_forms(support, ctype.w, ctype.z))
    for j in range(ctype.k):
        forms.extend(_m_chain_forms(support, ctype.w, j, ctype.m[j]))
    return StrictSystem(len(support), tuple(forms))


def _hull_forms(support: SupportSet, w: tuple[int, ...]) -> list[Form]:
    idx = {p: i for i, p in enumerate(support.points)}
    n = len(support)
    forms = []
    for t in range(1, len(w) - 1):
        a, b, c = w[t - 1], w[t], w[t + 1]
        form = [0] * n
        form[idx[a]] -= c - b
        form[idx[b]] += c - a
        form[idx[c]] -= b - a
        forms.append(tuple(form))
    wset = set(w)
    for p in support.points:
        if p in wset:
            continue
        j = max(t for t in range(len(w) - 1) if w[t] < p)
        u, v = w[j], w[j + 1]
        form = [0] * n
        form[idx[u]] += v - p
        form[idx[v]] += p - u
        form[idx[p]] -= v - u
        forms.append(tuple(form))
    return forms


def _z_pair_form(
    support: SupportSet, w: tuple[int, ...], prev: int, cur: int
) -> Form:
    # phi_i = S_i / d_i; phi_cur > phi_prev cleared of the positive denominators
    idx = {p: i for i, p in enumerate(support.points)}
    n = len(support)

    def s_coeffs(i: int) -> list[int]:
        form = [0] * n
        form[idx[w[i]]] += w[i + 1]
        form[idx[w[i + 1]]] -= w[i]
        return form

    d_prev = w[prev + 1] - w[prev]
    d_cur = w[cur + 1] - w[cur]
    return tuple(
        a * d_prev - b * d_cur for a, b in zip(s_coeffs(cur), s_coeffs(prev))
    )


def _z_chain_forms(
    support: SupportSet, w: tuple[int, ...], z: tuple[int, ...]
) -> list[Form]:
    return [_z_pair_form(support, w, prev, cur) for prev, cur in zip(z, z[1:])]


def _m_pair_form(
    support: SupportSet, w: tuple[int, ...], j: int, p: int, q: int
) -> Form:
    # value of p exceeds value of q at root j, cleared of d_j:
    # d_j (g(p) - g(q)) + (p - q)(g(w_j) - g(w_{j+1})) > 0
    idx = {pt: i for i, pt in enumerate(support.points)}
    n = len(support)
    d = w[j + 1] - w[j]
    form = [0] * n
    form[idx[p]] += d
    form[idx[q]] -= d
    form[idx[w[j]]] += p - q
    form[idx[w[j + 1]]] -= p - q
    return tuple(form)


def _m_chain_forms(
    support: SupportSet, w: tuple[int, ...], j: int, m_j: tuple[int, ...]
) -> list[Form]:
    return [
        _m_pair_form(support, w, j, p, q) for p, q in zip(m_j, m_j[1:])
    ]


# --- enumeration -------------------------------------------------------------------


def _genericize(
    support: SupportSet, system: StrictSystem, point: tuple[Fraction, ...]
) -> Covector:
    """Nudge a feasibility witness off the measure-zero slope-tie walls.

    Simplex witnesses are corner solutions and frequently tie two segment
    slopes; adding eps, eps^2, ... for a small power of 1/2 stays inside the
    open cone (the system forms are >= 1 there) while leaving every nonzero
    linear form in finitely many bad positions.
    """
    gamma = Covector(support, point)
    exponent = 4
    while True:
        try:
            extract(support, gamma)
            return gamma
        except SlopeDegenerate:
            eps = Fraction(1, 2**exponent)
            shifted = tuple(
                v + eps ** (i + 1) for i, v in enumerate(point)
            )
            if system.holds_strictly(shifted):
                gamma = Covector(support, shifted)
            exponent += 2
            if exponent > 200:
                raise AssertionError("could not genericize witness (internal bug)")


def _int_scaled(point: tuple[Fraction, ...]) -> tuple[int, ...]:
    """The witness cleared to integers, for cheap strict form checks."""
    scale = 1
    for v in point:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    return tuple(int(v * scale) for v in point)


def _extend(system: StrictSystem, witness, extra: list[Form]):
    """Add forms to a feasible (system, witness) pair, re-solving lazily.

    witness is a (point, scaled-integers) pair; the parent witness usually
    satisfies the new form already, so the exact simplex runs only when it
    does not.
    """
    child = system.extended(extra)
    scaled = witness[1]
    if all(sum(c * x for c, x in zip(form, scaled)) > 0 for form in extra):
        return child, witness
    point = feasible(child)
    if point is None:
        return child, None
    return child, (point, _int_scaled(point))


def _subdivision_types(
    support: SupportSet, w: tuple[int, ...], m0_head: int | None = None
) -> list[tuple[CombinatorialType, Covector]]:
    """All realizable types refining one subdivision W, with witnesses.

    Backtracking over the root order Z (grown one root at a time, pruning on
    the partial value chain), then over each monomial chain M^j (grown one
    element at a time, pruning on the new adjacent comparison).  Witnesses
    are inherited down the tree, so a node pays for a simplex solve only
    when its parent's witness violates the newly added form.

    m0_head restricts M^0 to chains starting with that exponent; the parallel
    path uses it to split one subdivision across workers.
    """
    base = StrictSystem(len(support), tuple(_hull_forms(support, w)))
    base_point = feasible(base)
    if base_point is None:
        return []
    k = len(w) - 1
    others = [
        [p for p in support.points if p != w[j] and p != w[j + 1]] for j in range(k)
    ]
    found: list[tuple[CombinatorialType, Covector]] = []

    def grow_z(prefix: tuple[int, ...], system: StrictSystem, witness):
        if len(prefix) == k:
            grow_m(prefix, 0, (), (), others[0], system, witness)
            return
        for nxt in range(k):
            if nxt in prefix:
                continue
            extra = (
                [_z_pair_form(support, w, prefix[-1], nxt)] if prefix else []
            )
            child, child_witness = _extend(system, witness, extra)
            if child_witness is None:
                continue
            grow_z(prefix + (nxt,), child, child_witness)

    def grow_m(z, j, chains, chain, remaining, system, witness):
        if not remaining:
            chains = chains + (chain,)
            if j + 1 == k:
                ctype = CombinatorialType(w, z, chains)
                found.append((ctype, _genericize(support, system, witness[0])))
                return
            grow_m(z, j + 1, chains, (), others[j + 1], system, witness)
            return
        candidates = remaining
        if m0_head is not None and j == 0 and not chain:
            candidates = [m0_head]
        for nxt in candidates:
            extra = [_m_pair_form(support, w, j, chain[-1], nxt)] if chain else []
            child, child_witness = _extend(system, witness, extra)
            if child_witness is None:
                continue
            grow_m(
                z,
                j,
                chains,
                chain + (nxt,),
                [x for x in remaining if x != nxt],
                child,
                child_witness,
            )

    grow_z((), base, (base_point, _int_scaled(base_point)))
    return found


def _subdivision_worker(args):
    points, w, m0_head = args
    support = SupportSet(points)
    return _subdivision_types(support, w, m0_head)


def _all_subdivisions(support: SupportSet) -> list[tuple[int, ...]]:
    interior = support.points[1:-1]
    subs = []
    for mask in range(2 ** len(interior)):
        mid = tuple(p for i, p in enumerate(interior) if mask >> i & 1)
        subs.append((support.low,) + mid + (support.high,))
    return sorted(subs)


def enumerate_types(
    support: SupportSet,
    *,
    max_support_size: int = 7,
    jobs: int | None = None,
) -> list[tuple[CombinatorialType, Covector]]:
    """Every realizable combinatorial type, with an interior witness each.

    Output is canonically ordered (lexicographic by W, then Z, then M) and
    identical regardless of the parallelism degree.  Raises SupportTooLarge
    past the combinatorial cap.
    """
    if len(support) > max_support_size:
        raise SupportTooLarge(
            f"support of size {len(support)} exceeds the cap {max_support_size}"
        )
    subdivisions = _all_subdivisions(support)
    if jobs is not None and jobs > 1:
        # split each subdivision by the head of M^0 so no single subtree
        # dominates the pool
        tasks = [
            (support.points, w, head)
            for w in subdivisions
            for head in support.points
            if head != w[0] and head != w[1]
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_subdivision_worker, tasks, chunksize=1))
        results = [item for chunk in chunks for item in chunk]
    else:
        results = [
            item for w in subdivisions for item in _subdivision_types(support, w)
        ]
    results.sort(key=lambda pair: (pair[0].w, pair[0].z, pair[0].m))
    return results
