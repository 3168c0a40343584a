"""Explicit witnesses for partition bounds, with built-in re-verification.

Generators here produce the point sets behind the lower and upper bounds
tested elsewhere: moment-curve instances, planar convex position, periodic
colorings on a line, tight Tverberg instances, and far-apart translated
copies. Each verifier re-derives its claim from kernel predicates (hull
emptiness via Farkas certificates, interval arithmetic on a line) instead
of trusting the construction.

The moment-curve adversary: points z_i = (t_i, ..., t_i^d) split into p
consecutive intervals of m points each. Against any r-coloring it picks one
color per interval, greedily left to right, taking the lowest color that
appears at most floor(d/2) times inside the interval and has been picked
fewer than floor((s-1)/2) times overall. The covers it then assembles have
jointly empty intersection: a counting argument keeps the greedy from
stalling, and floor(d/2)-neighborliness makes each single-interval piece
avoid the other covers. Both facts are checked per run, never assumed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .combinat import run_splits
from .errors import CapExceeded, InputError, InternalInvariantError
from .geometry import PointSet, hull_disjoint, point_set
from .parallel import pmap
from .partitions import SConvexCover, covers_jointly_empty, good_tverberg_partition
from .ranges import halfspace_traces
from .rational import Rat, rat
from .rng import CounterRng

log = logging.getLogger(__name__)


def moment_curve(n: int, d: int, t_values=None, rng=None) -> PointSet:
    """n points (t, t^2, ..., t^d) at strictly increasing t in (0, 1).

    Default parameters are t_i = i/(n+1); a generator draws distinct random
    t instead. Explicit t_values exclude the generator.
    """
    if n < 1 or d < 1:
        raise InputError("need n >= 1 and d >= 1")
    if t_values is not None and rng is not None:
        raise InputError("give explicit t values or a generator, not both")
    if t_values is None:
        if rng is None:
            ts = [Rat(i, n + 1) for i in range(1, n + 1)]
        else:
            seen = set()
            while len(seen) < n:
                seen.add(Rat(rng.randint(1, (1 << 30) - 1), 1 << 30))
            ts = sorted(seen)
    else:
        ts = [rat(t) for t in t_values]
        if len(ts) != n:
            raise InputError(f"{len(ts)} t values for n = {n}")
        if any(t <= 0 or t >= 1 for t in ts):
            raise InputError("t values must lie strictly between 0 and 1")
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise InputError("t values must be strictly increasing")
    return point_set([[t ** k for k in range(1, d + 1)] for t in ts])


@dataclass(frozen=True)
class MomentAdversaryInstance:
    """Moment-curve points grouped into p consecutive intervals of m each.

    Point i belongs to interval i // m. The sizes m = (floor(d/2)+1)r/2 and
    p = floor((s-1)/2)r/2 are exactly what the greedy color choice needs to
    never stall.
    """

    d: int
    s: int
    r: int
    m: int
    p: int
    n: int
    points: PointSet
    interval_index: tuple


def moment_adversary_instance(d: int, s: int, r: int) -> MomentAdversaryInstance:
    """Instance sized for the adversary; odd r is rejected (the odd case
    follows from r-1 by never using the last color)."""
    if d < 1:
        raise InputError("dimension must be at least 1")
    if s < 3:
        raise InputError("need s >= 3")
    if r < 2 or r % 2:
        raise InputError("r must be even and at least 2")
    m = (d // 2 + 1) * r // 2
    p = (s - 1) // 2 * r // 2
    n = m * p
    return MomentAdversaryInstance(d, s, r, m, p, n, moment_curve(n, d),
                                   tuple(i // m for i in range(n)))


def _check_coloring(inst: MomentAdversaryInstance, coloring) -> tuple:
    coloring = tuple(int(c) for c in coloring)
    if len(coloring) != inst.n:
        raise InputError(f"coloring length {len(coloring)}, need {inst.n}")
    if any(c < 0 or c >= inst.r for c in coloring):
        raise InputError(f"colors must lie in 0..{inst.r - 1}")
    return coloring


def choose_interval_colors(inst: MomentAdversaryInstance, coloring) -> tuple:
    """Greedy per-interval color choice, lowest eligible color first.

    Eligible in an interval: at most floor(d/2) of its m points carry the
    color, and the color was chosen fewer than floor((s-1)/2) times before.
    Counting keeps this nonempty: at least r/2 colors meet the first
    condition, while fewer than r/2 can be at quota.
    """
    coloring = _check_coloring(inst, coloring)
    cap = inst.d // 2
    quota = (inst.s - 1) // 2
    times_chosen = [0] * inst.r
    chosen = []
    for q in range(inst.p):
        counts = [0] * inst.r
        for i in range(q * inst.m, (q + 1) * inst.m):
            counts[coloring[i]] += 1
        pick = next((c for c in range(inst.r)
                     if counts[c] <= cap and times_chosen[c] < quota), None)
        if pick is None:
            raise InternalInvariantError(
                f"no eligible color in interval {q}; the counting bound failed")
        times_chosen[pick] += 1
        chosen.append(pick)
    return tuple(chosen)


def adversary_covers(inst: MomentAdversaryInstance, coloring) -> tuple:
    """One cover per color: its points inside each interval chosen for it,
    plus one hull per maximal run of intervals not chosen for it.

    Pieces without any point of the color are dropped; a color with no
    points at all gets a cover with no groups, which is the empty set. The
    group count never exceeds 2*floor((s-1)/2)+1 <= s.
    """
    coloring = _check_coloring(inst, coloring)
    chosen = choose_interval_colors(inst, coloring)
    covers = []
    for color in range(inst.r):
        groups = []
        run = []
        for q in range(inst.p):
            mine = [i for i in range(q * inst.m, (q + 1) * inst.m)
                    if coloring[i] == color]
            if chosen[q] == color:
                if run:
                    groups.append(tuple(run))
                    run = []
                if mine:
                    groups.append(tuple(mine))
            else:
                run.extend(mine)
        if run:
            groups.append(tuple(run))
        covers.append(SConvexCover(inst.points, tuple(groups)))
    return tuple(covers)


@dataclass(frozen=True)
class AdversaryReport:
    """Outcome of checking the adversary covers against one coloring."""

    ok: bool
    inst: MomentAdversaryInstance
    coloring: tuple
    chosen: tuple
    covers: tuple
    certificate: object
    max_groups: int


def verify_moment_adversary(inst: MomentAdversaryInstance, coloring,
                            pair_memo=None, tuple_memo=None) -> AdversaryReport:
    """Build the covers for a coloring and certify their joint emptiness.

    Structural checks (at most s groups per cover, each cover holds exactly
    its color class, single-interval pieces within floor(d/2) points) raise
    on violation since the greedy enforces them by construction. The
    mathematical claim, empty joint intersection, is returned as ok with a
    per-tuple Farkas certificate; ok=False would falsify the construction.
    The memo dicts may be shared across colorings of the same instance.
    """
    coloring = _check_coloring(inst, coloring)
    chosen = choose_interval_colors(inst, coloring)
    covers = adversary_covers(inst, coloring)
    max_groups = max(len(c.groups) for c in covers)
    cap = inst.d // 2
    for color, cover in enumerate(covers):
        if len(cover.groups) > inst.s:
            raise InternalInvariantError(
                f"cover {color} uses {len(cover.groups)} groups, allowed {inst.s}")
        want = tuple(i for i in range(inst.n) if coloring[i] == color)
        if cover.covered != want:
            raise InternalInvariantError(f"cover {color} misses points of its color")
        for g in cover.groups:
            qs = {inst.interval_index[i] for i in g}
            if len(qs) == 1 and chosen[next(iter(qs))] == color and len(g) > cap:
                raise InternalInvariantError("single-interval piece too large")
    cert = covers_jointly_empty(inst.points, covers, pair_memo, tuple_memo)
    return AdversaryReport(cert is not None, inst, coloring, chosen, covers,
                           cert, max_groups)


@dataclass(frozen=True)
class AdversarySweepReport:
    """Aggregate of verify_moment_adversary over all r^n colorings."""

    ok: bool
    d: int
    s: int
    r: int
    n: int
    total: int
    verified: int
    max_groups: int
    first_failure: tuple | None


def moment_adversary_exhaustive(d: int, s: int, r: int,
                                jobs: int = 1) -> AdversarySweepReport:
    """Run the adversary against every coloring, lexicographic order.

    Stops at the first failing coloring. Hull verdicts are memoized per
    worker; the report does not depend on the worker count.
    """
    inst = moment_adversary_instance(d, s, r)
    total = r ** inst.n
    if jobs <= 1:
        verified, max_groups, failure = _sweep_chunk((d, s, r, 0, total))
    else:
        step = max(64, min(4096, total // (8 * jobs)))
        spans = [(d, s, r, lo, min(lo + step, total))
                 for lo in range(0, total, step)]
        verified, max_groups, failure = 0, 0, None
        for count, mg, fail in pmap(_sweep_chunk, spans, jobs):
            verified += count
            max_groups = max(max_groups, mg)
            if fail is not None:
                failure = fail
                break
    return AdversarySweepReport(failure is None, d, s, r, inst.n, total,
                                verified, max_groups, failure)


def _sweep_chunk(args):
    d, s, r, lo, hi = args
    inst = moment_adversary_instance(d, s, r)
    pair_memo, tuple_memo = {}, {}
    max_groups = 0
    for k in range(lo, hi):
        coloring = _coloring_from_index(k, inst.n, r)
        report = verify_moment_adversary(inst, coloring, pair_memo, tuple_memo)
        max_groups = max(max_groups, report.max_groups)
        if not report.ok:
            return k - lo, max_groups, coloring
    return hi - lo, max_groups, None


def _coloring_from_index(k: int, n: int, r: int) -> tuple:
    """Digits of k base r, most significant first, padded to n positions."""
    out = [0] * n
    for pos in range(n - 1, -1, -1):
        k, out[pos] = divmod(k, r)
    return tuple(out)


def periodic_coloring(n: int, r: int) -> tuple:
    """Color point i with i mod r."""
    if n < 1 or r < 1:
        raise InputError("need n >= 1 and r >= 1")
    return tuple(i % r for i in range(n))


@dataclass(frozen=True)
class PeriodicCoverReport:
    """Exhaustive evidence that no choice of interval covers, one per color
    class, pulls the periodic coloring apart."""

    ok: bool
    r: int
    s: int
    n: int
    coloring: tuple
    choices_checked: int
    max_missed: int
    miss_bound: int
    failure: tuple | None


def verify_periodic_line_cover(r: int, s: int, n: int | None = None) -> PeriodicCoverReport:
    """Color 0..n-1 periodically with r colors, then sweep every way to
    cover each class by at most s intervals with endpoints at class points.

    ok means every choice of covers has a common point. Minimal covers
    dominate: any union of at most s intervals containing a class contains
    one whose intervals span runs of consecutive class points, so checking
    those suffices. Also audits the gap count: a single cover leaves at
    most s+1 gaps, and consecutive points of one class have exactly r-1
    points strictly between them, so one cover misses at most (s+1)(r-1)
    points. n defaults to r(r-1)(s+1)+1, the least count making ok hold.
    """
    if r < 2 or s < 1:
        raise InputError("need r >= 2 and s >= 1")
    if n is None:
        n = r * (r - 1) * (s + 1) + 1
    if n < r:
        raise InputError("need at least one point of each color")
    coloring = periodic_coloring(n, r)
    classes = [tuple(range(c, n, r)) for c in range(r)]
    miss_bound = (s + 1) * (r - 1)
    max_missed = 0
    class_covers = []
    for cls in classes:
        covers = []
        for splits in run_splits(len(cls), s):
            cover = tuple((cls[a], cls[b - 1]) for a, b in splits)
            covered = sum(hi - lo + 1 for lo, hi in cover)
            max_missed = max(max_missed, n - covered)
            covers.append(cover)
        class_covers.append(covers)
    if max_missed > miss_bound:
        raise InternalInvariantError(
            f"a cover misses {max_missed} points, gap bound {miss_bound}")

    checked = 0
    failure = None

    def meet(current, cover):
        out = []
        i = j = 0
        while i < len(current) and j < len(cover):
            lo = max(current[i][0], cover[j][0])
            hi = min(current[i][1], cover[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if current[i][1] < cover[j][1]:
                i += 1
            else:
                j += 1
        return out

    def sweep(ci, current, path):
        nonlocal checked, failure
        if failure is not None:
            return
        if ci == r:
            checked += 1
            return
        for cover in class_covers[ci]:
            nxt = meet(current, cover)
            if not nxt:
                # every completion fails; report the lexicographically first
                rest = [cs[0] for cs in class_covers[ci + 1:]]
                failure = tuple(path + [cover] + rest)
                return
            sweep(ci + 1, nxt, path + [cover])
            if failure is not None:
                return

    sweep(0, [(0, n - 1)], [])
    return PeriodicCoverReport(failure is None, r, s, n, coloring, checked,
                               max_missed, miss_bound, failure)


def convex_position(n: int, rng=None) -> PointSet:
    """n rational points in strictly convex position on the unit circle.

    Uses ((1-u^2)/(1+u^2), 2u/(1+u^2)) at distinct rationals u; the map is
    injective, so distinct u give distinct circle points. Default u = 0..n-1.
    """
    if n < 3:
        raise InputError("need at least three points")
    if rng is None:
        us = [Rat(i) for i in range(n)]
    else:
        seen = set()
        while len(seen) < n:
            seen.add(rng.rat(10**4, 64))
        us = sorted(seen)
    rows = []
    for u in us:
        den = 1 + u * u
        rows.append(((1 - u * u) / den, 2 * u / den))
    return point_set(rows)


def tverberg_tight_instance(d: int, r: int, seed="tight", attempts: int = 64) -> PointSet:
    """(r-1)(d+1) random rational points admitting no r-partition whose
    hulls share a point, retried until the exhaustive search confirms it."""
    if not 1 <= d <= 2:
        raise InputError("supported dimensions are 1 and 2")
    if not 2 <= r <= 4:
        raise InputError("supported r is 2..4")
    n = (r - 1) * (d + 1)
    for attempt in range(attempts):
        rng = CounterRng(f"{seed}:{attempt}")
        rows, seen = [], set()
        while len(rows) < n:
            p = tuple(rng.rat(64, 8) for _ in range(d))
            if p not in seen:
                seen.add(p)
                rows.append(p)
        ps = point_set(rows)
        if good_tverberg_partition(ps, range(n), r, 1) is None:
            return ps
    raise CapExceeded("tight_instance_attempts", attempts, attempts + 1)


def translated_copies(ps: PointSet, s: int) -> PointSet:
    """s copies of the set translated along the first axis, far enough
    apart that the copies' hulls are pairwise disjoint (checked). Copy k
    holds indices k*n .. (k+1)*n-1 in the original order."""
    if s < 1:
        raise InputError("need at least one copy")
    if s == 1:
        return ps
    xs = [p[0] for p in ps.points]
    step = max(xs) - min(xs) + 1
    rows = []
    for k in range(s):
        shift = k * step
        for p in ps.points:
            rows.append((p[0] + shift,) + tuple(p[1:]))
    out = point_set(rows)
    n0 = len(ps.points)
    blocks = [range(k * n0, (k + 1) * n0) for k in range(s)]
    for a, b in itertools.combinations(range(s), 2):
        if not hull_disjoint(out, blocks[a], blocks[b]):
            raise InternalInvariantError(f"copies {a} and {b} not separated")
    return out


def halfspace_4coloring(ps: PointSet, n_cap: int = 18):
    """4-coloring with no monochromatic halfspace trace of two or more
    points, found by backtracking in lexicographic color order.

    Such a coloring exists for every finite set in 3-space. None means the
    search is exhausted, which for valid input would refute that fact, so
    it is logged prominently rather than raised.
    """
    if ps.dim != 3:
        raise InputError("the four-coloring argument lives in dimension 3")
    n = len(ps.points)
    masks = [m for m in halfspace_traces(ps, n_cap).traces if m.bit_count() >= 2]
    # a not-monochromatic constraint can only fire once its last point is
    # colored, so index masks by their highest point
    finish_at = [[] for _ in range(n)]
    for m in masks:
        finish_at[m.bit_length() - 1].append(m)
    colors = [-1] * n

    def ok_at(v):
        for m in finish_at[v]:
            first = colors[(m & -m).bit_length() - 1]
            w = m
            while w:
                b = w & -w
                if colors[b.bit_length() - 1] != first:
                    break
                w ^= b
            else:
                return False
        return True

    def search(v):
        if v == n:
            return True
        for c in range(4):
            colors[v] = c
            if ok_at(v) and search(v + 1):
                return True
        colors[v] = -1
        return False

    if search(0):
        return tuple(colors)
    log.warning("4-coloring search exhausted for %d points without a valid "
                "coloring; this should be impossible for points in 3-space", n)
    return None
