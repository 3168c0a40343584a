"""Trace families cut out of point sets by halfspaces and their combinations.

A subset S is a halfspace trace iff conv(S) and conv(P \\ S) are disjoint,
decided exactly by the kernel. Closing under <= t intersections gives traces
of polyhedra with at most t facets; closing that under <= s unions gives the
range space whose shattering behavior the partition oracles care about.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import indices_of
from .errors import CapExceeded, InputError
from .geometry import PointSet, hulls_common_point
from .setsystems import SetSystem, set_system


@dataclass(frozen=True)
class TraceFamily:
    points: PointSet
    traces: tuple          # sorted distinct bit masks
    provenance: str

    def __len__(self) -> int:
        return len(self.traces)

    def to_set_system(self) -> SetSystem:
        return set_system(len(self.points), self.traces)


def halfspace_traces(ps: PointSet, n_cap: int = 18) -> TraceFamily:
    """Every subset separable from its complement, empty and full included.

    Complement closure is structural (S vs P\\S is symmetric), so each pair is
    decided by one LP.
    """
    n = len(ps.points)
    if n > n_cap:
        raise CapExceeded("halfspace_traces_points", n_cap, n)
    full = (1 << n) - 1
    verdict = {0: True, full: True}
    for mask in range(1, full):
        if mask in verdict:
            continue
        comp = full ^ mask
        ok = not hulls_common_point(ps, (indices_of(mask), indices_of(comp)))
        verdict[mask] = ok
        verdict[comp] = ok
    traces = tuple(sorted(m for m, ok in verdict.items() if ok))
    return TraceFamily(ps, traces, "halfspace")


def _close(tf: TraceFamily, depth: int, op, seed_extra: int, tag: str, cap: int) -> TraceFamily:
    base = set(tf.traces)
    closed = base | {seed_extra}
    frontier = set(base)
    for _ in range(depth - 1):
        new = set()
        for a in frontier:
            for b in base:
                c = op(a, b)
                if c not in closed and c not in new:
                    new.add(c)
        if not new:
            break
        closed |= new
        if len(closed) > cap:
            raise CapExceeded(tag, cap, len(closed))
        frontier = new
    return TraceFamily(tf.points, tuple(sorted(closed)), f"{tag}({tf.provenance})")


def intersect_close(tf: TraceFamily, t: int, cap: int = 10**6) -> TraceFamily:
    """Intersections of up to t member traces, plus the full set.

    The full set is the empty intersection: it is the trace of a polyhedron
    with zero facets, so families stay aligned with "<= t facet" semantics.
    """
    if t < 1:
        raise InputError("t must be at least 1")
    full = (1 << len(tf.points)) - 1
    return _close(tf, t, int.__and__, full, f"intersect<={t}", cap)


def union_close(tf: TraceFamily, s: int, cap: int = 10**6) -> TraceFamily:
    """Unions of up to s member traces, plus the empty set (the empty union)."""
    if s < 1:
        raise InputError("s must be at least 1")
    return _close(tf, s, int.__or__, 0, f"union<={s}", cap)


def build_union_polytope_system(ps: PointSet, s: int, t: int,
                                n_cap: int = 18, cap: int = 10**6) -> SetSystem:
    """Traces of unions of <= s polyhedra with <= t facets each."""
    tf = intersect_close(halfspace_traces(ps, n_cap=n_cap), t, cap=cap)
    return union_close(tf, s, cap=cap).to_set_system()


def interval_union_traces(ps: PointSet, s: int) -> TraceFamily:
    """Fast path for collinear input: traces of unions of <= s intervals.

    These are exactly the subsets forming at most s runs of consecutive
    positions in coordinate order. Coinciding points share every trace, so
    runs range over distinct values rather than raw indices.
    """
    if ps.dim != 1:
        raise InputError("interval unions need 1-dimensional input")
    if s < 1:
        raise InputError("s must be at least 1")
    by_value = {}
    for i, p in enumerate(ps.points):
        by_value.setdefault(p[0], 0)
        by_value[p[0]] |= 1 << i
    slot_masks = [by_value[v] for v in sorted(by_value)]
    k = len(slot_masks)
    out = []

    def rec(i, mask, runs, in_run):
        if i == k:
            out.append(mask)
            return
        rec(i + 1, mask, runs, False)
        if in_run:
            rec(i + 1, mask | slot_masks[i], runs, True)
        elif runs < s:
            rec(i + 1, mask | slot_masks[i], runs + 1, True)

    rec(0, 0, 0, False)
    return TraceFamily(ps, tuple(sorted(out)), f"interval-union<={s}")
