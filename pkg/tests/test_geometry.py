"""Hull primitives against independent oracles and frozen small cases."""

import itertools

import pytest
from bruteforce import barycentric_in_triangle, distinct_rand_point_set, rand_point_set, segments_meet

from convexparts.errors import InputError, NoRadonPartition
from convexparts.geometry import (
    Hyperplane,
    affine_dependence,
    closed_cells_meet,
    hull_disjoint,
    hulls_common_point,
    in_hull,
    make_hyperplane,
    open_cell_nonempty,
    point_set,
    polyhedron_contains,
    radon_partition_classic,
    strict_separator,
    verify_hulls_empty,
)
from convexparts.rational import Rat
from convexparts.rng import CounterRng

# hexagon with its center appended as index 6
HEXAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2), (0, 0)]


def test_point_set_validation():
    with pytest.raises(InputError):
        point_set([])
    with pytest.raises(InputError):
        point_set([[1, 2], [3]])
    with pytest.raises(InputError):
        point_set([[1, 2]], labels=["a", "b"])
    with pytest.raises(TypeError):
        point_set([[0.5]])


def test_hexagon_center_three_hulls_meet_at_center():
    ps = point_set(HEXAGON)
    meet = hulls_common_point(ps, [(6,), (0, 2, 4), (1, 3, 5)])
    assert meet
    assert meet.point == (Rat(0), Rat(0))
    for w in meet.weights:
        assert sum(w, Rat(0)) == 1 and all(v >= 0 for v in w)


def test_disjoint_hulls_yield_checkable_farkas():
    ps = point_set([(0, 0), (1, 0), (0, 1), (5, 5), (6, 5), (5, 6)])
    meet = hulls_common_point(ps, [(0, 1, 2), (3, 4, 5)])
    assert not meet
    assert verify_hulls_empty(ps, meet.groups, meet.farkas)
    # corrupting the vector must break it
    bad = list(meet.farkas)
    bad[0] += 1
    assert not verify_hulls_empty(ps, meet.groups, bad)


def test_segment_meet_matches_interval_oracle():
    rng = CounterRng(11, "segments")
    for _ in range(60):
        coords = [rng.rat(32, 4) for _ in range(6)]
        ps = point_set([[c] for c in coords])
        groups = [(0, 1), (2, 3), (4, 5)]
        segs = [
            (min(coords[0], coords[1]), max(coords[0], coords[1])),
            (min(coords[2], coords[3]), max(coords[2], coords[3])),
            (min(coords[4], coords[5]), max(coords[4], coords[5])),
        ]
        assert bool(hulls_common_point(ps, groups)) == segments_meet(segs)


def test_in_hull_matches_triangle_oracle():
    rng = CounterRng(12, "triangle")
    checked = 0
    for _ in range(80):
        ps = rand_point_set(rng, 3, 2)
        p = (rng.rat(32, 4), rng.rat(32, 4))
        want = barycentric_in_triangle(p, *ps.points)
        if want is None:
            continue
        assert in_hull(ps, p, (0, 1, 2)) == want
        checked += 1
    assert checked > 40


def test_separator_exists_iff_hulls_disjoint_exhaustive():
    for seed, n, d in [(1, 5, 2), (2, 6, 2), (3, 5, 3)]:
        rng = CounterRng(seed, "sep-iff")
        ps = rand_point_set(rng, n, d)
        idx = range(n)
        for ka in range(1, n):
            for A in itertools.combinations(idx, ka):
                rest = [i for i in idx if i not in A]
                for kb in range(1, len(rest) + 1):
                    for B in itertools.combinations(rest, kb):
                        sep = strict_separator(ps, A, B)
                        meet = hulls_common_point(ps, (A, B))
                        assert (sep is None) == bool(meet)
                        if sep is not None:
                            assert all(sep.side(ps.points[i]) <= -1 for i in A)
                            assert all(sep.side(ps.points[i]) >= 1 for i in B)


def test_separator_rejects_overlap():
    ps = point_set([(0, 0), (1, 1), (2, 0)])
    with pytest.raises(InputError):
        strict_separator(ps, (0, 1), (1, 2))


def test_radon_square_splits_diagonals():
    ps = point_set([(0, 0), (1, 0), (0, 1), (1, 1)])
    A, B, point = radon_partition_classic(ps, (0, 1, 2, 3))
    assert {frozenset(A), frozenset(B)} == {frozenset({0, 3}), frozenset({1, 2})}
    assert point == (Rat(1, 2), Rat(1, 2))


def test_radon_always_succeeds_on_dim_plus_two():
    for seed, d in [(21, 1), (22, 2), (23, 3)]:
        rng = CounterRng(seed, "radon")
        for _ in range(25):
            ps = rand_point_set(rng, d + 2, d)
            A, B, point = radon_partition_classic(ps, range(d + 2))
            assert set(A) | set(B) == set(range(d + 2))
            assert not set(A) & set(B)
            assert A and B
            assert in_hull(ps, point, A) and in_hull(ps, point, B)


def test_radon_duplicates_and_degenerate_sets():
    ps = point_set([(1, 1), (1, 1), (9, 3)])
    A, B, point = radon_partition_classic(ps, (0, 1))
    assert point == (Rat(1), Rat(1))
    # collinear triple in the plane: middle point inside the outer segment
    ps2 = point_set([(0, 0), (2, 2), (4, 4)])
    A, B, point = radon_partition_classic(ps2, (0, 1, 2))
    assert in_hull(ps2, point, A) and in_hull(ps2, point, B)


def test_radon_raises_below_threshold_when_generic():
    ps = point_set([(0, 0), (4, 0), (0, 4)])
    with pytest.raises(NoRadonPartition):
        radon_partition_classic(ps, (0, 1, 2))


def test_affine_dependence_shape():
    assert affine_dependence([(Rat(0), Rat(0)), (Rat(1), Rat(0)), (Rat(0), Rat(1))]) is None
    alpha = affine_dependence([(Rat(0),), (Rat(1),), (Rat(2),)])
    assert alpha is not None
    assert sum(alpha, Rat(0)) == 0
    assert sum((a * p for a, p in zip(alpha, [Rat(0), Rat(1), Rat(2)])), Rat(0)) == 0
    assert any(a != 0 for a in alpha)


def test_hyperplane_requires_nonzero_normal():
    with pytest.raises(InputError):
        make_hyperplane((0, 0), 1)


def test_open_cell_thin_slab_is_nonempty():
    # 0 < x < 1 has no rational point at unit margin; homogenization finds it anyway
    slab = [make_hyperplane((1,), 0), make_hyperplane((-1,), -1)]
    assert open_cell_nonempty(slab)
    assert polyhedron_contains(slab, (Rat(1, 2),))
    empty = [make_hyperplane((1,), 1), make_hyperplane((-1,), 0)]
    assert not open_cell_nonempty(empty)


def test_closed_cells_meet_reports_farkas():
    a = [make_hyperplane((1, 0), 4)]
    b = [make_hyperplane((-1, 0), -1)]
    out = closed_cells_meet([a, b])
    assert not out.feasible and out.farkas is not None


def test_hull_disjoint_symmetric():
    rng = CounterRng(5, "disjoint-sym")
    ps = distinct_rand_point_set(rng, 6, 2)
    for A, B in [((0, 1), (2, 3)), ((0, 1, 2), (3, 4, 5)), ((4,), (0, 5))]:
        assert hull_disjoint(ps, A, B) == hull_disjoint(ps, B, A)
