"""Abstract convexity spaces against frozen values, exhaustive axioms, and
the geometric oracle on embedded line instances."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexparts.abstract import (
    AbstractSeparation,
    ConvexitySpace,
    abstract_good_partition,
    abstract_separable,
    convexity_space,
    geometric_space,
    halfspaces,
    hull,
    interval_space,
    is_separable,
    radon_number,
    tverberg_number,
    validate_space,
)
from convexparts.errors import CapExceeded, InputError
from convexparts.geometry import point_set
from convexparts.partitions import good_radon_partition, st_separable
from convexparts.constructions import verify_periodic_line_cover
from convexparts.setsystems import vc_dim


def free_space(n):
    return convexity_space(n, [[i for i in range(n) if m >> i & 1]
                               for m in range(1 << n)])


def line(n):
    return point_set([[i] for i in range(n)])


PATH5 = interval_space(5)
FREE4 = free_space(4)
# triangle plus an interior point: the Radon crossing is a data point
TRI_CENTER = point_set([[0, 0], [3, 0], [0, 3], [1, 1]])


class TestSpaceConstruction:
    def test_normalizes_and_dedupes(self):
        sp = convexity_space(3, [[2, 0], [0, 2], [], [0, 1, 2]])
        assert sp.family == (0, 0b101, 0b111)
        assert sp.member_sets == ((), (0, 2), (0, 1, 2))

    def test_validation(self):
        with pytest.raises(InputError):
            convexity_space(0, [])
        with pytest.raises(InputError):
            convexity_space(2, [[2]])


class TestValidateSpace:
    def test_full_powerset_valid(self):
        assert validate_space(FREE4) == (True, None)

    def test_path_valid(self):
        assert validate_space(PATH5) == (True, None)

    def test_missing_empty(self):
        sp = convexity_space(3, [[0, 1, 2], [0]])
        assert validate_space(sp) == (False, ("missing-empty",))

    def test_missing_full(self):
        sp = convexity_space(3, [[], [0]])
        assert validate_space(sp) == (False, ("missing-full",))

    def test_intersection_gap_reported(self):
        sp = convexity_space(3, [[], [0, 1, 2], [0, 1], [1, 2]])
        assert validate_space(sp) == (False, ("intersection", (0, 1), (1, 2)))


class TestHull:
    def test_members_are_fixed(self):
        for member in PATH5.member_sets:
            assert hull(PATH5, member) == member

    def test_spanning_pair(self):
        assert hull(PATH5, [0, 4]) == (0, 1, 2, 3, 4)
        assert hull(PATH5, [1, 3]) == (1, 2, 3)

    def test_empty(self):
        assert hull(PATH5, []) == ()

    def test_exhaustive_closure_properties(self):
        for sp in (PATH5, FREE4, geometric_space(TRI_CENTER)):
            n = sp.n
            for mask in range(1 << n):
                s = tuple(i for i in range(n) if mask >> i & 1)
                h = hull(sp, s)
                assert set(s) <= set(h)
                assert hull(sp, h) == h
                # monotone against one-element extensions
                for extra in range(n):
                    if extra not in s:
                        assert set(h) <= set(hull(sp, s + (extra,)))


class TestRadonNumber:
    def test_paths(self):
        for n in (3, 5, 8):
            assert radon_number(interval_space(n)) == 3

    def test_free_space_unbounded(self):
        assert radon_number(FREE4) is None

    def test_interior_point_gives_four(self):
        assert radon_number(geometric_space(TRI_CENTER)) == 4

    def test_convex_position_unbounded(self):
        # hull-closed sets of convex-position points are the subsets
        # themselves, so disjoint parts never meet inside the ground set
        square = point_set([[0, 0], [1, 1], [1, 0], [0, 1]])
        assert radon_number(geometric_space(square)) is None

    def test_at_least_three_with_singleton_members(self):
        for sp in (PATH5, FREE4, geometric_space(TRI_CENTER)):
            r = radon_number(sp)
            assert r is None or r >= 3

    def test_cap(self):
        with pytest.raises(CapExceeded):
            radon_number(interval_space(8), cap=10)


class TestTverbergNumber:
    def test_two_parts_is_radon(self):
        for sp in (PATH5, interval_space(8), FREE4, geometric_space(TRI_CENTER)):
            assert tverberg_number(sp, 2) == radon_number(sp)

    def test_path_three_parts(self):
        assert tverberg_number(interval_space(8), 3) == 5

    def test_free_space_unbounded(self):
        assert tverberg_number(FREE4, 3) is None

    def test_validation(self):
        with pytest.raises(InputError):
            tverberg_number(PATH5, 1)
        with pytest.raises(CapExceeded):
            tverberg_number(interval_space(8), 3, cap=10)


class TestHalfspaces:
    def test_path_prefixes_and_suffixes(self):
        hs = halfspaces(PATH5)
        edges = set(hs.edge_indices())
        expected = {(), (0, 1, 2, 3, 4)}
        for j in range(4):
            expected.add(tuple(range(j + 1)))
            expected.add(tuple(range(j + 1, 5)))
        assert edges == expected
        assert len(hs) == 10

    def test_free_space_all_subsets(self):
        assert len(halfspaces(FREE4)) == 16

    def test_vc_bounded_by_radon(self):
        for sp in (PATH5, interval_space(8), geometric_space(TRI_CENTER)):
            r = radon_number(sp)
            assert vc_dim(halfspaces(sp)) <= r - 1

    def test_path_vc_exactly_two(self):
        assert vc_dim(halfspaces(interval_space(8))) == 2


class TestIsSeparable:
    def test_path(self):
        assert is_separable(PATH5) == (True, None)

    def test_free(self):
        assert is_separable(FREE4) == (True, None)

    def test_counterexample(self):
        sp = convexity_space(3, [[], [0, 1, 2], [0], [1]])
        assert validate_space(sp) == (True, None)
        assert is_separable(sp) == (False, ((0,), (1,)))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            is_separable(interval_space(8), cap=5)


def _check_separation(space, a, b, sep, s, t):
    assert len(sep.a_members) <= s and len(sep.b_members) <= t
    members = set(space.member_sets)
    ua, ub = set(), set()
    for m in sep.a_members:
        assert m in members
        ua |= set(m)
    for m in sep.b_members:
        assert m in members
        ub |= set(m)
    assert set(a) <= ua or not a
    assert set(b) <= ub or not b
    assert not ua & ub


class TestAbstractSeparable:
    def test_outer_pair_split(self):
        sep = abstract_separable(PATH5, [0], [2, 4], 1, 1)
        assert sep is not None
        _check_separation(PATH5, [0], [2, 4], sep, 1, 1)

    def test_middle_not_separable(self):
        assert abstract_separable(PATH5, [2], [0, 4], 1, 1) is None

    def test_empty_side_trivial(self):
        assert abstract_separable(PATH5, [], [1, 2], 1, 1) == AbstractSeparation((), ())

    def test_witnesses_verify(self):
        for k in range(1, 5):
            for a in itertools.combinations(range(5), k):
                b = tuple(i for i in range(5) if i not in a)
                sep = abstract_separable(PATH5, a, b, 2, 1)
                if sep is not None:
                    _check_separation(PATH5, a, b, sep, 2, 1)

    def test_validation(self):
        with pytest.raises(InputError):
            abstract_separable(PATH5, [0, 1], [1, 2], 1, 1)
        with pytest.raises(InputError):
            abstract_separable(PATH5, [0], [1], 0, 1)
        with pytest.raises(CapExceeded):
            # inseparable pair, so the full union enumeration is reached
            abstract_separable(PATH5, [2], [0, 4], 1, 1, cap=3)


class TestAbstractGoodPartition:
    def test_middle_versus_outer(self):
        found = abstract_good_partition(PATH5, [0, 1, 2], 1, 1)
        assert found.partition == ((1,), (0, 2))
        assert (found.a_cover_count, found.b_cover_count) == (8, 3)
        assert found.checked_pairs == 24

    def test_free_space_never(self):
        assert abstract_good_partition(FREE4, range(4), 1, 1) is None
        assert abstract_good_partition(FREE4, range(4), 2, 2) is None

    def test_seven_path_two_piece_covers(self):
        sp = interval_space(7)
        found = abstract_good_partition(sp, range(7), 2, 1)
        assert found is not None
        a, b = found.partition
        # the geometric d = 1 oracle must agree the partition is good
        assert st_separable(line(7), a, b, 2, 1) is None

    def test_periodic_classes_match_line_verifier(self):
        sp = interval_space(7)
        evens, odds = (0, 2, 4, 6), (1, 3, 5)
        assert abstract_separable(sp, evens, odds, 2, 2) is None
        assert verify_periodic_line_cover(2, 2, 7).ok

    def test_validation(self):
        with pytest.raises(InputError):
            abstract_good_partition(PATH5, [0], 1, 1)


class TestGeometricSpace:
    def test_line_equals_interval_space(self):
        for n in (3, 5, 6):
            assert geometric_space(line(n)).family == interval_space(n).family

    def test_valid_on_corpus(self):
        square = point_set([[0, 0], [1, 1], [1, 0], [0, 1]])
        for ps in (line(5), square, TRI_CENTER):
            assert validate_space(geometric_space(ps)) == (True, None)

    def test_agreement_on_lines(self):
        for n, s, t in [(4, 1, 1), (5, 1, 1), (5, 2, 1), (6, 2, 2)]:
            sp = geometric_space(line(n))
            agp = abstract_good_partition(sp, range(n), s, t)
            grp = good_radon_partition(line(n), range(n), s, t)
            assert (agp is None) == (grp is None)
            if agp is not None:
                assert agp.partition == grp.partition

    def test_agreement_per_bipartition_line(self):
        sp = geometric_space(line(5))
        for k in range(1, 5):
            for a in itertools.combinations(range(5), k):
                b = tuple(i for i in range(5) if i not in a)
                for s, t in [(1, 1), (2, 1), (2, 2)]:
                    absd = abstract_separable(sp, a, b, s, t) is not None
                    geod = st_separable(line(5), a, b, s, t) is not None
                    assert absd == geod, (a, b, s, t)

    def test_planar_crossing_lost_by_abstraction(self):
        # the square's diagonals cross at a non-data point, so the finite
        # abstraction calls every bipartition separable even though the
        # geometric oracle finds a good one
        square = point_set([[0, 0], [1, 1], [1, 0], [0, 1]])
        assert good_radon_partition(square, range(4), 1, 1) is not None
        assert abstract_good_partition(geometric_space(square), range(4), 1, 1) is None

    def test_cap(self):
        with pytest.raises(CapExceeded):
            geometric_space(line(5), n_cap=4)


class TestRandomSpaces:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 6), st.sets(st.integers(0, 63), max_size=8))
    def test_intersection_closure_yields_valid_space(self, n, seeds):
        full = (1 << n) - 1
        fam = {0, full} | {m & full for m in seeds}
        while True:
            extra = {a & b for a in fam for b in fam} - fam
            if not extra:
                break
            fam |= extra
        sp = ConvexitySpace(n, tuple(sorted(fam)))
        assert validate_space(sp) == (True, None)
        for mask in range(1 << n):
            s = tuple(i for i in range(n) if mask >> i & 1)
            h = hull(sp, s)
            assert set(s) <= set(h)
            assert hull(sp, h) == h
