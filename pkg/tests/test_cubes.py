import random

import pytest

from stablesat.core import Clause, point_nbhd
from stablesat.cubes import (Cube, cube_contains, cube_falsifies, cube_nbhd,
                             cube_nbhd_dir, cube_satisfies, merge, split,
                             unsat_cube)
from conftest import random_clause


def cube(lits, n):
    return Cube.from_literals(lits, n)


def test_unsat_cube_examples():
    u = unsat_cube(Clause([2, -4]), 4)
    assert u.literals() == (-2, 4)
    assert u.count_points() == 4
    assert unsat_cube(Clause([2, 3]), 4) == cube([-2, -3], 4)
    full = unsat_cube(Clause([]), 2)
    assert full == Cube.full(2) and full.count_points() == 4


def test_unsat_cube_arity_violation():
    with pytest.raises(ValueError):
        unsat_cube(Clause([5]), 4)


def test_unsat_cube_roundtrip_exhaustive():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 6)
        clause = Clause(random_clause(n, rng))
        u = unsat_cube(clause, n)
        members = set(u.points())
        for bits in range(1 << n):
            point = tuple((bits >> i) & 1 for i in range(n))
            falsifies = all((point[abs(l) - 1] == 1) != (l > 0) for l in clause.lits)
            assert (point in members) == falsifies


def test_cube_falsifies_examples(vb_formula):
    c2 = vb_formula.clause_by_id(2)
    assert cube_falsifies(cube([-1, 2, -3], 4), c2)
    assert not cube_falsifies(cube([2, -3], 4), c2)
    assert cube_falsifies(cube([2, -3], 4), Clause([]))


def test_cube_falsifies_matches_unsat_containment():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(1, 6)
        clause = Clause(random_clause(n, rng))
        mask = rng.getrandbits(n)
        val = rng.getrandbits(n) & mask
        c = Cube(n, mask, val)
        assert cube_falsifies(c, clause) == cube_contains(unsat_cube(clause, n), c)


def test_cube_satisfies_examples():
    assert cube_satisfies(cube([1], 2), Clause([1, 2]))
    assert not cube_satisfies(Cube.full(3), Clause([1, 2]))
    assert cube_satisfies(cube([2, 3], 4), Clause([2, 3]))


def test_cube_satisfies_means_every_point():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        clause = Clause(random_clause(n, rng))
        mask = rng.getrandbits(n)
        c = Cube(n, mask, rng.getrandbits(n) & mask)
        expected = all(any((p[abs(l) - 1] == 1) == (l > 0) for l in clause.lits)
                       for p in c.points())
        assert cube_satisfies(c, clause) == expected


def test_split_examples():
    zero, one = split(cube([2, -3], 4), 1)
    assert zero == cube([-1, 2, -3], 4)
    assert one == cube([1, 2, -3], 4)
    zero, one = split(cube([-2, 3], 4), 4)
    assert (zero, one) == (cube([-2, 3, -4], 4), cube([-2, 3, 4], 4))
    assert split(Cube.full(1), 1) == (cube([-1], 1), cube([1], 1))


def test_split_partitions_points():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 6)
        mask = rng.getrandbits(n)
        c = Cube(n, mask, rng.getrandbits(n) & mask)
        free = [v for v in range(1, n + 1) if not mask & (1 << (v - 1))]
        if not free:
            with pytest.raises(ValueError):
                split(c, rng.randint(1, n))
            continue
        var = rng.choice(free)
        zero, one = split(c, var)
        left, right, whole = set(zero.points()), set(one.points()), set(c.points())
        assert left | right == whole
        assert not left & right


def test_nbhd_dir_examples():
    p1 = cube([-2, -3], 4)
    assert cube_nbhd_dir(p1, 2) == cube([2, -3], 4)
    assert cube_nbhd_dir(p1, 3) == cube([-2, 3], 4)
    assert cube_nbhd_dir(cube_nbhd_dir(p1, 2), 2) == p1


def test_nbhd_dir_requires_literal_component():
    with pytest.raises(ValueError):
        cube_nbhd_dir(cube([-2], 4), 1)


def test_cube_nbhd_examples(vb_formula):
    p1 = cube([-2, -3], 4)
    assert cube_nbhd(p1, vb_formula.clause_by_id(1)) == \
        [cube([2, -3], 4), cube([-2, 3], 4)]
    assert cube_nbhd(cube([-2, 3], 4), Clause([-3])) == [cube([-2, -3], 4)]
    point_cube = Cube.from_point((0, 1))
    assert cube_nbhd(point_cube, Clause([1])) == [Cube.from_point((1, 1))]


def test_cube_nbhd_requires_falsifying_cube(vb_formula):
    with pytest.raises(ValueError):
        cube_nbhd(Cube.full(4), vb_formula.clause_by_id(1))


def test_cube_nbhd_equals_pointwise_union():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(1, 6)
        clause = Clause(random_clause(n, rng))
        base = unsat_cube(clause, n)
        # Shrink the falsifying cube randomly so it still falsifies.
        extra = rng.getrandbits(n) & base.free_mask & rng.getrandbits(n)
        c = Cube(n, base.mask | extra, base.val | (extra & rng.getrandbits(n)))
        lifted = set()
        for nb in cube_nbhd(c, clause):
            lifted.update(nb.points())
        pointwise = set()
        for p in c.points():
            pointwise.update(point_nbhd(p, clause))
        assert lifted == pointwise


def test_merge_trace_example():
    c2, c3 = Clause([1, -2], cid=2), Clause([-1, -2, 3], cid=3)
    merged, resolvent = merge(cube([-1, 2, -3], 4), cube([1, 2, -3], 4), 1, c2, c3)
    assert merged == cube([2, -3], 4)
    assert resolvent.lits == (-2, 3)


def test_merge_eight_variable_example():
    c1, c2 = Clause([1, 3, 7]), Clause([-1, 7])
    p1 = cube([-1, -3, 5, -7, 8], 8)
    p2 = cube([1, -3, 5, -7], 8)
    merged, resolvent = merge(p1, p2, 1, c1, c2)
    assert merged == cube([-3, 5, -7], 8)
    assert resolvent.lits == (3, 7)


def test_merge_unit_clash_covers_space():
    merged, resolvent = merge(cube([-1], 1), cube([1], 1), 1,
                              Clause([1]), Clause([-1]))
    assert merged == Cube.full(1)
    assert resolvent.lits == ()


def test_merge_inapplicable_returns_none():
    # Resolvent literal -2 is not falsified by the second cube.
    c6, c7 = Clause([-2, 3]), Clause([-3])
    assert merge(cube([2, -3], 4), cube([-2, 3], 4), 3, c6, c7) is None
    # Not resolvable at all.
    assert merge(cube([-1], 2), cube([1], 2), 1,
                 Clause([1, 2]), Clause([-1, -2])) is None


def test_merge_result_properties():
    # Random resolvable pairs plus random shrinking of the falsifying
    # cubes; the component-wise union must satisfy both merge conditions.
    rng = random.Random(10)
    for _ in range(200):
        n = rng.randint(2, 6)
        pivot = rng.randint(1, n)
        others = [v for v in range(1, n + 1) if v != pivot]
        rng.shuffle(others)
        k = rng.randint(0, len(others))
        shared = [v if rng.random() < 0.5 else -v for v in others[:k]]
        c1, c2 = Clause([pivot] + shared), Clause([-pivot] + shared)

        def shrink(base):
            extra = rng.getrandbits(n) & base.free_mask
            return Cube(n, base.mask | extra, base.val | (extra & rng.getrandbits(n)))

        p1, p2 = shrink(unsat_cube(c1, n)), shrink(unsat_cube(c2, n))
        outcome = merge(p1, p2, pivot, c1, c2)
        assert outcome is not None
        merged, resolvent = outcome
        assert cube_contains(merged, p1)
        assert cube_contains(merged, p2)
        assert cube_falsifies(merged, resolvent)


def test_cube_contains_examples():
    assert cube_contains(cube([2, -3], 4), cube([-1, 2, -3], 4))
    assert not cube_contains(cube([-1], 1), cube([1], 1))
    c = cube([1, -4], 5)
    assert cube_contains(c, c)


def test_point_count_is_exact_int():
    c = Cube.full(70)
    assert c.count_points() == 2 ** 70


def test_cube_text_forms():
    c = cube([-2, 4], 4)
    assert c.to_text() == "-2 4"
    assert c.to_text(pretty=True) == "¬x2 x4"
    assert Cube.full(3).to_text() == ""
    assert Cube.full(3).to_text(pretty=True) == "T"
