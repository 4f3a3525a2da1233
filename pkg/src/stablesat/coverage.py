"""Coverage queries: is a cube inside the union of a set of cubes?

The check runs by recursive splitting, a DPLL specialization over the
complement of the cover set: discard covers disjoint from the target,
stop when one cover swallows it, otherwise split the target on a
variable pinned by the largest surviving cover. Exact when the scope is
full and the split budget unlimited.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubes import Cube

COVERED = "covered"
UNCOVERED = "uncovered"
UNKNOWN = "unknown"

SCOPE_FULL = "full"
SCOPE_SHARED = "shared-literal-only"


@dataclass(frozen=True)
class CoverageConfig:
    scope: str = SCOPE_FULL
    split_budget: int = 0  # max splits per query, 0 = unlimited

    def __post_init__(self):
        if self.scope not in (SCOPE_FULL, SCOPE_SHARED):
            raise ValueError(f"unknown coverage scope {self.scope!r}")
        if self.split_budget < 0:
            raise ValueError("split_budget must be >= 0")


def _shares_literal(a: Cube, b: Cube) -> bool:
    return a.mask & b.mask & ~(a.val ^ b.val) != 0


def is_covered(target: Cube, covers, config: CoverageConfig = CoverageConfig()) -> str:
    """Whether the target cube lies inside the union of the cover cubes.

    With scope=shared-literal-only the covers are first narrowed to those
    sharing at least one literal component with the target; that may
    report a covered cube as uncovered, which is sound for the solver (it
    only re-adds work) but not exact. UNKNOWN appears only when a split
    budget runs out.
    """
    covers = list(covers)
    for cube in covers:
        if cube.n != target.n:
            raise ValueError("cube arity mismatch in coverage query")
    if config.scope == SCOPE_SHARED:
        covers = [c for c in covers if _shares_literal(c, target)]
    budget = config.split_budget
    splits = 0

    def rec(region: Cube, cubes) -> str:
        nonlocal splits
        live = [c for c in cubes if c.intersects(region)]
        if not live:
            return UNCOVERED
        for c in live:
            if c.contains(region):
                return COVERED
        if budget and splits >= budget:
            return UNKNOWN
        splits += 1
        # The largest survivor neither contains nor misses the region, so
        # it pins some variable that is still free in the region.
        big = max(live, key=lambda c: c.free_count())
        pinned = big.mask & ~region.mask
        var = (pinned & -pinned).bit_length()
        zero, one = region.split(var)
        left = rec(zero, live)
        if left == UNCOVERED:
            return UNCOVERED
        right = rec(one, live)
        if right == UNCOVERED:
            return UNCOVERED
        if UNKNOWN in (left, right):
            return UNKNOWN
        return COVERED

    return rec(target, covers)


def union_count(covers, num_vars: int) -> int:
    """Exact number of points in the union of the cubes."""
    covers = list(covers)
    for cube in covers:
        if cube.n != num_vars:
            raise ValueError("cube arity mismatch in union count")

    def rec(region: Cube, cubes) -> int:
        live = [c for c in cubes if c.intersects(region)]
        if not live:
            return 0
        for c in live:
            if c.contains(region):
                return region.count_points()
        big = max(live, key=lambda c: c.free_count())
        pinned = big.mask & ~region.mask
        var = (pinned & -pinned).bit_length()
        zero, one = region.split(var)
        return rec(zero, live) + rec(one, live)

    return rec(Cube.full(num_vars), covers)
