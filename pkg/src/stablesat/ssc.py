"""Cube-cluster engine: grow a stable set of clusters, or find a model.

Clusters are cubes. The loop pops a cube from the Boundary and either
declares it satisfying (it misses every clause's falsifying cube),
splits it on a pinned variable, merges it with another Boundary cube
falsifying a resolvable clause (learning the resolvent), or expands its
1-neighborhood and moves it to the Body. Coverage queries against
Body + Boundary keep already-reached regions out of the Boundary.

Split halves and merge results take their parent's place at the front
of the Boundary; fresh neighborhood cubes go to the back under the
default FIFO policy. That ordering reproduces the worked four-variable
example step for step.

The engine is single-threaded. Boundary items are independent work
units: a parallel variant only needs atomic Body insertion and coverage
queries over a monotonically growing Body + Boundary snapshot, since a
stale snapshot merely re-adds covered cubes and never flips a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Clause, CnfFormula, VerifyReport
from .coverage import COVERED, CoverageConfig, is_covered, union_count
from .cubes import Cube, cube_falsifies, cube_nbhd, merge, unsat_cube
from .trace import TraceLog

XI_AUTO_CAP = 20  # track |Union(Body)| exactly while 2^n bitsets stay cheap


@dataclass
class SscConfig:
    init_strategy: str = "single-cube"   # or "ne-style"
    init_cube: Cube | None = None        # single-cube start, all-free cube by default
    pop_policy: str = "fifo"             # or "lifo"
    split_heuristic: str = "first-intersecting"  # or "most-constrained"
    merge_enabled: bool = True
    coverage: CoverageConfig = field(default_factory=CoverageConfig)
    xi_log: bool | None = None           # None: log exactly when n <= XI_AUTO_CAP
    record_trace: bool = False

    def __post_init__(self):
        if self.init_strategy not in ("single-cube", "ne-style"):
            raise ValueError(f"unknown init strategy {self.init_strategy!r}")
        if self.pop_policy not in ("fifo", "lifo"):
            raise ValueError(f"unknown pop policy {self.pop_policy!r}")
        if self.split_heuristic not in ("first-intersecting", "most-constrained"):
            raise ValueError(f"unknown split heuristic {self.split_heuristic!r}")


@dataclass
class LearnStep:
    """One resolution step recorded for proof replay."""
    cid: int
    lits: tuple
    left: int
    right: int
    pivot: int


@dataclass
class MergeOutcome:
    merged: list        # the merged Boundary cubes, popped cube first
    cube: Cube          # their component-wise union
    resolvent: Clause   # unregistered resolvent falsified by the union
    left: Clause
    right: Clause
    pivot: int


@dataclass
class SscResult:
    satisfiable: bool
    witness: Cube | None = None
    body: list = field(default_factory=list)        # insertion order
    transport: dict = field(default_factory=dict)   # Cube -> clause id
    learned: list = field(default_factory=list)     # Clause objects, learn order
    learn_steps: list = field(default_factory=list)
    formula: CnfFormula | None = None               # learned-extended copy
    xi_log: list = field(default_factory=list)
    iterations: int = 0
    trace: list = field(default_factory=list)


class _Boundary:
    """Insertion-ordered cube set with front pops and front/back pushes."""

    def __init__(self):
        self.items: list[Cube] = []
        self.members: set[Cube] = set()

    def pop(self) -> Cube:
        cube = self.items.pop(0)
        self.members.discard(cube)
        return cube

    def push_front(self, cubes):
        fresh = [c for c in cubes if c not in self.members]
        self.items[0:0] = fresh
        self.members.update(fresh)

    def push_back(self, cube: Cube):
        if cube not in self.members:
            self.items.append(cube)
            self.members.add(cube)

    def remove(self, cube: Cube):
        self.items.remove(cube)
        self.members.discard(cube)

    def __contains__(self, cube):
        return cube in self.members

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def _falsified(formula: CnfFormula, cube: Cube):
    return [c for c in formula.clauses
            if c.fmask & ~cube.mask == 0 and (c.fval ^ cube.val) & c.fmask == 0]


def _intersecting(formula: CnfFormula, cube: Cube):
    return [c for c in formula.clauses
            if (c.fval ^ cube.val) & c.fmask & cube.mask == 0]


def pick_split_var(cube: Cube, formula: CnfFormula,
                   heuristic: str = "first-intersecting") -> int:
    """Choose a free variable of the cube pinned by some intersecting clause.

    Splitting there makes one half falsify strictly more literals of that
    clause. first-intersecting takes the lowest such variable of the first
    intersecting clause; most-constrained takes the variable pinned by the
    most intersecting clauses (ties to the lowest index).
    """
    if heuristic == "first-intersecting":
        for clause in _intersecting(formula, cube):
            pinned = clause.fmask & ~cube.mask
            if pinned:
                return (pinned & -pinned).bit_length()
        raise ValueError("no intersecting clause pins a free variable")
    counts: dict[int, int] = {}
    for clause in _intersecting(formula, cube):
        pinned = clause.fmask & ~cube.mask
        while pinned:
            bit = pinned & -pinned
            var = bit.bit_length()
            counts[var] = counts.get(var, 0) + 1
            pinned ^= bit
    if not counts:
        raise ValueError("no intersecting clause pins a free variable")
    return min(counts, key=lambda v: (-counts[v], v))


def _find_merge(boundary, p: Cube, formula: CnfFormula, h_cache: dict):
    """Scan the Boundary in insertion order for a merge partner of p."""

    def falsified_cached(cube):
        hit = h_cache.get(cube)
        if hit is None or hit[0] != len(formula.clauses):
            hit = (len(formula.clauses), _falsified(formula, cube))
            h_cache[cube] = hit
        return hit[1]

    h_p = falsified_cached(p)
    if not h_p:
        return None
    for q in boundary:
        for c2 in falsified_cached(q):
            for c1 in h_p:
                pivot = _quick_pivot(c1, c2)
                if pivot is None:
                    continue
                outcome = merge(p, q, pivot, c1, c2)
                if outcome is not None:
                    cube, resolvent = outcome
                    return MergeOutcome([p, q], cube, resolvent, c1, c2, pivot)
    return None


def _quick_pivot(c1: Clause, c2: Clause):
    # Opposite literals of exactly one variable: same variable bit in both
    # falsifying masks with differing falsifying values.
    clash = c1.fmask & c2.fmask & (c1.fval ^ c2.fval)
    if clash == 0 or clash & (clash - 1):
        return None
    return clash.bit_length()


def merge_cubes(boundary, p: Cube, formula: CnfFormula):
    """Try to merge the popped cube p with a Boundary cube.

    Pairwise per invocation: the first Boundary cube (insertion order)
    falsifying a clause resolvable with one falsified by p, such that the
    component-wise union falsifies the resolvent. None when no partner
    applies.
    """
    return _find_merge(list(boundary), p, formula, {})


def _cube_point_bits(cube: Cube) -> int:
    """Characteristic bitset of the cube's points over the 2^n positions."""
    bits = 1 << cube.val
    free = cube.free_mask
    while free:
        low = free & -free
        bits |= bits << low
        free ^= low
    return bits


class _XiTracker:
    """Exact |Union(Body)| bookkeeping via one big characteristic bitset."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.union_bits = 0
        self.size = 0
        self.log: list = []

    def add_cube(self, cube: Cube):
        if not self.enabled:
            return
        bits = _cube_point_bits(cube)
        self.size += (bits & ~self.union_bits).bit_count()
        self.union_bits |= bits

    def record(self, iteration: int, num_clauses: int):
        if self.enabled:
            self.log.append((iteration, self.size, num_clauses))


def gen_ssc(formula: CnfFormula, config: SscConfig | None = None) -> SscResult:
    """Run the cube-cluster generator; the input formula is not mutated.

    Returns either a cube whose every point satisfies the original
    clauses, or the final Body with its transport function and the
    resolvents learned along the way. Termination is guaranteed: the
    measure |Union(Body)| + |F| never decreases and only finitely many
    iterations can leave it unchanged.
    """
    config = config or SscConfig()
    if formula.num_vars < 1:
        raise ValueError("formula must have at least one variable")
    if not formula.clauses:
        raise ValueError("formula must contain at least one clause")
    n = formula.num_vars
    work = formula.copy()
    log = TraceLog(config.record_trace)
    xi = _XiTracker(config.xi_log if config.xi_log is not None else n <= XI_AUTO_CAP)

    boundary = _Boundary()
    if config.init_strategy == "ne-style":
        init_cubes = []
        for clause in work.clauses:
            cube = unsat_cube(clause, n)
            if cube not in boundary:
                boundary.push_back(cube)
                init_cubes.append((cube, clause))
        for cube, clause in init_cubes:
            log.add("initialize", f"cube {cube.to_text()} 0 clause {clause.cid}")
    else:
        init = config.init_cube if config.init_cube is not None else Cube.full(n)
        if init.n != n:
            raise ValueError(f"init cube arity {init.n}, expected {n}")
        boundary.push_back(init)
        first = _falsified(work, init)
        suffix = f" clause {first[0].cid}" if first else ""
        log.add("initialize", f"cube {init.to_text()} 0{suffix}")

    body: list[Cube] = []
    body_set: set[Cube] = set()
    transport: dict[Cube, int] = {}
    learned: list[Clause] = []
    learn_steps: list[LearnStep] = []
    h_cache: dict = {}
    iterations = 0

    def total_covers():
        return body + boundary.items

    while len(boundary):
        iterations += 1
        p = boundary.pop()
        h = _falsified(work, p)
        if not h:
            if not _intersecting(work, p):
                log.add("satisfied", f"cube {p.to_text()} 0")
                log.add("finish", "result SAT")
                xi.record(iterations, len(work.clauses))
                return SscResult(True, witness=p, learned=learned,
                                 learn_steps=learn_steps, formula=work,
                                 xi_log=xi.log, iterations=iterations,
                                 trace=log.records)
            var = pick_split_var(p, work, config.split_heuristic)
            halves = p.split(var)
            covers = total_covers()
            kept, notes = [], []
            for half in halves:
                verdict = is_covered(half, covers, config.coverage)
                notes.append(f"cube {half.to_text()} 0 "
                             f"{'covered' if verdict == COVERED else 'kept'}")
                if verdict != COVERED:
                    kept.append(half)
            boundary.push_front(kept)
            log.add("split", f"cube {p.to_text()} 0 var {var} -> " + " | ".join(notes))
        else:
            outcome = None
            if config.merge_enabled:
                outcome = _find_merge(boundary, p, work, h_cache)
            if outcome is not None:
                partner = outcome.merged[1]
                boundary.remove(partner)
                clause, created = work.learn(outcome.resolvent.lits)
                if created:
                    learned.append(clause)
                    learn_steps.append(LearnStep(clause.cid, clause.lits,
                                                 outcome.left.cid,
                                                 outcome.right.cid,
                                                 outcome.pivot))
                    note = f"learn {clause.cid} " + \
                        " ".join(str(l) for l in clause.lits + (0,))
                else:
                    note = f"reuse {clause.cid}"
                boundary.push_front([outcome.cube])
                log.add("merge", f"cube {p.to_text()} 0 clause {outcome.left.cid} "
                                 f"with cube {partner.to_text()} 0 clause "
                                 f"{outcome.right.cid} pivot {outcome.pivot} -> "
                                 f"cube {outcome.cube.to_text()} 0 {note}")
            else:
                clause = h[0]
                covers = total_covers()
                for lit, neighbor in zip(clause.lits, cube_nbhd(p, clause)):
                    verdict = is_covered(neighbor, covers, config.coverage)
                    fresh = verdict != COVERED
                    log.add("nbhd", f"cube {p.to_text()} 0 clause {clause.cid} "
                                    f"dir {abs(lit)} -> cube {neighbor.to_text()} 0 "
                                    f"{'new' if fresh else 'covered'}")
                    if fresh:
                        if config.pop_policy == "fifo":
                            boundary.push_back(neighbor)
                        else:
                            boundary.push_front([neighbor])
                if p not in body_set:
                    body.append(p)
                    body_set.add(p)
                    xi.add_cube(p)
                transport[p] = clause.cid
                log.add("move-to-body", f"cube {p.to_text()} 0 clause {clause.cid}")
        xi.record(iterations, len(work.clauses))

    log.add("finish", "result UNSAT")
    return SscResult(False, body=body, transport=transport, learned=learned,
                     learn_steps=learn_steps, formula=work, xi_log=xi.log,
                     iterations=iterations, trace=log.records)


def verify_ssc(formula: CnfFormula, clusters, transport,
               coverage: CoverageConfig | None = None) -> VerifyReport:
    """Check cluster stability: every cluster falsifies its transport clause
    and each of its 1-neighborhood cubes is covered by the cluster union."""
    clusters = list(clusters)
    if not clusters:
        raise ValueError("an SSC must be non-empty")
    coverage = coverage or CoverageConfig()
    report = VerifyReport()
    for cube in clusters:
        cid = transport.get(cube)
        if cid is None:
            report.fail(f"cluster {cube.to_text() or 'T'}: no transport clause")
            continue
        clause = formula.clause_by_id(cid)
        if clause is None:
            report.fail(f"cluster {cube.to_text() or 'T'}: transport id {cid} "
                        f"not in formula")
            continue
        if not cube_falsifies(cube, clause):
            report.fail(f"cluster {cube.to_text() or 'T'}: does not falsify "
                        f"clause {cid}")
            continue
        for neighbor in cube_nbhd(cube, clause):
            if is_covered(neighbor, clusters, coverage) != COVERED:
                report.fail(f"cluster {cube.to_text() or 'T'}: neighbor "
                            f"{neighbor.to_text() or 'T'} via clause {cid} "
                            f"is not covered")
    return report


def expand_body_to_points(body, transport):
    """Flatten clusters to an explicit point set with a point transport.

    Points in several clusters take the clause of the first cluster (in
    the given order) containing them; any choice keeps the set stable.
    """
    points: dict[tuple, int] = {}
    for cube in body:
        cid = transport[cube]
        for point in cube.points():
            points.setdefault(point, cid)
    return list(points), points


def body_union_count(body, num_vars: int) -> int:
    """Exact point count of the Body union (the coverage module does the work)."""
    return union_count(body, num_vars)
