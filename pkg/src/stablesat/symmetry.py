"""Permutational symmetry: orbits, the stable-modulo-symmetry engine,
orbit expansion back to a plain stable set, and pigeon-hole formulas.

A permutation acts on variable indices; applying it to a point pushes
values forward (output[pi(i)] = input[i]) and applying it to a clause
relabels variables keeping polarities. With that pairing, a point
falsifies a clause exactly when its image falsifies the image clause,
which is all the stability arguments need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (Clause, CnfFormula, VerifyReport, bits_to_point,
                   evaluate_clause, point_bits, point_nbhd, point_str)

ORBIT_LIMIT = 10 ** 6

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class OrbitLimitExceeded(RuntimeError):
    """Raised when an orbit expansion outgrows the caller's point limit."""


class Permutation:
    """A bijection on variable indices 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a bijection on 1..n")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        """Build from cycle lists, e.g. [[1, 4], [2, 5]] over n variables."""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for v in cycle:
                if not 1 <= v <= n:
                    raise ValueError(f"cycle element x{v} outside 1..{n}")
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated element in cycle {cycle}")
            for i, v in enumerate(cycle):
                images[v - 1] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    def __call__(self, var: int) -> int:
        return self.images[var - 1]

    @property
    def n(self) -> int:
        return len(self.images)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        return Permutation(self.images[i - 1] for i in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self):
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self(v)
            out.append(cycle)
        return out

    def to_cycle_text(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.to_cycle_text()}, n={self.n})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse cycle notation like '(1 4)(2 5)(3 6)'."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    if re.fullmatch(r"(\s*\(\s*[\d\s,]*\)\s*)+", stripped) is None:
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.replace(",", " ").strip()
        if body:
            cycles.append([int(tok) for tok in body.split()])
    return Permutation.from_cycles(cycles, n)


@dataclass
class SymmetryGroup:
    generators: list
    num_vars: int

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.num_vars:
                raise ValueError("generator arity mismatch")


def parse_symmetry_file(text: str, num_vars: int) -> SymmetryGroup:
    """One permutation per non-comment line, in cycle notation."""
    gens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c"):
            continue
        gens.append(parse_permutation(line, num_vars))
    return SymmetryGroup(gens, num_vars)


def format_symmetry_file(group: SymmetryGroup) -> str:
    return "".join(g.to_cycle_text() + "\n" for g in group.generators)


def apply_perm_point(perm: Permutation, point):
    """Push the point forward: the image's value at pi(i) is the value at i."""
    if len(point) != perm.n:
        raise ValueError("point arity mismatch")
    out = [0] * perm.n
    for i, value in enumerate(point, start=1):
        out[perm(i) - 1] = value
    return tuple(out)


def apply_perm_clause(perm: Permutation, clause: Clause) -> Clause:
    """Relabel clause variables, keeping literal polarities."""
    if clause.max_var() > perm.n:
        raise ValueError("clause arity mismatch")
    return Clause((1 if l > 0 else -1) * perm(abs(l)) for l in clause.lits)


def is_symmetric(formula: CnfFormula, perm: Permutation) -> bool:
    """True when the permuted formula has exactly the same clause multiset."""
    if perm.n != formula.num_vars:
        return False
    original: dict[tuple, int] = {}
    for clause in formula.clauses:
        original[clause.lits] = original.get(clause.lits, 0) + 1
    for clause in formula.clauses:
        key = apply_perm_clause(perm, clause).lits
        count = original.get(key, 0)
        if not count:
            return False
        original[key] = count - 1
    return True


def _perm_bits(perm: Permutation):
    """Precompute bit relabeling tables for fast point pushes."""
    return [(1 << (i - 1), 1 << (perm(i) - 1)) for i in range(1, perm.n + 1)]


class _OrbitWalker:
    """Bounded BFS over generator applications, on packed points."""

    def __init__(self, group: SymmetryGroup, limit: int):
        if limit < 1:
            raise ValueError("orbit limit must be positive")
        self.tables = [_perm_bits(g) for g in group.generators]
        self.limit = limit

    def _apply(self, table, bits: int) -> int:
        out = 0
        for src, dst in table:
            if bits & src:
                out |= dst
        return out

    def orbit(self, bits: int):
        """Return (orbit set, complete flag); incomplete when the limit hits."""
        seen = {bits}
        frontier = [bits]
        while frontier:
            nxt = []
            for b in frontier:
                for table in self.tables:
                    image = self._apply(table, b)
                    if image not in seen:
                        if len(seen) >= self.limit:
                            return seen, False
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return seen, True

    def orbit_with_perms(self, bits: int):
        """Orbit plus, for each member, one permutation mapping the seed to it."""
        gens = self.tables
        perms = {bits: None}
        frontier = [bits]
        while frontier:
            nxt = []
            for b in frontier:
                for gi, table in enumerate(gens):
                    image = self._apply(table, b)
                    if image not in perms:
                        if len(perms) >= self.limit:
                            return perms, False
                        perms[image] = (b, gi)
                        nxt.append(image)
            frontier = nxt
        return perms, True


def in_same_orbit(p1, p2, group: SymmetryGroup, limit: int = ORBIT_LIMIT) -> str:
    """Whether some group element maps p1 to p2, by bounded orbit search."""
    if len(p1) != group.num_vars or len(p2) != group.num_vars:
        raise ValueError("point arity mismatch")
    walker = _OrbitWalker(group, limit)
    target = point_bits(p2)
    seen = {point_bits(p1)}
    if target in seen:
        return YES
    frontier = [point_bits(p1)]
    while frontier:
        nxt = []
        for b in frontier:
            for table in walker.tables:
                image = walker._apply(table, b)
                if image == target:
                    return YES
                if image not in seen:
                    if len(seen) >= limit:
                        return UNKNOWN
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return NO


def group_order(group: SymmetryGroup, limit: int = ORBIT_LIMIT) -> int:
    """Size of the generated group by closure enumeration (bounded)."""
    elements = {Permutation.identity(group.num_vars)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for perm in frontier:
            for gen in group.generators:
                image = gen.compose(perm)
                if image not in elements:
                    if len(elements) >= limit:
                        raise OrbitLimitExceeded(
                            f"group closure exceeds {limit} elements")
                    elements.add(image)
                    nxt.append(image)
        frontier = nxt
    return len(elements)


@dataclass
class ModSymResult:
    satisfiable: bool
    witness: tuple | None = None
    points: list | None = None     # representatives, insertion order
    transport: dict | None = None  # point -> clause id
    iterations: int = 0


def gen_ssp_mod_symmetry(formula: CnfFormula, group: SymmetryGroup, init=None,
                         orbit_limit: int = ORBIT_LIMIT) -> ModSymResult:
    """Point engine that skips neighbors already represented up to symmetry.

    A neighborhood point is dropped when some visited point lies in its
    orbit, so the result is stable modulo the group: its existence still
    proves unsatisfiability. Every generator must leave the formula's
    clause multiset unchanged.
    """
    n = formula.num_vars
    if n < 1:
        raise ValueError("formula must have at least one variable")
    for gen in group.generators:
        if not is_symmetric(formula, gen):
            raise ValueError(f"formula is not symmetric under {gen!r}")
    if init is None:
        init = (0,) * n
    if len(init) != n:
        raise ValueError(f"init point has length {len(init)}, expected {n}")

    walker = _OrbitWalker(group, orbit_limit)
    canon_cache: dict = {}
    _miss = object()

    def canonical(bits: int):
        """Orbit-minimum representative; None when the orbit overflows."""
        hit = canon_cache.get(bits, _miss)
        if hit is not _miss:
            return hit
        orbit, complete = walker.orbit(bits)
        canon = min(orbit) if complete else None
        if complete:
            for member in orbit:
                canon_cache[member] = canon
        else:
            canon_cache[bits] = None
        return canon

    start = point_bits(init)
    boundary = [start]
    in_boundary = {start}
    total_exact = {start}
    total_canon = {canonical(start)} - {None}
    body: dict[int, int] = {}
    order: list[int] = []
    iterations = 0

    while boundary:
        iterations += 1
        pbits = boundary.pop(0)
        in_boundary.discard(pbits)
        point = bits_to_point(pbits, n)
        falsified = [c for c in formula.clauses if pbits & c.fmask == c.fval]
        if not falsified:
            return ModSymResult(True, witness=point, iterations=iterations)
        clause = falsified[0]
        body[pbits] = clause.cid
        order.append(pbits)
        for lit in clause.lits:
            nbits = pbits ^ (1 << (abs(lit) - 1))
            if nbits in total_exact:
                continue
            canon = canonical(nbits)
            if canon is not None and canon in total_canon:
                continue
            boundary.append(nbits)
            in_boundary.add(nbits)
            total_exact.add(nbits)
            if canon is not None:
                total_canon.add(canon)

    points = [bits_to_point(b, n) for b in order]
    transport = {bits_to_point(b, n): cid for b, cid in body.items()}
    return ModSymResult(False, points=points, transport=transport,
                        iterations=iterations)


def verify_stable_mod_symmetry(formula: CnfFormula, points, transport,
                               group: SymmetryGroup,
                               limit: int = ORBIT_LIMIT) -> VerifyReport:
    """Check stability modulo the group: every neighbor is in the set or
    symmetric to a member. Orbit overflows fail the check conservatively."""
    members = set(points)
    if not members:
        raise ValueError("the point set must be non-empty")
    member_bits = {point_bits(p) for p in members}
    walker = _OrbitWalker(group, limit)
    report = VerifyReport()
    for point in members:
        cid = transport.get(point)
        if cid is None:
            report.fail(f"point {point_str(point)}: no transport clause")
            continue
        clause = formula.clause_by_id(cid)
        if clause is None:
            report.fail(f"point {point_str(point)}: transport id {cid} not in formula")
            continue
        if evaluate_clause(clause, point):
            report.fail(f"point {point_str(point)}: satisfies its transport "
                        f"clause {cid}")
            continue
        for neighbor in point_nbhd(point, clause):
            if neighbor in members:
                continue
            orbit, complete = walker.orbit(point_bits(neighbor))
            if orbit & member_bits:
                continue
            if complete:
                report.fail(f"point {point_str(point)}: neighbor "
                            f"{point_str(neighbor)} has no symmetric member")
            else:
                report.fail(f"point {point_str(point)}: neighbor "
                            f"{point_str(neighbor)} orbit exceeded the limit "
                            f"{limit} before any member was found")
    return report


def expand_mod_sym_to_ssp(formula: CnfFormula, points, transport,
                          group: SymmetryGroup, limit: int = ORBIT_LIMIT):
    """Blow the representative set up to the union of its orbits.

    Each orbit member q = pi(p) gets the transport clause pi(g(p)); the
    result is a plain stable set. Raises OrbitLimitExceeded when the
    expansion would hold more than `limit` points. The formula maps the
    permuted clauses back to clause ids.
    """
    walker = _OrbitWalker(group, limit)
    expanded: dict[tuple, int] = {}
    n = group.num_vars
    for point in points:
        bits = point_bits(point)
        base_point = bits_to_point(bits, n)
        if base_point in expanded:
            continue
        base_clause = formula.clause_by_id(transport[point])
        if base_clause is None:
            raise ValueError(f"transport id {transport[point]} not in formula")
        perms, complete = walker.orbit_with_perms(bits)
        if not complete or len(expanded) + len(perms) > limit:
            raise OrbitLimitExceeded(
                f"expansion exceeds {limit} points")
        # Resolve each member's permutation by walking parents back to the seed.
        resolved: dict[int, Permutation] = {bits: Permutation.identity(n)}
        pending = sorted(perms)
        for member in pending:
            chain = []
            cursor = member
            while cursor not in resolved:
                parent, gi = perms[cursor]
                chain.append((cursor, gi))
                cursor = parent
            perm = resolved[cursor]
            for node, gi in reversed(chain):
                perm = group.generators[gi].compose(perm)
                resolved[node] = perm
        for member, perm in resolved.items():
            member_point = bits_to_point(member, n)
            if member_point in expanded:
                continue
            image_clause = apply_perm_clause(perm, base_clause)
            target = formula.find(image_clause.lits)
            if target is None:
                raise ValueError(
                    f"permuted transport clause {image_clause!r} not in formula")
            expanded[member_point] = target.cid
    return list(expanded), expanded


@dataclass
class PhInstance:
    """Pigeon-hole layout: variable v(i,j) says pigeon i sits in hole j."""
    pigeons: int
    holes: int

    def var(self, pigeon: int, hole: int) -> int:
        if not (1 <= pigeon <= self.pigeons and 1 <= hole <= self.holes):
            raise ValueError(f"no variable for pigeon {pigeon}, hole {hole}")
        return (pigeon - 1) * self.holes + hole

    @property
    def num_vars(self) -> int:
        return self.pigeons * self.holes


def ph_formula(n: int, m: int):
    """PH(n, m): n pigeons into m holes, no hole shared.

    One placement clause per pigeon and one exclusion clause per hole and
    pigeon pair: n + m*n*(n-1)/2 clauses. Unsatisfiable exactly when
    n > m.
    """
    if n < 1 or m < 1:
        raise ValueError("need at least one pigeon and one hole")
    inst = PhInstance(n, m)
    clauses = [[inst.var(i, j) for j in range(1, m + 1)] for i in range(1, n + 1)]
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            for k in range(i + 1, n + 1):
                clauses.append([-inst.var(i, j), -inst.var(k, j)])
    return CnfFormula(inst.num_vars, clauses), inst


def ph_symmetry_generators(inst: PhInstance) -> SymmetryGroup:
    """Adjacent pigeon swaps and adjacent hole swaps.

    These transpositions generate the full symmetric groups on pigeons
    and on holes, and each one maps the formula onto itself.
    """
    gens = []
    for i in range(1, inst.pigeons):
        cycles = [[inst.var(i, j), inst.var(i + 1, j)]
                  for j in range(1, inst.holes + 1)]
        gens.append(Permutation.from_cycles(cycles, inst.num_vars))
    for j in range(1, inst.holes):
        cycles = [[inst.var(i, j), inst.var(i, j + 1)]
                  for i in range(1, inst.pigeons + 1)]
        gens.append(Permutation.from_cycles(cycles, inst.num_vars))
    return SymmetryGroup(gens, inst.num_vars)
