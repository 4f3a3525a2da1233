"""Point-level engine: grow a stable set of points, or find a model.

The generator keeps two point sets. Boundary holds reached points whose
1-neighborhoods are still pending; Body holds the points already
expanded. When Boundary drains, Body is stable: every member's
neighborhood through its transport clause stays inside Body, which
proves the formula unsatisfiable. The verifier below rechecks that
property independently of how the set was built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .core import (CnfFormula, VerifyReport, bits_to_point, evaluate_clause,
                   point_bits, point_nbhd, point_str)
from .trace import TraceLog


@dataclass
class SspConfig:
    pop: str = "fifo"   # or "lifo"
    clause_pick: Callable | None = None   # picks from the falsified list; first wins by default
    record_trace: bool = False

    def __post_init__(self):
        if self.pop not in ("fifo", "lifo"):
            raise ValueError(f"unknown pop policy {self.pop!r}")


@dataclass
class SspResult:
    satisfiable: bool
    witness: tuple | None = None
    points: list = field(default_factory=list)   # body in insertion order
    transport: dict = field(default_factory=dict)  # point -> clause id
    iterations: int = 0
    trace: list = field(default_factory=list)


def gen_ssp(formula: CnfFormula, init=None, config: SspConfig | None = None) -> SspResult:
    """Run the point-by-point generator from the given start point.

    Returns a satisfying point, or the stable set with its transport
    function. Always terminates: the body grows by one point per
    iteration inside a finite space.
    """
    config = config or SspConfig()
    n = formula.num_vars
    if n < 1:
        raise ValueError("formula must have at least one variable")
    if init is None:
        init = (0,) * n
    if len(init) != n:
        raise ValueError(f"init point has length {len(init)}, expected {n}")
    log = TraceLog(config.record_trace)

    start = point_bits(init)
    boundary = deque([start])
    in_boundary = {start}
    body: dict[int, int] = {}   # point bits -> transport clause id
    order: list[int] = []
    log.add("initialize", f"point {point_str(init)}")
    iterations = 0

    while boundary:
        iterations += 1
        pbits = boundary.popleft()
        in_boundary.discard(pbits)
        order.append(pbits)
        point = bits_to_point(pbits, n)
        falsified = [c for c in formula.clauses if pbits & c.fmask == c.fval]
        if not falsified:
            log.add("move-to-body", f"point {point_str(point)}")
            log.add("satisfied", f"point {point_str(point)}")
            log.add("finish", "result SAT")
            return SspResult(True, witness=point, iterations=iterations,
                             trace=log.records)
        clause = config.clause_pick(falsified) if config.clause_pick else falsified[0]
        body[pbits] = clause.cid
        log.add("move-to-body", f"point {point_str(point)} clause {clause.cid}")
        for lit in clause.lits:
            nbits = pbits ^ (1 << (abs(lit) - 1))
            known = nbits in body or nbits in in_boundary
            log.add("nbhd", f"point {point_str(point)} clause {clause.cid} "
                            f"dir {abs(lit)} -> point {point_str(bits_to_point(nbits, n))} "
                            f"{'seen' if known else 'new'}")
            if known:
                continue
            if config.pop == "fifo":
                boundary.append(nbits)
            else:
                boundary.appendleft(nbits)
            in_boundary.add(nbits)

    log.add("finish", "result UNSAT")
    points = [bits_to_point(b, n) for b in order]
    transport = {bits_to_point(b, n): cid for b, cid in body.items()}
    return SspResult(False, points=points, transport=transport,
                     iterations=iterations, trace=log.records)


def verify_ssp(formula: CnfFormula, points, transport) -> VerifyReport:
    """Check stability: each point falsifies its clause and the whole
    1-neighborhood through that clause stays inside the set."""
    members = set(points)
    if not members:
        raise ValueError("an SSP must be non-empty")
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
            if neighbor not in members:
                report.fail(f"point {point_str(point)}: neighbor "
                            f"{point_str(neighbor)} via clause {cid} leaves the set")
    return report
