"""Proof records: emission, parsing and independent replay.

An unsatisfiability proof is line-oriented:

    learn <new-id> <lit...> 0 from <id1> <id2> pivot <var>
    cluster <cube-literals> 0 clause <id>
    result UNSAT

Learn lines replay through the resolution engine; cluster lines rebuild
the Body, which the cluster verifier then checks against the extended
formula. Satisfiable runs emit a witness line followed by `result SAT`;
the witness cube must satisfy every input clause. The result line is
always last.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CnfFormula, VerifyReport, resolvable_on, resolve
from .cubes import Cube, cube_satisfies
from .ssc import LearnStep, SscResult, verify_ssc
from .ssp import SspResult


@dataclass
class Proof:
    learns: list = field(default_factory=list)     # LearnStep records
    clusters: list = field(default_factory=list)   # (literal tuple, clause id)
    witness: tuple | None = None                   # literal tuple
    result: str = ""                               # "SAT" or "UNSAT"


def _point_lits(point):
    return tuple(i + 1 if v else -(i + 1) for i, v in enumerate(point))


def proof_from_result(result) -> Proof:
    """Build the proof object for an SscResult or SspResult."""
    proof = Proof()
    if isinstance(result, SscResult):
        proof.learns = list(result.learn_steps)
        if result.satisfiable:
            proof.witness = result.witness.literals()
            proof.result = "SAT"
        else:
            proof.clusters = [(cube.literals(), result.transport[cube])
                              for cube in result.body]
            proof.result = "UNSAT"
    elif isinstance(result, SspResult):
        if result.satisfiable:
            proof.witness = _point_lits(result.witness)
            proof.result = "SAT"
        else:
            proof.clusters = [(_point_lits(p), result.transport[p])
                              for p in result.points]
            proof.result = "UNSAT"
    else:
        raise TypeError(f"no proof form for {type(result).__name__}")
    return proof


def format_proof(proof: Proof) -> str:
    lines = []
    for step in proof.learns:
        body = " ".join(str(l) for l in step.lits + (0,))
        lines.append(f"learn {step.cid} {body} from {step.left} {step.right} "
                     f"pivot {step.pivot}")
    for lits, cid in proof.clusters:
        body = " ".join(str(l) for l in lits + (0,))
        lines.append(f"cluster {body} clause {cid}")
    if proof.witness is not None:
        lines.append("witness " + " ".join(str(l) for l in proof.witness + (0,)))
    lines.append(f"result {proof.result}")
    return "\n".join(lines) + "\n"


def emit_proof(result, sink):
    """Serialize a solver result's certificate to a text sink."""
    sink.write(format_proof(proof_from_result(result)))


def _take_zero_terminated(tokens, start):
    lits = []
    i = start
    while i < len(tokens):
        value = int(tokens[i])
        i += 1
        if value == 0:
            return tuple(lits), i
        lits.append(value)
    raise ValueError("missing 0 terminator")


def parse_proof(text: str) -> Proof:
    proof = Proof()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c "):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "learn":
                cid = int(tokens[1])
                lits, i = _take_zero_terminated(tokens, 2)
                if tokens[i] != "from" or tokens[i + 3] != "pivot":
                    raise ValueError("malformed learn line")
                proof.learns.append(LearnStep(cid, lits, int(tokens[i + 1]),
                                              int(tokens[i + 2]),
                                              int(tokens[i + 4])))
            elif tokens[0] == "cluster":
                lits, i = _take_zero_terminated(tokens, 1)
                if tokens[i] != "clause":
                    raise ValueError("malformed cluster line")
                proof.clusters.append((lits, int(tokens[i + 1])))
            elif tokens[0] == "witness":
                proof.witness, _ = _take_zero_terminated(tokens, 1)
            elif tokens[0] == "result":
                if tokens[1] not in ("SAT", "UNSAT"):
                    raise ValueError(f"unknown result {tokens[1]!r}")
                if proof.result:
                    raise ValueError("duplicate result line")
                proof.result = tokens[1]
            else:
                raise ValueError(f"unknown record {tokens[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"proof line {lineno}: {exc}") from None
    if not proof.result:
        raise ValueError("proof has no result line")
    return proof


def replay_proof(formula: CnfFormula, proof: Proof) -> VerifyReport:
    """Re-derive every learn step and re-verify the certificate.

    The caller's formula is not modified; learn steps extend a copy. An
    UNSAT proof must yield clusters that the independent cluster verifier
    accepts; a SAT proof must carry a witness cube satisfying every input
    clause.
    """
    report = VerifyReport()
    work = formula.copy()
    for step in proof.learns:
        left = work.clause_by_id(step.left)
        right = work.clause_by_id(step.right)
        if left is None or right is None:
            report.fail(f"learn {step.cid}: antecedent missing")
            return report
        if resolvable_on(left, right) != step.pivot:
            report.fail(f"learn {step.cid}: clauses {step.left},{step.right} "
                        f"do not clash exactly on x{step.pivot}")
            return report
        resolvent = resolve(left, right, step.pivot)
        if set(resolvent.lits) != set(step.lits):
            report.fail(f"learn {step.cid}: stated literals differ from the "
                        f"resolvent {resolvent.lits}")
            return report
        if step.cid != len(work.clauses) + 1:
            report.fail(f"learn {step.cid}: expected id {len(work.clauses) + 1}")
            return report
        work.learn(resolvent.lits)

    if proof.result == "SAT":
        if proof.witness is None:
            report.fail("SAT proof without a witness")
            return report
        try:
            cube = Cube.from_literals(proof.witness, formula.num_vars)
        except ValueError as exc:
            report.fail(f"witness invalid: {exc}")
            return report
        for clause in formula.clauses:
            if not cube_satisfies(cube, clause):
                report.fail(f"witness does not satisfy clause {clause.cid}")
        return report

    if not proof.clusters:
        report.fail("UNSAT proof without clusters")
        return report
    clusters = []
    transport = {}
    for lits, cid in proof.clusters:
        try:
            cube = Cube.from_literals(lits, work.num_vars)
        except ValueError as exc:
            report.fail(f"cluster invalid: {exc}")
            return report
        clusters.append(cube)
        transport[cube] = cid
    inner = verify_ssc(work, clusters, transport)
    report.ok = report.ok and inner.ok
    report.failures.extend(inner.failures)
    return report
