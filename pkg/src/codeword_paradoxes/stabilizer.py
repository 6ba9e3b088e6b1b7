"""Sign-decorated Abelian groups attached to a pair of codewords.

An element is a bare (phase-0) Hermitian Pauli string together with its exact
eigenvalues on the two codewords.  Any minus sign that operator algebra
produces (for instance X·Z = -iY per site) is folded into those eigenvalues
during closure, so the operator table stays canonical and deduplication is a
plain dictionary lookup on the letter masks.

Signs are never trusted from transcription alone: verify_stabilizes replays
every element against the actual codewords, which are the ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonCommutingGeneratorsError, NonHermitianError, SignConflictError
from .pauli import PauliString, identity
from .statevector import StateVector, apply, eigensign, inner

__all__ = [
    "StabilizerElement",
    "StabilizerGroup",
    "close",
    "verify_stabilizes",
    "invariant_subgroup",
    "knill_laflamme_check",
    "StabilizeReport",
    "KnillLaflammeReport",
]


@dataclass(frozen=True)
class StabilizerElement:
    """Bare Hermitian operator plus its eigenvalue on each codeword."""

    op: PauliString
    sign0: int
    sign1: int

    def __post_init__(self):
        if self.op.phase_exp != 0:
            raise NonHermitianError(
                f"stabilizer elements store the bare operator; got {self.op}")
        if self.sign0 not in (+1, -1) or self.sign1 not in (+1, -1):
            raise ValueError("signs must be +1 or -1")

    @property
    def sign_stable(self) -> bool:
        return self.sign0 == self.sign1

    def sign(self, which_state: int) -> int:
        return self.sign0 if which_state == 0 else self.sign1

    def as_line(self) -> str:
        return f"{self.sign0:+d} {self.sign1:+d} {self.op}"

    def __str__(self) -> str:
        return self.as_line()


class StabilizerGroup:
    """Closed, Abelian, sign-consistent set of StabilizerElements."""

    def __init__(self, n: int, elements):
        self.n = n
        self.elements = sorted(elements, key=lambda e: e.op.key())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def find(self, op: PauliString) -> StabilizerElement | None:
        bare = op.bare()
        for e in self.elements:
            if e.op == bare:
                return e
        return None

    def non_identity(self) -> list[StabilizerElement]:
        return [e for e in self.elements if not e.op.is_identity_op()]

    def as_lines(self) -> list[str]:
        return [e.as_line() for e in self.elements]


def close(generators) -> StabilizerGroup:
    """Smallest multiplicatively closed sign-consistent set containing the input.

    Raises NonCommutingGeneratorsError when two generators anticommute, and
    SignConflictError when the same bare operator is derived with two
    different composed signs (which would falsify group closure).
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].op.n
    for i, a in enumerate(generators):
        for b in generators[i + 1:]:
            if not a.op.commutes_with(b.op):
                raise NonCommutingGeneratorsError(
                    f"generators {a.op} and {b.op} anticommute")

    ident = identity(n)
    table: dict[tuple[int, int], StabilizerElement] = {
        (ident.x, ident.z): StabilizerElement(ident, +1, +1)
    }

    def insert(elem: StabilizerElement) -> bool:
        key = (elem.op.x, elem.op.z)
        existing = table.get(key)
        if existing is None:
            table[key] = elem
            return True
        if (existing.sign0, existing.sign1) != (elem.sign0, elem.sign1):
            raise SignConflictError(
                f"operator {elem.op} derived with signs "
                f"({existing.sign0},{existing.sign1}) and ({elem.sign0},{elem.sign1})")
        return False

    for g in generators:
        insert(g)

    frontier = list(table.values())
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(table.values()):
                prod = a.op * b.op
                if prod.phase_exp == 0:
                    flip = +1
                elif prod.phase_exp == 2:
                    flip = -1
                else:
                    # cannot happen for commuting Hermitian operators
                    raise NonHermitianError(
                        f"product {a.op} · {b.op} is not Hermitian")
                elem = StabilizerElement(prod.bare(),
                                         a.sign0 * b.sign0 * flip,
                                         a.sign1 * b.sign1 * flip)
                if insert(elem):
                    fresh.append(elem)
        frontier = fresh

    return StabilizerGroup(n, table.values())


@dataclass
class StabilizeReport:
    """Outcome of replaying every element against the codeword pair."""

    checks: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_stabilizes(group: StabilizerGroup, v0: StateVector,
                      v1: StateVector) -> StabilizeReport:
    """Check eigensign(op, v0) == sign0 and eigensign(op, v1) == sign1 exactly."""
    report = StabilizeReport()
    for e in group:
        got0 = eigensign(e.op, v0)
        got1 = eigensign(e.op, v1)
        record = {
            "op": str(e.op),
            "expected": (e.sign0, e.sign1),
            "observed": (got0, got1),
        }
        report.checks.append(record)
        if got0 != e.sign0 or got1 != e.sign1:
            report.violations.append(record)
    return report


def invariant_subgroup(group: StabilizerGroup) -> StabilizerGroup:
    """Elements whose sign is the same on both codewords.

    Verified to be closed and of index 1 or 2; in an Abelian group that is
    all the structure there is to check.
    """
    stable = [e for e in group if e.sign_stable]
    keys = {(e.op.x, e.op.z) for e in stable}
    for a in stable:
        for b in stable:
            prod = (a.op * b.op).bare()
            if (prod.x, prod.z) not in keys:
                raise SignConflictError(
                    f"sign-stable elements are not closed: {a.op} · {b.op}")
    index = len(group) // len(stable)
    if index * len(stable) != len(group) or index not in (1, 2):
        raise SignConflictError(
            f"sign-stable subset has impossible index {len(group)}/{len(stable)}")
    return StabilizerGroup(group.n, stable)


@dataclass
class KnillLaflammeReport:
    """Pairwise error-correctability conditions, checked exactly.

    For every error pair (Ea, Eb): <0|Ea·Eb|1> must vanish and the two
    diagonal matrix elements must agree.
    """

    pairs_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def knill_laflamme_check(v0: StateVector, v1: StateVector,
                         errors) -> KnillLaflammeReport:
    errors = list(errors)
    report = KnillLaflammeReport()
    for ea in errors:
        for eb in errors:
            m = ea * eb
            off = inner(v0, apply(m, v1))
            d0 = inner(v0, apply(m, v0))
            d1 = inner(v1, apply(m, v1))
            report.pairs_checked += 1
            if not off.is_zero() or d0 != d1:
                report.failures.append({
                    "pair": (str(ea), str(eb)),
                    "off_diagonal": str(off),
                    "diag0": str(d0),
                    "diag1": str(d1),
                })
    return report
