"""Randomized property suites cross-checking the fast paths against the
dense-matrix oracle.

These are the only sampled (seeded) checks in the package; every physics
verification elsewhere is deterministic and seedless.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import dense
from .codes import five_qubit_code
from .dyadic import Dyadic
from .pauli import PauliString, from_letters, identity
from .paradoxes import canonical_pentagon_instance, search_parity_contradictions
from .statevector import StateVector, apply

__all__ = ["SuiteResult", "run_all", "random_pauli", "random_state"]


@dataclass
class SuiteResult:
    name: str
    trials: int
    ok: bool
    detail: str = ""


def random_pauli(rng: random.Random, n: int, phase: bool = True) -> PauliString:
    letters = [rng.choice("IXYZ") for _ in range(n)]
    return from_letters(letters, rng.randrange(4) if phase else 0)


def random_state(rng: random.Random, n: int) -> StateVector:
    amps = [Dyadic(rng.randint(-4, 4), rng.randint(-4, 4), rng.randrange(3))
            for _ in range(1 << n)]
    return StateVector(n, amps)


def dense_oracle_suite(rng: random.Random, trials: int = 1000) -> SuiteResult:
    """Multiplication, commutation and eigen-action against dense matrices,
    on random pairs at n <= 3."""
    for t in range(trials):
        n = rng.randint(1, 3)
        a = random_pauli(rng, n)
        b = random_pauli(rng, n)
        ma, mb = dense.pauli_matrix(a), dense.pauli_matrix(b)
        if not dense.mat_eq(dense.pauli_matrix(a * b), dense.mat_mul(ma, mb)):
            return SuiteResult("dense-oracle", t + 1, False,
                               f"product mismatch for {a}, {b}")
        if a.commutes_with(b) != dense.commutator_is_zero(ma, mb):
            return SuiteResult("dense-oracle", t + 1, False,
                               f"commutation mismatch for {a}, {b}")
        v = random_state(rng, n)
        fast = apply(a, v)
        slow = dense.mat_vec(ma, list(v.amps))
        if list(fast.amps) != slow:
            return SuiteResult("dense-oracle", t + 1, False,
                               f"action mismatch for {a}")
    return SuiteResult("dense-oracle", trials, True)


def apply_compose_suite(rng: random.Random, trials: int = 200) -> SuiteResult:
    """apply(p, apply(q, v)) == apply(p·q, v) on random triples at n = 5."""
    for t in range(trials):
        p = random_pauli(rng, 5)
        q = random_pauli(rng, 5)
        v = random_state(rng, 5)
        if apply(p, apply(q, v)) != apply(p * q, v):
            return SuiteResult("apply-compose", t + 1, False,
                               f"composition mismatch for {p}, {q}")
    return SuiteResult("apply-compose", trials, True)


def algebra_laws_suite(rng: random.Random, trials: int = 300) -> SuiteResult:
    """Associativity, ± symmetry of products, squares, shift homomorphism."""
    for t in range(trials):
        n = rng.randint(1, 5)
        a, b, c = (random_pauli(rng, n) for _ in range(3))
        if (a * b) * c != a * (b * c):
            return SuiteResult("algebra-laws", t + 1, False, "associativity")
        ab, ba = a * b, b * a
        expected_phase = (ab.phase_exp + (0 if a.commutes_with(b) else 2)) & 3
        if (ba.x, ba.z, ba.phase_exp) != (ab.x, ab.z, expected_phase):
            return SuiteResult("algebra-laws", t + 1, False, "product symmetry")
        sq = a * a
        want = (0 if a.phase_exp in (0, 2) else 2)
        if not sq.is_identity_op() or sq.phase_exp != want:
            return SuiteResult("algebra-laws", t + 1, False, "square")
        k = rng.randrange(n)
        if (a * b).shift(k) != a.shift(k) * b.shift(k):
            return SuiteResult("algebra-laws", t + 1, False, "shift homomorphism")
        if identity(n) * a != a or a * identity(n) != a:
            return SuiteResult("algebra-laws", t + 1, False, "identity")
    return SuiteResult("algebra-laws", trials, True)


def parity_rediscovery_suite() -> SuiteResult:
    """The bounded search must rediscover the canonical six-operator instance."""
    code = five_qubit_code()
    res = search_parity_contradictions(code.group(), 0, 6, code.codeword0)
    canon = set(canonical_pentagon_instance(code, 0).members)
    hit = any(set(inst.members) == canon for inst in res.instances)
    return SuiteResult("parity-rediscovery", len(res.instances), hit,
                       "" if hit else "canonical instance missing")


def run_all(seed: int = 0) -> list[SuiteResult]:
    rng = random.Random(seed)
    return [
        dense_oracle_suite(rng),
        apply_compose_suite(rng),
        algebra_laws_suite(rng),
        parity_rediscovery_suite(),
    ]
