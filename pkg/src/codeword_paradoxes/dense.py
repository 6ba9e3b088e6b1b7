"""Dense exact matrices, used only as an independent oracle.

Builds 2**n x 2**n matrices by Kronecker products of the literal 2x2 letter
matrices and multiplies them entry by entry.  Nothing here shares code with
the symplectic fast paths in pauli/statevector, which is the point: the two
routes must agree exactly, and tests check that they do.
"""

from __future__ import annotations

from .dyadic import Dyadic, ZERO, ONE, MINUS_ONE, I_UNIT
from .pauli import PauliString
from .statevector import Projector

__all__ = [
    "pauli_matrix",
    "projector_matrix",
    "kron",
    "mat_mul",
    "mat_vec",
    "mat_eq",
    "commutator_is_zero",
]

Matrix = tuple[tuple[Dyadic, ...], ...]

_LETTER_MATRIX: dict[str, Matrix] = {
    "I": ((ONE, ZERO), (ZERO, ONE)),
    "X": ((ZERO, ONE), (ONE, ZERO)),
    "Y": ((ZERO, -I_UNIT), (I_UNIT, ZERO)),
    "Z": ((ONE, ZERO), (ZERO, MINUS_ONE)),
}


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, rb = len(a), len(b)
    return tuple(
        tuple(a[i // rb][j // rb] * b[i % rb][j % rb] for j in range(ra * rb))
        for i in range(ra * rb)
    )


def pauli_matrix(p: PauliString) -> Matrix:
    m: Matrix = ((ONE.times_i_power(p.phase_exp),),)
    for letter in p.letters:
        m = kron(m, _LETTER_MATRIX[letter])
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(_dot(row, col) for col in bt)
        for row in a
    )


def _dot(row, col) -> Dyadic:
    total = ZERO
    for x, y in zip(row, col):
        if not (x.is_zero() or y.is_zero()):
            total = total + x * y
    return total


def mat_vec(a: Matrix, v: list[Dyadic]) -> list[Dyadic]:
    return [_dot(row, v) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def commutator_is_zero(a: Matrix, b: Matrix) -> bool:
    return mat_eq(mat_mul(a, b), mat_mul(b, a))


def projector_matrix(p: Projector) -> Matrix:
    """Sum of |s><s| / <s|s> over the spanning set, as an exact dense matrix."""
    dim = 1 << p.n
    rows = [[ZERO] * dim for _ in range(dim)]
    for s in p.vectors:
        m = s.norm2().as_pow2()
        if m is None:
            raise ValueError("spanning norm is not a power of two")
        for i, ai in enumerate(s.amps):
            if ai.is_zero():
                continue
            for j, aj in enumerate(s.amps):
                if aj.is_zero():
                    continue
                rows[i][j] = rows[i][j] + (ai * aj.conj()).half_power(m)
    return tuple(tuple(r) for r in rows)
