"""Exact dense linear algebra on 2**n-dimensional vectors.

Amplitudes are Dyadic values and the basis is ordered lexicographically with
site 1 as the most significant bit, so a ket label like |10010> maps straight
to its integer index.  Zero means zero: every orthogonality, eigenvector and
identity-resolution statement below is decided by exact comparison.

Projectors are stored by an orthogonal (not normalized) spanning set.  That
keeps sqrt factors out of the ring; tests that need the induced matrix divide
by the spanning norms, which are powers of two for every vector this package
builds.
"""

from __future__ import annotations

from .dyadic import Dyadic, ZERO, ONE
from .errors import DimensionMismatchError, NonHermitianError
from .pauli import PauliString

__all__ = [
    "StateVector",
    "Projector",
    "basis_ket",
    "apply",
    "eigensign",
    "inner",
    "orthogonal",
    "resolves_identity",
    "projectors_sum_to_identity",
]


class StateVector:
    """Length-2**n vector of exact amplitudes."""

    __slots__ = ("n", "amps")

    def __init__(self, n: int, amps):
        amps = tuple(amps)
        if len(amps) != 1 << n:
            raise ValueError(f"expected {1 << n} amplitudes, got {len(amps)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amps", amps)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("StateVector is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n == other.n and self.amps == other.amps

    def __hash__(self) -> int:
        return hash((self.n, self.amps))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.amps)

    def scaled(self, c: Dyadic) -> "StateVector":
        return StateVector(self.n, (a * c for a in self.amps))

    def __add__(self, other: "StateVector") -> "StateVector":
        _same_n(self, other)
        return StateVector(self.n, (a + b for a, b in zip(self.amps, other.amps)))

    def __sub__(self, other: "StateVector") -> "StateVector":
        _same_n(self, other)
        return StateVector(self.n, (a - b for a, b in zip(self.amps, other.amps)))

    def __neg__(self) -> "StateVector":
        return StateVector(self.n, (-a for a in self.amps))

    def norm2(self) -> Dyadic:
        return inner(self, self)

    def phase_canonical(self) -> "StateVector":
        """Rotate by a power of i so the first nonzero amplitude is positive real.

        Raises if no power of i achieves that (never the case for vectors
        built here, whose leading amplitudes are along the axes).
        """
        for a in self.amps:
            if not a.is_zero():
                for t in range(4):
                    rotated = a.times_i_power(t)
                    if rotated.im == 0 and rotated.re > 0:
                        if t == 0:
                            return self
                        return StateVector(self.n, (x.times_i_power(t) for x in self.amps))
                raise ValueError("leading amplitude is not on a quarter-turn axis")
        return self

    def to_pairs(self) -> list[tuple[str, str]]:
        """Nonzero amplitudes as (basis label, amplitude text) pairs."""
        return [(format(j, f"0{self.n}b"), str(a))
                for j, a in enumerate(self.amps) if not a.is_zero()]

    @staticmethod
    def from_pairs(n: int, pairs) -> "StateVector":
        amps = [ZERO] * (1 << n)
        for label, text in pairs:
            amps[int(label, 2)] = Dyadic.parse(text)
        return StateVector(n, amps)

    def __repr__(self) -> str:
        body = ", ".join(f"|{label}> {amp}" for label, amp in self.to_pairs())
        return f"StateVector({body or '0'})"


def basis_ket(n: int, label) -> StateVector:
    """Basis vector from an integer index or a '01001'-style label."""
    index = int(label, 2) if isinstance(label, str) else label
    amps = [ZERO] * (1 << n)
    amps[index] = ONE
    return StateVector(n, amps)


def _same_n(u, v) -> None:
    if u.n != v.n:
        raise DimensionMismatchError(f"dimension mismatch: {u.n} vs {v.n} qubits")


def apply(p: PauliString, v: StateVector) -> StateVector:
    """Exact matrix-vector product p·v.

    X permutes basis indices, Z flips signs on set bits, Y does both with an
    i factor; the global i**phase_exp rides along.
    """
    if p.n != v.n:
        raise DimensionMismatchError(f"operator on {p.n} qubits, state on {v.n}")
    y_count = (p.x & p.z).bit_count()
    base_phase = (p.phase_exp + y_count) & 3
    out = [ZERO] * (1 << v.n)
    for j, a in enumerate(v.amps):
        if a.is_zero():
            continue
        t = base_phase + 2 * ((j & p.z).bit_count() & 1)
        out[j ^ p.x] = a.times_i_power(t)
    return StateVector(v.n, out)


def eigensign(p: PauliString, v: StateVector):
    """+1 or -1 when p·v == ±v exactly, None when v is not an eigenvector."""
    if not p.is_hermitian():
        raise NonHermitianError(f"{p} has phase i**{p.phase_exp}; eigensigns need ±1 spectra")
    w = apply(p, v)
    if w == v:
        return +1
    if w == -v:
        return -1
    return None


def inner(u: StateVector, v: StateVector) -> Dyadic:
    """<u|v>, conjugate-linear in the first argument."""
    _same_n(u, v)
    total = ZERO
    for a, b in zip(u.amps, v.amps):
        if not (a.is_zero() or b.is_zero()):
            total = total + a.conj() * b
    return total


class Projector:
    """Orthogonal projector given by a spanning set of orthogonal vectors.

    The spanning vectors are not normalized; rank is their count.  Pairwise
    orthogonality is enforced here so that later tests reduce to inner
    products against a clean spanning set.
    """

    __slots__ = ("n", "vectors",)

    def __init__(self, vectors):
        vectors = tuple(vectors)
        if not vectors:
            raise ValueError("a projector needs at least one spanning vector")
        n = vectors[0].n
        for v in vectors:
            if v.n != n:
                raise DimensionMismatchError("spanning vectors on different qubit counts")
            if v.is_zero():
                raise ValueError("zero vector in spanning set")
        for i in range(len(vectors)):
            for j in range(i + 1, len(vectors)):
                if not inner(vectors[i], vectors[j]).is_zero():
                    raise ValueError(
                        f"spanning vectors {i} and {j} are not orthogonal")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vectors", vectors)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Projector is immutable")

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def apply(self, v: StateVector) -> StateVector:
        """P·v = sum over spanning s of s <s|v> / <s|s>.

        The spanning norms must be powers of two so the reciprocal stays
        dyadic; every vector constructed in this package satisfies that.
        """
        _same_n(self, v)
        out = StateVector(v.n, [ZERO] * (1 << v.n))
        for s in self.vectors:
            coeff = inner(s, v)
            if coeff.is_zero():
                continue
            m = s.norm2().as_pow2()
            if m is None:
                raise ValueError("spanning norm is not a power of two; "
                                 "cannot divide inside the dyadic ring")
            out = out + s.scaled(coeff.half_power(m))
        return out

    def contains(self, v: StateVector) -> bool:
        """Exact membership of v in the range of the projector."""
        return (self.apply(v) - v).is_zero()


def orthogonal(p: Projector, q: Projector) -> bool:
    """True iff PQ = 0, i.e. every spanning pair has zero inner product."""
    return all(inner(u, v).is_zero() for u in p.vectors for v in q.vectors)


def resolves_identity(projectors) -> bool:
    """Ranks sum to the dimension and all pairs are orthogonal.

    For pairwise-orthogonal projectors the rank count settles it: their sum
    is itself a projector, and a projector of full trace is the identity.
    """
    projectors = list(projectors)
    if not projectors:
        return False
    n = projectors[0].n
    if sum(p.rank for p in projectors) != 1 << n:
        return False
    for i in range(len(projectors)):
        for j in range(i + 1, len(projectors)):
            if not orthogonal(projectors[i], projectors[j]):
                return False
    return True


def projectors_sum_to_identity(projectors) -> bool:
    """Direct exact check that sum(P) e_j == e_j for every basis ket."""
    projectors = list(projectors)
    n = projectors[0].n
    for j in range(1 << n):
        e = basis_ket(n, j)
        total = StateVector(n, [ZERO] * (1 << n))
        for p in projectors:
            total = total + p.apply(e)
        if total != e:
            return False
    return True
