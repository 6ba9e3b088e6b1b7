"""State-dependent contradictions: reality determinations, parity arguments,
and the multiplicative operator-array argument.

Everything here reduces a physical claim to exact bookkeeping.  A parity
instance records operators together with their eigenvalues on one codeword;
classical value assignments would force the product of those eigenvalues to
+1 whenever every single-qubit symbol appears an even number of times, so an
instance with even multiplicities and eigenvalue product -1 is a
contradiction.  The exact operator product (which must then equal minus the
identity) is computed as an independent cross-check on the sign data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import BudgetExceededError, NonHermitianError
from .pauli import PauliString, from_letters, identity, single_site
from .stabilizer import StabilizerGroup
from .statevector import StateVector, eigensign

__all__ = [
    "Determination",
    "find_determinations",
    "compatible_pairs",
    "ParityInstance",
    "ParityReport",
    "check_parity_contradiction",
    "parity_instance_from_group",
    "canonical_pentagon_instance",
    "pentagon_description",
    "OperatorArray",
    "ArrayReport",
    "check_array",
    "build_canonical_array",
    "mermin_peres_square",
    "ParitySearchResult",
    "search_parity_contradictions",
]


# ---------------------------------------------------------------------------
# elements of reality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Determination:
    """A recipe fixing one single-qubit observable from the other qubits.

    The underlying group element factors as (target letter at the target
    site) x (witness on the remaining sites); measuring the witness factors
    site by site and multiplying determines the target with certainty.
    """

    target_site: int
    target_letter: str
    witness: PauliString
    predicted_product: int

    def witness_text(self) -> str:
        return str(self.witness)


def find_determinations(group: StabilizerGroup, site: int, letter: str,
                        which_state: int = 0) -> list[Determination]:
    """All group elements carrying `letter` at `site`, split into witnesses."""
    if letter not in ("X", "Y", "Z"):
        raise ValueError(f"target letter must be X, Y or Z, not {letter!r}")
    out = []
    n = group.n
    if not 1 <= site <= n:
        raise ValueError(f"site {site} out of range 1..{n}")
    other_sites = [k for k in range(1, n + 1) if k != site]
    for e in group:
        if e.op.letter(site) == letter:
            out.append(Determination(
                target_site=site,
                target_letter=letter,
                witness=e.op.restrict(other_sites),
                predicted_product=e.sign(which_state),
            ))
    out.sort(key=lambda d: d.witness.key())
    return out


def compatible_pairs(determinations) -> list[tuple[Determination, Determination]]:
    """Pairs of witnesses measurable simultaneously qubit by qubit.

    Site-wise compatibility (letters equal or identity) is the operational
    notion; commutation of the witness products would be strictly weaker.
    """
    ds = list(determinations)
    pairs = []
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            if _sitewise_compatible(ds[i].witness, ds[j].witness):
                pairs.append((ds[i], ds[j]))
    return pairs


def _sitewise_compatible(a: PauliString, b: PauliString) -> bool:
    for la, lb in zip(a.letters, b.letters):
        if la != "I" and lb != "I" and la != lb:
            return False
    return True


# ---------------------------------------------------------------------------
# parity contradictions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParityInstance:
    """Operators with their eigenvalues on one fixed state."""

    state_label: str
    state: StateVector
    members: tuple[tuple[PauliString, int], ...]

    def factor_multiset(self) -> dict[tuple[int, str], int]:
        counts: Counter = Counter()
        for op, _sign in self.members:
            for k, letter in enumerate(op.letters, start=1):
                if letter != "I":
                    counts[(k, letter)] += 1
        return dict(counts)

    def operator_texts(self) -> list[str]:
        return [f"{sign:+d} {op}" for op, sign in self.members]


@dataclass
class ParityReport:
    state_label: str
    operators: list[str]
    multiplicities: dict
    all_even: bool
    eigenvalue_product: int
    matrix_product: str
    matrix_product_is_minus_identity: bool
    contradiction: bool


def check_parity_contradiction(inst: ParityInstance) -> ParityReport:
    """Verdict plus the independent matrix-product cross-check.

    Raises ValueError when a member is not an eigenoperator of the state
    with the declared sign; that is an input error, not a report entry.
    """
    if not inst.members:
        raise ValueError("parity instance has no operators")
    for op, sign in inst.members:
        got = eigensign(op, inst.state)
        if got != sign:
            raise ValueError(
                f"{op} is not a {sign:+d} eigenoperator of {inst.state_label}"
                f" (observed {got})")

    mult = inst.factor_multiset()
    all_even = all(v % 2 == 0 for v in mult.values())
    product_sign = 1
    for _op, sign in inst.members:
        product_sign *= sign

    prod = identity(inst.members[0][0].n)
    for op, _sign in inst.members:
        prod = prod * op
    minus_identity = prod.is_identity_op() and prod.phase_exp == 2

    contradiction = all_even and product_sign == -1
    # eigensigns were verified above, so the two routes must agree
    if all_even and (minus_identity != (product_sign == -1)):
        raise AssertionError("sign bookkeeping and matrix product disagree")

    return ParityReport(
        state_label=inst.state_label,
        operators=inst.operator_texts(),
        multiplicities={f"{site},{letter}": c for (site, letter), c in sorted(mult.items())},
        all_even=all_even,
        eigenvalue_product=product_sign,
        matrix_product=str(prod),
        matrix_product_is_minus_identity=minus_identity,
        contradiction=contradiction,
    )


def parity_instance_from_group(group: StabilizerGroup, state: StateVector,
                               state_label: str, ops, which_state: int) -> ParityInstance:
    """Build an instance by looking up each operator's sign in the group."""
    members = []
    for op in ops:
        elem = group.find(op)
        if elem is None:
            raise ValueError(f"{op} is not a group element")
        members.append((elem.op, elem.sign(which_state)))
    return ParityInstance(state_label, state, tuple(members))


def canonical_pentagon_instance(code, which_state: int) -> ParityInstance:
    """The six-operator instance: all-Z plus the five XZX triples."""
    group = code.group()
    ops = [from_letters("Z" * 5)]
    triple = from_letters(("X", "Z", "X", "I", "I"))
    ops += [triple.shift(k) for k in range(5)]
    label = "|0_L>" if which_state == 0 else "|1_L>"
    return parity_instance_from_group(group, code.codeword(which_state),
                                      label, ops, which_state)


def pentagon_description(code) -> dict:
    """Text/JSON rendering of the pentagon figure: one side per XZX triple."""
    group = code.group()
    sides = []
    for k in range(1, 6):
        a, b, c = k, _wrap5(k + 1), _wrap5(k + 2)
        op = single_site(5, a, "X") * single_site(5, b, "Z") * single_site(5, c, "X")
        elem = group.find(op)
        sides.append({
            "side": k,
            "measurements": [f"sigma_{a}x", f"sigma_{b}z", f"sigma_{c}x"],
            "product_operator": str(elem.op),
            "value_on_codeword0": elem.sign0,
            "value_on_codeword1": elem.sign1,
        })
    zz = group.find(from_letters("Z" * 5))
    return {
        "vertices": [f"qubit_{k}" for k in range(1, 6)],
        "sides": sides,
        "closing_relation": {
            "measurements": [f"sigma_{k}z" for k in range(1, 6)],
            "product_operator": str(zz.op),
            "value_on_codeword0": zz.sign0,
            "value_on_codeword1": zz.sign1,
        },
    }


def _wrap5(k: int) -> int:
    return (k - 1) % 5 + 1


# ---------------------------------------------------------------------------
# operator array (multiplicative argument)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OperatorArray:
    """Grid of Hermitian operators with declared row/column product signs."""

    rows: tuple[tuple[PauliString, ...], ...]
    declared_row_signs: tuple[int, ...]
    declared_col_signs: tuple[int, ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) != 1:
            raise ValueError("ragged operator array")
        for row in self.rows:
            for cell in row:
                if not cell.is_hermitian():
                    raise NonHermitianError(f"array cell {cell} is not Hermitian")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def cell(self, row: int, col: int) -> PauliString:
        """1-based access (row 1, column 1 is the top-left cell)."""
        return self.rows[row - 1][col - 1]

    def column(self, col: int) -> tuple[PauliString, ...]:
        return tuple(row[col - 1] for row in self.rows)


@dataclass
class ArrayReport:
    row_commuting: list[bool]
    row_products: list[str]
    row_signs: list[int | None]
    row_signs_match: bool
    col_commuting: list[bool]
    col_products: list[str]
    col_signs: list[int | None]
    col_signs_match: bool
    rowwise_total: str
    colwise_total: str
    impossibility: bool


def _line_product(ops) -> PauliString:
    prod = identity(ops[0].n)
    for op in ops:
        prod = prod * op
    return prod


def _scalar_sign(p: PauliString) -> int | None:
    """+1 / -1 when p is ±identity, else None."""
    if not p.is_identity_op():
        return None
    return {0: +1, 2: -1}.get(p.phase_exp)


def _all_commute(ops) -> bool:
    return all(a.commutes_with(b) for i, a in enumerate(ops) for b in ops[i + 1:])


def check_array(arr: OperatorArray) -> ArrayReport:
    nrows, ncols = arr.shape
    row_products = [_line_product(row) for row in arr.rows]
    col_products = [_line_product(arr.column(c)) for c in range(1, ncols + 1)]

    rowwise = _line_product(row_products)
    colwise = _line_product(col_products)

    return ArrayReport(
        row_commuting=[_all_commute(row) for row in arr.rows],
        row_products=[str(p) for p in row_products],
        row_signs=[_scalar_sign(p) for p in row_products],
        row_signs_match=all(_scalar_sign(p) == s
                            for p, s in zip(row_products, arr.declared_row_signs)),
        col_commuting=[_all_commute(arr.column(c)) for c in range(1, ncols + 1)],
        col_products=[str(p) for p in col_products],
        col_signs=[_scalar_sign(p) for p in col_products],
        col_signs_match=all(_scalar_sign(p) == s
                            for p, s in zip(col_products, arr.declared_col_signs)),
        rowwise_total=str(rowwise),
        colwise_total=str(colwise),
        impossibility=rowwise != colwise,
    )


def build_canonical_array() -> OperatorArray:
    """The 6x13 grid: z block in columns 1-5, x block in columns 6-10
    (column 5+k holds the site-k X operator), identity padding in 11-12,
    row products in column 13."""
    ident = identity(5)
    rows = []

    row1 = [single_site(5, k, "Z") for k in range(1, 6)]
    row1 += [ident] * 7
    row1.append(from_letters("Z" * 5))
    rows.append(tuple(row1))

    for r in range(2, 7):
        a, b, c = _wrap5(r - 2), _wrap5(r - 1), _wrap5(r)
        row = [ident] * 13
        row[b - 1] = single_site(5, b, "Z")
        row[5 + a - 1] = single_site(5, a, "X")
        row[5 + c - 1] = single_site(5, c, "X")
        row[12] = (single_site(5, a, "X") * single_site(5, b, "Z")
                   * single_site(5, c, "X"))
        rows.append(tuple(row))

    return OperatorArray(
        rows=tuple(rows),
        declared_row_signs=(+1,) * 6,
        declared_col_signs=(+1,) * 12 + (-1,),
    )


def mermin_peres_square() -> OperatorArray:
    """The classic two-qubit 3x3 square; a regression instance of the same
    multiplicative argument."""
    grid = (("XI", "IX", "XX"),
            ("IZ", "ZI", "ZZ"),
            ("XZ", "ZX", "YY"))
    rows = tuple(tuple(from_letters(cell) for cell in row) for row in grid)
    return OperatorArray(rows=rows,
                         declared_row_signs=(+1, +1, +1),
                         declared_col_signs=(+1, +1, -1))


# ---------------------------------------------------------------------------
# automated parity-contradiction search
# ---------------------------------------------------------------------------


@dataclass
class ParitySearchResult:
    which_state: int
    max_subset: int
    instances: list[ParityInstance] = field(default_factory=list)
    subset_sizes: list[int] = field(default_factory=list)
    complete_to_size: int = 0
    nodes_used: int = 0

    @property
    def found(self) -> bool:
        return bool(self.instances)


_LETTER_INDEX = {"X": 0, "Y": 1, "Z": 2}
_KERNEL_ENUM_LIMIT = 20     # enumerate the whole nullspace up to 2**20 vectors


def _coord_mask(op: PauliString) -> int:
    mask = 0
    for k, letter in enumerate(op.letters, start=1):
        if letter != "I":
            mask |= 1 << ((k - 1) * 3 + _LETTER_INDEX[letter])
    return mask


def search_parity_contradictions(group: StabilizerGroup, which_state: int,
                                 max_subset: int, state: StateVector,
                                 state_label: str | None = None,
                                 node_budget: int = 3_000_000) -> ParitySearchResult:
    """Subsets of the group whose sign bookkeeping is classically impossible.

    Each element maps to a GF(2) vector over (site, letter) coordinates;
    even-multiplicity subsets are exactly the nullspace of that linear map.
    Small kernels are enumerated outright; otherwise subsets are searched
    size tier by size tier (meet in the middle), each tier completed
    atomically so results are deterministic.  Every returned subset is
    revalidated through check_parity_contradiction against the given state.

    The identity element is excluded: it contributes nothing and would only
    pad otherwise-minimal subsets.
    """
    elements = sorted(group.non_identity(), key=lambda e: e.op.key())
    vecs = [_coord_mask(e.op) for e in elements]
    signs = [e.sign(which_state) for e in elements]
    label = state_label or f"codeword{which_state}"
    result = ParitySearchResult(which_state=which_state, max_subset=max_subset)

    kernel = _kernel_basis(vecs)
    if len(kernel) <= _KERNEL_ENUM_LIMIT:
        subsets = _enumerate_kernel(kernel, signs, max_subset)
        result.complete_to_size = max_subset
        result.nodes_used = 1 << len(kernel)
    else:
        subsets, complete_to, used = _tiered_search(vecs, signs, max_subset,
                                                    node_budget)
        result.complete_to_size = complete_to
        result.nodes_used = used
        if not subsets and complete_to < max_subset:
            raise BudgetExceededError(
                f"parity search exhausted its budget at size {complete_to} "
                f"of {max_subset} with nothing found")

    subsets.sort(key=lambda idxs: (len(idxs),
                                   tuple(str(elements[i].op) for i in idxs)))
    for idxs in subsets:
        members = tuple((elements[i].op, signs[i]) for i in idxs)
        inst = ParityInstance(label, state, members)
        report = check_parity_contradiction(inst)
        if not report.contradiction:
            raise AssertionError("search returned a non-contradiction subset")
        result.instances.append(inst)
        result.subset_sizes.append(len(idxs))
    return result


def _kernel_basis(vecs) -> list[int]:
    """Subset-index masks spanning the nullspace of the coordinate map."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for i, v in enumerate(vecs):
        mask = 1 << i
        cur = v
        while cur:
            lead = cur.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (cur, mask)
                break
            pv, pm = pivots[lead]
            cur ^= pv
            mask ^= pm
        else:
            kernel.append(mask)
    return kernel


def _enumerate_kernel(kernel, signs, max_subset) -> list[tuple[int, ...]]:
    neg_mask = 0
    for i, s in enumerate(signs):
        if s == -1:
            neg_mask |= 1 << i
    subsets = []
    combo = 0
    # Gray-code walk: step g flips the kernel generator indexed by the
    # lowest set bit of g, visiting every combination exactly once.
    for g in range(1, 1 << len(kernel)):
        combo ^= kernel[(g & -g).bit_length() - 1]
        if combo.bit_count() <= max_subset and (combo & neg_mask).bit_count() & 1:
            subsets.append(_mask_to_indices(combo))
    return subsets


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _tiered_search(vecs, signs, max_subset, node_budget):
    """Exhaustive search by subset size; each tier meets in the middle."""
    from itertools import combinations
    from math import comb

    n = len(vecs)
    mid = n // 2
    left = list(range(mid))
    right = list(range(mid, n))
    right_by_size: dict[int, dict[int, list[tuple[int, ...]]]] = {
        0: {0: [()]}}

    found = []
    used = 0
    # sizes 0 and 1 are vacuously complete: non-identity elements have at
    # least one odd letter multiplicity
    complete_to = min(1, max_subset)
    for t in range(2, max_subset + 1):
        cost = sum(comb(len(left), k) for k in range(0, min(t, len(left)) + 1))
        cost += sum(comb(len(right), j) for j in range(0, min(t, len(right)) + 1)
                    if j not in right_by_size)
        if used + cost > node_budget:
            return found, complete_to, used
        for j in range(0, min(t, len(right)) + 1):
            if j in right_by_size:
                continue
            table: dict[int, list[tuple[int, ...]]] = {}
            for combo in combinations(right, j):
                used += 1
                r = 0
                for i in combo:
                    r ^= vecs[i]
                table.setdefault(r, []).append(combo)
            right_by_size[j] = table
        for k in range(0, min(t, len(left)) + 1):
            j = t - k
            if j < 0 or j > len(right):
                continue
            table = right_by_size[j]
            for combo in combinations(left, k):
                used += 1
                r = 0
                s = 1
                for i in combo:
                    r ^= vecs[i]
                    s *= signs[i]
                for rc in table.get(r, ()):
                    rs = s
                    for i in rc:
                        rs *= signs[i]
                    if rs == -1:
                        found.append(tuple(combo) + rc)
        complete_to = t
    return found, complete_to, used
