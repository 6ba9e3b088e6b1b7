"""The 104-projector additive contradiction: set, graph, contexts, coloring.

The projector set has three families: the 32 computational-basis kets, the
two codewords with their 30 single-Pauli mutations, and 40 rank-4 subspaces
(five operator-array rows, eight sign patterns each).  Spanning vectors are
kept as unnormalized integer vectors (mutations are scaled by 4), so all
orthogonality and identity-resolution arithmetic is plain integer work.

Context enumeration is exhaustive by construction: the search always
branches on a specific uncovered basis direction, so every resolution of
identity inside the vertex set is produced exactly once, and a node budget
turns an unfinished search into a hard error rather than a silent partial
answer.  The coloring search then imposes: adjacent vertices never both
true, every context exactly one true.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import five_qubit_code
from .dyadic import Dyadic
from .errors import BudgetExceededError
from .pauli import identity, single_site
from .statevector import Projector, StateVector, apply, basis_ket

__all__ = [
    "KSVertex",
    "OrthogonalityGraph",
    "Context",
    "build_ks_set",
    "build_orthogonality_graph",
    "enumerate_contexts",
    "canonical_contexts",
    "ks_colorability",
    "ColorabilityVerdict",
    "ROW_SITES",
]

_DIM = 32


def _wrap5(k: int) -> int:
    return (k - 1) % 5 + 1


# Row r of the operator array constrains X on sites (r-2, r) and Z on r-1.
ROW_SITES = {r: (_wrap5(r - 2), _wrap5(r - 1), _wrap5(r)) for r in range(2, 7)}


@dataclass(frozen=True)
class KSVertex:
    """One projector of the set, tagged with how it was built.

    provenance is one of
      ("classical", ket_label)
      ("mutation", codeword_index, pauli_text)
      ("row", row_index, m, n, z_sign)
    and determines the projector uniquely.  ivecs holds the spanning set as
    integer vectors (amplitudes times 4 for mutation vectors).
    """

    vid: int
    provenance: tuple
    projector: Projector
    ivecs: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.ivecs)

    @property
    def kind(self) -> str:
        return self.provenance[0]

    def label(self) -> str:
        if self.kind == "classical":
            return f"|{self.provenance[1]}>"
        if self.kind == "mutation":
            _, cw, text = self.provenance
            return f"{text}|{cw}_L>"
        _, r, m, n, s = self.provenance
        return f"row{r}[m={m:+d},n={n:+d},z={s:+d}]"


def _int_vector(v: StateVector, scale_exp: int) -> tuple[int, ...]:
    out = []
    for a in v.amps:
        if not a.is_real():
            raise ValueError("spanning vectors must be phase-canonical (real)")
        scaled = a.half_power(-scale_exp)
        if scaled.exp != 0:
            raise ValueError("amplitude does not scale to an integer")
        out.append(scaled.re)
    return tuple(out)


def build_ks_set() -> list[KSVertex]:
    """Exactly 104 vertices: 32 classical + 32 mutations + 40 rank-4."""
    code = five_qubit_code()
    vertices: list[KSVertex] = []

    for j in range(_DIM):
        ket = basis_ket(5, j)
        vertices.append(KSVertex(
            vid=len(vertices),
            provenance=("classical", format(j, "05b")),
            projector=Projector([ket]),
            ivecs=(_int_vector(ket, 0),),
        ))

    for cw in (0, 1):
        base = code.codeword(cw)
        seen: dict[tuple, tuple] = {}
        ordered: list[tuple] = []
        for op, text in _mutation_operators():
            vec = apply(op, base).phase_canonical()
            key = vec.amps
            if key not in seen:
                seen[key] = (cw, text)
                ordered.append((vec, (cw, text)))
        if len(ordered) != 16:
            raise AssertionError(
                f"codeword {cw}: expected 16 distinct mutation vectors, "
                f"got {len(ordered)}")
        for vec, (c, text) in ordered:
            vertices.append(KSVertex(
                vid=len(vertices),
                provenance=("mutation", c, text),
                projector=Projector([vec]),
                ivecs=(_int_vector(vec, 2),),
            ))

    for r in range(2, 7):
        a, b, c = ROW_SITES[r]
        for s in (+1, -1):
            for m in (+1, -1):
                for n in (+1, -1):
                    vecs = _row_subspace_vectors(a, b, c, m, n, s)
                    vertices.append(KSVertex(
                        vid=len(vertices),
                        provenance=("row", r, m, n, s),
                        projector=Projector(vecs),
                        ivecs=tuple(_int_vector(v, 0) for v in vecs),
                    ))

    if len(vertices) != 104:
        raise AssertionError(f"built {len(vertices)} vertices, expected 104")
    return vertices


def _mutation_operators():
    yield identity(5), "I"
    for site in range(1, 6):
        for letter in "XYZ":
            yield single_site(5, site, letter), f"{letter}{site}"


def _row_subspace_vectors(a: int, b: int, c: int, m: int, n: int,
                          s: int) -> list[StateVector]:
    """Four integer vectors spanning (x_a = m) ∧ (z_b = s) ∧ (x_c = n)."""
    rest = sorted(set(range(1, 6)) - {a, b, c})
    d, e = rest
    b_bit = 0 if s == +1 else 1
    vectors = []
    for bd in (0, 1):
        for be in (0, 1):
            amps = [Dyadic(0)] * _DIM
            for ba in (0, 1):
                for bc in (0, 1):
                    bits = {a: ba, b: b_bit, c: bc, d: bd, e: be}
                    index = 0
                    for site in range(1, 6):
                        index = (index << 1) | bits[site]
                    amps[index] = Dyadic((m if ba else 1) * (n if bc else 1))
            vectors.append(StateVector(5, amps))
    return vectors


# ---------------------------------------------------------------------------
# orthogonality graph
# ---------------------------------------------------------------------------


class OrthogonalityGraph:
    """Vertices plus the exact mutual-orthogonality relation."""

    def __init__(self, vertices: list[KSVertex], adj: list[int]):
        self.vertices = vertices
        self.adj = adj
        self.edge_count = sum(m.bit_count() for m in adj) // 2

    def __len__(self) -> int:
        return len(self.vertices)

    def are_orthogonal(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _mask_bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self.vertices))
                for v in _mask_bits(self.adj[u]) if v > u]

    def induced(self, ids) -> tuple["OrthogonalityGraph", dict[int, int]]:
        """Subgraph on the given vertex ids; returns (graph, old->new map)."""
        ids = sorted(ids)
        remap = {old: new for new, old in enumerate(ids)}
        verts = []
        for new, old in enumerate(ids):
            v = self.vertices[old]
            verts.append(KSVertex(new, v.provenance, v.projector, v.ivecs))
        adj = []
        for old in ids:
            mask = 0
            for other in ids:
                if self.adj[old] >> other & 1:
                    mask |= 1 << remap[other]
            adj.append(mask)
        return OrthogonalityGraph(verts, adj), remap


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _ivec_dot(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v) if a and b)


def build_orthogonality_graph(vertices: list[KSVertex]) -> OrthogonalityGraph:
    nv = len(vertices)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if _vertices_orthogonal(vertices[i], vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return OrthogonalityGraph(vertices, adj)


def _vertices_orthogonal(p: KSVertex, q: KSVertex) -> bool:
    return all(_ivec_dot(u, v) == 0 for u in p.ivecs for v in q.ivecs)


# ---------------------------------------------------------------------------
# contexts (resolutions of identity)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Context:
    ids: tuple[int, ...]
    total_rank: int

    def __len__(self) -> int:
        return len(self.ids)


_FIELD_BITS = 16
_OFFSET = 16  # projector-sum entries scaled by 16 lie in [-16, 16]


class _CoverTables:
    """Packed-integer tables for exact-cover reasoning, scale 16.

    Each vertex contributes 16 times its projector matrix, flattened to
    1024 16-bit fields inside one big integer (entries are offset by 16 so
    packed addition never borrows).  covers[j] is the bitmask of vertices
    whose projector does not annihilate basis ket j.
    """

    def __init__(self, vertices: list[KSVertex]):
        self.covers = [0] * _DIM
        self.ranks = [v.rank for v in vertices]
        self.deltas: list[int] = []
        for v in vertices:
            norms = {_ivec_dot(s, s) for s in v.ivecs}
            if len(norms) != 1 or 16 % norms.pop():
                raise ValueError(f"vertex {v.vid}: spanning norms must be a "
                                 "uniform divisor of 16")
            scale = 16 // _ivec_dot(v.ivecs[0], v.ivecs[0])
            flat = [0] * (_DIM * _DIM)
            for s in v.ivecs:
                for j, sj in enumerate(s):
                    if sj:
                        self.covers[j] |= 1 << v.vid
                        w = sj * scale
                        base = j * _DIM
                        for i, si in enumerate(s):
                            if si:
                                flat[base + i] += si * w
            self.deltas.append(_pack(x + _OFFSET for x in flat))

    @staticmethod
    def identity_targets() -> list[int]:
        """identity_targets()[k] is the packed 16·I with k offsets applied."""
        flat = [0] * (_DIM * _DIM)
        for j in range(_DIM):
            flat[j * _DIM + j] = 16
        return [_pack(x + _OFFSET * k for x in flat) for k in range(_DIM + 1)]


def _pack(values) -> int:
    buf = b"".join(x.to_bytes(_FIELD_BITS // 8, "little") for x in values)
    return int.from_bytes(buf, "little")


def enumerate_contexts(graph: OrthogonalityGraph,
                       node_budget: int = 1_000_000) -> list[Context]:
    """Every subset of pairwise-orthogonal vertices whose projectors resolve
    the identity, found by cover-directed backtracking.

    The search always branches on the first basis ket the partial sum does
    not yet reproduce, trying each compatible vertex that hits it and then
    excluding that vertex, so every context is produced exactly once.
    Raises BudgetExceededError before returning any partial enumeration.
    """
    tables = _CoverTables(graph.vertices)
    ranks = tables.ranks
    deltas = tables.deltas
    adj = graph.adj
    rank1_mask = 0
    rank4_mask = 0
    for v in graph.vertices:
        if v.rank == 1:
            rank1_mask |= 1 << v.vid
        else:
            rank4_mask |= 1 << v.vid

    targets = _CoverTables.identity_targets()
    block_bits = _FIELD_BITS * _DIM
    chosen: list[int] = []
    results: list[Context] = []
    nodes = 0

    def available_rank(mask: int) -> int:
        return (mask & rank1_mask).bit_count() + 4 * (mask & rank4_mask).bit_count()

    def search(cov: int, allowed: int, rank_sum: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(
                f"context enumeration exceeded {node_budget} nodes")
        diff = cov ^ targets[len(chosen)]
        if diff == 0:
            if rank_sum != _DIM:
                raise AssertionError("covered identity with wrong rank sum")
            results.append(Context(tuple(sorted(chosen)), rank_sum))
            return
        j = ((diff & -diff).bit_length() - 1) // block_bits
        cands = allowed & tables.covers[j]
        while cands:
            low = cands & -cands
            vid = low.bit_length() - 1
            cands ^= low
            r = rank_sum + ranks[vid]
            if r <= _DIM:
                nxt = allowed & adj[vid]
                if r == _DIM or available_rank(nxt) >= _DIM - r:
                    chosen.append(vid)
                    search(cov + deltas[vid], nxt, r)
                    chosen.pop()
            allowed &= ~low

    search(0, (1 << len(graph.vertices)) - 1, 0)
    results.sort(key=lambda ctx: ctx.ids)
    return results


def canonical_contexts(graph: OrthogonalityGraph) -> list[Context]:
    """The seven contexts read straight off the construction: the two rank-1
    bases and the five row families."""
    by_kind: dict[str, list[int]] = {"classical": [], "mutation": []}
    rows: dict[int, list[int]] = {r: [] for r in range(2, 7)}
    for v in graph.vertices:
        if v.kind == "row":
            rows[v.provenance[1]].append(v.vid)
        else:
            by_kind[v.kind].append(v.vid)
    out = [Context(tuple(by_kind["classical"]), _DIM),
           Context(tuple(by_kind["mutation"]), _DIM)]
    for r in range(2, 7):
        out.append(Context(tuple(rows[r]), _DIM))
    return out


# ---------------------------------------------------------------------------
# KS1/KS2 coloring search
# ---------------------------------------------------------------------------


@dataclass
class ColorabilityVerdict:
    satisfiable: bool
    coloring: dict[int, bool] | None
    decisions: int
    propagations: int
    conflicts: int


_UNSET, _TRUE, _FALSE = 0, 1, 2


def ks_colorability(graph: OrthogonalityGraph, contexts: list[Context],
                    decision_budget: int = 1_000_000) -> ColorabilityVerdict:
    """Search for a true/false labeling with no true-true edge (KS1) and at
    least one true per context (KS2).

    Within a context all members are mutually orthogonal, so the two rules
    force exactly one true member; the search branches on which one it is.
    Returns UNSAT with statistics, or SAT with an explicit coloring (checked
    before it is returned).
    """
    nv = len(graph.vertices)
    adj = graph.adj
    ctx_members = [list(c.ids) for c in contexts]
    member_ctxs: list[list[int]] = [[] for _ in range(nv)]
    for ci, members in enumerate(ctx_members):
        for vid in members:
            member_ctxs[vid].append(ci)

    assign = [_UNSET] * nv
    stats = {"decisions": 0, "propagations": 0, "conflicts": 0}

    def set_true(vid: int, trail: list[int]) -> bool:
        """Assign vid true and propagate; False on conflict."""
        if assign[vid] == _TRUE:
            return True
        if assign[vid] == _FALSE:
            return False
        assign[vid] = _TRUE
        trail.append(vid)
        stats["propagations"] += 1
        for u in _mask_bits(adj[vid]):
            if not set_false(u, trail):
                return False
        return True

    def set_false(vid: int, trail: list[int]) -> bool:
        if assign[vid] == _FALSE:
            return True
        if assign[vid] == _TRUE:
            return False
        assign[vid] = _FALSE
        trail.append(vid)
        stats["propagations"] += 1
        for ci in member_ctxs[vid]:
            state = _context_state(ci)
            if state == "dead":
                return False
            if isinstance(state, int):
                if not set_true(state, trail):
                    return False
        return True

    def _context_state(ci: int):
        """'ok' if satisfied or >=2 open, 'dead' if all false, or the single
        remaining unset member (a forced assignment)."""
        unset = -1
        count = 0
        for vid in ctx_members[ci]:
            a = assign[vid]
            if a == _TRUE:
                return "ok"
            if a == _UNSET:
                count += 1
                unset = vid
                if count > 1:
                    return "ok"
        if count == 0:
            return "dead"
        return unset

    def undo(trail: list[int]) -> None:
        for vid in trail:
            assign[vid] = _UNSET

    def pick_context() -> int | None:
        best = None
        best_open = None
        for ci, members in enumerate(ctx_members):
            open_count = 0
            satisfied = False
            for vid in members:
                if assign[vid] == _TRUE:
                    satisfied = True
                    break
                if assign[vid] == _UNSET:
                    open_count += 1
            if satisfied:
                continue
            if best_open is None or open_count < best_open:
                best, best_open = ci, open_count
        return best

    def solve() -> dict[int, bool] | None:
        ci = pick_context()
        if ci is None:
            coloring = {vid: assign[vid] == _TRUE for vid in range(nv)}
            return coloring
        stats["decisions"] += 1
        if stats["decisions"] > decision_budget:
            raise BudgetExceededError(
                f"coloring search exceeded {decision_budget} decisions")
        node_trail: list[int] = []
        try:
            for vid in ctx_members[ci]:
                if assign[vid] != _UNSET:
                    continue
                trail: list[int] = []
                if set_true(vid, trail):
                    res = solve()
                    if res is not None:
                        return res
                undo(trail)
                # vid is not the true member of ci in any remaining branch
                if not set_false(vid, node_trail):
                    stats["conflicts"] += 1
                    return None
            stats["conflicts"] += 1
            return None
        finally:
            undo(node_trail)

    coloring = solve()
    if coloring is not None:
        _check_coloring(graph, contexts, coloring)
        return ColorabilityVerdict(True, coloring, stats["decisions"],
                                   stats["propagations"], stats["conflicts"])
    return ColorabilityVerdict(False, None, stats["decisions"],
                               stats["propagations"], stats["conflicts"])


def _check_coloring(graph: OrthogonalityGraph, contexts, coloring) -> None:
    for u in range(len(graph.vertices)):
        if coloring[u]:
            for v in _mask_bits(graph.adj[u]):
                if coloring[v]:
                    raise AssertionError(f"KS1 violated on edge ({u},{v})")
    for ctx in contexts:
        if not any(coloring[vid] for vid in ctx.ids):
            raise AssertionError(f"KS2 violated on context {ctx.ids}")
