"""Exact frustration solvers.

Four optimization problems over a signed graph:

* :func:`frustration_index` -- minimum negative-edge count over the switching
  class, computed by enumerating switchings.
* :func:`frustration_index_deletion_oracle` -- the same quantity computed the
  definitional way, as the fewest edge deletions that leave a balanced graph.
  Kept deliberately independent of the switching route so the two can
  cross-check each other.
* :func:`frustration_number` -- fewest vertex deletions that leave balance.
* :func:`max_frustration` -- maximum frustration index over all signatures,
  enumerated one switching class per sign pattern on the non-forest edges of
  the deterministic cycle basis.

Switching enumeration has two interchangeable strategies: a numpy parity-table
scan over all 2^t switchings (t = free vertices) when that fits in memory, and
a frontier dynamic program over a BFS vertex order for larger graphs.  Both
are exact; budgets are hard limits and raise :class:`ResourceLimitError`
rather than approximating.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import Graph, Signature, SignedGraph, SwitchSet, cycle_basis
from .errors import InvalidInputError, ResourceLimitError

__all__ = [
    "SolveResult",
    "DEFAULT_STATE_BUDGET",
    "DEFAULT_CLASS_BUDGET",
    "DEFAULT_SUBSET_BUDGET",
    "frustration_index",
    "minimum_signatures",
    "frustration_index_deletion_oracle",
    "frustration_number",
    "restricted_min_signature",
    "max_frustration",
    "max_frustration_lower_bound",
]

DEFAULT_STATE_BUDGET = 1 << 30
DEFAULT_CLASS_BUDGET = 1 << 12
DEFAULT_SUBSET_BUDGET = 1 << 20

# exhaustive vectorized scan is used up to 2^_SCAN_BITS switchings; beyond
# that the frontier DP takes over
_SCAN_BITS = 20


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``witness`` reproduces ``value`` when re-evaluated: a minimum equivalent
    signature, a deleted edge/vertex set, or a minimizing switch set,
    depending on the operation.  ``explored`` counts enumerated states in the
    operation's natural unit (switchings, subsets, or classes).  ``elapsed_ms``
    is informational and excluded from equality.
    """

    method: str
    value: int
    witness: Signature | SwitchSet | tuple[int, ...]
    explored: int
    elapsed_ms: float = field(default=0.0, compare=False)

    def witness_indices(self) -> tuple[int, ...]:
        if isinstance(self.witness, (Signature, SwitchSet)):
            return self.witness.members
        return tuple(self.witness)

    def to_record(self) -> dict:
        """Flat serializable record with a fixed key order."""
        return {
            "method": self.method,
            "value": self.value,
            "witness": list(self.witness_indices()),
            "explored": self.explored,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _lex_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _free_vertices(g: Graph, allowed: set[int] | None) -> list[int]:
    """Switching variables, ascending.

    One vertex per component is pinned to break the X / complement-of-X
    symmetry, but only when the entire component may be switched; under a
    restriction the pinned vertices are exactly the disallowed ones.
    """
    basis = cycle_basis(g)
    if allowed is None:
        allowed = set(range(g.n_vertices))
    comp_sizes = [0] * basis.n_components
    comp_allowed = [0] * basis.n_components
    for v in range(g.n_vertices):
        cid = basis.vertex_component[v]
        comp_sizes[cid] += 1
        if v in allowed:
            comp_allowed[cid] += 1
    pinned = {basis.roots[cid] for cid in range(basis.n_components)
              if comp_allowed[cid] == comp_sizes[cid]}
    return [v for v in sorted(allowed) if v not in pinned]


class _SwitchScan:
    """Dense enumeration of all switchings over a free-vertex list.

    Row ``x`` of the parity table records, per edge, whether switching the
    free vertices named by the bits of ``x`` flips that edge.  The table is
    built by doubling, one free vertex at a time.
    """

    def __init__(self, g: Graph, free: Sequence[int]):
        self.g = g
        self.free = list(free)
        m = g.n_edges
        t = len(self.free)
        self.n_rows = 1 << t
        table = np.zeros((self.n_rows, max(m, 1)), dtype=np.uint8)
        size = 1
        for v in self.free:
            inc = np.zeros(max(m, 1), dtype=np.uint8)
            for _, eidx in g.adjacency[v]:
                inc[eidx] = 1
            np.bitwise_xor(table[:size], inc, out=table[size:2 * size])
            size *= 2
        self.table = table[:, :m] if m else table[:, :0]
        self.row_sums = self.table.sum(axis=1, dtype=np.int64)
        self._table_f32: np.ndarray | None = None

    def counts(self, neg_mask: int) -> np.ndarray:
        """Negative-edge count after each switching, for the given signature."""
        cols = _lex_key(neg_mask)
        if not cols:
            return self.row_sums.copy()
        delta = self.table[:, cols].sum(axis=1, dtype=np.int64)
        return self.row_sums + len(cols) - 2 * delta

    def min_counts_batch(self, neg_masks: Sequence[int]) -> np.ndarray:
        """Minimum negative-edge count per signature, for many signatures at once."""
        m = self.g.n_edges
        if m == 0:
            return np.zeros(len(neg_masks), dtype=np.int64)
        if self._table_f32 is None:
            self._table_f32 = self.table.astype(np.float32)
        out = np.empty(len(neg_masks), dtype=np.int64)
        block = max(1, (1 << 24) // max(self.n_rows, 1))
        for lo in range(0, len(neg_masks), block):
            chunk = neg_masks[lo:lo + block]
            s = np.zeros((len(chunk), m), dtype=np.float32)
            sizes = np.zeros(len(chunk), dtype=np.float32)
            for j, mask in enumerate(chunk):
                cols = _lex_key(mask)
                s[j, cols] = 1.0
                sizes[j] = len(cols)
            delta = self._table_f32 @ s.T
            counts = self.row_sums[:, None] + sizes[None, :] - 2.0 * delta
            out[lo:lo + block] = counts.min(axis=0).astype(np.int64)
        return out

    def flip_mask(self, row: int) -> int:
        """Edge-flip mask of the switching encoded by table row ``row``."""
        flip = 0
        for j, v in enumerate(self.free):
            if (row >> j) & 1:
                flip ^= self.g.incident_edge_mask[v]
        return flip

    def minima(self, neg_mask: int) -> tuple[int, list[int]]:
        """Minimum count and the rows that attain it."""
        counts = self.counts(neg_mask)
        value = int(counts.min())
        rows = [int(r) for r in np.flatnonzero(counts == value)]
        return value, rows


def _bfs_vertex_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * g.n_vertices
    for root in range(g.n_vertices):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            order.append(u)
            for v, _ in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def _frontier_dp(g: Graph, neg_mask: int, free: Sequence[int],
                 budget: int) -> tuple[int, int, int]:
    """Exact minimum over switchings by dynamic programming over a BFS order.

    Vertices outside ``free`` are forced to stay unswitched.  Returns
    ``(value, switch_mask, explored)`` where ``switch_mask`` has a bit set for
    every switched vertex of one optimal switching.
    """
    n = g.n_vertices
    free_set = set(free)
    order = _bfs_vertex_order(g)
    pos = [0] * n
    for i, w in enumerate(order):
        pos[w] = i
    drop_step = [0] * n
    for v in range(n):
        ds = pos[v]
        for a, _ in g.adjacency[v]:
            ds = max(ds, pos[a])
        drop_step[v] = ds
    drops: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        drops[drop_step[v]].append(v)

    active: list[int] = []
    states: dict[int, int] = {0: 0}
    # per step: post-state -> (previous post-state, bit assigned to order[i])
    trace: list[dict[int, tuple[int, int]]] = []
    explored = 0

    for i, w in enumerate(order):
        idx_of = {v: j for j, v in enumerate(active)}
        nbrs = [(idx_of[a], (neg_mask >> eidx) & 1)
                for a, eidx in g.adjacency[w] if pos[a] < i]
        wbits = (0, 1) if w in free_set else (0,)
        wpos = len(active)
        ext: dict[int, tuple[int, int, int]] = {}
        for key in sorted(states):
            cost = states[key]
            for wbit in wbits:
                add = 0
                for j, sneg in nbrs:
                    add += sneg ^ wbit ^ ((key >> j) & 1)
                nk = key | (wbit << wpos)
                nc = cost + add
                cur = ext.get(nk)
                if cur is None or nc < cur[0]:
                    ext[nk] = (nc, key, wbit)
        explored += len(states) * len(wbits)
        if explored > budget:
            raise ResourceLimitError(
                f"switching DP exceeded its state budget of {budget}",
                explored=explored)
        active.append(w)
        dropped = set(drops[i])
        if dropped:
            keep = [j for j, v in enumerate(active) if v not in dropped]
            new_states: dict[int, int] = {}
            rec: dict[int, tuple[int, int]] = {}
            for key in sorted(ext):
                cost, prev, wbit = ext[key]
                rk = 0
                for t, j in enumerate(keep):
                    rk |= ((key >> j) & 1) << t
                if rk not in new_states or cost < new_states[rk]:
                    new_states[rk] = cost
                    rec[rk] = (prev, wbit)
            active = [active[j] for j in keep]
            states = new_states
            trace.append(rec)
        else:
            states = {k: v[0] for k, v in ext.items()}
            trace.append({k: (v[1], v[2]) for k, v in ext.items()})

    if not order:
        return 0, 0, explored
    value = states[0]
    key = 0
    switch_mask = 0
    for i in range(n - 1, -1, -1):
        prev, wbit = trace[i][key]
        if wbit:
            switch_mask |= 1 << order[i]
        key = prev
    return value, switch_mask, explored


def _min_over_switchings(sg: SignedGraph, allowed: set[int] | None,
                         budget_states: int):
    """Shared engine: (value, explored, scan_or_None, ties_rows_or_None, dp_mask_or_None)."""
    g = sg.graph
    free = _free_vertices(g, allowed)
    t = len(free)
    if t <= _SCAN_BITS and (1 << t) <= budget_states:
        scan = _SwitchScan(g, free)
        value, rows = scan.minima(sg.negatives.mask)
        return value, 1 << t, scan, rows, None
    value, switch_mask, explored = _frontier_dp(
        g, sg.negatives.mask, free, budget_states)
    return value, explored, None, None, switch_mask


def frustration_index(sg: SignedGraph, *,
                      budget_states: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Minimum number of negative edges over the switching class of ``sg``.

    The witness is a minimum equivalent signature; when the exhaustive scan is
    feasible it is the lexicographically smallest one (as an edge-index set).
    """
    start = time.perf_counter()
    g = sg.graph
    value, explored, scan, rows, dp_mask = _min_over_switchings(
        sg, None, budget_states)
    if scan is not None:
        best = None
        for row in rows:
            smask = sg.negatives.mask ^ scan.flip_mask(row)
            key = _lex_key(smask)
            if best is None or key < best[0]:
                best = (key, smask)
        witness = Signature(g.n_edges, best[1])
        method = "switch-scan"
    else:
        flip = 0
        for v in _lex_key(dp_mask):
            flip ^= g.incident_edge_mask[v]
        witness = Signature(g.n_edges, sg.negatives.mask ^ flip)
        method = "switch-dp"
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveResult(method, value, witness, explored, elapsed)


def minimum_signatures(sg: SignedGraph, *,
                       budget_states: int = DEFAULT_STATE_BUDGET) -> tuple[Signature, ...]:
    """All minimum signatures of the switching class, lexicographically sorted.

    Requires the exhaustive scan to be feasible (at most 2^20 switchings).
    """
    g = sg.graph
    free = _free_vertices(g, None)
    t = len(free)
    if t > _SCAN_BITS or (1 << t) > budget_states:
        raise ResourceLimitError(
            f"enumerating all minimum signatures needs 2^{t} switchings, "
            f"beyond the exhaustive-scan limit", explored=0)
    scan = _SwitchScan(g, free)
    _, rows = scan.minima(sg.negatives.mask)
    masks = sorted((sg.negatives.mask ^ scan.flip_mask(r) for r in rows),
                   key=_lex_key)
    return tuple(Signature(g.n_edges, mask) for mask in masks)


class _ParityDSU:
    """Union-find over vertices carrying sign parity to the set root."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n

    def find(self, x: int) -> tuple[int, int]:
        root, p = x, 0
        while self.parent[root] != root:
            p ^= self.parity[root]
            root = self.parent[root]
        cur, cp = x, p
        while self.parent[cur] != root:
            nxt = self.parent[cur]
            nxt_p = cp ^ self.parity[cur]
            self.parent[cur] = root
            self.parity[cur] = cp
            cur, cp = nxt, nxt_p
        return root, p

    def union(self, u: int, v: int, sign_bit: int) -> bool:
        """Join u and v with the given parity; False on conflict."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            return (pu ^ pv) == sign_bit
        self.parent[ru] = rv
        self.parity[ru] = pu ^ pv ^ sign_bit
        return True


def _balanced_after_removal(sg: SignedGraph, removed_edges: int = 0,
                            removed_vertices: int = 0) -> bool:
    g = sg.graph
    neg = sg.negatives.mask
    dsu = _ParityDSU(g.n_vertices)
    for eidx, (u, v) in enumerate(g.edges):
        if (removed_edges >> eidx) & 1:
            continue
        if (removed_vertices >> u) & 1 or (removed_vertices >> v) & 1:
            continue
        if not dsu.union(u, v, (neg >> eidx) & 1):
            return False
    return True


def frustration_index_deletion_oracle(
        sg: SignedGraph, *,
        budget_subsets: int = DEFAULT_SUBSET_BUDGET) -> SolveResult:
    """Fewest edge deletions leaving a balanced signed graph.

    Searches deletion sets of size 0, 1, 2, ... exhaustively, so it is only
    meant for small graphs or small optima; it must agree with
    :func:`frustration_index` on every input.  On budget exhaustion the raised
    error carries the proven lower bound.
    """
    start = time.perf_counter()
    m = sg.graph.n_edges
    explored = 0
    for r in range(m + 1):
        for combo in itertools.combinations(range(m), r):
            explored += 1
            if explored > budget_subsets:
                raise ResourceLimitError(
                    f"edge-deletion search exceeded its budget of {budget_subsets}",
                    explored=explored - 1, lower_bound=r)
            removed = 0
            for e in combo:
                removed |= 1 << e
            if _balanced_after_removal(sg, removed_edges=removed):
                elapsed = (time.perf_counter() - start) * 1000.0
                return SolveResult("edge-deletion", r,
                                   Signature.from_edges(m, combo),
                                   explored, elapsed)
    raise AssertionError("deleting all edges always balances")


def frustration_number(sg: SignedGraph, *,
                       budget_subsets: int = DEFAULT_SUBSET_BUDGET) -> SolveResult:
    """Fewest vertex deletions leaving a balanced signed graph."""
    start = time.perf_counter()
    n = sg.graph.n_vertices
    explored = 0
    for r in range(n + 1):
        for combo in itertools.combinations(range(n), r):
            explored += 1
            if explored > budget_subsets:
                raise ResourceLimitError(
                    f"vertex-deletion search exceeded its budget of {budget_subsets}",
                    explored=explored - 1, lower_bound=r)
            removed = 0
            for v in combo:
                removed |= 1 << v
            if _balanced_after_removal(sg, removed_vertices=removed):
                elapsed = (time.perf_counter() - start) * 1000.0
                return SolveResult("vertex-deletion", r, tuple(combo),
                                   explored, elapsed)
    raise AssertionError("deleting all vertices always balances")


def restricted_min_signature(sg: SignedGraph, allowed: Iterable[int] | SwitchSet, *,
                             budget_states: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Minimum negative-edge count over switch sets contained in ``allowed``.

    The X / complement symmetry is only exploited when a whole component is
    allowed; otherwise every subset of ``allowed`` is a distinct candidate.
    The witness is a minimizing switch set.
    """
    start = time.perf_counter()
    g = sg.graph
    if isinstance(allowed, SwitchSet):
        if allowed.n != g.n_vertices:
            raise InvalidInputError("switch set does not match the graph's vertex count")
        allowed_set = set(allowed.members)
    else:
        allowed_set = {int(v) for v in allowed}
        for v in allowed_set:
            if not 0 <= v < g.n_vertices:
                raise InvalidInputError(f"vertex index {v} out of range")
    value, explored, scan, rows, dp_mask = _min_over_switchings(
        sg, allowed_set, budget_states)
    if scan is not None:
        best = None
        for row in rows:
            verts = tuple(scan.free[j] for j in _lex_key(row))
            if best is None or verts < best:
                best = verts
        witness = SwitchSet.from_vertices(g.n_vertices, best)
        method = "restricted-scan"
    else:
        witness = SwitchSet(g.n_vertices, dp_mask)
        method = "restricted-dp"
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveResult(method, value, witness, explored, elapsed)


def _pattern_to_mask(non_tree: Sequence[int], pattern: int) -> int:
    mask = 0
    for j, e in enumerate(non_tree):
        if (pattern >> j) & 1:
            mask |= 1 << e
    return mask


def _canonical_pattern(basis, mask: int) -> int:
    pattern = 0
    for j, cmask in enumerate(basis.cycle_masks):
        if (cmask & mask).bit_count() % 2:
            pattern |= 1 << j
    return pattern


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for e in _lex_key(mask):
        out |= 1 << perm[e]
    return out


def _symmetry_reduced_patterns(g: Graph, rotation: Sequence[int]) -> list[int]:
    """Patterns that are minimal in their orbit under the rotation action."""
    basis = cycle_basis(g)
    non_tree = basis.non_tree_edges
    keep = []
    for pattern in range(1 << len(non_tree)):
        mask = _pattern_to_mask(non_tree, pattern)
        cur = mask
        minimal = True
        while True:
            cur = _permute_mask(cur, rotation)
            if cur == mask:
                break
            if _canonical_pattern(basis, cur) < pattern:
                minimal = False
                break
        if minimal:
            keep.append(pattern)
    return keep


def max_frustration(g: Graph, *,
                    budget_classes: int = DEFAULT_CLASS_BUDGET,
                    budget_states: int = DEFAULT_STATE_BUDGET,
                    workers: int = 1,
                    rotation: Sequence[int] | None = None) -> SolveResult:
    """Maximum frustration index over all signatures of ``g``.

    Switching classes are enumerated as the 2^(m-n+c) sign patterns on the
    non-forest edges of the deterministic cycle basis.  ``rotation`` may name
    an edge permutation generating a cyclic symmetry of ``g``; orbits under it
    are then solved once.  The value and witness are identical with pruning on
    or off.  The witness is a minimum signature of the first maximizing class.
    """
    start = time.perf_counter()
    basis = cycle_basis(g)
    non_tree = basis.non_tree_edges
    f = len(non_tree)
    n_classes = 1 << f
    if n_classes > budget_classes:
        raise ResourceLimitError(
            f"{n_classes} switching classes exceed the class budget of "
            f"{budget_classes}", explored=0, completed=0)
    if rotation is not None:
        if len(rotation) != g.n_edges or sorted(rotation) != list(range(g.n_edges)):
            raise InvalidInputError("rotation must be a permutation of the edge indices")
        patterns = _symmetry_reduced_patterns(g, rotation)
    else:
        patterns = list(range(n_classes))

    free = _free_vertices(g, None)
    t = len(free)
    scan = _SwitchScan(g, free) if t <= _SCAN_BITS and (1 << t) <= budget_states else None

    def solve_block(block: list[int]) -> tuple[int, int, int]:
        masks = [_pattern_to_mask(non_tree, p) for p in block]
        if scan is not None:
            values = scan.min_counts_batch(masks)
        else:
            values = [
                _frontier_dp(g, mask, free, budget_states)[0] for mask in masks
            ]
        best_v, best_p = -1, -1
        for p, v in zip(block, values):
            v = int(v)
            if v > best_v:
                best_v, best_p = v, p
        return best_v, best_p, len(block)

    if workers > 1 and len(patterns) > 1:
        chunk = max(1, math.ceil(len(patterns) / (workers * 4)))
        blocks = [patterns[i:i + chunk] for i in range(0, len(patterns), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(solve_block, blocks))
    else:
        results = [solve_block(patterns)] if patterns else []

    best_v, best_p, completed = -1, -1, 0
    for v, p, cnt in results:
        completed += cnt
        if v > best_v or (v == best_v and p < best_p):
            best_v, best_p = v, p
    best_mask = _pattern_to_mask(non_tree, best_p)
    witness_result = frustration_index(
        SignedGraph(g, Signature(g.n_edges, best_mask)), budget_states=budget_states)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveResult("class-enumeration", best_v, witness_result.witness,
                       completed, elapsed)


def max_frustration_lower_bound(g: Graph, trials: int, seed: int, *,
                                budget_states: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Best frustration index over randomly sampled switching classes.

    Reproducible for a fixed seed, and monotone in ``trials`` for a fixed
    seed since the sample sequence is a prefix of any longer one.  When
    ``trials`` covers every class the sweep is deterministic and the result
    equals :func:`max_frustration`.
    """
    start = time.perf_counter()
    basis = cycle_basis(g)
    non_tree = basis.non_tree_edges
    f = len(non_tree)
    n_classes = 1 << f
    if trials < 0:
        raise InvalidInputError("trials must be non-negative")
    if trials >= n_classes:
        patterns = list(range(n_classes))
    else:
        rng = random.Random(seed)
        patterns = [rng.getrandbits(f) if f else 0 for _ in range(trials)]

    free = _free_vertices(g, None)
    t = len(free)
    scan = _SwitchScan(g, free) if t <= _SCAN_BITS and (1 << t) <= budget_states else None
    best_v, best_mask = -1, 0
    for p in patterns:
        mask = _pattern_to_mask(non_tree, p)
        if scan is not None:
            value = int(scan.counts(mask).min())
        else:
            value = _frontier_dp(g, mask, free, budget_states)[0]
        if value > best_v:
            best_v, best_mask = value, mask
    if not patterns:
        best_v, best_mask = 0, 0
    witness_result = frustration_index(
        SignedGraph(g, Signature(g.n_edges, best_mask)), budget_states=budget_states)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveResult("random-classes", best_v, witness_result.witness,
                       len(patterns), elapsed)
