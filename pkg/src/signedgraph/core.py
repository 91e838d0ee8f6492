"""Signed graphs, switching, balance, and switching classes.

A signed graph is a simple graph together with a set of negative edges (the
signature).  Switching a vertex set flips every edge with exactly one endpoint
in the set; it preserves the sign of every cycle, and two signatures are
equivalent exactly when they induce the same cycle signs.  This module holds
the value types (:class:`Graph`, :class:`Signature`, :class:`SignedGraph`,
:class:`SwitchSet`, :class:`CycleBasis`) and the elementary operations on
them; everything is immutable and safe to share between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError

__all__ = [
    "Graph",
    "Signature",
    "SignedGraph",
    "SwitchSet",
    "CycleBasis",
    "sign_of_cycle",
    "switch",
    "is_balanced",
    "cycle_basis",
    "switching_equivalent",
    "canonical_class_form",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "complete_bipartite_graph",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with dense 0-based vertex and edge indices.

    Edge indices follow the order of the ``edges`` argument and are stable for
    the lifetime of the graph.  Loops and parallel edges are rejected.
    Optional ``labels`` are cosmetic only and excluded from equality.
    """

    def __init__(self, n_vertices: int,
                 edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None):
        if n_vertices < 0:
            raise InvalidInputError("n_vertices must be non-negative")
        self.n_vertices = int(n_vertices)
        edge_list: list[tuple[int, int]] = []
        seen: set[frozenset[int]] = set()
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        incident: list[int] = [0] * self.n_vertices
        for idx, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InvalidInputError(f"edge {idx}: endpoint out of range: ({u}, {v})")
            if u == v:
                raise InvalidInputError(f"edge {idx}: loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidInputError(f"edge {idx}: parallel edge ({u}, {v})")
            seen.add(key)
            edge_list.append((u, v))
            adjacency[u].append((v, idx))
            adjacency[v].append((u, idx))
            incident[u] |= 1 << idx
            incident[v] |= 1 << idx
        self.edges: tuple[tuple[int, int], ...] = tuple(edge_list)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(a) for a in adjacency)
        self.incident_edge_mask: tuple[int, ...] = tuple(incident)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != self.n_vertices:
                raise InvalidInputError("labels must have one entry per vertex")
        self.labels = labels
        self._edge_ids = {frozenset(e): i for i, e in enumerate(self.edges)}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_ids

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge joining ``u`` and ``v``."""
        try:
            return self._edge_ids[frozenset((u, v))]
        except KeyError:
            raise InvalidInputError(f"no edge between {u} and {v}") from None

    def is_regular(self, degree: int) -> bool:
        return all(len(a) == degree for a in self.adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self.n_vertices}, n_edges={self.n_edges})"

    @cached_property
    def _basis(self) -> "CycleBasis":
        return _build_cycle_basis(self)


@dataclass(frozen=True)
class Signature:
    """A set of edge indices over a host graph with ``m`` edges, stored as a bitmask."""

    m: int
    mask: int

    def __post_init__(self):
        if self.m < 0:
            raise InvalidInputError("edge count must be non-negative")
        if not 0 <= self.mask < (1 << self.m):
            raise InvalidInputError("signature contains an edge index out of range")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[int]) -> "Signature":
        mask = 0
        for e in edges:
            e = int(e)
            if not 0 <= e < m:
                raise InvalidInputError(f"edge index {e} out of range for m={m}")
            mask |= 1 << e
        return cls(m, mask)

    @classmethod
    def empty(cls, m: int) -> "Signature":
        return cls(m, 0)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, edge: int) -> bool:
        return 0 <= edge < self.m and (self.mask >> edge) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __xor__(self, other: "Signature") -> "Signature":
        if self.m != other.m:
            raise InvalidInputError("signatures live over different edge counts")
        return Signature(self.m, self.mask ^ other.mask)

    def __repr__(self) -> str:
        return f"Signature(m={self.m}, edges={list(self.members)})"


@dataclass(frozen=True)
class SwitchSet:
    """A set of vertex indices over a host graph with ``n`` vertices."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError("vertex count must be non-negative")
        if not 0 <= self.mask < (1 << self.n):
            raise InvalidInputError("switch set contains a vertex index out of range")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "SwitchSet":
        mask = 0
        for v in vertices:
            v = int(v)
            if not 0 <= v < n:
                raise InvalidInputError(f"vertex index {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "SwitchSet":
        return cls(n, 0)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __repr__(self) -> str:
        return f"SwitchSet(n={self.n}, vertices={list(self.members)})"


@dataclass(frozen=True)
class SignedGraph:
    """A graph together with its set of negative edges."""

    graph: Graph
    negatives: Signature

    def __post_init__(self):
        if self.negatives.m != self.graph.n_edges:
            raise InvalidInputError("signature does not match the graph's edge count")

    @classmethod
    def all_positive(cls, graph: Graph) -> "SignedGraph":
        return cls(graph, Signature.empty(graph.n_edges))

    @classmethod
    def from_negative_edges(cls, graph: Graph, edges: Iterable[int]) -> "SignedGraph":
        return cls(graph, Signature.from_edges(graph.n_edges, edges))

    def sign(self, edge: int) -> int:
        """+1 or -1 for the given edge index."""
        if not 0 <= edge < self.graph.n_edges:
            raise InvalidInputError(f"edge index {edge} out of range")
        return -1 if edge in self.negatives else 1

    @property
    def negative_count(self) -> int:
        return len(self.negatives)

    def __repr__(self) -> str:
        return (f"SignedGraph(n={self.graph.n_vertices}, m={self.graph.n_edges}, "
                f"negatives={list(self.negatives.members)})")


@dataclass(frozen=True)
class CycleBasis:
    """A deterministic spanning forest plus one fundamental cycle per non-forest edge.

    The forest is grown breadth-first from the lowest-index vertex of every
    component, expanding neighbors in adjacency (= edge index) order, so the
    basis is identical across runs.  ``cycles[i]`` is the edge list of the
    fundamental cycle closed by ``non_tree_edges[i]``.
    """

    parent_vertex: tuple[int, ...]
    parent_edge: tuple[int, ...]
    roots: tuple[int, ...]
    vertex_component: tuple[int, ...]
    tree_edge_mask: int
    non_tree_edges: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    cycle_masks: tuple[int, ...]

    @property
    def n_components(self) -> int:
        return len(self.roots)

    def __len__(self) -> int:
        return len(self.cycles)


def _build_cycle_basis(g: Graph) -> CycleBasis:
    n = g.n_vertices
    parent_vertex = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    comp = [-1] * n
    roots: list[int] = []
    tree_mask = 0
    for root in range(n):
        if comp[root] != -1:
            continue
        cid = len(roots)
        roots.append(root)
        comp[root] = cid
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, eidx in g.adjacency[u]:
                if comp[v] == -1:
                    comp[v] = cid
                    parent_vertex[v] = u
                    parent_edge[v] = eidx
                    depth[v] = depth[u] + 1
                    tree_mask |= 1 << eidx
                    queue.append(v)
    non_tree = [e for e in range(g.n_edges) if not (tree_mask >> e) & 1]
    cycles: list[tuple[int, ...]] = []
    masks: list[int] = []
    for e in non_tree:
        u, v = g.edges[e]
        path: list[int] = [e]
        du, dv = depth[u], depth[v]
        while du > dv:
            path.append(parent_edge[u])
            u = parent_vertex[u]
            du -= 1
        while dv > du:
            path.append(parent_edge[v])
            v = parent_vertex[v]
            dv -= 1
        while u != v:
            path.append(parent_edge[u])
            path.append(parent_edge[v])
            u = parent_vertex[u]
            v = parent_vertex[v]
        cycles.append(tuple(path))
        cmask = 0
        for ce in path:
            cmask |= 1 << ce
        masks.append(cmask)
    return CycleBasis(
        parent_vertex=tuple(parent_vertex),
        parent_edge=tuple(parent_edge),
        roots=tuple(roots),
        vertex_component=tuple(comp),
        tree_edge_mask=tree_mask,
        non_tree_edges=tuple(non_tree),
        cycles=tuple(cycles),
        cycle_masks=tuple(masks),
    )


def cycle_basis(g: Graph) -> CycleBasis:
    """The deterministic fundamental cycle basis of ``g`` (cached on the graph)."""
    return g._basis


def sign_of_cycle(sg: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs along a cycle, given as a list of edge indices.

    Raises :class:`InvalidInputError` if the edges do not form a single simple
    cycle of ``sg.graph``.
    """
    g = sg.graph
    edges = [int(e) for e in cycle]
    if len(edges) < 3:
        raise InvalidInputError("a cycle needs at least three edges")
    if len(set(edges)) != len(edges):
        raise InvalidInputError("cycle repeats an edge")
    degree: dict[int, int] = {}
    for e in edges:
        if not 0 <= e < g.n_edges:
            raise InvalidInputError(f"edge index {e} out of range")
        for w in g.edges[e]:
            degree[w] = degree.get(w, 0) + 1
    if any(d != 2 for d in degree.values()):
        raise InvalidInputError("edge list is not a closed walk through distinct vertices")
    # degrees all 2 means a disjoint union of cycles; connectivity singles one out
    edge_set = set(edges)
    start = g.edges[edges[0]][0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w, eidx in g.adjacency[u]:
            if eidx in edge_set and w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(degree):
        raise InvalidInputError("edge list is a union of several disjoint cycles")
    neg = sum(1 for e in edges if e in sg.negatives)
    return -1 if neg % 2 else 1


def switch(sg: SignedGraph, x: SwitchSet) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``x``."""
    g = sg.graph
    if x.n != g.n_vertices:
        raise InvalidInputError("switch set does not match the graph's vertex count")
    flip = 0
    for v in x:
        flip ^= g.incident_edge_mask[v]
    return SignedGraph(g, Signature(g.n_edges, sg.negatives.mask ^ flip))


def _vertex_states(sg: SignedGraph) -> list[int]:
    """Forest two-coloring of the vertices consistent with tree edge signs.

    Assigns each vertex a state in {0, 1} along a BFS forest so that endpoints
    of a positive tree edge share a state and endpoints of a negative tree
    edge differ.
    """
    g = sg.graph
    neg = sg.negatives.mask
    state = [-1] * g.n_vertices
    for root in range(g.n_vertices):
        if state[root] != -1:
            continue
        state[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, eidx in g.adjacency[u]:
                if state[v] == -1:
                    state[v] = state[u] ^ ((neg >> eidx) & 1)
                    queue.append(v)
    return state


def is_balanced(sg: SignedGraph) -> bool:
    """True iff every cycle of ``sg`` is positive.

    Two-colors each component along a spanning forest so tree edges are
    consistent, then checks that every remaining edge is consistent too.
    """
    g = sg.graph
    neg = sg.negatives.mask
    state = _vertex_states(sg)
    for eidx, (u, v) in enumerate(g.edges):
        if (state[u] ^ state[v]) != ((neg >> eidx) & 1):
            return False
    return True


def switching_equivalent(sg1: SignedGraph, sg2: SignedGraph) -> bool:
    """True iff the two signed graphs lie in the same switching class.

    Requires the same underlying graph with identical edge indexing; the test
    reduces to balance of the symmetric difference of the signatures.
    """
    if sg1.graph != sg2.graph:
        raise InvalidInputError("signed graphs have different underlying graphs")
    return is_balanced(SignedGraph(sg1.graph, sg1.negatives ^ sg2.negatives))


def canonical_class_form(sg: SignedGraph) -> Signature:
    """The unique equivalent signature supported on non-forest edges only.

    With respect to the deterministic cycle basis, a non-forest edge belongs to
    the canonical form exactly when its fundamental cycle is negative.  Two
    signed graphs are switching equivalent iff their canonical forms are equal.
    """
    basis = cycle_basis(sg.graph)
    neg = sg.negatives.mask
    out = 0
    for e, cmask in zip(basis.non_tree_edges, basis.cycle_masks):
        if (cmask & neg).bit_count() % 2:
            out |= 1 << e
    return Signature(sg.graph.n_edges, out)


def cycle_graph(n: int) -> Graph:
    """The cycle on vertices 0..n-1 with edge i joining i and i+1 (mod n)."""
    if n < 3:
        raise InvalidInputError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """The path on vertices 0..n-1."""
    if n < 1:
        raise InvalidInputError("a path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    """The complete graph on n vertices, edges in lexicographic order."""
    if n < 1:
        raise InvalidInputError("a complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1, edges in lexicographic order."""
    if a < 1 or b < 1:
        raise InvalidInputError("both parts must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
