"""Generalized Petersen graphs, their pendant-spoke relatives, and extremal signatures.

``generate_petersen(n, k)`` builds P(n, k): an outer n-cycle u_0..u_{n-1}, a
spoke u_i v_i at every position, and inner edges v_i v_{i+k} (indices mod n).
``generate_gn(n)`` builds the outer cycle plus pendant spokes only.  Edge
indices are deterministic: outer edges come first (edge i = u_i u_{i+1}),
then spokes (edge n+i = u_i v_i), then inner edges (edge 2n+i = v_i v_{i+k}).

The ``extremal_signature_*`` constructors return signatures whose frustration
index meets the known maximum-frustration values for k = 1, 2, 3; they make
every quadrangle / pentagon / hexagon of the respective family negative.
"""

from __future__ import annotations

import math

from .core import Graph, Signature, SignedGraph
from .errors import InvalidParametersError

__all__ = [
    "PetersenLayout",
    "GnLayout",
    "generate_petersen",
    "generate_gn",
    "inner_cycles",
    "enumerate_cycles_of_length",
    "extremal_signature_prism",
    "extremal_signature_k2",
    "extremal_signature_k3",
]

MIN_CYCLE_LENGTH = 3
MAX_CYCLE_LENGTH = 8


class PetersenLayout:
    """P(n, k) together with its vertex/edge naming.

    Vertices: u_i is index i, v_i is index n+i.  Edge roles: indices
    0..n-1 are ``outer``, n..2n-1 are ``spoke``, 2n..3n-1 are ``inner``.
    """

    def __init__(self, n: int, k: int, graph: Graph):
        self.n = n
        self.k = k
        self.d = math.gcd(n, k)
        self.graph = graph
        self.roles: tuple[str, ...] = (
            ("outer",) * n + ("spoke",) * n + ("inner",) * n)

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + (i % self.n)

    def outer_edge(self, i: int) -> int:
        """Index of u_i u_{i+1}."""
        return i % self.n

    def spoke_edge(self, i: int) -> int:
        """Index of u_i v_i."""
        return self.n + (i % self.n)

    def inner_edge(self, i: int) -> int:
        """Index of v_i v_{i+k}."""
        return 2 * self.n + (i % self.n)

    def rotation_edge_permutation(self) -> tuple[int, ...]:
        """Edge permutation induced by the automorphism u_i -> u_{i+1}, v_i -> v_{i+1}."""
        n = self.n
        perm = [0] * (3 * n)
        for i in range(n):
            perm[self.outer_edge(i)] = self.outer_edge(i + 1)
            perm[self.spoke_edge(i)] = self.spoke_edge(i + 1)
            perm[self.inner_edge(i)] = self.inner_edge(i + 1)
        return tuple(perm)

    def __repr__(self) -> str:
        return f"PetersenLayout(n={self.n}, k={self.k})"


class GnLayout:
    """The outer n-cycle with a pendant spoke at every u-vertex.

    Vertices: u_i is index i (degree 3), v_i is index n+i (degree 1).  Edge
    roles: indices 0..n-1 are ``outer`` (edge i = u_i u_{i+1}), n..2n-1 are
    ``spoke`` (edge n+i = u_i v_i).
    """

    def __init__(self, n: int, graph: Graph):
        self.n = n
        self.graph = graph
        self.roles: tuple[str, ...] = ("outer",) * n + ("spoke",) * n

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + (i % self.n)

    def outer_edge(self, i: int) -> int:
        return i % self.n

    def spoke_edge(self, i: int) -> int:
        return self.n + (i % self.n)

    def __repr__(self) -> str:
        return f"GnLayout(n={self.n})"


def generate_petersen(n: int, k: int) -> PetersenLayout:
    """Build P(n, k).  Requires 2 <= 2k < n."""
    if k < 1 or 2 * k >= n:
        raise InvalidParametersError(
            f"generalized Petersen graph needs 2 <= 2k < n, got n={n}, k={k}")
    edges: list[tuple[int, int]] = []
    edges += [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return PetersenLayout(n, k, Graph(2 * n, edges, labels=labels))


def generate_gn(n: int) -> GnLayout:
    """Build the outer cycle u_0..u_{n-1} with pendant vertices v_i.  Requires n >= 3."""
    if n < 3:
        raise InvalidParametersError(f"pendant-spoke cycle needs n >= 3, got n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return GnLayout(n, Graph(2 * n, edges, labels=labels))


def inner_cycles(layout: PetersenLayout) -> tuple[tuple[int, ...], ...]:
    """The gcd(n, k) disjoint inner cycles as vertex index lists.

    Cycle i (1-based) starts at v_{i-1} and steps by k; together the cycles
    partition the v-vertices, each having length n / gcd(n, k).
    """
    n, k, d = layout.n, layout.k, layout.d
    cycles = []
    for i in range(d):
        cycles.append(tuple(layout.v(i + t * k) for t in range(n // d)))
    return tuple(cycles)


def enumerate_cycles_of_length(g: Graph, length: int) -> tuple[tuple[int, ...], ...]:
    """All simple cycles of exactly ``length`` edges, each reported once.

    Cycles are rooted at their smallest vertex and direction-normalized
    (second vertex smaller than last), so the enumeration is deterministic.
    Each cycle is returned as a tuple of edge indices in traversal order.
    """
    if not MIN_CYCLE_LENGTH <= length <= MAX_CYCLE_LENGTH:
        raise InvalidParametersError(
            f"cycle length must be in [{MIN_CYCLE_LENGTH}, {MAX_CYCLE_LENGTH}], got {length}")
    out: list[tuple[int, ...]] = []
    path: list[int] = []
    path_edges: list[int] = []
    on_path = [False] * g.n_vertices

    def extend(root: int) -> None:
        u = path[-1]
        depth = len(path)
        for w, eidx in g.adjacency[u]:
            if depth == length:
                if w == root and path[1] < path[-1]:
                    out.append(tuple(path_edges + [eidx]))
                continue
            if w <= root or on_path[w]:
                continue
            path.append(w)
            path_edges.append(eidx)
            on_path[w] = True
            extend(root)
            on_path[w] = False
            path.pop()
            path_edges.pop()

    for root in range(g.n_vertices):
        path = [root]
        path_edges = []
        on_path[root] = True
        extend(root)
        on_path[root] = False
    return tuple(out)


def extremal_signature_prism(n: int) -> Signature:
    """A worst-case signature of the prism P(n, 1), of size floor(n/2) + 1.

    For odd n = 2k+1: spokes at even positions 0, 2, ..., 2k-2 plus the outer
    edge u_{2k-1} u_{2k}.  For even n = 2k: spokes at even positions up to
    2k-4, the outer edge u_{2k-3} u_{2k-2}, and the inner edge
    v_{2k-2} v_{2k-1}.  Both make every quadrangle of the prism negative.
    """
    if n < 3:
        raise InvalidParametersError(f"prism signature needs n >= 3, got n={n}")
    layout = generate_petersen(n, 1)
    if n % 2:
        k = n // 2
        edges = [layout.spoke_edge(2 * j) for j in range(k)]
        edges.append(layout.outer_edge(2 * k - 1))
    else:
        k = n // 2
        edges = [layout.spoke_edge(2 * j) for j in range(k - 1)]
        edges.append(layout.outer_edge(2 * k - 3))
        edges.append(layout.inner_edge(2 * k - 2))
    return Signature.from_edges(layout.graph.n_edges, edges)


def extremal_signature_k2(m: int) -> Signature:
    """A worst-case signature of P(2m+1, 2), of size m + 1.

    For m >= 3 the signature consists of spoke pairs at positions 0, 1 mod 4
    plus one trailing spoke or inner edge, and it makes every pentagon
    negative.  For m = 2 (the Petersen graph) no closed form is used; an
    exhaustive sweep of the 64 switching classes finds a signature of size 3
    whose frustration index is 3.
    """
    if m < 2:
        raise InvalidParametersError(f"k=2 signature needs m >= 2, got m={m}")
    if m == 2:
        return _petersen_graph_worst_signature()
    n = 2 * m + 1
    layout = generate_petersen(n, 2)
    if m % 2:
        spokes = [p for p in range(0, 2 * m - 4) if p % 4 in (0, 1)]
        edges = [layout.spoke_edge(p) for p in spokes]
        edges.append(layout.spoke_edge(2 * m - 2))
        edges.append(layout.inner_edge(2 * m - 3))
    else:
        spokes = [p for p in range(0, 2 * m - 2) if p % 4 in (0, 1)]
        edges = [layout.spoke_edge(p) for p in spokes]
        edges.append(layout.inner_edge(2 * m - 2))
    return Signature.from_edges(layout.graph.n_edges, edges)


def extremal_signature_k3(m: int) -> Signature:
    """A worst-case signature of P(4m-1, 3), of size 2m.

    Spokes at every even position 0, 2, ..., 4m-4 plus the outer edge
    u_{4m-3} u_{4m-2}; this makes every hexagon negative.  Requires m >= 2
    and gcd(4m-1, 3) = 1.
    """
    if m < 2:
        raise InvalidParametersError(f"k=3 signature needs m >= 2, got m={m}")
    n = 4 * m - 1
    if math.gcd(n, 3) != 1:
        raise InvalidParametersError(
            f"k=3 signature needs gcd(4m-1, 3) = 1, got m={m} (n={n})")
    layout = generate_petersen(n, 3)
    edges = [layout.spoke_edge(p) for p in range(0, 4 * m - 3, 2)]
    edges.append(layout.outer_edge(4 * m - 3))
    return Signature.from_edges(layout.graph.n_edges, edges)


def _petersen_graph_worst_signature() -> Signature:
    """Size-3 signature of P(5, 2) with frustration index 3, found by class sweep."""
    from .solvers import frustration_index, minimum_signatures

    layout = generate_petersen(5, 2)
    g = layout.graph
    basis = g._basis
    for pattern in range(1 << len(basis.non_tree_edges)):
        mask = 0
        for j, e in enumerate(basis.non_tree_edges):
            if (pattern >> j) & 1:
                mask |= 1 << e
        sg = SignedGraph(g, Signature(g.n_edges, mask))
        if frustration_index(sg).value == 3:
            return minimum_signatures(sg)[0]
    raise AssertionError("P(5, 2) has maximum frustration 3; sweep cannot fail")
