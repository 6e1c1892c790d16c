"""Simple undirected graphs: construction, graph6 I/O, predicates, canonical certificates.

Vertices are always the dense range 0..n-1.  Graphs are immutable after
construction; every higher layer reads the sorted neighbor tuples.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Tuple

from .errors import Graph6Error, OrderTooLargeError

# canonical_certificate guarantees correctness only up to this order
CERTIFICATE_MAX_ORDER = 20

# graph6 short form covers 0 <= n <= 62; we additionally require n >= 1
GRAPH6_MAX_ORDER = 62


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "neighbors", "_hash")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            es.add((u, v) if u < v else (v, u))
        nbrs = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex v renamed to perm[v]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        return Graph(self.n, ((p[u], p[v]) for u, v in self.edges))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def is_regular(g: Graph, r: int) -> bool:
    return all(g.degree(v) == r for v in range(g.n))


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


# ---------------------------------------------------------------------------
# graph6 (short form: header byte 63+n, upper triangle column-major,
# 6-bit groups offset by 63, zero padding)
# ---------------------------------------------------------------------------

def _g6_body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str) -> Graph:
    """Decode one header-less short-form graph6 line."""
    text = line.rstrip("\n")
    if not text:
        raise Graph6Error("empty graph6 line")
    first = ord(text[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (order > 62) is not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid graph6 order byte {text[0]!r}")
    n = first - 63
    if n < 1:
        raise Graph6Error("graphs of order 0 are not supported")
    body = text[1:]
    if len(body) != _g6_body_length(n):
        raise Graph6Error(
            f"graph6 body has {len(body)} characters, expected {_g6_body_length(n)} for order {n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"graph6 character {ch!r} out of range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    nbits = n * (n - 1) // 2
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in graph6 line")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode as a canonical short-form graph6 line (order <= 62)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds the short-form graph6 limit of {GRAPH6_MAX_ORDER}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


# ---------------------------------------------------------------------------
# Canonical certificate via individualization-refinement.  The certificate of
# a graph is the graph6 line of its canonically relabeled copy, as bytes, so
# equal certificates <=> isomorphic graphs (guaranteed for n <= 20).
# ---------------------------------------------------------------------------

def _refine(neighbors, partition):
    """Equitable refinement of an ordered partition (deterministic)."""
    while True:
        cell_id = {}
        for ci, cell in enumerate(partition):
            for v in cell:
                cell_id[v] = ci
        new = []
        changed = False
        for cell in partition:
            if len(cell) == 1:
                new.append(cell)
                continue
            by_sig = {}
            for v in cell:
                counts = [0] * len(partition)
                for w in neighbors[v]:
                    counts[cell_id[w]] += 1
                by_sig.setdefault(tuple(counts), []).append(v)
            if len(by_sig) == 1:
                new.append(cell)
            else:
                changed = True
                for sig in sorted(by_sig):
                    new.append(by_sig[sig])
        partition = new
        if not changed:
            return partition


def _adjacency_key(adj_sets, order):
    """Upper-triangle bit tuple of the graph relabeled so order[i] -> i."""
    bits = []
    for j in range(1, len(order)):
        oj = order[j]
        for i in range(j):
            bits.append(1 if order[i] in adj_sets[oj] else 0)
    return tuple(bits)


def canonical_certificate(g: Graph, max_order: int = CERTIFICATE_MAX_ORDER) -> bytes:
    """Isomorphism-invariant certificate (guaranteed up to order 20)."""
    if g.n > max_order:
        raise OrderTooLargeError(
            f"canonical certificate is only guaranteed up to order {max_order}, got {g.n}"
        )
    neighbors = g.neighbors
    adj_sets = [set(a) for a in neighbors]
    degrees = sorted(set(len(a) for a in neighbors))
    initial = [[v for v in range(g.n) if len(neighbors[v]) == d] for d in degrees]

    best = [None]  # (key, order)

    def descend(partition):
        partition = _refine(neighbors, partition)
        target = next((i for i, c in enumerate(partition) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in partition]
            key = _adjacency_key(adj_sets, order)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, order)
            return
        cell = partition[target]
        for v in cell:
            branched = (
                partition[:target]
                + [[v], [w for w in cell if w != v]]
                + partition[target + 1:]
            )
            descend(branched)

    descend(initial)
    order = best[0][1]
    perm = [0] * g.n  # old -> new
    for new, old in enumerate(order):
        perm[old] = new
    return write_graph6(g.relabel(perm)).encode("ascii")
