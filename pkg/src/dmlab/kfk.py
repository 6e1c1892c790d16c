"""Order-(n+2) expansion of a labeled tetravalent distance magic graph.

Given a 4-cycle whose antipodal label pairs both sum to zero, delete the
cycle's four edges, add two fresh vertices joined to all four cycle vertices,
and label the fresh pair +-(n+1).  The result is again tetravalent and
distance magic; the implementation re-verifies instead of trusting the
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .errors import ExpansionError
from .graph import Graph, is_regular
from .labeling import CenteredLabeling, verify


@dataclass(frozen=True)
class ZeroAntipodal4Cycle:
    """4-cycle (a, b, c, d) with edges ab, bc, cd, da and zero-sum antipodal
    label pairs (a, c) and (b, d)."""

    vertices: Tuple[int, int, int, int]

    @property
    def edges(self):
        a, b, c, d = self.vertices
        return ((a, b), (b, c), (c, d), (d, a))


def find_zero_antipodal_cycles(g: Graph, lab: CenteredLabeling) -> List[ZeroAntipodal4Cycle]:
    """All qualifying 4-cycles, one representative per rotation/reflection
    class, sorted lexicographically.  Representative convention: a is the
    smallest vertex of the cycle and b < d."""
    report = verify(g, lab)
    if not report.ok:
        raise ExpansionError("labeling is not distance magic")
    labels = lab.labels
    adj = [set(nb) for nb in g.neighbors]
    found = []
    for a in range(g.n):
        for c in range(g.n):
            if c == a:
                continue
            if labels[a] + labels[c] != 0:
                continue
            common = sorted(w for w in adj[a] & adj[c] if w > a)
            if c < a:
                continue
            for b, d in combinations(common, 2):
                if labels[b] + labels[d] == 0:
                    found.append(ZeroAntipodal4Cycle((a, b, c, d)))
    # a < b < d and a < c hold by construction; dedup (a,b,c,d) vs (a,d,c,b)
    uniq = sorted({cyc.vertices for cyc in found})
    return [ZeroAntipodal4Cycle(v) for v in uniq]


def expand(
    g: Graph, lab: CenteredLabeling, cycle: ZeroAntipodal4Cycle
) -> Tuple[Graph, CenteredLabeling]:
    """Apply the expansion; returns the order-(n+2) graph and its labeling."""
    if not is_regular(g, 4):
        raise ExpansionError("expansion requires a tetravalent graph")
    report = verify(g, lab)
    if not report.ok:
        raise ExpansionError("labeling is not distance magic")
    a, b, c, d = cycle.vertices
    if len({a, b, c, d}) != 4:
        raise ExpansionError("cycle vertices are not distinct")
    for u, v in cycle.edges:
        if not g.has_edge(u, v):
            raise ExpansionError(f"cycle edge ({u},{v}) missing from graph")
    labels = lab.labels
    if labels[a] + labels[c] != 0 or labels[b] + labels[d] != 0:
        raise ExpansionError("cycle antipodal label pairs do not sum to zero")

    n = g.n
    removed = {(min(u, v), max(u, v)) for u, v in cycle.edges}
    edges = [e for e in g.edges if e not in removed]
    edges.extend((n, v) for v in cycle.vertices)
    edges.extend((n + 1, v) for v in cycle.vertices)
    g2 = Graph(n + 2, edges)
    lab2 = CenteredLabeling(n + 2, (*labels, n + 1, -(n + 1)))

    report2 = verify(g2, lab2)
    if not report2.ok:
        raise ExpansionError("expansion produced a non-magic labeling")
    return g2, lab2


def _has_surviving_triangle(g: Graph, cycle: ZeroAntipodal4Cycle) -> bool:
    removed = {(min(u, v), max(u, v)) for u, v in cycle.edges}
    adj = [set(nb) for nb in g.neighbors]
    for u, v in g.edges:
        if (u, v) in removed:
            continue
        for w in adj[u] & adj[v]:
            if (min(u, w), max(u, w)) in removed or (min(v, w), max(v, w)) in removed:
                continue
            return True
    return False


def expand_default(g: Graph, lab: CenteredLabeling) -> Tuple[Graph, CenteredLabeling]:
    """Expand along a deterministic default cycle.

    Among qualifying cycles (in lexicographic order) the first one whose
    deletion leaves some triangle of g intact is preferred: wreath graphs of
    order >= 8 are triangle-free, so a surviving triangle certifies that the
    expansion produced a genuinely new graph rather than collapsing back onto
    a wreath graph.  If no cycle preserves a triangle, the lexicographically
    least qualifying cycle is used.
    """
    cycles = find_zero_antipodal_cycles(g, lab)
    if not cycles:
        raise ExpansionError("no zero-antipodal 4-cycle exists for this labeling")
    chosen = next((c for c in cycles if _has_surviving_triangle(g, c)), cycles[0])
    return expand(g, lab, chosen)
