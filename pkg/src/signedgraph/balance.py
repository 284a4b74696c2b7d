"""Balance testing, switching, Harary bipartitions, and balancing sets.

Balance is decided by the linear-time switching algorithm (BFS tree, switch
so the tree is all positive, inspect non-tree edges); the exponential
circle-sign check lives only in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    EdgeKind,
    SgError,
    SignedGraph,
    components,
    enumerate_circles,
    edge_set_sign,
    spanning_forest,
    tree_paths,
)

DEFAULT_BALANCING_CAP = 20


@dataclass(frozen=True)
class BalancePartition:
    """pi_b: vertex sets of balanced components; v0: vertices of unbalanced ones."""

    pib: tuple  # tuple of sorted vertex tuples
    v0: frozenset

    @property
    def b(self):
        return len(self.pib)


def balance_partition(g: SignedGraph, s=None) -> BalancePartition:
    """Classify each component of (V, s) as balanced or not.

    Per component: switch by the sign of the BFS-tree path from the root;
    the component is balanced iff every non-tree ordinary edge becomes
    positive and the component carries no half edge.  Isolated vertices
    are balanced components.
    """
    ids = g.edge_ids if s is None else frozenset(s)
    forest = spanning_forest(g, ids)
    zeta = {v: info[2] for v, info in tree_paths(g, forest).items()}

    bad_vertices = set()  # roots of unbalanced components, via union into comp map
    comp_of = {}
    comps = components(g, ids)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    unbalanced = set()
    for e in g.restricted(ids):
        if e.kind is EdgeKind.HALF:
            unbalanced.add(comp_of[e.ends[0]])
        elif e.is_ordinary and e.id not in forest:
            u, v = e.ends
            if zeta[u] * e.sign * zeta[v] != 1:
                unbalanced.add(comp_of[u])
    pib = tuple(comp for i, comp in enumerate(comps) if i not in unbalanced)
    v0 = frozenset(v for i, comp in enumerate(comps) if i in unbalanced for v in comp)
    return BalancePartition(pib, v0)


def is_balanced(g: SignedGraph, s=None) -> bool:
    return not balance_partition(g, s).v0


def harary_bipartition(g: SignedGraph):
    """If balanced: {V1, V2} with negative edges exactly crossing, the part
    containing vertex 0 first.  If unbalanced: None."""
    if not is_balanced(g):
        return None
    forest = spanning_forest(g)
    zeta = {v: info[2] for v, info in tree_paths(g, forest).items()}
    v1 = frozenset(v for v in range(g.n) if zeta[v] == 1)
    v2 = frozenset(range(g.n)) - v1
    if 0 in v2:
        v1, v2 = v2, v1
    return (v1, v2)


def switch(g: SignedGraph, zeta) -> SignedGraph:
    """Switch by zeta: V -> {+1,-1}; half and loose edges are unchanged."""

    def z(v):
        val = zeta(v) if callable(zeta) else zeta[v]
        if val not in (1, -1):
            raise SgError(f"switching value at vertex {v} must be +1 or -1")
        return val

    edges = []
    for e in g.edges:
        if e.is_ordinary:
            u, v = e.ends
            edges.append(
                type(e)(e.id, e.kind, e.ends, z(u) * e.sign * z(v))
            )
        else:
            edges.append(e)
    return g.with_edges(edges)


def switch_set(g: SignedGraph, x) -> SignedGraph:
    """Switch the vertex set x (negate signs across the cut E(x, x^c))."""
    x = frozenset(x)
    return switch(g, {v: (-1 if v in x else 1) for v in range(g.n)})


def _same_underlying(g1: SignedGraph, g2: SignedGraph) -> bool:
    if g1.n != g2.n or g1.edge_ids != g2.edge_ids:
        return False
    for e in g1.edges:
        f = g2.edge(e.id)
        if e.kind is not f.kind or sorted(e.ends) != sorted(f.ends):
            return False
    return True


def switching_equivalent(g1: SignedGraph, g2: SignedGraph):
    """A switching function zeta with g1^zeta == g2, or None.

    Built per component from a spanning tree: zeta(v) is the product of the
    two tree-path signs, then verified against every edge.
    """
    if not _same_underlying(g1, g2):
        raise SgError("graphs have different underlying graphs")
    forest = spanning_forest(g1)
    info1 = tree_paths(g1, forest)
    info2 = tree_paths(g2, forest)
    zeta = {v: info1[v][2] * info2[v][2] for v in range(g1.n)}
    if switch(g1, zeta).edges == g2.edges:
        return zeta
    return None


def classify_balancing_edges(g: SignedGraph):
    """Map each edge to 'none', 'partial', or 'total' (definitional recomputation)."""
    base = balance_partition(g)
    out = {}
    for e in g.edges:
        rest = g.edge_ids - {e.id}
        part = balance_partition(g, rest)
        if not base.v0 and not part.v0:
            out[e.id] = "none"
        elif not part.v0:
            out[e.id] = "total"
        elif part.b > base.b:
            out[e.id] = "partial"
        else:
            out[e.id] = "none"
    return out


def balancing_vertices(g: SignedGraph) -> frozenset:
    """Vertices v with g - v balanced although g is unbalanced."""
    if is_balanced(g):
        return frozenset()
    out = set()
    for v in range(g.n):
        kept = [e for e in g.edges if v not in e.ends]
        relabel = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
        edges = [
            type(e)(e.id, e.kind, tuple(relabel[w] for w in e.ends), e.sign)
            for e in kept
        ]
        if is_balanced(SignedGraph(g.n - 1, edges)):
            out.add(v)
    return frozenset(out)


def min_balancing_set(g: SignedGraph, cap=DEFAULT_BALANCING_CAP) -> frozenset:
    """Minimum total balancing set by exhaustive search in increasing size,
    ties broken lexicographically by edge id.  NP-hard in general; desk scale."""
    ids = sorted(g.edge_ids)
    if len(ids) > cap:
        raise SgError(f"balancing-set cap exceeded ({len(ids)} > {cap})")
    all_ids = g.edge_ids
    for size in range(len(ids) + 1):
        for combo in combinations(ids, size):
            if is_balanced(g, all_ids - frozenset(combo)):
                return frozenset(combo)
    raise AssertionError("unreachable: deleting all edges always balances")


def negative_circle_vertex_sets(g: SignedGraph, cap=20):
    """Vertex sets of all negative circles, counting half edges and negative
    loops as negative circles (the handcuff convention)."""
    out = []
    for c in enumerate_circles(g, cap=cap):
        if edge_set_sign(g, c) == -1:
            verts = frozenset(v for eid in c for v in g.edge(eid).ends)
            out.append((c, verts))
    for e in g.edges:
        if e.kind is EdgeKind.HALF:
            out.append((frozenset([e.id]), frozenset(e.ends)))
    return out


def has_two_disjoint_negative_circles(g: SignedGraph, cap=20) -> bool:
    circles = negative_circle_vertex_sets(g, cap=cap)
    for i, (_, vs1) in enumerate(circles):
        for _, vs2 in circles[i + 1 :]:
            if not vs1 & vs2:
                return True
    return False


def blocks(g: SignedGraph):
    """Blocks as edge sets (plus isolated vertices as ({v}, empty)).

    Loops and half edges are single-edge blocks at their vertex; loose edges
    belong to no block.  Links are grouped by the standard cut-vertex DFS.
    """
    adj = {}
    for e in g.edges:
        if e.kind is EdgeKind.LINK:
            u, v = e.ends
            adj.setdefault(u, []).append((e.id, v))
            adj.setdefault(v, []).append((e.id, u))

    out = []
    for e in g.edges:
        if e.kind in (EdgeKind.LOOP, EdgeKind.HALF):
            out.append((frozenset(e.ends), frozenset([e.id])))

    disc = {}
    low = {}
    stack = []
    counter = [0]

    def dfs(v, parent_edge):
        disc[v] = low[v] = counter[0]
        counter[0] += 1
        for eid, w in adj.get(v, ()):
            if eid == parent_edge:
                continue
            if w not in disc:
                stack.append(eid)
                dfs(w, eid)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    block = set()
                    while True:
                        top = stack.pop()
                        block.add(top)
                        if top == eid:
                            break
                    verts = frozenset(x for b in block for x in g.edge(b).ends)
                    out.append((verts, frozenset(block)))
            elif disc[w] < disc[v]:
                stack.append(eid)
                low[v] = min(low[v], disc[w])

    import sys

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * g.n + 100))
    try:
        for v in range(g.n):
            if v not in disc:
                dfs(v, None)
                if not adj.get(v):
                    if not any(v in vs for vs, _ in out):
                        out.append((frozenset([v]), frozenset()))
    finally:
        sys.setrecursionlimit(old)
    return out
