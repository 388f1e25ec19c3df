"""Simple undirected graphs with exact invariants, tuned for the small
intersection graphs this package produces.

Adjacency is a tuple of int bitmasks (bit j of adj[i] = edge i-j).  All
invariants are exact: BFS for distances and girth, pivoting clique search
for the clique number, increasing-cardinality search for domination, and a
Kuratowski-subdivision search for planarity on small orders (larger orders
fall back to the edge-count bound or report unknown as None).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphTooLarge
from .ring_core import mask_members

MAX_EXACT_GRAPH_ORDER = 64


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i in range(self.n) for j in range(i + 1, self.n)
            if self.adj[i] >> j & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(self.adj[i].bit_count() for i in range(self.n)) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()


def graph_from_edges(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    adj = [0] * n
    for i, j in edges:
        if i == j:
            continue
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    if labels is None:
        labels = [str(i) for i in range(n)]
    return Graph(n=n, adj=tuple(adj), labels=tuple(labels))


def intersection_graph(masks: Sequence[int], zero_mask: int, labels: Sequence[str]) -> Graph:
    """Vertices are the given sets; edges join pairs meeting outside zero."""
    n = len(masks)
    if n > MAX_EXACT_GRAPH_ORDER:
        raise GraphTooLarge(f"{n} vertices exceeds the exact-invariant cap")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j] & ~zero_mask:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n=n, adj=tuple(adj), labels=tuple(labels))


def build_intersection_graph(ideals: Sequence) -> Graph:
    """Intersection graph of a family of ideal sets (nonzero overlap is an
    edge).  Vertex order follows (size, mask) so output is deterministic."""
    family = sorted(ideals, key=lambda i: i.sort_key())
    if not family:
        return Graph(n=0, adj=(), labels=())
    zero_mask = family[0].ring.zero_mask
    return intersection_graph(
        [i.mask for i in family], zero_mask, [i.label() for i in family]
    )


# ---------------------------------------------------------------------------
# distances and connectivity


def _bfs_dist(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in mask_members(g.adj[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in mask_members(g.adj[u]):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """The empty graph counts as connected."""
    return len(connected_components(g)) <= 1


def diameter(g: Graph) -> float:
    """Longest shortest path; inf when disconnected, 0 for at most one
    vertex."""
    if g.n <= 1:
        return 0
    best = 0
    for root in range(g.n):
        dist = _bfs_dist(g, root)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, inf for forests.

    One BFS per root; a non-tree edge (u, w) seen from root r closes a walk
    of length dist[u] + dist[w] + 1 that always contains a cycle no longer
    than itself, and for a root on a shortest cycle the bound is attained,
    so the minimum over roots is exact.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in mask_members(g.adj[u]):
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


# ---------------------------------------------------------------------------
# clique number and domination number


def _check_order(g: Graph) -> None:
    if g.n > MAX_EXACT_GRAPH_ORDER:
        raise GraphTooLarge(
            f"exact invariant requested on {g.n} vertices (cap {MAX_EXACT_GRAPH_ORDER})"
        )


def maximal_cliques(g: Graph) -> list[list[int]]:
    """All maximal cliques (pivoting Bron-Kerbosch on bitmasks)."""
    _check_order(g)
    out: list[list[int]] = []
    if g.n == 0:
        return out
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(mask_members(r))
            return
        pivot_pool = p | x
        pivot = max(mask_members(pivot_pool), key=lambda v: (adj[v] & p).bit_count())
        for v in mask_members(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return out


def clique_number(g: Graph) -> int:
    """Exact maximum clique size; 0 for the empty graph."""
    _check_order(g)
    if g.n == 0:
        return 0
    adj = g.adj
    best = 0

    def expand(rsize: int, p: int) -> None:
        nonlocal best
        if p == 0:
            best = max(best, rsize)
            return
        if rsize + p.bit_count() <= best:
            return
        pivot = max(mask_members(p), key=lambda v: (adj[v] & p).bit_count())
        for v in mask_members(p & ~adj[pivot]):
            expand(rsize + 1, p & adj[v])
            p &= ~(1 << v)
        # remaining p is covered by the pivot branch

    expand(0, (1 << g.n) - 1)
    return best


def domination_number(g: Graph) -> int:
    """Exact minimum dominating set size; 0 for the empty graph.

    Isolated vertices are forced into every dominating set, so they are
    peeled off before the combinatorial search on the rest.
    """
    _check_order(g)
    if g.n == 0:
        return 0
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    rest = [v for v in range(g.n) if g.adj[v] != 0]
    need = 0
    for v in rest:
        need |= 1 << v
    if need == 0:
        return len(isolated)
    for k in range(1, len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover & need == need:
                return len(isolated) + k
    return g.n


# ---------------------------------------------------------------------------
# shape tests


def is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(g.adj[v] == full & ~(1 << v) for v in range(g.n))


def is_null(g: Graph) -> bool:
    """No edges at all (any number of vertices)."""
    return all(m == 0 for m in g.adj)


def is_star(g: Graph) -> bool:
    """Some center adjacent to all other vertices, which are pairwise
    non-adjacent; single vertices and single edges count."""
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    for c in range(g.n):
        if g.adj[c] != full & ~(1 << c):
            continue
        others = mask_members(full & ~(1 << c))
        if all(g.adj[v] == 1 << c for v in others):
            return True
    return False


def is_regular(g: Graph) -> bool:
    """All vertices share one degree; vertexless graphs count."""
    degs = {g.degree(v) for v in range(g.n)}
    return len(degs) <= 1


def star_center(g: Graph) -> int | None:
    """The dominating vertex of a star, when the graph is one; for a single
    edge the lower-indexed endpoint is reported."""
    if not is_star(g):
        return None
    full = (1 << g.n) - 1
    for c in range(g.n):
        if g.adj[c] == full & ~(1 << c):
            return c
    return None


# ---------------------------------------------------------------------------
# planarity (three-valued)


def _simple_paths(g: Graph, u: int, w: int, allowed: int):
    """Yield the internal-vertex masks of simple u-w paths whose interior
    stays inside `allowed` (u, w excluded from the mask)."""
    if g.has_edge(u, w):
        yield 0

    def dfs(cur: int, used: int):
        for v in mask_members(g.adj[cur] & allowed & ~used):
            if v == w:
                continue
            if g.has_edge(v, w):
                yield used | (1 << v)
            yield from dfs(v, used | (1 << v))

    yield from dfs(u, 0)


def _assign_paths(g: Graph, pairs: list[tuple[int, int]], branch_mask: int, used: int) -> bool:
    if not pairs:
        return True
    u, w = pairs[0]
    allowed = ((1 << g.n) - 1) & ~branch_mask & ~used
    for internal in _simple_paths(g, u, w, allowed):
        if _assign_paths(g, pairs[1:], branch_mask, used | internal):
            return True
    return False


def _has_k5_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.degree(v) >= 4]
    for branch in itertools.combinations(cand, 5):
        bm = 0
        for v in branch:
            bm |= 1 << v
        pairs = list(itertools.combinations(branch, 2))
        if _assign_paths(g, pairs, bm, 0):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.degree(v) >= 3]
    for six in itertools.combinations(cand, 6):
        bm = 0
        for v in six:
            bm |= 1 << v
        rest = six[1:]
        for two in itertools.combinations(rest, 2):
            left = (six[0],) + two
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _assign_paths(g, pairs, bm, 0):
                return True
    return False


def is_planar(g: Graph) -> bool | None:
    """True/False when decidable cheaply or exactly (order <= 12), else None.

    Ladder: tiny orders and edge counts are always planar; the edge bound
    3n - 6 rejects dense graphs; small orders get an exact search for a
    subdivision of one of the two forbidden graphs.
    """
    n, m = g.n, g.edge_count
    if n <= 4 or m <= 8:
        return True
    if n >= 3 and m > 3 * n - 6:
        return False
    if n <= 12:
        return not (_has_k5_subdivision(g) or _has_k33_subdivision(g))
    return None


# ---------------------------------------------------------------------------
# bundled report


def classify_shape(g: Graph) -> dict:
    return {
        "null": is_null(g),
        "complete": is_complete(g),
        "star": is_star(g),
        "regular": is_regular(g),
        "connected": is_connected(g),
    }


def graph_invariants(g: Graph) -> dict:
    return {
        "order": g.n,
        "size": g.edge_count,
        "components": len(connected_components(g)),
        "diameter": diameter(g),
        "girth": girth(g),
        "clique_number": clique_number(g),
        "domination_number": domination_number(g),
        "degree_sequence": sorted((g.degree(v) for v in range(g.n)), reverse=True),
        "planar": is_planar(g),
        **classify_shape(g),
    }


# ---------------------------------------------------------------------------
# export


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(g: Graph, format: str = "dot") -> str:
    """Deterministic serialization: DOT text or a JSON document that bundles
    vertices, edges, and the invariant report (infinities as the string
    "inf", undecided planarity as null)."""
    if format == "dot":
        lines = ["graph G {"]
        for v in range(g.n):
            lines.append(f"  v{v} [label={_dot_quote(g.labels[v])}];")
        for u, w in g.edges:
            lines.append(f"  v{u} -- v{w};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        inv = {
            k: ("inf" if v == math.inf else v)
            for k, v in graph_invariants(g).items()
        }
        doc = {
            "vertices": [{"id": v, "label": g.labels[v]} for v in range(g.n)],
            "edges": [[u, w] for u, w in g.edges],
            "invariants": inv,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown export format: {format!r}")
