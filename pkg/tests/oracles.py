"""Independent brute-force reference implementations for the test suite.

Everything here recomputes answers from first principles, trading speed for
obviousness, so the package's optimized code paths can be checked against a
second opinion on small inputs.
"""

from __future__ import annotations

import itertools
from math import inf


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_left_ideal_masks(ring) -> set[int]:
    """All left ideal masks by scanning subsets whose size divides |R|."""
    n = ring.size
    zero = ring.zero
    others = [x for x in range(n) if x != zero]
    found = set()
    for d in divisors(n):
        for combo in itertools.combinations(others, d - 1):
            members = (zero,) + combo
            mask = 0
            for x in members:
                mask |= 1 << x
            closed = all(
                mask >> ring.add[x][y] & 1 for x in members for y in members
            )
            if not closed:
                continue
            absorbing = all(
                mask >> ring.mul[r][x] & 1 for r in range(n) for x in members
            )
            if absorbing:
                found.add(mask)
    return found


def brute_graded_left_ideal_masks(ring, grading) -> set[int]:
    """Left ideals all of whose members decompose inside the ideal."""
    out = set()
    for mask in brute_left_ideal_masks(ring):
        if all(
            all(mask >> part & 1 for _, part in grading.decomposition[x])
            for x in range(ring.size)
            if mask >> x & 1
        ):
            out.add(mask)
    return out


def brute_submodule_masks(module) -> set[int]:
    n = module.size
    zero = module.zero
    others = [x for x in range(n) if x != zero]
    found = set()
    for d in divisors(n):
        for combo in itertools.combinations(others, d - 1):
            members = (zero,) + combo
            mask = 0
            for x in members:
                mask |= 1 << x
            if not all(
                mask >> module.add[x][y] & 1 for x in members for y in members
            ):
                continue
            if all(
                mask >> module.act[r][x] & 1
                for r in range(module.ring.size)
                for x in members
            ):
                found.add(mask)
    return found


# --- graph references (adjacency given as a dict vertex -> set of vertices)


def _neighbor_sets(graph) -> list[set[int]]:
    return [
        {w for w in range(graph.n) if graph.adj[v] >> w & 1} for v in range(graph.n)
    ]


def brute_clique_number(graph) -> int:
    nbrs = _neighbor_sets(graph)
    best = 0
    for r in range(graph.n, 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(range(graph.n), r):
            if all(b in nbrs[a] for a, b in itertools.combinations(combo, 2)):
                best = max(best, r)
                break
    return best


def brute_domination_number(graph) -> int:
    if graph.n == 0:
        return 0
    nbrs = _neighbor_sets(graph)
    for r in range(1, graph.n + 1):
        for combo in itertools.combinations(range(graph.n), r):
            covered = set(combo)
            for v in combo:
                covered |= nbrs[v]
            if len(covered) == graph.n:
                return r
    return graph.n


def brute_girth(graph):
    """Shortest cycle by BFS from each edge with that edge removed."""
    nbrs = _neighbor_sets(graph)
    best = inf
    for u in range(graph.n):
        for w in sorted(nbrs[u]):
            if w <= u:
                continue
            dist = {u: 0}
            frontier = [u]
            while frontier:
                nxt = []
                for a in frontier:
                    for b in nbrs[a]:
                        if (a, b) in ((u, w), (w, u)):
                            continue
                        if b not in dist:
                            dist[b] = dist[a] + 1
                            nxt.append(b)
                frontier = nxt
            if w in dist:
                best = min(best, dist[w] + 1)
    return best


def brute_diameter(graph):
    if graph.n <= 1:
        return 0
    nbrs = _neighbor_sets(graph)
    dist = [[0 if i == j else inf for j in range(graph.n)] for i in range(graph.n)]
    for v in range(graph.n):
        for w in nbrs[v]:
            dist[v][w] = 1
    for k in range(graph.n):
        for i in range(graph.n):
            for j in range(graph.n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return max(max(row) for row in dist)


def brute_components(graph) -> int:
    nbrs = _neighbor_sets(graph)
    seen: set[int] = set()
    count = 0
    for v in range(graph.n):
        if v in seen:
            continue
        count += 1
        stack = [v]
        while stack:
            a = stack.pop()
            if a in seen:
                continue
            seen.add(a)
            stack.extend(nbrs[a])
    return count
