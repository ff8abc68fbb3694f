"""Isomorphism testing and canonical hashing for small graphs.

Dedup during enumeration uses an iterated neighborhood-refinement hash;
colliding hashes fall back to an exact backtracking isomorphism check, so the
result is exact for every graph size we enumerate (n <= 12).
"""

from __future__ import annotations

from .bitset import bits_of
from .graph import Graph

_ROUNDS = 3


def _refine_colors(g: Graph):
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(_ROUNDS):
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in bits_of(g.adj[v]))))
            for v in range(g.n)
        ]
        relabel = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [relabel[sig] for sig in signatures]
    return colors


def canonical_hash(g: Graph) -> int:
    """Isomorphism-invariant hash (exactness via are_isomorphic on collision)."""
    colors = _refine_colors(g)
    profile = tuple(sorted(colors))
    edge_profile = tuple(
        sorted(tuple(sorted((colors[u], colors[v]))) for u, v in g.edges())
    )
    return hash((g.n, g.edge_count(), profile, edge_profile))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by color-guided backtracking."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    c1 = _refine_colors(g1)
    c2 = _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    # map vertices of g1 in order of ascending color-class size for fast failure
    class_size = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (class_size[c1[v]], c1[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(idx):
        if idx == n:
            return True
        v = order[idx]
        av = g1.adj[v]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in order[:idx]:
                if bool(av >> u & 1) != bool(g2.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


class IsoDedup:
    """Collects graphs up to isomorphism via hash buckets + exact checks."""

    def __init__(self):
        self._buckets: dict[int, list[Graph]] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        """Add if new up to isomorphism; returns True when kept."""
        key = canonical_hash(g)
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if are_isomorphic(g, other):
                return False
        bucket.append(g)
        self.graphs.append(g)
        return True
