"""Domination predicates and invariants.

Global domination is always checked against the virtual complement: a vertex
``v`` outside ``S`` is uncovered in the complement exactly when ``S`` is
contained in the open neighborhood of ``v``, so the complement graph is never
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .bitset import VertexSet, bits_of
from .errors import NotGlobalDominatingError
from .graph import Graph


def _closed_union(g: Graph, mask: int) -> int:
    cover = 0
    for v in bits_of(mask):
        cover |= g.adj[v] | 1 << v
    return cover


def _dominates(g: Graph, mask: int) -> bool:
    return _closed_union(g, mask) == g.full_mask


def _uncovered_complement(g: Graph, mask: int) -> int:
    """Vertices not dominated by ``mask`` in the complement of ``g``."""
    out = 0
    for v in range(g.n):
        if mask >> v & 1:
            continue
        if not mask & ~g.adj[v]:  # mask is a subset of N(v)
            out |= 1 << v
    return out


def _is_gds(g: Graph, mask: int) -> bool:
    return _dominates(g, mask) and not _uncovered_complement(g, mask)


@dataclass(frozen=True)
class DominationReport:
    dominates_g: bool
    dominates_complement: bool
    uncovered_g: VertexSet
    uncovered_complement: VertexSet

    @property
    def is_global(self) -> bool:
        return self.dominates_g and self.dominates_complement

    def __bool__(self) -> bool:
        return self.is_global


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff the union of closed neighborhoods over ``s`` covers V."""
    return _dominates(g, s.bits)


def is_global_dominating(g: Graph, s: VertexSet) -> DominationReport:
    uncovered = g.full_mask & ~_closed_union(g, s.bits)
    uncovered_c = _uncovered_complement(g, s.bits)
    return DominationReport(
        dominates_g=not uncovered,
        dominates_complement=not uncovered_c,
        uncovered_g=VertexSet(uncovered, g.n),
        uncovered_complement=VertexSet(uncovered_c, g.n),
    )


def is_perfect_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex outside ``s`` has exactly one neighbor inside ``s``."""
    mask = s.bits
    for v in range(g.n):
        if not mask >> v & 1 and bin(g.adj[v] & mask).count("1") != 1:
            return False
    return True


def at_most_one_neighbor(g: Graph, s: VertexSet) -> bool:
    """Every vertex outside ``s`` has at most one neighbor inside ``s``."""
    mask = s.bits
    for v in range(g.n):
        if not mask >> v & 1 and bin(g.adj[v] & mask).count("1") > 1:
            return False
    return True


class MinSet(NamedTuple):
    value: int
    witness: VertexSet


def _min_set(g: Graph, accept) -> MinSet:
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if accept(mask):
                return MinSet(size, VertexSet(mask, g.n))
    raise AssertionError("V itself always qualifies")  # pragma: no cover


def gamma(g: Graph) -> MinSet:
    """Domination number with a lexicographically-first witness."""
    return _min_set(g, lambda m: _dominates(g, m))


def gamma_g(g: Graph) -> MinSet:
    """Global domination number with a lexicographically-first witness."""
    return _min_set(g, lambda m: _is_gds(g, m))


def minimal_gds_within(g: Graph, s: VertexSet) -> VertexSet:
    """Shrink a global dominating set to an inclusion-minimal one.

    Vertices are dropped greedily in ascending index order, which makes the
    result deterministic; one ascending pass suffices because global
    domination is monotone under vertex addition.
    """
    mask = s.bits
    if not _is_gds(g, mask):
        raise NotGlobalDominatingError("input set is not a global dominating set")
    for v in list(bits_of(mask)):
        trial = mask & ~(1 << v)
        if trial and _is_gds(g, trial):
            mask = trial
    return VertexSet(mask, g.n)


@dataclass(frozen=True)
class DomaticWitness:
    k: int
    classes: tuple  # tuple of VertexSet, each a global dominating set


def global_domatic(g: Graph) -> DomaticWitness:
    """Exact global domatic number with a witness partition.

    Backtracking over restricted-growth assignments, trying class counts from
    the upper bound ``n // gamma_g`` downwards; the first partition found is
    the deterministic witness.
    """
    n = g.n
    gg = gamma_g(g).value
    closed = [g.adj[v] | 1 << v for v in range(n)]

    def try_k(k: int):
        if k == 1:
            return [g.full_mask]
        result = None

        def dfs(i, classes):
            nonlocal result
            if result is not None:
                return
            if i == n:
                if len(classes) == k and all(_is_gds(g, m) for m in classes):
                    result = list(classes)
                return
            bit = 1 << i
            for j, m in enumerate(classes):
                classes[j] = m | bit
                if _feasible(classes, i + 1):
                    dfs(i + 1, classes)
                classes[j] = m
                if result is not None:
                    return
            if len(classes) < k:
                classes.append(bit)
                if _feasible(classes, i + 1):
                    dfs(i + 1, classes)
                classes.pop()

        def _feasible(classes, i):
            remaining = g.full_mask >> i << i
            if bin(remaining).count("1") < k - len(classes):
                return False
            for m in classes:
                if not _is_gds(g, m | remaining):
                    return False
            return True

        dfs(0, [])
        return result

    for k in range(max(n // gg, 1), 0, -1):
        found = try_k(k)
        if found is not None:
            return DomaticWitness(k=k, classes=tuple(VertexSet(m, n) for m in found))
    raise AssertionError("k=1 always succeeds")  # pragma: no cover
