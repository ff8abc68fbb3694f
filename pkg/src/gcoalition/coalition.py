"""Coalition pair predicates and partition verifiers.

Three partition kinds share one verifier skeleton but differ in their
exemption rule: a plain or perfect coalition partition exempts a singleton
dominating class from needing a partner, while a global coalition partition
exempts nothing (every class must be a non global dominating set with a
partner).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .bitset import VertexSet
from .domination import (
    _dominates,
    _is_gds,
    at_most_one_neighbor,
    is_perfect_dominating,
)
from .errors import MalformedPartitionError, OverlappingSetsError
from .graph import Graph

KINDS = ("c", "gc", "prc")


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint non-empty vertex sets covering V."""

    classes: tuple
    graph_n: int

    def __post_init__(self):
        union = 0
        for vs in self.classes:
            if not isinstance(vs, VertexSet) or vs.universe != self.graph_n:
                raise MalformedPartitionError("class with wrong universe")
            if not vs.bits:
                raise MalformedPartitionError("empty partition class")
            if union & vs.bits:
                raise MalformedPartitionError("overlapping partition classes")
            union |= vs.bits
        if union != (1 << self.graph_n) - 1:
            raise MalformedPartitionError("partition does not cover V")

    @classmethod
    def from_lists(cls, g: Graph, lists: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(VertexSet.from_indices(g.n, ix) for ix in lists), g.n)

    @classmethod
    def from_masks(cls, g: Graph, masks: Sequence[int]) -> "Partition":
        return cls(tuple(VertexSet(m, g.n) for m in masks), g.n)

    @classmethod
    def singletons(cls, g: Graph) -> "Partition":
        return cls.from_lists(g, [[v] for v in range(g.n)])

    def __len__(self) -> int:
        return len(self.classes)

    def to_lists(self) -> list[list[int]]:
        return [vs.indices() for vs in self.classes]


class Reason(enum.Enum):
    IS_GLOBAL_DOMINATING = "IsGlobalDominating"
    IS_DOMINATING_SINGLETON_EXEMPTION = "IsDominatingSingletonExemption"
    NO_PARTNER = "NoPartner"
    PERFECT_CONDITION_FAILED = "PerfectConditionFailed"


@dataclass(frozen=True)
class Violation:
    class_index: int
    reason: Reason


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    kind: str
    partners: tuple  # per-class tuple of partner class indices
    violations: tuple


def _pair_checks(g: Graph, a: VertexSet, b: VertexSet):
    if not a.bits or not b.bits:
        raise OverlappingSetsError("pair sets must be non-empty")
    if a.bits & b.bits:
        raise OverlappingSetsError("pair sets must be disjoint")


def is_gc_pair(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Neither side is a global dominating set but their union is."""
    _pair_checks(g, a, b)
    return (
        not _is_gds(g, a.bits)
        and not _is_gds(g, b.bits)
        and _is_gds(g, a.bits | b.bits)
    )


def is_c_pair(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Neither side dominates but their union does."""
    _pair_checks(g, a, b)
    return (
        not _dominates(g, a.bits)
        and not _dominates(g, b.bits)
        and _dominates(g, a.bits | b.bits)
    )


def is_prc_pair(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Perfect coalition pair: non-dominating sides, each seen at most once
    from outside, whose union is a perfect dominating set."""
    _pair_checks(g, a, b)
    return (
        not _dominates(g, a.bits)
        and not _dominates(g, b.bits)
        and at_most_one_neighbor(g, a)
        and at_most_one_neighbor(g, b)
        and is_perfect_dominating(g, VertexSet(a.bits | b.bits, g.n))
    )


_PAIR_FN = {"c": is_c_pair, "gc": is_gc_pair, "prc": is_prc_pair}


def verify_partition(g: Graph, p: Partition, kind: str) -> PartitionVerdict:
    """Full verdict with exhaustive partner lists for every class."""
    if kind not in KINDS:
        raise ValueError(f"unknown partition kind {kind!r}")
    if p.graph_n != g.n:
        raise MalformedPartitionError("partition universe does not match graph")
    pair = _PAIR_FN[kind]
    k = len(p.classes)
    partners = [[] for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if pair(g, p.classes[i], p.classes[j]):
                partners[i].append(j)
                partners[j].append(i)
    violations = []
    for i, vs in enumerate(p.classes):
        if kind == "gc":
            if _is_gds(g, vs.bits):
                violations.append(Violation(i, Reason.IS_GLOBAL_DOMINATING))
            elif not partners[i]:
                violations.append(Violation(i, Reason.NO_PARTNER))
        else:
            if _dominates(g, vs.bits):
                if len(vs) != 1:
                    violations.append(Violation(i, Reason.IS_DOMINATING_SINGLETON_EXEMPTION))
                # singleton dominating class: exempt
            elif kind == "prc" and not at_most_one_neighbor(g, vs):
                violations.append(Violation(i, Reason.PERFECT_CONDITION_FAILED))
            elif not partners[i]:
                violations.append(Violation(i, Reason.NO_PARTNER))
    return PartitionVerdict(
        valid=not violations,
        kind=kind,
        partners=tuple(tuple(px) for px in partners),
        violations=tuple(violations),
    )


def count_gc_partners(g: Graph, p: Partition, i: int) -> int:
    """Number of classes forming a global coalition with class ``i``."""
    if not 0 <= i < len(p.classes):
        raise IndexError(f"class index {i} out of range")
    return sum(
        1
        for j in range(len(p.classes))
        if j != i and is_gc_pair(g, p.classes[i], p.classes[j])
    )


def gc_partner_bound(g: Graph, a: VertexSet) -> int:
    """Upper bound on the number of global coalitions a set can join:
    ``max(maxdeg + 1, min(n - |a|, n - mindeg))``."""
    if not a.bits:
        raise OverlappingSetsError("set must be non-empty")
    n = g.n
    return max(g.max_degree() + 1, min(n - len(a), n - g.min_degree()))


@dataclass(frozen=True)
class CoalitionGraph:
    base: Graph
    class_map: tuple  # index -> originating VertexSet


def build_gcg(g: Graph, p: Partition) -> CoalitionGraph:
    """Graph on partition classes; edges are the global coalition pairs."""
    if p.graph_n != g.n:
        raise MalformedPartitionError("partition universe does not match graph")
    k = len(p.classes)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if is_gc_pair(g, p.classes[i], p.classes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CoalitionGraph(base=Graph(k, adj), class_map=tuple(p.classes))
