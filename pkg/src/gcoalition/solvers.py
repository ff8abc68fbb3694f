"""Exact maximum-partition solvers and the constructive algorithms.

The maximizer runs restricted-growth branch-and-bound twice: a first pass in
new-class-first order finds the optimal class count quickly (good bound
pruning), a second pass in lexicographic order recovers the lexicographically
least witness of that size.  Classes that become (global) dominating sets are
pruned on the spot because both properties are monotone under vertex
addition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .bitset import VertexSet, bits_of
from .coalition import Partition
from .domination import _is_gds, global_domatic, minimal_gds_within
from .errors import TrivialGraphError
from .graph import Graph
from .tables import Tables

DEFAULT_BUDGET = 50_000_000


@dataclass(frozen=True)
class SolveResult:
    kind: str
    value: int
    witness: Optional[Partition]
    nodes_explored: int
    elapsed: float
    exact: bool


class _BudgetExhausted(Exception):
    pass


def _valid_gc(masks, gds):
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            if j != i and gds[mi | mj]:
                break
        else:
            return False
    return True


def _valid_c(masks, dom):
    for i, mi in enumerate(masks):
        if dom[mi]:
            continue  # singleton dominating class, exempt (size>=2 was pruned)
        for j, mj in enumerate(masks):
            if j != i and not dom[mj] and dom[mi | mj]:
                break
        else:
            return False
    return True


def _valid_prc(masks, dom, perf):
    # at-most-one consistency holds for every class by incremental pruning
    for i, mi in enumerate(masks):
        if dom[mi]:
            continue
        for j, mj in enumerate(masks):
            if j != i and not dom[mj] and perf[mi | mj]:
                break
        else:
            return False
    return True


class _Search:
    def __init__(self, g: Graph, kind: str, budget: int):
        self.g = g
        self.kind = kind
        self.budget = budget
        self.nodes = 0
        self.tables = Tables(g)
        self.adj = g.adj
        self.n = g.n
        if kind == "gc":
            self.dead = self.tables.gds
        else:
            self.dead = None  # dominating + size>=2, handled inline
        self.best = 0
        self.best_masks = None

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted

    def _leaf_valid(self, masks):
        t = self.tables
        if self.kind == "gc":
            return _valid_gc(masks, t.gds)
        if self.kind == "c":
            return _valid_c(masks, t.dom)
        return _valid_prc(masks, t.dom, t.perf)

    # -- pass 1: optimal value, new-class-first order ------------------

    def find_value(self):
        n, adj = self.n, self.adj
        kind = self.kind
        t = self.tables
        gds = t.gds
        dom = t.dom
        prc = kind == "prc"
        classes: list[int] = []

        def dfs(i):
            self._tick()
            k = len(classes)
            if i == n:
                if k > self.best and self._leaf_valid(classes):
                    self.best = k
                    self.best_masks = list(classes)
                return
            if k + (n - i) <= self.best:
                return
            bit = 1 << i
            a = adj[i]
            if prc:
                conflicts = [j for j in range(k) if bin(a & classes[j]).count("1") >= 2]
                if len(conflicts) >= 2:
                    return
                if conflicts:
                    j = conflicts[0]
                    self._try_join(dfs, classes, i, j, bit, a)
                    return
            # new class first: reaches many-class leaves early
            classes.append(bit)
            dfs(i + 1)
            classes.pop()
            for j in range(k):
                self._try_join(dfs, classes, i, j, bit, a)

        dfs(0)
        return self.best

    def _try_join(self, dfs, classes, i, j, bit, a):
        m = classes[j]
        m2 = m | bit
        kind = self.kind
        t = self.tables
        if kind == "gc":
            if t.gds[m2]:
                return
        else:
            if t.dom[m2]:
                return  # m2 has size >= 2, can never be valid or exempt
            if kind == "prc":
                # a previously assigned neighbor of i outside m2 must not now
                # see two vertices of this class
                assigned = (1 << i) - 1
                for v in bits_of(a & assigned & ~m2):
                    if bin(self.adj[v] & m2).count("1") >= 2:
                        return
        classes[j] = m2
        dfs(i + 1)
        classes[j] = m

    # -- pass 2: lexicographically least witness of the optimal size ---

    def find_witness(self, target: int):
        n, adj = self.n, self.adj
        prc = self.kind == "prc"
        classes: list[int] = []
        found: list[list[int]] = []

        def dfs(i):
            if found:
                return
            self._tick()
            k = len(classes)
            if i == n:
                if k == target and self._leaf_valid(classes):
                    found.append(list(classes))
                return
            if k + (n - i) < target:
                return
            bit = 1 << i
            a = adj[i]
            if prc:
                conflicts = [j for j in range(k) if bin(a & classes[j]).count("1") >= 2]
                if len(conflicts) >= 2:
                    return
                if conflicts:
                    self._try_join(dfs, classes, i, conflicts[0], bit, a)
                    return
            for j in range(k):
                self._try_join(dfs, classes, i, j, bit, a)
                if found:
                    return
            if k < target:
                classes.append(bit)
                dfs(i + 1)
                classes.pop()

        dfs(0)
        return found[0] if found else None


def max_partition(g: Graph, kind: str, budget: Optional[int] = None) -> SolveResult:
    """Exact maximum class count over valid partitions of the given kind.

    Returns the lexicographically least maximum witness.  When the node
    budget runs out the best value found so far is returned with
    ``exact=False`` (a lower bound).
    """
    if kind not in ("c", "gc", "prc"):
        raise ValueError(f"unknown partition kind {kind!r}")
    if kind == "gc" and g.n == 1:
        raise TrivialGraphError("no gc-partition exists for the one-vertex graph")
    start = time.perf_counter()
    search = _Search(g, kind, DEFAULT_BUDGET if budget is None else budget)
    exact = True
    try:
        search.find_value()
        if search.best > 0:
            lex = search.find_witness(search.best)
            if lex is not None:
                search.best_masks = lex
    except _BudgetExhausted:
        exact = False
    witness = None
    if search.best_masks is not None:
        witness = Partition.from_masks(g, search.best_masks)
    return SolveResult(
        kind=kind,
        value=search.best,
        witness=witness,
        nodes_explored=search.nodes,
        elapsed=time.perf_counter() - start,
        exact=exact,
    )


def construct_center_partition(g: Graph, a: int) -> Partition:
    """Partition into the open neighborhood of ``a`` plus singletons.

    Validity is not guaranteed; callers verify.  Size is n - deg(a) + 1 when
    ``a`` has neighbors.
    """
    if not 0 <= a < g.n:
        raise ValueError(f"vertex {a} out of range")
    na = g.adj[a]
    masks = []
    if na:
        masks.append(na)
    masks.extend(1 << v for v in range(g.n) if not na >> v & 1)
    return Partition.from_masks(g, masks)


def construct_gc_from_domatic(g: Graph) -> Partition:
    """Turn a maximum global domatic partition into a gc-partition.

    Each of the first k-1 classes is trimmed to a minimal global dominating
    set (surplus moves to the last class) and split in two; the last class is
    handled the same way, with its surplus either joining the partition as its
    own class (when it has a partner) or merging into the second half of the
    last split.  The result always has at least 2 * d_g(G) classes.
    """
    if g.n < 2:
        raise TrivialGraphError("construction needs at least two vertices")
    witness = global_domatic(g)
    k = witness.k
    masks = [vs.bits for vs in witness.classes]
    # trim the first k-1 classes, dumping surplus into the last
    for i in range(k - 1):
        minimal = minimal_gds_within(g, VertexSet(masks[i], g.n)).bits
        masks[-1] |= masks[i] & ~minimal
        masks[i] = minimal

    def split(mask):
        lsb = mask & -mask
        return lsb, mask ^ lsb

    out = []
    for i in range(k - 1):
        out.extend(split(masks[i]))
    last = masks[-1]
    minimal = minimal_gds_within(g, VertexSet(last, g.n)).bits
    surplus = last & ~minimal
    half1, half2 = split(minimal)
    out.append(half1)
    out.append(half2)
    if surplus:
        partnered = False
        for m in out:
            if _is_gds(g, m):
                continue
            if _is_gds(g, m | surplus):
                partnered = True
                break
        if partnered:
            out.append(surplus)
        else:
            out[-1] = half2 | surplus
    return Partition.from_masks(g, out)
