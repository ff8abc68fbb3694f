"""Per-graph predicate tables for the search kernels.

For small universes every subset predicate (dominates G, dominates the
complement, at-most-one / exactly-one outside neighbor) is precomputed as a
flat array indexed by subset mask, so the branch-and-bound inner loop runs on
plain list lookups.  Above the table cutoff the same predicates are served
from lazy memo dictionaries.
"""

from __future__ import annotations

from .bitset import bits_of
from .graph import Graph

TABLE_MAX_N = 16


class _LazyTable:
    """Dict-backed mask -> bool predicate with the same indexing surface."""

    __slots__ = ("_fn", "_memo")

    def __init__(self, fn):
        self._fn = fn
        self._memo = {}

    def __getitem__(self, mask):
        memo = self._memo
        val = memo.get(mask)
        if val is None:
            val = memo[mask] = self._fn(mask)
        return val


class Tables:
    """Subset predicate tables for one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.full = g.full_mask
        self.closed = [g.adj[v] | 1 << v for v in range(g.n)]
        # closed neighborhood in the complement: V minus the open neighborhood
        self.cclosed = [self.full & ~g.adj[v] for v in range(g.n)]
        self._amone = None
        self._perf = None
        if g.n <= TABLE_MAX_N:
            size = 1 << g.n
            cover = [0] * size
            ccover = [0] * size
            closed = self.closed
            cclosed = self.cclosed
            for m in range(1, size):
                lsb = m & -m
                v = lsb.bit_length() - 1
                rest = m ^ lsb
                cover[m] = cover[rest] | closed[v]
                ccover[m] = ccover[rest] | cclosed[v]
            full = self.full
            self.dom = bytearray(1 if c == full else 0 for c in cover)
            self.gds = bytearray(
                1 if cover[m] == full and ccover[m] == full else 0 for m in range(size)
            )
        else:
            self.dom = _LazyTable(self._dom_slow)
            self.gds = _LazyTable(self._gds_slow)

    def _cover(self, mask: int) -> int:
        out = 0
        for v in bits_of(mask):
            out |= self.closed[v]
        return out

    def _ccover(self, mask: int) -> int:
        out = 0
        for v in bits_of(mask):
            out |= self.cclosed[v]
        return out

    def _dom_slow(self, mask: int) -> bool:
        return self._cover(mask) == self.full

    def _gds_slow(self, mask: int) -> bool:
        return self._cover(mask) == self.full and self._ccover(mask) == self.full

    def _amone_slow(self, mask: int) -> bool:
        adj = self.g.adj
        for v in range(self.n):
            if not mask >> v & 1 and bin(adj[v] & mask).count("1") > 1:
                return False
        return True

    def _perf_slow(self, mask: int) -> bool:
        adj = self.g.adj
        for v in range(self.n):
            if not mask >> v & 1 and bin(adj[v] & mask).count("1") != 1:
                return False
        return True

    @property
    def amone(self):
        if self._amone is None:
            if self.n <= TABLE_MAX_N:
                self._amone = bytearray(
                    1 if self._amone_slow(m) else 0 for m in range(1 << self.n)
                )
            else:
                self._amone = _LazyTable(self._amone_slow)
        return self._amone

    @property
    def perf(self):
        if self._perf is None:
            if self.n <= TABLE_MAX_N:
                self._perf = bytearray(
                    1 if self._perf_slow(m) else 0 for m in range(1 << self.n)
                )
            else:
                self._perf = _LazyTable(self._perf_slow)
        return self._perf
