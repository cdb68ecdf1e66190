"""Edge lists and compressed sparse adjacency (CSR / CSC).

Node ids are 0-based ``int`` values in ``[0, n)``.  Edges are directed;
undirected inputs are stored as symmetric pairs, so ``m`` always counts
directed edges.  Offsets are stored as ``int64`` and adjacency ids as
``int32`` (4 bytes per edge).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import GraphBoundsError

__all__ = [
    "EdgeList",
    "CsrGraph",
    "CscGraph",
    "build_csr",
    "transpose",
    "from_edges",
]

INDEX_DTYPE = np.int32
OFFSET_DTYPE = np.int64


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class EdgeList:
    """Staging format between file loaders and CSR construction."""

    num_nodes: int
    src: np.ndarray
    dst: np.ndarray
    directed: bool = True

    def __post_init__(self) -> None:
        src = np.asarray(self.src, dtype=np.int64).ravel()
        dst = np.asarray(self.dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise ValueError("src and dst must have equal length")
        if self.num_nodes < 0:
            raise GraphBoundsError(f"negative node count {self.num_nodes}")
        for arr in (src, dst):
            if arr.size and (arr.min() < 0 or arr.max() >= self.num_nodes):
                bad = arr[(arr < 0) | (arr >= self.num_nodes)][0]
                raise GraphBoundsError(
                    f"node id {int(bad)} outside [0, {self.num_nodes})"
                )
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)

    @classmethod
    def from_pairs(
        cls, num_nodes: int, pairs: Iterable[tuple[int, int]], directed: bool = True
    ) -> EdgeList:
        arr = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
        return cls(num_nodes, arr[:, 0], arr[:, 1], directed)

    def __len__(self) -> int:
        return int(self.src.size)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def normalized(self) -> EdgeList:
        """Symmetrize (if undirected), drop self-loops and duplicate pairs.

        The result is sorted by ``(src, dst)``.
        """
        src, dst = self.src, self.dst
        if not self.directed:
            src, dst = np.concatenate([src, dst]), np.concatenate([dst, src])
        keep = src != dst
        src, dst = src[keep], dst[keep]
        if src.size:
            key = np.unique(src * max(self.num_nodes, 1) + dst)
            src, dst = np.divmod(key, max(self.num_nodes, 1))
        return EdgeList(self.num_nodes, src, dst, self.directed)


class _Compressed:
    """Shared storage for CSR and CSC: ``ptr`` offsets over ``idx`` ids."""

    __slots__ = ("n", "_ptr", "_idx")

    def __init__(self, n: int, ptr: np.ndarray, idx: np.ndarray) -> None:
        ptr = np.ascontiguousarray(ptr, dtype=OFFSET_DTYPE)
        idx = np.ascontiguousarray(idx, dtype=INDEX_DTYPE)
        if ptr.shape != (n + 1,):
            raise ValueError(f"offset array must have length n+1={n + 1}")
        if ptr[0] != 0 or ptr[-1] != idx.size or np.any(np.diff(ptr) < 0):
            raise ValueError("offset array must start at 0, end at m, be monotone")
        if idx.size and (idx.min() < 0 or idx.max() >= n):
            raise GraphBoundsError("adjacency id outside [0, n)")
        self.n = int(n)
        self._ptr = _frozen(ptr)
        self._idx = _frozen(idx)

    @property
    def m(self) -> int:
        return int(self._idx.size)

    def degrees(self) -> np.ndarray:
        return np.diff(self._ptr)

    def _slice(self, u: int) -> np.ndarray:
        return self._idx[self._ptr[u] : self._ptr[u + 1]]

    def _pairs(self) -> tuple[np.ndarray, np.ndarray]:
        owner = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        return owner, self._idx.astype(np.int64)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self._ptr, other._ptr)
            and np.array_equal(self._idx, other._idx)
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self.m, self._idx.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class CsrGraph(_Compressed):
    """Out-adjacency: row ``u`` lists the targets of ``u`` in ascending order."""

    __slots__ = ()

    @property
    def row_ptr(self) -> np.ndarray:
        return self._ptr

    @property
    def col(self) -> np.ndarray:
        return self._idx

    def out_degree(self) -> np.ndarray:
        return self.degrees()

    def successors(self, u: int) -> np.ndarray:
        return self._slice(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        src, dst = self._pairs()
        return zip(src.tolist(), dst.tolist())

    def to_edge_list(self) -> EdgeList:
        src, dst = self._pairs()
        return EdgeList(self.n, src, dst, directed=True)

    def is_symmetric(self) -> bool:
        csc = transpose(self)
        return np.array_equal(csc.col_ptr, self.row_ptr) and np.array_equal(
            csc.row, self.col
        )


class CscGraph(_Compressed):
    """In-adjacency: column ``v`` lists the sources of edges into ``v``."""

    __slots__ = ()

    @property
    def col_ptr(self) -> np.ndarray:
        return self._ptr

    @property
    def row(self) -> np.ndarray:
        return self._idx

    def in_degree(self) -> np.ndarray:
        return self.degrees()

    def predecessors(self, v: int) -> np.ndarray:
        return self._slice(v)

    def edges(self) -> Iterator[tuple[int, int]]:
        dst, src = self._pairs()
        return zip(src.tolist(), dst.tolist())


def _compress(n: int, major: np.ndarray, minor: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Bucket ``minor`` ids by ``major`` into (offsets, ids).

    The placement is stable, so buckets inherit the input order of ``minor``.
    """
    counts = np.bincount(major, minlength=n)
    ptr = np.zeros(n + 1, dtype=OFFSET_DTYPE)
    np.cumsum(counts, out=ptr[1:])
    order = np.argsort(major, kind="stable")
    return ptr, minor[order]


def build_csr(el: EdgeList) -> CsrGraph:
    """Build a CSR graph; the edge list is normalized first."""
    el = el.normalized()
    # normalized() sorts by (src, dst), so rows come out ascending.
    ptr, col = _compress(el.num_nodes, el.src, el.dst)
    return CsrGraph(el.num_nodes, ptr, col)


def from_edges(
    num_nodes: int, pairs: Iterable[tuple[int, int]], directed: bool = True
) -> CsrGraph:
    """Convenience: ``build_csr(EdgeList.from_pairs(...))``."""
    return build_csr(EdgeList.from_pairs(num_nodes, pairs, directed))


def transpose(g: CsrGraph | CscGraph) -> CscGraph | CsrGraph:
    """Swap edge direction storage: CSR -> CSC of the same edges, and back.

    ``transpose(csr)`` returns the CSC holding the same edge set, so
    ``transpose(transpose(csr)) == csr``.
    """
    owner = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees())
    # owner is ascending, so a stable bucket sort by the other endpoint keeps
    # each new bucket ascending as well.
    ptr, idx = _compress(g.n, g._idx.astype(np.int64), owner)
    if isinstance(g, CsrGraph):
        return CscGraph(g.n, ptr, idx)
    return CsrGraph(g.n, ptr, idx)
