"""Graph file formats: Matrix Market coordinate, plain edge lists, binary CSR.

Binary CSR cache layout (all little-endian)::

    magic    8 bytes  b"DAWNCSR\\0"
    version  1 byte   currently 1
    pad      7 bytes  zero
    n        uint64
    m        uint64
    row_ptr  uint64[n + 1]
    col      uint32[m]
"""

from __future__ import annotations

import io
import os
import struct
from pathlib import Path

import numpy as np

from .errors import GraphBoundsError, GraphFormatError, UnsupportedFormatError
from .graph import CsrGraph, EdgeList, build_csr

__all__ = [
    "load_matrix_market",
    "load_edge_list",
    "save_csr",
    "load_csr",
    "sniff_format",
    "load_graph",
    "FORMATS",
]

CACHE_MAGIC = b"DAWNCSR\0"
CACHE_VERSION = 1
_HEADER = struct.Struct("<8sB7xQQ")

FORMATS = ("mtx", "edgelist", "csr")

_MM_FIELDS = {"pattern", "integer", "real"}
_MM_SYMMETRY = {"general", "symmetric"}


def _read_pairs(stream: io.TextIOBase, where: str) -> np.ndarray:
    """Parse the first two integer columns of the remaining lines."""
    rows: list[tuple[int, int]] = []
    for lineno, line in enumerate(stream, start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        parts = s.split()
        if len(parts) < 2:
            raise GraphFormatError(f"{where}: line {lineno}: expected two node ids")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(
                f"{where}: line {lineno}: non-integer node id in {s!r}"
            ) from None
    return np.array(rows, dtype=np.int64).reshape(-1, 2)


def load_matrix_market(path: str | os.PathLike) -> EdgeList:
    """Read a Matrix Market ``coordinate`` file as a normalized edge list.

    Values are ignored; ``symmetric`` files yield both edge directions.
    """
    with open(path, encoding="utf-8") as f:
        banner = f.readline().split()
        if len(banner) != 5 or banner[0] != "%%MatrixMarket":
            raise GraphFormatError(f"{path}: missing %%MatrixMarket banner")
        obj, fmt, field, symmetry = (b.lower() for b in banner[1:])
        if obj != "matrix":
            raise GraphFormatError(f"{path}: unsupported object {obj!r}")
        if fmt == "array":
            raise UnsupportedFormatError(f"{path}: dense (array) matrices not supported")
        if fmt != "coordinate":
            raise GraphFormatError(f"{path}: unknown format {fmt!r}")
        if field not in _MM_FIELDS:
            raise UnsupportedFormatError(f"{path}: unsupported field {field!r}")
        if symmetry not in _MM_SYMMETRY:
            raise UnsupportedFormatError(f"{path}: unsupported symmetry {symmetry!r}")

        dims = None
        for line in f:
            s = line.strip()
            if s and not s.startswith("%"):
                dims = s.split()
                break
        if dims is None or len(dims) != 3:
            raise GraphFormatError(f"{path}: missing 'rows cols entries' line")
        try:
            nrows, ncols, nnz = (int(x) for x in dims)
        except ValueError:
            raise GraphFormatError(f"{path}: bad size line {' '.join(dims)!r}") from None
        pairs = _read_pairs(f, str(path))

    if len(pairs) != nnz:
        raise GraphFormatError(f"{path}: declared {nnz} entries, found {len(pairs)}")
    n = max(nrows, ncols)
    if pairs.size:
        r, c = pairs[:, 0], pairs[:, 1]
        bad = (r < 1) | (r > nrows) | (c < 1) | (c > ncols)
        if bad.any():
            i = int(np.argmax(bad))
            raise GraphBoundsError(
                f"{path}: entry ({r[i]} {c[i]}) outside declared {nrows}x{ncols}"
            )
    return EdgeList(
        n, pairs[:, 0] - 1, pairs[:, 1] - 1, directed=(symmetry == "general")
    ).normalized()


def load_edge_list(path: str | os.PathLike, num_nodes: int | None = None) -> EdgeList:
    """Read whitespace-separated ``u v`` lines (``#``/``%`` lines are comments)."""
    with open(path, encoding="utf-8") as f:
        pairs = _read_pairs(f, str(path))
    if pairs.size and pairs.min() < 0:
        raise GraphBoundsError(f"{path}: negative node id {int(pairs.min())}")
    if num_nodes is None:
        num_nodes = int(pairs.max()) + 1 if pairs.size else 0
    elif pairs.size and pairs.max() >= num_nodes:
        raise GraphBoundsError(
            f"{path}: node id {int(pairs.max())} >= num_nodes={num_nodes}"
        )
    return EdgeList(num_nodes, pairs[:, 0], pairs[:, 1]).normalized()


def save_csr(csr: CsrGraph, path: str | os.PathLike) -> None:
    with open(path, "wb") as f:
        f.write(_HEADER.pack(CACHE_MAGIC, CACHE_VERSION, csr.n, csr.m))
        f.write(csr.row_ptr.astype("<u8").tobytes())
        f.write(csr.col.astype("<u4").tobytes())


def load_csr(path: str | os.PathLike) -> CsrGraph:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise GraphFormatError(f"{path}: truncated CSR cache header")
    magic, version, n, m = _HEADER.unpack_from(data)
    if magic != CACHE_MAGIC:
        raise GraphFormatError(f"{path}: not a CSR cache file")
    if version != CACHE_VERSION:
        raise UnsupportedFormatError(f"{path}: CSR cache version {version}")
    expected = _HEADER.size + 8 * (n + 1) + 4 * m
    if len(data) != expected:
        raise GraphFormatError(f"{path}: size {len(data)} != expected {expected}")
    row_ptr = np.frombuffer(data, "<u8", n + 1, _HEADER.size)
    col = np.frombuffer(data, "<u4", m, _HEADER.size + 8 * (n + 1))
    try:
        return CsrGraph(n, row_ptr.astype(np.int64), col.astype(np.int64))
    except ValueError as exc:
        raise GraphFormatError(f"{path}: corrupt CSR cache: {exc}") from None


def sniff_format(path: str | os.PathLike, fmt: str | None = None) -> str:
    """Resolve the input format: explicit flag, then file magic, then extension."""
    if fmt is not None:
        if fmt not in FORMATS:
            raise UnsupportedFormatError(f"unknown graph format {fmt!r}")
        return fmt
    with open(path, "rb") as f:
        head = f.read(len(CACHE_MAGIC))
    if head == CACHE_MAGIC:
        return "csr"
    if head.startswith(b"%%Matrix"):
        return "mtx"
    suffix = Path(path).suffix.lower()
    if suffix == ".mtx":
        return "mtx"
    if suffix in (".csr", ".bin"):
        return "csr"
    return "edgelist"


def load_graph(path: str | os.PathLike, fmt: str | None = None) -> CsrGraph:
    fmt = sniff_format(path, fmt)
    if fmt == "csr":
        return load_csr(path)
    if fmt == "mtx":
        return build_csr(load_matrix_market(path))
    return build_csr(load_edge_list(path))
