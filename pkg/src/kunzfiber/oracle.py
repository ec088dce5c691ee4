"""Brute-force ground truth via the semigroup tree.

Children of ``S`` are ``S \\ {x}`` for each minimal generator ``x`` larger
than the Frobenius number.  Every numerical semigroup of genus ``g`` appears
exactly once at depth ``g``.  Nothing here touches the Kunz or fiber code.
"""

from __future__ import annotations

import os
import struct
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .semigroup import NumericalSemigroup, quotient

DEFAULT_MAX_GENUS = 25
CACHE_ENV = "KUNZFIBER_CACHE_DIR"
_CACHE_MAGIC = b"NSGT"
_CACHE_VERSION = 1


class OracleDepthError(ValueError):
    pass


@dataclass(frozen=True)
class TreeNode:
    semigroup: NumericalSemigroup
    effective_generators: tuple[int, ...]


def _check_depth(g: int, max_genus: int) -> None:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if g > max_genus:
        raise OracleDepthError(f"oracle depth limit: genus {g} > {max_genus}")


def _walk(depth: int) -> Iterator[tuple[int, int]]:
    """Yield ``(element_mask, frobenius)`` for every node at ``depth``.

    Alongside the element mask ``M`` of the window ``[0, W]`` a reversed copy
    ``R`` (bit ``W - i`` set iff ``i`` in S) turns "does ``y`` split as a sum
    of two nonzero elements" into one AND.
    """
    W = 3 * depth + 3
    full = (1 << (W + 1)) - 1
    # (M, R, multiplicity, frobenius, effective generators, genus)
    stack = [(full, full, 1, -1, (1,), 0)]
    while stack:
        M, R, m, F, gens, g = stack.pop()
        if g == depth:
            yield M, F
            continue
        for idx, x in enumerate(gens):
            M2 = M & ~(1 << x)
            R2 = R & ~(1 << (W - x))
            later = gens[idx + 1:]
            if x == m:
                # ordinary semigroup {0, m, m+1, ...}: multiplicity moves up
                m2 = m + 1
                new = tuple(range(m2, 2 * m2))
            else:
                m2 = m
                y = x + m
                split = M2 & ((1 << y) - 2) & (R2 >> (W - y))
                new = later if split else later + (y,)
            stack.append((M2, R2, m2, x, new, g + 1))


def _to_semigroup(M: int, F: int) -> NumericalSemigroup:
    return NumericalSemigroup(((1 << (F + 1)) - 1) & ~M if F > 0 else 0)


def tree_children(node: TreeNode) -> list[TreeNode]:
    """Children of one node, computed directly from the definition."""
    S = node.semigroup
    out = []
    for x in node.effective_generators:
        child = NumericalSemigroup(S.gapmask | (1 << x))
        gens = tuple(a for a in child.min_generators if a > child.frobenius)
        out.append(TreeNode(child, gens))
    return out


def root() -> TreeNode:
    return TreeNode(NumericalSemigroup(0), (1,))


def _cache_file(cache_dir: str | os.PathLike, g: int) -> Path:
    return Path(cache_dir) / f"genus_{g:03d}.nsg"


def save_level(path: str | os.PathLike, g: int, level: list[NumericalSemigroup]) -> None:
    """Write one level as length-prefixed little-endian gap bitsets."""
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC + struct.pack("<HII", _CACHE_VERSION, g, len(level)))
        for S in level:
            raw = S.gapmask.to_bytes((S.gapmask.bit_length() + 7) // 8, "little")
            fh.write(struct.pack("<H", len(raw)) + raw)


def load_level(path: str | os.PathLike) -> tuple[int, list[NumericalSemigroup]]:
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] != _CACHE_MAGIC:
        raise ValueError(f"{path}: not a semigroup level cache")
    version, g, count = struct.unpack_from("<HII", data, 4)
    if version != _CACHE_VERSION:
        raise ValueError(f"{path}: unsupported cache version {version}")
    pos = 14
    level = []
    for _ in range(count):
        (n,) = struct.unpack_from("<H", data, pos)
        pos += 2
        level.append(NumericalSemigroup(int.from_bytes(data[pos:pos + n], "little")))
        pos += n
    return g, level


@lru_cache(maxsize=None)
def _level(g: int) -> tuple[NumericalSemigroup, ...]:
    return tuple(sorted(_to_semigroup(M, F) for M, F in _walk(g)))


def enumerate_genus(g: int, max_genus: int = DEFAULT_MAX_GENUS,
                    cache_dir: str | os.PathLike | None = None) -> list[NumericalSemigroup]:
    """All numerical semigroups of genus exactly ``g``, sorted by gap set."""
    _check_depth(g, max_genus)
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if cache_dir:
        path = _cache_file(cache_dir, g)
        if path.exists():
            cached_g, level = load_level(path)
            if cached_g == g:
                return level
        level = list(_level(g))
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        save_level(path, g, level)
        return level
    return list(_level(g))


def verify_cache(cache_dir: str | os.PathLike, g: int) -> bool:
    """Re-walk the tree and compare against the cached level."""
    path = _cache_file(cache_dir, g)
    if not path.exists():
        return False
    _, level = load_level(path)
    return level == sorted(_to_semigroup(M, F) for M, F in _walk(g))


@lru_cache(maxsize=None)
def n_g_oracle(g: int, max_genus: int = DEFAULT_MAX_GENUS) -> int:
    _check_depth(g, max_genus)
    return sum(1 for _ in _walk(g))


@lru_cache(maxsize=None)
def even_gap_histogram(g: int, max_genus: int = DEFAULT_MAX_GENUS) -> dict[int, int]:
    """``{gamma: #semigroups of genus g with gamma even gaps}``."""
    _check_depth(g, max_genus)
    evens = int("01" * (g + 2), 2)
    hist: dict[int, int] = defaultdict(int)
    for M, F in _walk(g):
        gapmask = ((1 << (F + 1)) - 1) & ~M if F > 0 else 0
        hist[(gapmask & evens).bit_count()] += 1
    return dict(hist)


def N_gamma_oracle(gamma: int, g: int, max_genus: int = DEFAULT_MAX_GENUS) -> int:
    return even_gap_histogram(g, max_genus).get(gamma, 0)


@lru_cache(maxsize=None)
def fibers_by_quotient(g: int, max_genus: int = DEFAULT_MAX_GENUS
                       ) -> dict[NumericalSemigroup, tuple[NumericalSemigroup, ...]]:
    groups: dict[NumericalSemigroup, list[NumericalSemigroup]] = defaultdict(list)
    for S in enumerate_genus(g, max_genus):
        groups[quotient(S, 2)].append(S)
    return {T: tuple(v) for T, v in groups.items()}


def fiber_oracle(T: NumericalSemigroup, g: int,
                 max_genus: int = DEFAULT_MAX_GENUS) -> list[NumericalSemigroup]:
    return list(fibers_by_quotient(g, max_genus).get(T, ()))


def by_multiplicity(g: int, max_genus: int = DEFAULT_MAX_GENUS) -> dict[int, list[NumericalSemigroup]]:
    groups: dict[int, list[NumericalSemigroup]] = defaultdict(list)
    for S in enumerate_genus(g, max_genus):
        groups[S.multiplicity].append(S)
    return dict(groups)
