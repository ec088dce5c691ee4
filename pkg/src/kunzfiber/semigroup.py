"""Numerical semigroups stored canonically by their gap set.

A semigroup is held as an integer bitmask whose bit ``i`` is set when ``i`` is
a gap.  Every gap of a genus-``g`` semigroup lies in ``[1, 2g]``, so the mask
never has more than ``2g + 1`` bits and equality, hashing and membership are
plain integer operations.
"""

from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Sequence


class SemigroupError(ValueError):
    """Raised when input does not describe a numerical semigroup."""


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@total_ordering
@dataclass(frozen=True, eq=False, repr=False)
class NumericalSemigroup:
    gapmask: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gapmask == other.gapmask

    def __hash__(self) -> int:
        return hash(self.gapmask)

    def __lt__(self, other: NumericalSemigroup) -> bool:
        # Sorting "by gap set" means lexicographic order on the gap tuples.
        return self.gaps < other.gaps

    def __repr__(self) -> str:
        return f"NumericalSemigroup(<{format_generators(self)}>)"

    def __str__(self) -> str:
        return f"<{format_generators(self)}>"

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return _bits(self.gapmask)

    @property
    def genus(self) -> int:
        return self.gapmask.bit_count()

    @property
    def frobenius(self) -> int:
        return self.gapmask.bit_length() - 1

    @cached_property
    def multiplicity(self) -> int:
        m = 1
        while (self.gapmask >> m) & 1:
            m += 1
        return m

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        return not (self.gapmask >> x) & 1

    __contains__ = contains

    def element_mask(self, bound: int) -> int:
        """Bitmask of the elements of S in ``[0, bound]``."""
        return ((1 << (bound + 1)) - 1) & ~self.gapmask

    @cached_property
    def min_generators(self) -> tuple[int, ...]:
        m = self.multiplicity
        if m == 1:
            return (1,)
        top = self.frobenius + m + 1
        window = (1 << (top + 1)) - 1
        elems = self.element_mask(top) & ~1
        sums = 0
        rest = elems
        while rest:
            low = rest & -rest
            sums |= elems << (low.bit_length() - 1)
            rest ^= low
        return _bits(elems & ~sums & window)

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    def elements(self, bound: int) -> tuple[int, ...]:
        return _bits(self.element_mask(bound))


@dataclass(frozen=True)
class AperySet:
    modulus: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class KunzVector:
    modulus: int
    coords: tuple[int, ...]


NATURALS = NumericalSemigroup(0)


def _gapmask_from_apery(n: int, w: Sequence[int]) -> int:
    mask = 0
    for i in range(1, n):
        for x in range(i, w[i], n):
            mask |= 1 << x
    return mask


def _apery_by_dijkstra(gens: Sequence[int]) -> list[int]:
    # Shortest paths on the residues modulo the smallest generator.
    n = gens[0]
    dist = [math.inf] * n
    dist[0] = 0
    heap = [(0, 0)]
    steps = [a for a in gens[1:] if a % n]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for a in steps:
            nd = d + a
            nr = nd % n
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist  # type: ignore[return-value]


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(a) for a in gens))
    if not gens:
        raise SemigroupError("empty generator list")
    if gens[0] < 1:
        raise SemigroupError(f"generators must be positive, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise SemigroupError("not a numerical semigroup (infinite complement)")
    if gens[0] == 1:
        return NATURALS
    w = _apery_by_dijkstra(gens)
    return NumericalSemigroup(_gapmask_from_apery(gens[0], w))


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    mask = 0
    for x in gaps:
        x = int(x)
        if x < 1:
            raise SemigroupError(f"gaps must be positive integers, got {x}")
        mask |= 1 << x
    frob = mask.bit_length() - 1
    if frob < 1:
        return NATURALS
    elems = ((1 << (frob + 1)) - 1) & ~mask & ~1
    rest = elems
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        hit = (elems << a) & mask
        if hit:
            # smallest offending sum a + b
            c = (hit & -hit).bit_length() - 1
            raise SemigroupError(
                f"complement not closed under addition: {a} + {c - a} = {c} is a gap"
            )
        rest ^= low
    return NumericalSemigroup(mask)


def apery_set(S: NumericalSemigroup, n: int) -> AperySet:
    if n < 1 or not S.contains(n):
        raise SemigroupError(f"modulus not in semigroup: {n}")
    elements = [0]
    for i in range(1, n):
        w = i
        while not S.contains(w):
            w += n
        elements.append(w)
    return AperySet(n, tuple(elements))


def kunz_vector(S: NumericalSemigroup, n: int) -> KunzVector:
    w = apery_set(S, n).elements
    return KunzVector(n, tuple((w[i] - i) // n for i in range(1, n)))


def from_kunz(n: int, coords: Sequence[int]) -> NumericalSemigroup:
    if len(coords) != n - 1:
        raise SemigroupError(f"expected {n - 1} Kunz coordinates, got {len(coords)}")
    if any(e < 0 for e in coords):
        raise SemigroupError("Kunz coordinates must be nonnegative")
    return from_generators([n] + [n * e + i for i, e in enumerate(coords, start=1)])


def quotient(S: NumericalSemigroup, d: int) -> NumericalSemigroup:
    """The semigroup ``{s : d*s in S}``."""
    if d < 1:
        raise SemigroupError(f"quotient needs d >= 1, got {d}")
    if d == 1:
        return S
    mask = 0
    for s in range(1, S.frobenius // d + 1):
        if (S.gapmask >> (d * s)) & 1:
            mask |= 1 << s
    return NumericalSemigroup(mask)


def _even_mask(nbits: int) -> int:
    return int("01" * ((nbits + 1) // 2 + 1), 2) if nbits > 0 else 1


def even_gap_count(S: NumericalSemigroup) -> int:
    frob = S.frobenius
    if frob < 1:
        return 0
    return (S.gapmask & _even_mask(frob + 1)).bit_count()


def ordinary(g: int) -> NumericalSemigroup:
    """``{0, g+1, g+2, ...}``: genus g with the largest possible multiplicity."""
    return NumericalSemigroup(((1 << (g + 1)) - 1) & ~1)


def format_generators(S: NumericalSemigroup) -> str:
    return ",".join(str(a) for a in S.min_generators)


def format_gaps(S: NumericalSemigroup) -> str:
    return "{" + ",".join(str(x) for x in S.gaps) + "}"


_INT_LIST = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``"4,6,9,11"`` (generators) or ``"{1,2,3,5,7}"`` (gaps)."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        body = text[1:-1].strip()
        if not body:
            return NATURALS
        if not _INT_LIST.match(body):
            raise SemigroupError(f"cannot parse gap set {text!r}")
        return from_gaps(int(t) for t in body.split(","))
    if text.startswith("<") and text.endswith(">"):
        text = text[1:-1]
    if not _INT_LIST.match(text):
        raise SemigroupError(f"cannot parse generator list {text!r}")
    return from_generators(int(t) for t in text.split(","))


def contains(S: NumericalSemigroup, x: int) -> bool:
    return S.contains(x)
