"""Fibers of the halving map ``S -> S/2`` as integer points of a polytope.

Fix ``T`` of genus ``gamma`` and multiplicity ``m`` with Kunz coordinates
``(e_1, ..., e_{m-1})``.  A semigroup ``S`` of genus ``g`` has ``S/2 = T``
exactly when its Apéry set with respect to ``2m`` has even part
``2m*e_j + 2j`` and odd part ``2m*k_{2i-1} + 2i - 1`` where the odd
coordinates ``k`` satisfy the odd+even and odd+odd Kunz inequalities and
``sum(k) = g - gamma`` (the number of odd gaps).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .kunz import LinearSystem, count_points, integer_points
from .semigroup import (
    KunzVector,
    NumericalSemigroup,
    SemigroupError,
    from_generators,
    kunz_vector,
)


@dataclass(frozen=True)
class FiberSystem:
    base: NumericalSemigroup
    base_kunz: KunzVector
    target_genus: int
    system: LinearSystem

    @property
    def m(self) -> int:
        return self.base_kunz.modulus

    @property
    def gamma(self) -> int:
        return self.base.genus


def _row(n: int, terms: list[tuple[int, int]]) -> tuple[int, ...]:
    a = [0] * n
    for k, c in terms:
        a[k] += c
    return tuple(a)


def fiber_inequalities(e: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Inequalities over (X_1, X_3, ..., X_{2m-1}); variable i-1 is X_{2i-1}."""
    m = len(e) + 1
    rows = []
    # odd + even
    for i in range(1, m + 1):
        for j in range(1, m):
            if i + j <= m:
                rows.append((_row(m, [(i - 1, 1), (i + j - 1, -1)]), e[j - 1]))
            else:
                rows.append((_row(m, [(i - 1, 1), (i + j - m - 1, -1)]), e[j - 1] + 1))
    # odd + odd; i + j = m + 1 lands on residue 0 and is unconstrained
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            if i + j <= m:
                rows.append((_row(m, [(i - 1, 1), (j - 1, 1)]), -e[i + j - 2]))
            elif i + j >= m + 2:
                rows.append((_row(m, [(i - 1, 1), (j - 1, 1)]), 1 - e[i + j - 2 - m]))
    return tuple(rows)


def _require_base(T: NumericalSemigroup) -> None:
    if T.genus == 0:
        raise SemigroupError("base is N_0: use the gamma=0 special case")


def build_fiber_system(T: NumericalSemigroup, g: int) -> FiberSystem:
    _require_base(T)
    m = T.multiplicity
    kv = kunz_vector(T, m)
    system = LinearSystem(
        num_vars=m,
        inequalities=fiber_inequalities(kv.coords),
        equality=((1,) * m, g - T.genus),
        lower_bounds=(0,) * m,
    )
    return FiberSystem(T, kv, g, system)


def semigroup_from_point(fs: FiberSystem, k: tuple[int, ...]) -> NumericalSemigroup:
    m = fs.m
    gens = [2 * m]
    gens += [2 * m * e + 2 * j for j, e in enumerate(fs.base_kunz.coords, start=1)]
    gens += [2 * m * ki + 2 * i - 1 for i, ki in enumerate(k, start=1)]
    return from_generators(gens)


def fiber_lattice_points(T: NumericalSemigroup, g: int) -> list[tuple[int, ...]]:
    return list(integer_points(build_fiber_system(T, g).system))


def enumerate_fiber(T: NumericalSemigroup, g: int) -> list[NumericalSemigroup]:
    if T.genus == 0:
        return [from_generators([2, 2 * g + 1])] if g >= 0 else []
    fs = build_fiber_system(T, g)
    out = [semigroup_from_point(fs, k) for k in integer_points(fs.system)]
    if len(set(out)) != len(out):
        raise AssertionError(f"distinct lattice points gave equal semigroups over {T}, g={g}")
    return sorted(out)


def fiber_size(T: NumericalSemigroup, g: int) -> int:
    if T.genus == 0:
        return int(g >= 0)
    if g < T.genus:
        return 0
    return count_points(build_fiber_system(T, g).system)


def points_csv(points: list[tuple[int, ...]], m: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"k{2 * i - 1}" for i in range(1, m + 1)])
    writer.writerows(points)
    return buf.getvalue()


def read_points_csv(text: str) -> list[tuple[int, ...]]:
    rows = list(csv.reader(io.StringIO(text)))
    return [tuple(int(v) for v in row) for row in rows[1:]]
