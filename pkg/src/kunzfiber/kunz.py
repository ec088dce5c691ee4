"""Kunz inequality systems and a depth-first integer-point enumerator.

The semigroups of multiplicity ``m`` and genus ``g`` correspond to the
positive integer points ``(X_1, ..., X_{m-1})`` of

    X_i + X_j     >= X_{i+j}    (1 <= i <= j <= m-1, i+j < m)
    X_i + X_j + 1 >= X_{i+j-m}  (1 <= i <= j <= m-1, i+j > m)
    X_1 + ... + X_{m-1} = g

through ``(e_1, ..., e_{m-1}) -> <m, m*e_1 + 1, ..., m*e_{m-1} + m-1>``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .semigroup import KunzVector, from_kunz

Inequality = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class LinearSystem:
    """Integer inequalities ``coeffs . X + const >= 0`` plus ``sum(X) = rhs``."""

    num_vars: int
    inequalities: tuple[Inequality, ...]
    equality: tuple[tuple[int, ...], int]
    lower_bounds: tuple[int, ...]

    def __post_init__(self):
        coeffs, _ = self.equality
        if len(coeffs) != self.num_vars or len(self.lower_bounds) != self.num_vars:
            raise ValueError("dimension mismatch in linear system")
        if any(c != 1 for c in coeffs):
            raise ValueError("only all-ones equalities are supported")
        for a, _ in self.inequalities:
            if len(a) != self.num_vars:
                raise ValueError("dimension mismatch in inequality")

    @property
    def rhs(self) -> int:
        return self.equality[1]

    def upper_bounds(self) -> tuple[int, ...]:
        # Positivity plus the equality give a finite box.
        total = sum(self.lower_bounds)
        return tuple(self.rhs - (total - lb) for lb in self.lower_bounds)

    def satisfied_by(self, x: Sequence[int]) -> bool:
        if len(x) != self.num_vars:
            return False
        if any(v < lb for v, lb in zip(x, self.lower_bounds)):
            return False
        if sum(x) != self.rhs:
            return False
        return all(sum(a * v for a, v in zip(coeffs, x)) + c >= 0
                   for coeffs, c in self.inequalities)

    def to_json(self) -> dict:
        coeffs, rhs = self.equality
        return {
            "vars": self.num_vars,
            "ineqs": [list(a) + [c] for a, c in self.inequalities],
            "eq": list(coeffs) + [rhs],
            "lb": list(self.lower_bounds),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> LinearSystem:
        n = obj["vars"]
        ineqs = tuple((tuple(row[:n]), row[n]) for row in obj["ineqs"])
        eq = obj["eq"]
        return cls(n, ineqs, (tuple(eq[:n]), eq[n]), tuple(obj["lb"]))


def _pair_coeffs(n: int, i: int, j: int, k: int) -> tuple[int, ...]:
    # +X_i +X_j -X_k over 0-based indices
    a = [0] * n
    a[i] += 1
    a[j] += 1
    a[k] -= 1
    return tuple(a)


def build_kunz_system(m: int, g: int) -> LinearSystem:
    if m < 2:
        raise ValueError(f"multiplicity must be at least 2, got {m}")
    if m > g + 1:
        raise ValueError(f"multiplicity {m} exceeds genus + 1 = {g + 1}")
    n = m - 1
    ineqs = []
    for i in range(1, m):
        for j in range(i, m):
            if i + j < m:
                ineqs.append((_pair_coeffs(n, i - 1, j - 1, i + j - 1), 0))
            elif i + j > m:
                ineqs.append((_pair_coeffs(n, i - 1, j - 1, i + j - m - 1), 1))
    return LinearSystem(n, tuple(ineqs), ((1,) * n, g), (1,) * n)


class _Compiled:
    """Inequalities grouped by the last variable they mention.

    When the DFS reaches variable ``p`` every other variable of such a
    constraint is already bound, so the constraint collapses to an interval
    for ``x_p``.
    """

    __slots__ = ("n", "closing", "lb", "ub", "lb_suffix", "ub_suffix")

    def __init__(self, system: LinearSystem):
        n = self.n = system.num_vars
        self.closing: list[list[tuple[int, tuple[tuple[int, int], ...], int]]] = [
            [] for _ in range(n)
        ]
        for coeffs, c in system.inequalities:
            support = [k for k in range(n) if coeffs[k]]
            if not support:
                if c < 0:
                    # constant false constraint: mark infeasible at depth 0
                    self.closing[0].append((0, (), c))
                continue
            p = support[-1]
            others = tuple((k, coeffs[k]) for k in support[:-1])
            self.closing[p].append((coeffs[p], others, c))
        self.lb = system.lower_bounds
        self.ub = system.upper_bounds()
        self.lb_suffix = [sum(self.lb[p + 1:]) for p in range(n)]
        self.ub_suffix = [sum(self.ub[p + 1:]) for p in range(n)]

    def interval(self, p: int, x: list[int], remaining: int) -> tuple[int, int]:
        lo = max(self.lb[p], remaining - self.ub_suffix[p])
        hi = min(self.ub[p], remaining - self.lb_suffix[p])
        for a, others, c in self.closing[p]:
            r = c
            for k, b in others:
                r += b * x[k]
            if a > 0:
                # a*x + r >= 0  ->  x >= ceil(-r/a)
                t = -(r // a)
                if t > lo:
                    lo = t
            elif a < 0:
                t = r // (-a)
                if t < hi:
                    hi = t
            elif r < 0:
                return 1, 0
        return lo, hi


def _walk(comp: _Compiled, rhs: int) -> Iterator[tuple[int, ...]]:
    n = comp.n
    if n == 0:
        if rhs == 0:
            yield ()
        return
    x = [0] * n

    def rec(p: int, remaining: int):
        lo, hi = comp.interval(p, x, remaining)
        if p == n - 1:
            if lo <= remaining <= hi:
                x[p] = remaining
                yield tuple(x)
            return
        for v in range(lo, hi + 1):
            x[p] = v
            yield from rec(p + 1, remaining - v)

    yield from rec(0, rhs)


def _count(comp: _Compiled, rhs: int) -> int:
    n = comp.n
    if n == 0:
        return int(rhs == 0)
    x = [0] * n

    def rec(p: int, remaining: int) -> int:
        lo, hi = comp.interval(p, x, remaining)
        if p == n - 1:
            return int(lo <= remaining <= hi)
        total = 0
        for v in range(lo, hi + 1):
            x[p] = v
            total += rec(p + 1, remaining - v)
        return total

    return rec(0, rhs)


def integer_points(system: LinearSystem) -> Iterator[tuple[int, ...]]:
    """Yield every integer point of the system in lexicographic order."""
    return _walk(_Compiled(system), system.rhs)


def count_points(system: LinearSystem) -> int:
    return _count(_Compiled(system), system.rhs)


def enumerate_kunz_solutions(m: int, g: int) -> list[KunzVector]:
    system = build_kunz_system(m, g)
    return [KunzVector(m, pt) for pt in integer_points(system)]


def semigroups_with_multiplicity(m: int, g: int) -> list:
    """The semigroups of multiplicity m and genus g, in Kunz-lex order."""
    return [from_kunz(m, v.coords) for v in enumerate_kunz_solutions(m, g)]


def count_by_multiplicity(m: int, g: int) -> int:
    if m < 2 or g < 1 or m > g + 1:
        return 0
    return count_points(build_kunz_system(m, g))
