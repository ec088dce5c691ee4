"""Counting semigroups by genus and even gaps through fiber sizes.

    N^m_gamma(g) = sum over T of genus gamma, multiplicity m of #fiber(T, g)
    N_gamma(g)   = sum over m in [2, gamma+1] of N^m_gamma(g)   (N_0(g) = 1)
    n_g          = sum over gamma in [0, floor(2g/3)] of N_gamma(g)

All arithmetic is on Python ints.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .fiber import fiber_size
from .kunz import semigroups_with_multiplicity
from .semigroup import NumericalSemigroup

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CountRecord:
    gamma: int
    m: Optional[int]
    g: int
    count: int


@lru_cache(maxsize=None)
def base_semigroups(gamma: int, m: int) -> tuple[NumericalSemigroup, ...]:
    """S^m_gamma: genus gamma, multiplicity m, built from Kunz solutions."""
    if gamma < 1 or m < 2 or m > gamma + 1:
        return ()
    return tuple(semigroups_with_multiplicity(m, gamma))


def _fiber_size_args(args: tuple[NumericalSemigroup, int]) -> int:
    return fiber_size(*args)


def _sum_fibers(bases: Iterable[NumericalSemigroup], g: int, workers: int) -> int:
    jobs = [(T, g) for T in bases]
    if workers <= 1 or len(jobs) < 2:
        return sum(fiber_size(T, g) for T, g in jobs)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_fiber_size_args, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def N_m_gamma(m: int, gamma: int, g: int, workers: int = 1) -> int:
    if gamma < 1 or m < 2 or m > gamma + 1 or g < gamma:
        return 0
    return _sum_fibers(base_semigroups(gamma, m), g, workers)


def N_gamma(gamma: int, g: int, workers: int = 1) -> int:
    if gamma == 0:
        return 1
    if gamma < 0 or g < gamma:
        return 0
    bases = [T for m in range(2, gamma + 2) for T in base_semigroups(gamma, m)]
    return _sum_fibers(bases, g, workers)


def n_g(g: int, workers: int = 1) -> int:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    return sum(N_gamma(gamma, g, workers) for gamma in range(0, 2 * g // 3 + 1))


def closed_form_N2(gamma: int, g: int) -> int:
    if gamma < 1:
        raise ValueError(f"closed form needs gamma >= 1, got {gamma}")
    if g < 2 * gamma:
        return 0
    if g < 3 * gamma:
        return g - 2 * gamma + 1
    return gamma + 1


def torres_nonempty(gamma: int, g: int) -> bool:
    return 2 * g >= 3 * gamma


def count_records(gamma: int, g_values: Iterable[int], by_m: bool = False,
                  m: Optional[int] = None, workers: int = 1) -> list[CountRecord]:
    rows = []
    for g in g_values:
        if m is not None:
            rows.append(CountRecord(gamma, m, g, N_m_gamma(m, gamma, g, workers)))
        elif by_m and gamma >= 1:
            for mm in range(2, gamma + 2):
                rows.append(CountRecord(gamma, mm, g, N_m_gamma(mm, gamma, g, workers)))
        else:
            rows.append(CountRecord(gamma, None, g, N_gamma(gamma, g, workers)))
    return rows


CSV_FIELDS = ("gamma", "m", "g", "count")


def records_to_csv(rows: Iterable[CountRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow([r.gamma, "" if r.m is None else r.m, r.g, r.count])
    return buf.getvalue()


def records_from_csv(text: str) -> list[CountRecord]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(CountRecord(int(row["gamma"]), int(row["m"]) if row["m"] else None,
                               int(row["g"]), int(row["count"])))
    return out


def records_to_jsonl(rows: Iterable[CountRecord]) -> str:
    return "".join(json.dumps(asdict(r), sort_keys=True) + "\n" for r in rows)


def records_from_jsonl(text: str) -> list[CountRecord]:
    return [CountRecord(**json.loads(line)) for line in text.splitlines() if line.strip()]


@dataclass
class MonotonicityReport:
    """Observed growth of n_g and N^m_gamma(g); data only.

    ``genus_rows`` has one row per ``g`` in ``[1, max_g - 1]`` with
    ``(g, n_{g-1}, n_g, n_{g+1}, n_g <= n_{g+1}, n_g < n_{g+1},
    n_{g+1} >= n_g + n_{g-1})``.  ``fiber_rows`` holds
    ``(gamma, m, g, N^m_gamma(g), N^m_gamma(g+1), holds)``.
    """

    max_g: int
    sequence: list[int]
    genus_rows: list[tuple] = field(default_factory=list)
    fiber_rows: list[tuple] = field(default_factory=list)

    def violations(self) -> list[str]:
        out = []
        for g, _, a, b, weak, strict, fib in self.genus_rows:
            if not weak:
                out.append(f"n_{g} = {a} > n_{g + 1} = {b}")
            if not fib:
                out.append(f"n_{g + 1} < n_{g} + n_{g - 1} at g={g}")
        for gamma, m, g, a, b, ok in self.fiber_rows:
            if not ok:
                out.append(f"N^{m}_{gamma}({g}) = {a} > N^{m}_{gamma}({g + 1}) = {b}")
        return out


def monotonicity_report(max_g: int, max_gamma: int = 5, workers: int = 1,
                        sequence: Optional[list[int]] = None) -> MonotonicityReport:
    if max_g < 2:
        raise ValueError(f"monotonicity report needs max_g >= 2, got {max_g}")
    seq = list(sequence) if sequence is not None else [n_g(g, workers) for g in range(max_g + 1)]
    rep = MonotonicityReport(max_g, seq)
    for g in range(1, max_g):
        a, b, prev = seq[g], seq[g + 1], seq[g - 1]
        rep.genus_rows.append((g, prev, a, b, a <= b, a < b, b >= a + prev))
    for gamma in range(1, max_gamma + 1):
        for m in range(2, gamma + 2):
            vals = [N_m_gamma(m, gamma, g, workers) for g in range(gamma, max_g + 1)]
            for off in range(len(vals) - 1):
                g = gamma + off
                rep.fiber_rows.append((gamma, m, g, vals[off], vals[off + 1],
                                       vals[off] <= vals[off + 1]))
    for line in rep.violations():
        log.warning("MONOTONICITY VIOLATION: %s", line)
    return rep
