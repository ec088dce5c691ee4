"""Cross-route checks: Kunz/fiber counting against the tree oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from . import oracle
from .counting import N_gamma, N_m_gamma, closed_form_N2, n_g, torres_nonempty
from .fiber import build_fiber_system, enumerate_fiber, semigroup_from_point
from .kunz import enumerate_kunz_solutions, integer_points, semigroups_with_multiplicity
from .semigroup import from_gaps, from_kunz, kunz_vector, quotient


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    witness: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  first mismatch: {self.witness}" if self.witness else ""
        return f"[{status}] {self.name} ({self.checked} cases){tail}"


def _run(name: str, cases, test: Callable) -> CheckResult:
    # Cases are generated smallest-first, so the first failure is the smallest witness.
    n = 0
    for case in cases:
        n += 1
        problem = test(case)
        if problem:
            return CheckResult(name, False, n, problem)
    return CheckResult(name, True, n)


def check_ng_routes(max_g: int, workers: int = 1) -> CheckResult:
    def test(g):
        a, b = n_g(g, workers), oracle.n_g_oracle(g)
        return None if a == b else f"g={g}: kunz+fiber {a} != oracle {b}"
    return _run("n_g: kunz+fiber route == oracle tree", range(max_g + 1), test)


def check_kunz_bijection(max_g: int) -> CheckResult:
    def test(case):
        m, g = case
        got = sorted(semigroups_with_multiplicity(m, g))
        want = oracle.by_multiplicity(g).get(m, [])
        if got != want:
            return f"m={m}, g={g}: {len(got)} via Kunz vs {len(want)} via oracle"
        if any(S.multiplicity != m or S.genus != g for S in got):
            return f"m={m}, g={g}: wrong multiplicity or genus"
        return None
    cases = [(m, g) for g in range(1, max_g + 1) for m in range(2, g + 2)]
    return _run("Kunz system <-> multiplicity-m semigroups", cases, test)


def check_roundtrips(max_g: int) -> CheckResult:
    def test(g):
        for m in range(2, g + 2):
            for v in enumerate_kunz_solutions(m, g):
                if kunz_vector(from_kunz(m, v.coords), m) != v:
                    return f"kunz round-trip failed at m={m}, e={v.coords}"
        for S in oracle.enumerate_genus(g):
            if from_gaps(S.gaps) != S:
                return f"gap round-trip failed at {S}"
        return None
    return _run("round-trips (Kunz vector, gap set)", range(max_g + 1), test)


def check_fibers(max_g: int, max_gamma: int) -> CheckResult:
    def test(case):
        T, g = case
        got = enumerate_fiber(T, g)
        want = oracle.fiber_oracle(T, g)
        if got != want:
            return (f"gamma={T.genus}, m={T.multiplicity}, g={g}, T={T}: "
                    f"{len(got)} lattice points vs {len(want)} oracle semigroups")
        return None
    cases = [(T, g)
             for gamma in range(1, max_gamma + 1)
             for T in oracle.enumerate_genus(gamma)
             for g in range(gamma, min(3 * gamma + 2, max_g) + 1)]
    return _run("fiber lattice points == oracle preimage of S/2", cases, test)


def check_N_gamma_oracle(max_g: int) -> CheckResult:
    def test(case):
        gamma, g = case
        a, b = N_gamma(gamma, g), oracle.N_gamma_oracle(gamma, g)
        return None if a == b else f"gamma={gamma}, g={g}: {a} != oracle {b}"
    cases = [(gamma, g) for g in range(max_g + 1) for gamma in range(g + 1)]
    return _run("N_gamma(g) == oracle even-gap filter", cases, test)


def check_closed_form(max_gamma: int) -> CheckResult:
    def test(case):
        gamma, g = case
        a, b = N_m_gamma(2, gamma, g), closed_form_N2(gamma, g)
        return None if a == b else f"gamma={gamma}, m=2, g={g}: {a} != closed form {b}"
    cases = [(gamma, g) for gamma in range(1, max_gamma + 1) for g in range(3 * gamma + 4)]
    return _run("N^2_gamma(g) == closed form", cases, test)


def check_torres(max_gamma: int) -> CheckResult:
    def test(case):
        gamma, g = case
        if (N_gamma(gamma, g) > 0) != torres_nonempty(gamma, g):
            return f"gamma={gamma}, g={g}: N={N_gamma(gamma, g)}"
        return None
    cases = [(gamma, g) for gamma in range(max_gamma + 1) for g in range(3 * gamma + 4)]
    return _run("N_gamma(g) > 0 iff 2g >= 3 gamma", cases, test)


def check_stabilization(max_gamma: int) -> CheckResult:
    def test(gamma):
        top = N_gamma(gamma, 3 * gamma)
        for g in range(3 * gamma, 3 * gamma + 4):
            if N_gamma(gamma, g) != top:
                return f"gamma={gamma}, g={g}: {N_gamma(gamma, g)} != N(3 gamma) = {top}"
        for g in range(math.ceil(3 * gamma / 2), 3 * gamma):
            if not N_gamma(gamma, g) < top:
                return f"gamma={gamma}, g={g}: {N_gamma(gamma, g)} not < {top}"
        return None
    return _run("N_gamma stabilizes at 3 gamma, strictly below before", range(1, max_gamma + 1), test)


def find_degenerate_witness(max_gamma: int, max_g: int):
    """A fiber member with a zero odd coordinate and multiplicity < 2m."""
    for gamma in range(1, max_gamma + 1):
        for T in oracle.enumerate_genus(gamma):
            m = T.multiplicity
            for g in range(gamma, max_g + 1):
                fs = build_fiber_system(T, g)
                for k in integer_points(fs.system):
                    if 0 not in k:
                        continue
                    S = semigroup_from_point(fs, k)
                    if S.multiplicity < 2 * m and quotient(S, 2) == T:
                        return T, g, k, S
    return None


def check_degenerate_witness(max_gamma: int, max_g: int) -> CheckResult:
    if max_gamma < 1 or max_g < 1:
        return CheckResult("zero odd coordinate witness (skipped: empty range)", True, 0)
    found = find_degenerate_witness(max_gamma, max_g)
    if found is None:
        return CheckResult("zero odd coordinate witness", False, 1, "none found")
    T, g, k, S = found
    return CheckResult(f"zero odd coordinate witness: T={T}, g={g}, k={k}, S={S}", True, 1)


def run_all(max_g: int, max_gamma: int, workers: int = 1) -> list[CheckResult]:
    return [
        check_ng_routes(max_g, workers),
        check_kunz_bijection(max_g),
        check_roundtrips(max_g),
        check_fibers(max_g, max_gamma),
        check_N_gamma_oracle(max_g),
        check_closed_form(max_gamma),
        check_torres(max_gamma),
        check_stabilization(max_gamma),
        check_degenerate_witness(max_gamma, max_g),
    ]
