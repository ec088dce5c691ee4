"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import io
import math
import time

import pytest

from kunzfiber import counting, oracle
from kunzfiber.cli import CliConfig, cmd_count_ng
from kunzfiber.counting import N_gamma, N_m_gamma, closed_form_N2, monotonicity_report, n_g
from kunzfiber.fiber import build_fiber_system, enumerate_fiber, semigroup_from_point
from kunzfiber.kunz import enumerate_kunz_solutions, integer_points, semigroups_with_multiplicity
from kunzfiber.semigroup import from_gaps, from_kunz, kunz_vector, quotient

SEQUENCE = [1, 1, 2, 4, 7, 12, 23, 39, 67]


def cold():
    counting.base_semigroups.cache_clear()
    for fn in (oracle._level, oracle.n_g_oracle, oracle.even_gap_histogram,
               oracle.fibers_by_quotient):
        fn.cache_clear()


def test_01_sequence_reproduction(criterion):
    cold()
    buf = io.StringIO()
    t0 = time.perf_counter()
    code = cmd_count_ng(8, CliConfig(output_format="csv"), out=buf)
    elapsed = time.perf_counter() - t0
    values = [int(line.split(",")[1]) for line in buf.getvalue().splitlines()[1:]]
    ok = code == 0 and values == SEQUENCE and elapsed < 1.0
    criterion("1 sequence reproduction n_0..n_8", ok, f"{values}, {elapsed:.3f}s < 1s")
    assert values == SEQUENCE
    assert elapsed < 1.0


def _dual_route(max_g):
    mismatches = []
    for g in range(max_g + 1):
        a, b = n_g(g), oracle.n_g_oracle(g)
        if a != b:
            mismatches.append((g, a, b))
    return mismatches


def test_02_dual_route_default(criterion):
    cold()
    t0 = time.perf_counter()
    mismatches = _dual_route(18)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 60
    criterion("2 dual route n_g, g <= 18", ok, f"mismatches={mismatches}, {elapsed:.1f}s < 60s")
    assert not mismatches
    assert elapsed < 60


@pytest.mark.slow
def test_02_dual_route_full(criterion):
    t0 = time.perf_counter()
    mismatches = _dual_route(25)
    elapsed = time.perf_counter() - t0
    criterion("2 dual route n_g, g <= 25", not mismatches, f"mismatches={mismatches}, {elapsed:.1f}s")
    assert not mismatches


def test_03_closed_form(criterion):
    cold()
    t0 = time.perf_counter()
    bad = [(gamma, g) for gamma in range(1, 9) for g in range(3 * gamma + 4)
           if N_m_gamma(2, gamma, g) != closed_form_N2(gamma, g)]
    elapsed = time.perf_counter() - t0
    criterion("3 N^2 closed form, gamma <= 8", not bad and elapsed < 10,
              f"bad={bad}, {elapsed:.2f}s < 10s")
    assert not bad
    assert elapsed < 10


def test_04_torres(criterion):
    bad = [(gamma, g) for gamma in range(0, 9) for g in range(3 * gamma + 4)
           if (N_gamma(gamma, g) > 0) != (2 * g >= 3 * gamma)]
    criterion("4 Torres criterion, gamma <= 8", not bad, f"bad={bad}")
    assert not bad


def test_05_stabilization(criterion):
    bad = []
    for gamma in range(0, 7):
        top = N_gamma(gamma, 3 * gamma)
        for g in range(3 * gamma, 3 * gamma + 4):
            if N_gamma(gamma, g) != top:
                bad.append(("eq", gamma, g))
        for g in range(math.ceil(3 * gamma / 2), 3 * gamma):
            if not N_gamma(gamma, g) < top:
                bad.append(("lt", gamma, g))
    criterion("5 stabilization and strictness, gamma <= 6", not bad, f"bad={bad}")
    assert not bad


def test_06_fiber_equivalence(criterion):
    cold()
    t0 = time.perf_counter()
    bad = []
    cases = 0
    for gamma in range(1, 6):
        for T in oracle.enumerate_genus(gamma):
            for g in range(gamma, 3 * gamma + 3):
                cases += 1
                if enumerate_fiber(T, g) != oracle.fiber_oracle(T, g):
                    bad.append((str(T), g))
    elapsed = time.perf_counter() - t0
    criterion("6 fiber == oracle preimage, gamma <= 5", not bad and elapsed < 60,
              f"{cases} cases, bad={bad}, {elapsed:.1f}s < 60s")
    assert not bad
    assert elapsed < 60


def test_07_kunz_bijection(criterion):
    bad = []
    for g in range(1, 12):
        groups = oracle.by_multiplicity(g)
        for m in range(2, g + 2):
            if sorted(semigroups_with_multiplicity(m, g)) != groups.get(m, []):
                bad.append((m, g))
    criterion("7 Kunz bijection, m <= g+1 <= 12", not bad, f"bad={bad}")
    assert not bad


def test_08_round_trips(criterion):
    bad = []
    for g in range(1, 12):
        for m in range(2, g + 2):
            for v in enumerate_kunz_solutions(m, g):
                if kunz_vector(from_kunz(m, v.coords), m) != v:
                    bad.append(("kunz", m, v.coords))
    for g in range(0, 13):
        for S in oracle.enumerate_genus(g):
            if from_gaps(S.gaps) != S:
                bad.append(("gaps", S.gaps))
    criterion("8 round-trips (Kunz, gaps <= genus 12)", not bad, f"bad={bad[:3]}")
    assert not bad


def test_09_monotonicity_report(criterion):
    rep = monotonicity_report(21, max_gamma=5)
    seq = rep.sequence
    strict = all(seq[g] < seq[g + 1] for g in range(1, 21))
    fib = all(seq[g + 2] >= seq[g + 1] + seq[g] for g in range(0, 19))
    fiber_ok = all(row[-1] for row in rep.fiber_rows)
    findings = rep.violations()
    if findings:
        print("\n".join("FINDING: " + f for f in findings))
    criterion("9 monotonicity data (observation, not theorem)", strict and fib and fiber_ok,
              f"{len(rep.genus_rows)} genus rows, {len(rep.fiber_rows)} (gamma,m,g) rows, "
              f"{len(findings)} violations")
    assert strict and fib and fiber_ok


def _degenerate_members():
    for gamma in range(1, 6):
        for T in oracle.enumerate_genus(gamma):
            for g in range(gamma, 3 * gamma + 3):
                fs = build_fiber_system(T, g)
                for k in integer_points(fs.system):
                    if 0 in k:
                        S = semigroup_from_point(fs, k)
                        if S.multiplicity < 2 * T.multiplicity:
                            yield T, g, k, S


def test_10_degenerate_multiplicity_witness(criterion):
    found = next(_degenerate_members(), None)
    ok = found is not None and quotient(found[3], 2) == found[0]
    detail = "none" if not found else f"T={found[0]}, g={found[1]}, k={found[2]}, S={found[3]}"
    criterion("10 zero odd coordinate with multiplicity < 2m", ok, detail)
    assert ok
