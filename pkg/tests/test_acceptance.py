"""Exit criteria. Each test records one PASS/FAIL line, printed in the pytest
terminal summary (and directly when run as ``python tests/test_acceptance.py``)."""
import json
import math
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from unnlab import (
    b_matrix,
    break_unn,
    cheeger_exact,
    check_unn,
    complete_bipartite,
    complete_graph,
    conductance_exact,
    cycle_graph,
    degree_sequence,
    random_signing,
    spectral_report,
    twin_cycle,
    two_lift,
)
from unnlab.cli import main
from unnlab.experiments import rows_from_csv, table1_report

from conftest import all_graphs, naive_unn, nb_sets, random_connected, random_graph

pytestmark = pytest.mark.acceptance

RESULTS = []
EIG_TOL = 1e-9
EXPERIMENT_SEED = 20241015
EXPERIMENT_ARGV = ["experiment", "--sizes", "4x4,8x8,16x16,32x32", "--p", "0.5", "--trials", "1000", "--seed", str(EXPERIMENT_SEED)]
# pilot run with EXPERIMENT_SEED gave p_hat = 0.456, 0.803, 0.995, 1.0
P_HAT_32_MIN = 0.99


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # one-time JIT compilation/cache load is not part of the timed work
    cheeger_exact(cycle_graph(5))


def test_criterion_1_table1(capsys):
    t0 = time.perf_counter()
    rows = table1_report(1)
    elapsed = time.perf_counter() - t0
    assert main(["table1", "--eps", "1", "--json"]) == 0
    cli_rows = json.loads(capsys.readouterr().out)["rows"]

    cells = {
        "unn_large_h": ("complete", True, True),
        "unn_small_h": ("cycle", True, False),
        "not_unn_large_h": ("complete-bipartite", False, True),
        "not_unn_small_h": ("twin-cycle", False, False),
    }
    ok = len(rows) == 4 and len(cli_rows) == 4
    for r, c in zip(rows, cli_rows):
        family, unn, large = cells[r.cell]
        ok &= (r.family, r.expect_unn, r.expect_h_ge_eps) == (family, unn, large)
        ok &= r.is_unn_distinct == r.is_unn_antichain == unn
        ok &= (r.h >= 1) if large else (r.h < 1)
        ok &= c["cell"] == r.cell and c["h_exact"] == f"{r.h.numerator}/{r.h.denominator}"
    exact = (
        cheeger_exact(complete_graph(6)).h == 3
        and cheeger_exact(cycle_graph(10)).h == Fraction(2, 5)
        and cheeger_exact(complete_bipartite(2, 2)).h == 1
        and cheeger_exact(twin_cycle(8)).h <= Fraction(1, 2)
    )
    record(1, "table1 --eps 1 reproduces the four cells", ok and exact and elapsed < 1.0, f"{elapsed:.3f}s")


def test_criterion_2_two_lift_preserves_unn():
    rng = np.random.default_rng(2)
    t0 = time.perf_counter()
    bases, lifts, failures = 0, 0, 0
    while bases < 200:
        g = random_graph(rng, int(rng.integers(2, 13)), rng.uniform(0.3, 0.8))
        if not check_unn(g).is_unn_antichain:
            continue
        bases += 1
        for _ in range(5):
            lift = two_lift(random_signing(g, int(rng.integers(2**63))))
            lifts += 1
            failures += not check_unn(lift).is_unn_antichain
    elapsed = time.perf_counter() - t0
    record(2, "2-lifts of antichain-UNN bases stay antichain-UNN", failures == 0 and lifts == 1000 and elapsed < 10,
           f"{lifts - failures}/{lifts} lifts, {elapsed:.2f}s")


def test_criterion_3_break_unn():
    rng = np.random.default_rng(3)
    done, failures = 0, 0
    while done < 100:
        g = random_connected(rng, int(rng.integers(3, 13)), 0.2, 0.7)
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if not pairs:
            continue
        x, y = pairs[int(rng.integers(len(pairs)))]
        out = break_unn(g, x, y)
        ok = (
            not check_unn(out).is_unn_distinct
            and max(degree_sequence(out)) <= 2 * max(degree_sequence(g))
            and cheeger_exact(out).h >= cheeger_exact(g).h
        )
        failures += not ok
        done += 1
    record(3, "break_unn yields non-UNN, degree <= 2x, h non-decreasing", failures == 0, f"{done - failures}/{done}")


def _run_experiment(path):
    t0 = time.perf_counter()
    assert main(EXPERIMENT_ARGV + ["--csv", str(path)]) == 0
    return path.read_bytes(), time.perf_counter() - t0


def test_criterion_4_and_7_experiment(tmp_path):
    first, elapsed = _run_experiment(tmp_path / "a.csv")
    rows = rows_from_csv(first.decode())
    trend = all(
        later.p_hat + later.ci_halfwidth >= earlier.p_hat - earlier.ci_halfwidth
        for earlier, later in zip(rows, rows[1:])
    )
    last = rows[-1]
    ok = [(r.n, r.m) for r in rows] == [(4, 4), (8, 8), (16, 16), (32, 32)] and trend
    record(4, "P(UNN) trend for random bipartite graphs at p = 0.5",
           ok and last.p_hat >= P_HAT_32_MIN and elapsed < 60,
           "p_hat " + ", ".join(f"{r.p_hat:.3f}" for r in rows) + f"; {elapsed:.1f}s")

    second, _ = _run_experiment(tmp_path / "b.csv")
    record(7, "experiment CSV is byte-identical across runs", first == second)


def test_criterion_5_oracle_equivalence():
    rng = np.random.default_rng(5)
    corpus = [g for n in range(0, 6) for g in all_graphs(n)]
    corpus += [random_graph(rng, int(rng.integers(1, 13)), rng.uniform(0.05, 0.95)) for _ in range(500)]
    discrepancies = 0
    for g in corpus:
        b = b_matrix(g)
        nbrs = nb_sets(g)
        for i in range(g.n):
            for j in range(g.n):
                if i != j and (b[i, j] == 0) != (nbrs[i] <= nbrs[j]):
                    discrepancies += 1
        r = check_unn(g)
        discrepancies += (r.is_unn_distinct, r.is_unn_antichain) != naive_unn(g)
    exhaustive5 = sum(1 for g in corpus if g.n == 5)
    record(5, "B-matrix and check_unn agree with set oracles", discrepancies == 0 and exhaustive5 >= 1024,
           f"{len(corpus)} graphs, {discrepancies} discrepancies")


def _spectral_corpus():
    rng = np.random.default_rng(6)
    corpus = [random_connected(rng, int(rng.integers(2, 13))) for _ in range(200)]
    corpus += [complete_graph(n) for n in range(2, 13)]
    corpus += [cycle_graph(n) for n in range(3, 13)]
    corpus += [complete_bipartite(a, b) for a in range(1, 7) for b in range(a, 13 - a)]
    corpus += [twin_cycle(m) for m in range(4, 11, 2)]
    for n in range(3, 7):
        for seed in range(3):
            corpus.append(two_lift(random_signing(cycle_graph(n), seed)))
            corpus.append(two_lift(random_signing(complete_graph(n), seed)))
    c8 = cycle_graph(8)
    corpus += [break_unn(c8, 0, y) for y in range(2, 7)]
    return [g for g in corpus if g.n >= 2 and g.is_connected()]


def test_criterion_6_cheeger_inequality():
    bad, regular = 0, 0
    corpus = _spectral_corpus()
    for g in corpus:
        rep = spectral_report(g)
        phi, _ = conductance_exact(g)
        if not (rep.h_lower - EIG_TOL <= float(phi) <= rep.h_upper + EIG_TOL):
            bad += 1
        deg = set(degree_sequence(g))
        if len(deg) == 1:
            (d,) = deg
            regular += 1
            h = cheeger_exact(g).h
            if h != d * phi or abs(float(h) - d * float(phi)) > EIG_TOL:
                bad += 1
    record(6, "lambda2/2 <= conductance <= sqrt(2 lambda2); h = d*phi on regular graphs", bad == 0,
           f"{len(corpus)} graphs, {regular} regular, {bad} violations")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
