"""Monte Carlo estimate of P(UNN) for random bipartite graphs, and the
driver that reproduces the Cheeger-vs-UNN independence table."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .constructions import complete_bipartite, complete_graph, cycle_graph, random_bipartite, twin_cycle
from .graph import PREDICATES, check_unn
from .kernels import derive_seed
from .spectral import as_fraction, cheeger_exact, max_exact_n

__all__ = [
    "ExperimentConfig",
    "ExperimentRow",
    "trial_seed",
    "run_unn_experiment",
    "rows_to_csv",
    "rows_from_csv",
    "CSV_HEADER",
    "Table1Row",
    "table1_report",
    "format_table1",
    "table1_json",
]

CSV_HEADER = ("n", "m", "trials", "unn_count", "p_hat", "ci_halfwidth")
Z95 = 1.959963984540054


@dataclass(frozen=True)
class ExperimentConfig:
    sizes: tuple[tuple[int, int], ...]
    p: float
    trials: int
    master_seed: int
    predicate: str = "distinct"

    def __post_init__(self):
        sizes = tuple((int(n), int(m)) for n, m in self.sizes)
        if not sizes:
            raise ValueError("at least one (n, m) size is required")
        if any(n < 1 or m < 1 for n, m in sizes):
            raise ValueError("all side sizes must be >= 1")
        if not 0 < self.p < 1:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.predicate not in PREDICATES:
            raise ValueError(f"predicate must be one of {PREDICATES}")
        object.__setattr__(self, "sizes", sizes)


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    m: int
    trials: int
    unn_count: int
    p_hat: float
    ci_halfwidth: float


def trial_seed(master_seed: int, n: int, m: int, trial: int) -> int:
    return derive_seed(master_seed, n, m, trial)


def _row(n: int, m: int, trials: int, hits: int) -> ExperimentRow:
    p_hat = hits / trials
    return ExperimentRow(n, m, trials, hits, p_hat, Z95 * math.sqrt(p_hat * (1 - p_hat) / trials))


def run_unn_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    rows = []
    for n, m in cfg.sizes:
        hits = 0
        for t in range(cfg.trials):
            g = random_bipartite(n, m, cfg.p, trial_seed(cfg.master_seed, n, m, t)).to_graph()
            hits += check_unn(g).holds(cfg.predicate)
        rows.append(_row(n, m, cfg.trials, hits))
    return rows


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.m, r.trials, r.unn_count, repr(r.p_hat), repr(r.ci_halfwidth)])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ExperimentRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [
        ExperimentRow(int(n), int(m), int(t), int(c), float(ph), float(ci))
        for n, m, t, c, ph, ci in reader
    ]


# -- independence table ------------------------------------------------------


@dataclass(frozen=True)
class Table1Row:
    cell: str
    family: str
    size: int
    num_nodes: int
    h: Fraction
    provenance: str  # exact | formula | bound (bound = upper bound on h)
    is_unn_distinct: bool
    is_unn_antichain: bool
    expect_unn: bool
    expect_h_ge_eps: bool

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["h"] = float(self.h)
        rec["h_exact"] = f"{self.h.numerator}/{self.h.denominator}"
        return rec


def _cycle_h(n):
    return Fraction(2, n // 2)


def _kkk_h(k):
    # h(K_{k,k}) = k - max 2ab/(a+b) over a + b <= k, attained at a balanced split
    return Fraction(k, 2) if k % 2 == 0 else Fraction(k * k + 1, 2 * k)


_CELLS = (
    # cell, family, expect_unn, expect_h_ge_eps
    ("unn_large_h", "complete", True, True),
    ("unn_small_h", "cycle", True, False),
    ("not_unn_large_h", "complete-bipartite", False, True),
    ("not_unn_small_h", "twin-cycle", False, False),
)


def _candidate(family, size, cap):
    """(graph, h, provenance) for one family member."""
    if family == "complete":
        g, closed, prov = complete_graph(size), Fraction(size, 2), "formula"
    elif family == "cycle":
        g, closed, prov = cycle_graph(size), _cycle_h(size), "formula"
    elif family == "complete-bipartite":
        g, closed, prov = complete_bipartite(size, size), _kkk_h(size), "formula"
    else:
        g, closed, prov = twin_cycle(size), Fraction(4, size), "bound"
    if g.n <= cap:
        return g, cheeger_exact(g, cap).h, "exact"
    return g, closed, prov


def _start(family, eps):
    if family == "complete":
        n = math.floor(2 * eps) + 1
        return max(2, n + n % 2), 2
    if family == "cycle":
        n = 3
        while not Fraction(n // 2) > 2 / as_fraction(eps):
            n += 1
        return n, 1
    if family == "complete-bipartite":
        return max(2, math.ceil(eps)), 1
    m = math.floor(4 / eps) + 1
    return max(4, m + m % 2), 2


def table1_report(eps: float, max_n: Optional[int] = None, max_steps: int = 10_000) -> list[Table1Row]:
    """One verified example per cell of the UNN x (h >= eps) table.

    Each family is scanned upward from the size its closed form suggests
    until the cell's claims hold: both UNN readings agree with the cell, and
    ``h >= eps`` (or ``h < eps``) holds for the exact value, the closed form
    when the graph exceeds the exact-search cap, or an upper bound for the
    twin cycle.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    cap = max_exact_n() if max_n is None else max_n
    eps_q = as_fraction(eps)
    rows = []
    for cell, family, want_unn, want_large in _CELLS:
        size, step = _start(family, eps)
        for _ in range(max_steps):
            g, h, prov = _candidate(family, size, cap)
            rep = check_unn(g)
            unn_ok = rep.is_unn_distinct == want_unn and rep.is_unn_antichain == want_unn
            h_ok = h >= eps_q if want_large else h < eps_q
            if unn_ok and h_ok:
                break
            size += step
        else:
            raise RuntimeError(f"no {family} graph satisfies cell {cell} for eps={eps}")
        rows.append(
            Table1Row(cell, family, size, g.n, h, prov, rep.is_unn_distinct, rep.is_unn_antichain, want_unn, want_large)
        )
    return rows


def format_table1(rows: Sequence[Table1Row], eps: float) -> str:
    lines = [f"eps = {eps!r}", f"{'cell':<16} {'family':<19} {'size':>5} {'nodes':>5}  {'h':>10} {'h_float':>9}  {'how':<7} {'UNN':<4} h>=eps"]
    for r in rows:
        hq = f"{r.h.numerator}/{r.h.denominator}" if r.h.denominator != 1 else str(r.h.numerator)
        lines.append(
            f"{r.cell:<16} {r.family:<19} {r.size:>5} {r.num_nodes:>5}  {hq:>10} {float(r.h):>9.4f}  "
            f"{r.provenance:<7} {'yes' if r.expect_unn else 'no':<4} {'yes' if r.expect_h_ge_eps else 'no'}"
        )
    return "\n".join(lines) + "\n"


def table1_json(rows: Sequence[Table1Row], eps: float) -> str:
    return json.dumps({"eps": eps, "rows": [r.to_record() for r in rows]}, indent=2)
