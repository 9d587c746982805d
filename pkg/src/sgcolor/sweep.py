"""Randomized sweep: compute every invariant on random instances and check the relations between them."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional

from .arith import format_ratio
from .families import random_signed, random_switching
from .sgraph import SignedGraph, format_graph, is_antibalanced, is_balanced
from .solve import report

COLUMNS = (
    "seed", "n", "m", "balanced", "antibalanced", "chi", "chi_c", "chi_pm",
    "chi_minus_chic", "bounds", "gap", "charac", "pm", "witness_k_le_4n",
    "switch_invariant",
)
CHECKS = ("bounds", "gap", "charac", "pm", "witness_k_le_4n", "switch_invariant")


class SweepFailure(RuntimeError):
    def __init__(self, row: "SweepRow", graph: SignedGraph):
        failed = [name for name in CHECKS if not getattr(row, name)]
        super().__init__(f"seed {row.seed}: checks failed: {', '.join(failed)}")
        self.row = row
        self.graph = graph


@dataclass(frozen=True)
class SweepRow:
    seed: int
    n: int
    m: int
    balanced: bool
    antibalanced: bool
    chi: int
    chi_c: Fraction
    chi_pm: int
    chi_minus_chic: Fraction
    bounds: bool
    gap: bool
    charac: bool
    pm: bool
    witness_k_le_4n: bool
    switch_invariant: bool

    @property
    def ok(self) -> bool:
        return all(getattr(self, name) for name in CHECKS)

    def as_csv(self) -> list[str]:
        out = []
        for name in COLUMNS:
            value = getattr(self, name)
            if isinstance(value, bool):
                out.append("true" if value else "false")
            elif isinstance(value, Fraction):
                out.append(format_ratio(value))
            else:
                out.append(str(value))
        return out


def evaluate(g: SignedGraph, seed: int, switchings: int = 5) -> SweepRow:
    rep = report(g)
    invariant = True
    for j in range(switchings):
        h, _ = random_switching(g, 1 + j, seed * 7919 + j)
        other = report(h)
        if (other.chi, other.chi_c.value, other.chi_pm) != (rep.chi, rep.chi_c.value, rep.chi_pm):
            invariant = False
            break
    return SweepRow(
        seed=seed,
        n=g.n,
        m=g.m,
        balanced=is_balanced(g).balanced,
        antibalanced=is_antibalanced(g),
        chi=rep.chi,
        chi_c=rep.chi_c.value,
        chi_pm=rep.chi_pm,
        chi_minus_chic=rep.chi - rep.chi_c.value,
        bounds=rep.bounds_ok,
        gap=rep.gap_ok,
        charac=rep.charac_ok,
        pm=rep.pm_ok,
        witness_k_le_4n=rep.chi_c.witness_k <= 4 * max(g.n, 1),
        switch_invariant=invariant,
    )


def instance(i: int, n: int, seed: int, min_n: Optional[int], p: float, q: float) -> tuple[int, SignedGraph]:
    s = seed + i
    size = n if min_n is None else min_n + i % (n - min_n + 1)
    return s, random_signed(size, p, q, s)


def _job(args: tuple) -> tuple[SweepRow, SignedGraph]:
    i, n, seed, min_n, p, q, switchings = args
    s, g = instance(i, n, seed, min_n, p, q)
    return evaluate(g, s, switchings), g


def run_sweep(
    n: int,
    count: int,
    seed: int,
    min_n: Optional[int] = None,
    p: float = 0.5,
    q: float = 0.5,
    switchings: int = 5,
    jobs: int = 1,
) -> Iterator[SweepRow]:
    """Yield rows in seed order; raise SweepFailure at the first failing instance."""
    tasks = [(i, n, seed, min_n, p, q, switchings) for i in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = pool.map(_job, tasks, chunksize=4)
            for row, g in results:
                if not row.ok:
                    raise SweepFailure(row, g)
                yield row
        return
    for task in tasks:
        row, g = _job(task)
        if not row.ok:
            raise SweepFailure(row, g)
        yield row


def write_csv(rows, out: io.TextIOBase) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    count = 0
    for row in rows:
        writer.writerow(row.as_csv())
        count += 1
    return count


def write_failure(failure: SweepFailure, path: Path) -> None:
    path.write_text(f"# {failure}\n" + format_graph(failure.graph))
