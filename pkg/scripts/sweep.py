"""Sweep sqrt(N) over a range of N and tabulate what the engines report.

    python scripts/sweep.py --max-n 10000 --workers 4
    python scripts/sweep.py --max-n 1000 --csv periods.csv

For every non-square N the logos engine and the state recurrence are run,
compared, and the period length, witness, palindrome status and
fundamental Pell solution are recorded.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from anthyphairesis.analysis import non_squares, species_count
from anthyphairesis.approx import convergents, pell_residue, period_end_index
from anthyphairesis.arith import SurdContext
from anthyphairesis.engine import anth_surd_logos, anth_surd_state


@dataclass
class SweepConfig:
    min_n: int = 2
    max_n: int = 10_000
    workers: int = 1
    csv_path: str | None = None


@dataclass
class Row:
    N: int
    period_length: int
    witness_m: int
    engines_agree: bool
    palindrome: bool
    species: int
    pell_p_digits: int
    pell_residue: int


def run_one(N: int) -> Row:
    exp = anth_surd_logos(SurdContext(N))
    oracle = anth_surd_state(0, 1, N)
    inner = exp.period[:-1]
    c = convergents(exp, period_end_index(exp) + 1)[-1]
    return Row(
        N=N,
        period_length=len(exp.period),
        witness_m=exp.witness.m,
        engines_agree=exp.canonical() == oracle.canonical(),
        palindrome=inner == inner[::-1] and exp.period[-1] == 2 * exp.initial[0],
        species=species_count(exp),
        pell_p_digits=len(str(c.p)),
        pell_residue=pell_residue(N, c),
    )


def sweep(cfg: SweepConfig) -> list[Row]:
    ns = non_squares(cfg.min_n, cfg.max_n)
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            return list(pool.map(run_one, ns, chunksize=128))
    return [run_one(N) for N in ns]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=SweepConfig.min_n)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--workers", type=int, default=SweepConfig.workers)
    ap.add_argument("--csv", dest="csv_path")
    cfg = SweepConfig(**vars(ap.parse_args(argv)))

    t0 = time.perf_counter()
    rows = sweep(cfg)
    elapsed = time.perf_counter() - t0

    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in rows)

    longest = max(rows, key=lambda r: r.period_length)
    biggest = max(rows, key=lambda r: r.pell_p_digits)
    disagree = [r.N for r in rows if not r.engines_agree]
    not_pal = [r.N for r in rows if not r.palindrome]
    bad_pell = [r.N for r in rows if abs(r.pell_residue) != 1]
    print(f"N in [{cfg.min_n}, {cfg.max_n}]: {len(rows)} non-squares in {elapsed:.2f} s")
    print(f"longest period: N={longest.N}, length {longest.period_length}")
    print(f"largest Pell solution: N={biggest.N}, p has {biggest.pell_p_digits} digits")
    print(f"engine disagreements: {disagree or 'none'}")
    print(f"palindrome failures: {not_pal or 'none'}")
    print(f"period-end residue != +-1: {bad_pell or 'none'}")
    return 0 if not (disagree or not_pal or bad_pell) else 1


if __name__ == "__main__":
    sys.exit(main())
