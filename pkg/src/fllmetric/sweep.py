"""Exhaustive sweeps over Z_q^n with a deterministic parallel merge."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .errors import DomainError, ResourceGuardError
from .words import Word

__all__ = [
    "SweepSummary",
    "sweep",
    "default_workers",
    "split_ranges",
    "CSV_HEADER",
    "FORMULA_GUARD",
    "ENUMERATION_GUARD",
]

FORMULA_GUARD = 1 << 26
ENUMERATION_GUARD = 1 << 20
CSV_HEADER = ["n", "q", "t", "count", "min", "max", "sum", "avg_num", "avg_den", "mismatches"]
WORKERS_ENV = "FLLMETRIC_WORKERS"

_MODES = {
    "formula": kernels.MODE_FORMULA,
    "enumeration": kernels.MODE_ENUMERATION,
    "both": kernels.MODE_BOTH,
}


@dataclass(frozen=True)
class SweepSummary:
    n: int
    q: int
    radius: int
    count: int
    min_size: int
    max_size: int
    sum_size: int
    argmin: tuple[str, ...] = ()
    argmin_count: int = 0
    argmax: tuple[str, ...] = ()
    argmax_count: int = 0
    mismatches: tuple[tuple[str, int, int], ...] = ()
    oracle: str = "formula"

    @property
    def avg_size(self) -> Fraction:
        return Fraction(self.sum_size, self.count)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        d = asdict(self)
        avg = self.avg_size
        d["avg_size"] = f"{avg.numerator}/{avg.denominator}"
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SweepSummary":
        d = json.loads(text)
        d.pop("avg_size", None)
        d["argmin"] = tuple(d["argmin"])
        d["argmax"] = tuple(d["argmax"])
        d["mismatches"] = tuple(tuple(m) for m in d["mismatches"])
        return cls(**d)

    def csv_row(self) -> list[str]:
        avg = self.avg_size
        mism = ";".join(f"{w}:{f}:{o}" for w, f, o in self.mismatches)
        return [str(v) for v in (
            self.n, self.q, self.radius, self.count, self.min_size, self.max_size,
            self.sum_size, avg.numerator, avg.denominator,
        )] + [mism]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerow(self.csv_row())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SweepSummary":
        """Parse one CSV row. Witness lists are not part of the CSV format."""
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != CSV_HEADER:
            raise DomainError(f"unexpected CSV header {header}")
        row = dict(zip(header, next(reader)))
        mism = tuple(
            (w, int(f), int(o))
            for w, f, o in (m.split(":") for m in row["mismatches"].split(";") if m)
        )
        out = cls(
            int(row["n"]), int(row["q"]), int(row["t"]), int(row["count"]),
            int(row["min"]), int(row["max"]), int(row["sum"]), mismatches=mism,
        )
        if out.avg_size != Fraction(int(row["avg_num"]), int(row["avg_den"])):
            raise DomainError("avg columns inconsistent with sum / count")
        return out

    def csv_key(self) -> tuple:
        """The fields a CSV row carries, for round-trip comparison."""
        return (self.n, self.q, self.radius, self.count, self.min_size,
                self.max_size, self.sum_size, self.avg_size, self.mismatches)


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            w = int(env)
        except ValueError:
            raise DomainError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
        if w < 1:
            raise DomainError(f"{WORKERS_ENV} must be >= 1")
        return w
    return os.cpu_count() or 1


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous non-empty ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (i < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _run_range(args):
    return kernels.sweep_range(*args)


def _merge(parts, cap: int):
    lo_v = hi_v = None
    lo_c = hi_c = total = 0
    lo_r: list[int] = []
    hi_r: list[int] = []
    mism: list = []
    for p_lo, p_loc, p_lor, p_hi, p_hic, p_hir, p_tot, p_mism in parts:
        if p_lo is None:
            continue
        total += p_tot
        mism.extend(p_mism)
        if lo_v is None or p_lo < lo_v:
            lo_v, lo_c, lo_r = p_lo, 0, []
        if p_lo == lo_v:
            lo_c += p_loc
            lo_r.extend(p_lor)
        if hi_v is None or p_hi > hi_v:
            hi_v, hi_c, hi_r = p_hi, 0, []
        if p_hi == hi_v:
            hi_c += p_hic
            hi_r.extend(p_hir)
    return lo_v, lo_c, lo_r[:cap], hi_v, hi_c, hi_r[:cap], total, mism


def sweep(
    n: int,
    q: int,
    t: int,
    oracle: str = "formula",
    workers: Optional[int] = None,
    witness_cap: int = 64,
    guard: Optional[int] = None,
) -> SweepSummary:
    """Ball sizes of every word of Z_q^n at radius t, aggregated.

    ``oracle`` is "formula" (radius 0 or 1 only), "enumeration", or "both",
    which records every word where the two disagree. Ranges are contiguous
    and merged in index order, so the result does not depend on ``workers``.
    """
    if oracle not in _MODES:
        raise DomainError(f"oracle must be one of {sorted(_MODES)}, got {oracle!r}")
    if n < 1 or q < 2 or not 0 <= t <= n:
        raise DomainError(f"need n >= 1, q >= 2, 0 <= t <= n (n={n}, q={q}, t={t})")
    if oracle != "enumeration" and t > 1:
        raise DomainError(f"no closed form for radius {t}; use oracle='enumeration'")
    if witness_cap < 0:
        raise DomainError("witness_cap must be non-negative")
    if guard is None:
        guard = FORMULA_GUARD if oracle == "formula" else ENUMERATION_GUARD
    size = q**n
    if size > guard:
        raise ResourceGuardError(size, guard, "sweep")
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise DomainError("workers must be >= 1")

    mode = _MODES[oracle]
    jobs = [(n, q, t, lo, hi, mode, witness_cap) for lo, hi in split_ranges(size, workers)]
    if len(jobs) == 1:
        parts = [_run_range(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_run_range, jobs))
    lo_v, lo_c, lo_r, hi_v, hi_c, hi_r, total, mism = _merge(parts, witness_cap)

    def word(r: int) -> str:
        return str(Word.from_rank(r, n, q))

    return SweepSummary(
        n, q, t, size, lo_v, hi_v, total,
        argmin=tuple(word(r) for r in lo_r), argmin_count=lo_c,
        argmax=tuple(word(r) for r in hi_r), argmax_count=hi_c,
        mismatches=tuple((word(r), f, e) for r, f, e in mism),
        oracle=oracle,
    )
