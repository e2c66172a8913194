"""Timing harness for the composition kernels.

Kernels are cross-checked on every input before any timing happens, and each
timed output is compared with the verified reference.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .rings import DomainError, Ring
from .sampling import random_series
from .series import KERNELS, TruncatedSeries, identity

__all__ = ["BenchRow", "KernelMismatch", "run_bench", "format_csv", "CSV_HEADER"]

CSV_HEADER = "kernel,precision,repetitions,nanos"


class KernelMismatch(DomainError):
    """Two composition kernels disagreed on the same input."""


@dataclass(frozen=True)
class BenchRow:
    kernel: str
    precision: int
    repetitions: int
    nanos: int  # total wall time over all repetitions

    def csv(self) -> str:
        return f"{self.kernel},{self.precision},{self.repetitions},{self.nanos}"


def _inputs(ring: Ring, m: int, seed: int, use_identity: bool) -> tuple[TruncatedSeries, TruncatedSeries]:
    if use_identity:
        e = identity(ring, m)
        return e, e
    rng = random.Random(f"{seed}:{m}")
    return random_series(ring, m, rng), random_series(ring, m, rng)


def run_bench(
    sizes: Iterable[int],
    ring: Ring,
    kernels: Sequence[str] = ("horner", "power-table"),
    repetitions: int = 3,
    seed: int = 0,
    use_identity: bool = False,
) -> list[BenchRow]:
    unknown = [k for k in kernels if k not in KERNELS]
    if unknown:
        raise ValueError(f"unknown kernels {unknown}; choose from {sorted(KERNELS)}")
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    rows = []
    for m in sizes:
        f, g = _inputs(ring, m, seed, use_identity)
        outputs = {k: KERNELS[k](f, g) for k in kernels}
        reference = next(iter(outputs.values()))
        for k, out in outputs.items():
            if out != reference:
                raise KernelMismatch(f"kernel {k} disagrees at precision {m}")
        if use_identity and not reference.is_identity():
            raise KernelMismatch(f"identity composition is not the identity at precision {m}")
        for k in kernels:
            impl = KERNELS[k]
            total = 0
            for _ in range(repetitions):
                t0 = time.perf_counter_ns()
                out = impl(f, g)
                total += time.perf_counter_ns() - t0
                if out != reference:
                    raise KernelMismatch(f"kernel {k} changed its output at precision {m}")
            rows.append(BenchRow(k, m, repetitions, total))
    return rows


def format_csv(rows: Iterable[BenchRow]) -> str:
    return "\n".join([CSV_HEADER, *(r.csv() for r in rows)])
