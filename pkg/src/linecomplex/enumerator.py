"""Exhaustive, partitionable sweep over all 3,108,105 complexes.

Work is split into half-open colex-rank ranges.  Each range is swept on its
own and yields a :class:`CountLedger`; ledgers are plain value objects and
``merge`` is componentwise addition, so the merged result does not depend on
how the range was cut or on how many processes did the work.

The hot loop lives in a compiled extension (``_kernels``) when it is built,
otherwise in the pure-Python ``_pykernels``.  Set ``LINECOMPLEX_BACKEND=python``
to force the fallback.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from types import ModuleType
from typing import Iterable, Optional

from . import _layout, _pykernels
from .geometry import N_COMPLEXES, unrank_complex


def _load_backend() -> ModuleType:
    if os.environ.get("LINECOMPLEX_BACKEND", "").lower() == "python":
        return _pykernels
    try:
        from . import _kernels
    except ImportError:
        return _pykernels
    return _kernels


backend: ModuleType = _load_backend()
BACKEND: str = backend.BACKEND


def get_backend(name: Optional[str] = None) -> ModuleType:
    """``"cython"``, ``"python"`` or ``None`` for the one chosen at import."""
    if name is None:
        return backend
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")


@dataclass(frozen=True)
class SweepPartition:
    start_rank: int
    end_rank: int

    def __post_init__(self):
        if not 0 <= self.start_rank <= self.end_rank <= N_COMPLEXES:
            raise ValueError(f"bad partition [{self.start_rank}, {self.end_rank})")

    def __len__(self) -> int:
        return self.end_rank - self.start_rank


FULL_RANGE = SweepPartition(0, N_COMPLEXES)


def split(partition: SweepPartition, parts: int) -> list[SweepPartition]:
    """Cut ``partition`` into ``parts`` contiguous, nearly equal pieces."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    n = len(partition)
    bounds = [partition.start_rank + n * i // parts for i in range(parts + 1)]
    return [SweepPartition(a, b) for a, b in zip(bounds, bounds[1:])]


@dataclass(frozen=True)
class CountLedger:
    per_label: dict[str, int] = field(
        default_factory=lambda: dict.fromkeys(_layout.LABEL_NAMES, 0))
    stats: dict[str, int] = field(
        default_factory=lambda: dict.fromkeys(_layout.SLOT_NAMES, 0))

    @property
    def total(self) -> int:
        return self.stats["complexes"]

    @property
    def admissible(self) -> int:
        return self.per_label["ADMISSIBLE"]

    @property
    def oracle_disagreements(self) -> int:
        return self.stats["oracle_disagreements"]

    @property
    def determinant_checked(self) -> bool:
        """True when every complex in the ledger went through both oracles."""
        return self.stats["determinants_checked"] == self.total

    @classmethod
    def from_counts(cls, labels: Iterable[int], slots: Iterable[int]) -> "CountLedger":
        labels, slots = list(labels), list(slots)
        if len(labels) != _layout.N_LABELS or len(slots) != _layout.N_SLOTS:
            raise ValueError("counter vectors do not match the ledger layout")
        return cls(dict(zip(_layout.LABEL_NAMES, labels)),
                   dict(zip(_layout.SLOT_NAMES, slots)))

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "oracle_disagreements": self.oracle_disagreements,
            "per_label": dict(sorted(self.per_label.items())),
            "stats": dict(sorted(self.stats.items())),
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def rows(self) -> list[tuple[str, int]]:
        """Flat ``(key, count)`` rows, sorted, for csv/tsv output."""
        out = [("admissible", self.admissible),
               ("oracle_disagreements", self.oracle_disagreements),
               ("total", self.total)]
        out += [(f"label.{k}", v) for k, v in sorted(self.per_label.items())]
        out += [(f"stat.{k}", v) for k, v in sorted(self.stats.items())]
        return out


ZERO = CountLedger()


def merge(a: CountLedger, b: CountLedger) -> CountLedger:
    return CountLedger(
        {k: a.per_label[k] + b.per_label[k] for k in _layout.LABEL_NAMES},
        {k: a.stats[k] + b.stats[k] for k in _layout.SLOT_NAMES},
    )


def sweep(partition: SweepPartition, fast: bool = False,
          backend_name: Optional[str] = None) -> CountLedger:
    """Classify and check every complex whose rank lies in ``partition``.

    Both admissibility oracles run on each complex unless ``fast`` is set, in
    which case only the graph criterion runs and the ledger is not
    authoritative (``determinant_checked`` is False).
    """
    if len(partition) == 0:
        return CountLedger()
    kern = get_backend(backend_name)
    start_mask = unrank_complex(partition.start_rank).mask
    labels, slots = kern.sweep_counts(start_mask, len(partition), not fast)
    return CountLedger.from_counts(labels, slots)


def _sweep_task(args) -> CountLedger:
    part, fast, backend_name = args
    return sweep(part, fast, backend_name)


def sweep_all(jobs: int = 1, partition: SweepPartition = FULL_RANGE, parts: Optional[int] = None,
              fast: bool = False, backend_name: Optional[str] = None) -> CountLedger:
    """Sweep ``partition`` with ``jobs`` worker processes and merge the pieces."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    pieces = split(partition, parts or jobs)
    tasks = [(p, fast, backend_name) for p in pieces]
    if jobs == 1:
        ledgers = map(_sweep_task, tasks)
        return reduce(merge, ledgers, ZERO)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return reduce(merge, pool.map(_sweep_task, tasks), ZERO)


def count_admissible(jobs: int = 1) -> int:
    return sweep_all(jobs).admissible


def label_codes(partition: SweepPartition = FULL_RANGE,
                backend_name: Optional[str] = None) -> bytearray:
    """One taxonomy label code per complex in ``partition``, in rank order."""
    if len(partition) == 0:
        return bytearray()
    kern = get_backend(backend_name)
    return kern.label_codes(unrank_complex(partition.start_rank).mask, len(partition))
