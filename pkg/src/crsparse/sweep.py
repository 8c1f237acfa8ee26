"""Sparsification sweeps over sample counts, comparing CR and ER sampling."""
import csv
import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._random import make_rng
from .errors import CrsparseError, InvalidParameter
from .graph import laplacian
from .linalg import pseudo_inv_sqrt
from .metrics import isotropic_error
from .sparsify import cr_sparsify, effective_resistances, er_sparsify

METHODS = ("cr", "er")
CSV_HEADER = ("r", "method", "retained_fraction", "isotropic_error", "seed", "wall_ms")


@dataclass(frozen=True)
class SweepRecord:
    r: int
    method: str
    repeat: int
    retained_fraction: float
    isotropic_error: float
    seed: int
    wall_ms: float
    error: Optional[str] = None  # set when this record failed

    @property
    def failed(self):
        return self.error is not None


def record_seed(seed, r, method, repeat):
    """Seed of one record, independent of sweep ordering."""
    # draw a 63-bit integer from the stream keyed by (seed, r, method, repeat)
    rng = make_rng(seed, r, METHODS.index(method), repeat)
    return int(rng.integers(0, 2**63 - 1))


def run_sweep(G, r_values, methods=METHODS, repeats=1, seed=0):
    """Sparsify ``G`` once per ``(r, method, repeat)`` and measure each sketch.

    Records are sorted by ``(r, method, repeat)``. A failure in one record
    (for example ER on a disconnected graph) is stored in ``error`` and the
    sweep continues.
    """
    methods = tuple(methods)
    for m in methods:
        if m not in METHODS:
            raise InvalidParameter(f"unknown method {m!r}")
    if repeats < 1:
        raise InvalidParameter("repeats must be >= 1")
    r_values = sorted(int(r) for r in r_values)
    L = laplacian(G)
    inv_sqrt = pseudo_inv_sqrt(L)
    table = None
    table_error = None
    if "er" in methods:
        try:
            table = effective_resistances(G, inv_sqrt)
        except CrsparseError as exc:
            table_error = f"{type(exc).__name__}: {exc}"

    records = []
    for r in r_values:
        for method in sorted(methods):
            for rep in range(repeats):
                s = record_seed(seed, r, method, rep)
                t0 = time.perf_counter()
                try:
                    if method == "cr":
                        out = cr_sparsify(G, r, make_rng(s))
                    else:
                        if table is None:
                            raise CrsparseError(table_error)
                        out = er_sparsify(G, r, make_rng(s), table=table)
                    err = isotropic_error(L, laplacian(out.sketch), inv_sqrt=inv_sqrt)
                    rec = SweepRecord(r, method, rep, out.retained_fraction, err, s,
                                      (time.perf_counter() - t0) * 1e3)
                except CrsparseError as exc:
                    rec = SweepRecord(r, method, rep, math.nan, math.nan, s,
                                      (time.perf_counter() - t0) * 1e3,
                                      error=str(exc) or type(exc).__name__)
                records.append(rec)
    return records


def summarize(records, stat=np.median):
    """``{(r, method): (stat of retained_fraction, stat of isotropic_error)}``."""
    groups = {}
    for rec in records:
        if not rec.failed:
            groups.setdefault((rec.r, rec.method), []).append(rec)
    return {
        key: (float(stat([x.retained_fraction for x in recs])),
              float(stat([x.isotropic_error for x in recs])))
        for key, recs in sorted(groups.items())
    }


def _fmt(x):
    return "nan" if math.isnan(x) else repr(float(x))


def write_csv(records, fh, timing=False):
    """Write sweep records; ``wall_ms`` is ``nan`` unless ``timing`` is set.

    Timings vary run to run, so leaving them out keeps output reproducible.
    """
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow([rec.r, rec.method, _fmt(rec.retained_fraction),
                         _fmt(rec.isotropic_error), rec.seed,
                         _fmt(rec.wall_ms) if timing else "nan"])
