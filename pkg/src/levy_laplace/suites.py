"""Verification grids shared by the command line and the acceptance tests.

Each suite is a list of zero-argument jobs returning reports.  Jobs run on a
thread pool but results come back in grid order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, Iterable

from .density import RationalOrder, verify_defining_property
from .identities import (
    J_CASES,
    CorrelationParams,
    verify_correlation,
    verify_j_case,
    verify_symmetry,
    verify_transitivity,
)
from .quadrature import QuadratureConfig
from .report import VerificationReport
from .transforms import CATALOG, THEOREM1_PAIRS, Variant, verify_theorem1

R = RationalOrder

DEFINING_ALPHAS = (R(1, 3), R(1, 2), R(2, 3), R(3, 4), R(5, 6))
DEFINING_PS = (0.1, 0.5, 1.0, 2.0, 5.0)
THEOREM1_ALPHAS = (R(1, 3), R(1, 2), R(2, 3), R(3, 4))
THEOREM1_PS = (0.5, 1.0, 2.0, 4.0)
PAIR_GRID = ((R(1, 2), R(1, 2)), (R(2, 3), R(1, 2)), (R(3, 4), R(2, 3)))
XY_GRID = tuple((x, y) for x in (0.5, 1.0, 2.0) for y in (0.5, 1.0, 2.0))
CORRELATION_PS = (0.5, 1.0, 2.0)
CORRELATION_YS = (0.5, 1.0)

DEFAULT_TOLERANCES = {
    "defining": 1e-8,
    "theorem1": 1e-6,
    "transitivity": 1e-6,
    "correlation": 1e-5,
    "symmetry": 1e-15,
    "j-cases": 1e-6,
}

SUITES = ("defining", "theorem1", "transitivity", "correlation", "j-cases")

Job = Callable[[], "VerificationReport | list[VerificationReport]"]


def _defining_job(alpha, p, tol):
    # verify_defining_property reports max(abs_tol, 1e-8); apply the requested tolerance instead
    rep = verify_defining_property(alpha, p, QuadratureConfig(abs_tol=1e-11, rel_tol=1e-11))
    return VerificationReport.compare(rep.identity, rep.params, rep.computed, rep.reference, tol,
                                      error_kind="absolute")


def defining_jobs(tol: float | None = None) -> list[Job]:
    tol = tol or DEFAULT_TOLERANCES["defining"]
    return [partial(_defining_job, a, p, tol) for a in DEFINING_ALPHAS for p in DEFINING_PS]


def theorem1_jobs(tol: float | None = None) -> list[Job]:
    tol = tol or DEFAULT_TOLERANCES["theorem1"]
    return [
        partial(verify_theorem1, CATALOG[name], a, variant, p, tol=tol)
        for name in THEOREM1_PAIRS
        for a in THEOREM1_ALPHAS
        for variant in Variant
        for p in THEOREM1_PS
    ]


def transitivity_jobs(tol: float | None = None) -> list[Job]:
    tol = tol or DEFAULT_TOLERANCES["transitivity"]
    return [
        partial(verify_transitivity, kind, a, b, y, x, tol=tol)
        for kind in ("M", "N")
        for a, b in PAIR_GRID
        for x, y in XY_GRID
    ]


def correlation_jobs(tol: float | None = None) -> list[Job]:
    tol = tol or DEFAULT_TOLERANCES["correlation"]
    jobs: list[Job] = []
    for a, b in PAIR_GRID:
        params = CorrelationParams(a, b)
        for p in CORRELATION_PS:
            for y in CORRELATION_YS:
                jobs.append(partial(verify_correlation, params, p, y, tol=tol))
                jobs.append(partial(verify_symmetry, params, p, y, DEFAULT_TOLERANCES["symmetry"]))
    return jobs


def j_case_jobs(tol: float | None = None) -> list[Job]:
    tol = tol or DEFAULT_TOLERANCES["j-cases"]
    return [partial(verify_j_case, case, x, y, tol=tol) for case in J_CASES for x, y in XY_GRID]


_BUILDERS = {
    "defining": defining_jobs,
    "theorem1": theorem1_jobs,
    "transitivity": transitivity_jobs,
    "correlation": correlation_jobs,
    "j-cases": j_case_jobs,
}


def suite_jobs(name: str, tol: float | None = None) -> list[Job]:
    if name == "all":
        return [job for suite in SUITES for job in _BUILDERS[suite](tol)]
    try:
        return _BUILDERS[name](tol)
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES + ('all',))}") from None


def thread_count() -> int:
    """Worker count from ``LEVY_LAPLACE_THREADS`` (0 or unset means automatic)."""
    raw = os.environ.get("LEVY_LAPLACE_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("LEVY_LAPLACE_THREADS must be >= 0")
    return n if n > 0 else min(8, os.cpu_count() or 1)


def run_jobs(jobs: Iterable[Job], threads: int | None = None) -> list[VerificationReport]:
    """Run jobs concurrently; the flattened reports keep the job order."""
    jobs = list(jobs)
    threads = threads or thread_count()
    if threads == 1:
        results = [job() for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda job: job(), jobs))
    out: list[VerificationReport] = []
    for r in results:
        out.extend(r if isinstance(r, list) else [r])
    return out


def run_suite(name: str, tol: float | None = None, threads: int | None = None) -> list[VerificationReport]:
    return run_jobs(suite_jobs(name, tol), threads)
