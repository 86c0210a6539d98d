"""Run lemma checks and counterexample searches over finite populations."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .census import CENSUS_CAP, CapExceeded
from .checks import CHECKS, CHECKS_BY_ID, Unit
from .searches import SEARCHES_BY_ID
from .witness import FAIL, FOUND, NOT_FOUND, PASS, Witness, WitnessReport

DEFAULT_MAX_POINTS = 4


class UnknownWitnessId(KeyError):
    pass


class UnknownCheckId(KeyError):
    pass


def default_jobs() -> int:
    return os.cpu_count() or 1


def _evaluate(task: tuple[str, Unit]) -> tuple[int, Witness | None]:
    check = CHECKS_BY_ID[task[0]]
    count = 0
    failure = None
    for w in check.instances(task[1]):
        count += 1
        if failure is None and not check.holds(w):
            failure = w
    return count, failure


def run_lemma_suite(
    max_n: int = DEFAULT_MAX_POINTS,
    checks: Sequence[str] | None = None,
    jobs: int = 1,
) -> list[WitnessReport]:
    """Run the selected checks (all by default) and return one report each.

    Work units are evaluated in a process pool when ``jobs > 1``; results
    are merged in unit order, so the reports do not depend on ``jobs``.
    """
    if max_n > CENSUS_CAP:
        raise CapExceeded(f"max_n {max_n} exceeds the census cap of {CENSUS_CAP}")
    ids = [c.id for c in CHECKS] if checks is None else list(checks)
    for cid in ids:
        if cid not in CHECKS_BY_ID:
            raise UnknownCheckId(cid)
    tasks = [(cid, unit) for cid in ids for unit in CHECKS_BY_ID[cid].units(max_n)]
    if jobs > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=chunk))
    else:
        results = [_evaluate(t) for t in tasks]

    totals: dict[str, list] = {cid: [0, None] for cid in ids}
    for (cid, _), (count, failure) in zip(tasks, results):
        entry = totals[cid]
        entry[0] += count
        if entry[1] is None and failure is not None:
            entry[1] = failure
    reports = []
    for cid in ids:
        count, failure = totals[cid]
        reports.append(
            WitnessReport(
                cid,
                FAIL if failure is not None else PASS,
                count,
                failure,
                empirical=CHECKS_BY_ID[cid].empirical,
            )
        )
    return reports


def suite_exit_code(reports: Iterable[WitnessReport]) -> int:
    """0 unless an asserted (non-empirical) check failed."""
    return int(any(r.status == FAIL and not r.empirical for r in reports))


def search_counterexample(witness_id: str, max_n: int = DEFAULT_MAX_POINTS) -> WitnessReport:
    """Scan carrier sizes 1, 2, ... and stop at the first witness.

    Map and product searches are clamped to their own point limit; the
    bound actually scanned is recorded on the report.
    """
    if witness_id not in SEARCHES_BY_ID:
        raise UnknownWitnessId(witness_id)
    if max_n > CENSUS_CAP:
        raise CapExceeded(f"max_n {max_n} exceeds the census cap of {CENSUS_CAP}")
    search = SEARCHES_BY_ID[witness_id]
    bound = max_n if search.max_points is None else min(max_n, search.max_points)
    scanned = 0
    for k in range(1, bound + 1):
        for w in search.candidates(k):
            scanned += 1
            if search.is_witness(w):
                return WitnessReport(witness_id, FOUND, scanned, w, bound=bound)
    return WitnessReport(witness_id, NOT_FOUND, scanned, None, bound=bound)


def replay(check_id: str, witness: Witness) -> str:
    """Re-evaluate a single witness and return the status it implies."""
    if check_id in CHECKS_BY_ID:
        return PASS if CHECKS_BY_ID[check_id].holds(witness) else FAIL
    if check_id in SEARCHES_BY_ID:
        return FOUND if SEARCHES_BY_ID[check_id].is_witness(witness) else NOT_FOUND
    raise UnknownCheckId(check_id)
