"""
Verification Runs
Runs the factorization checks over the lowest cell, optionally in worker processes, and assembles the JSON report
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from affine_weyl.bruhat import elements_up_to_length
from affine_weyl.factorizations import is_reduced_pair
from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import GroupElement
from affine_weyl.root_datum import RootDatum, parse_datum
from hecke_algebra.kl_basis import KLCache
from primitive_cells.lowest_cell import CellFactorization
from primitive_cells.primitive_elements import enumerate_primitive

from .cell_enumeration import enumerate_lowest_cell
from .factorization_check import STATUS_MATCH, STATUS_MISMATCH, STATUS_SKIPPED, verify_factorization, verify_main_theorem
from .kl_store import KLStore
from .settings import SuiteConfig

logger = logging.getLogger(__name__)

MODE_COROLLARY = "corollary"
MODE_THEOREM = "theorem"

Task = Tuple[int, CellFactorization]


def theorem_pairs(datum: RootDatum, max_len: int) -> List[CellFactorization]:
    """(v1, v2) with v1 primitive, w_0 * v2 reduced and l(v1 w_0 v2) <= max_len, as zero-lambda factorizations"""
    w0 = longest_element(datum)
    budget = max_len - w0.length
    if budget < 0:
        return []
    right = [z for z in elements_up_to_length(datum, budget) if is_reduced_pair(w0, z)]
    zero = tuple(0 for _ in range(datum.lattice_dim))
    pairs = []
    for v1 in enumerate_primitive(datum):
        for v2 in right:
            if v1.length + v2.length <= budget:
                pairs.append(CellFactorization(w=v1 * w0 * v2, v1=v1, lam=zero, v2=v2))
    pairs.sort(key=lambda cf: (cf.w.length, str(cf.w)))
    return pairs


def select_tasks(items: Sequence[CellFactorization], config: SuiteConfig) -> List[Task]:
    """All items, or a seeded sample of config.count of them kept in enumeration order"""
    if not config.count or config.count >= len(items):
        return list(enumerate(items))
    rng = np.random.default_rng(config.seed)
    chosen = sorted(int(i) for i in rng.choice(len(items), size=config.count, replace=False))
    return [(i, items[i]) for i in chosen]


def _make_cache(config: SuiteConfig, cache_dir: Optional[str]) -> KLCache:
    store = KLStore(cache_dir) if cache_dir else None
    return KLCache(length_cap=config.length_cap, store=store)


def verify_tasks(tasks: Sequence[Task], config: SuiteConfig, mode: str,
                 cache_dir: Optional[str] = None) -> List[Tuple[int, Dict[str, Any]]]:
    """Runs one shard with its own KL cache"""
    cache = _make_cache(config, cache_dir)
    results = []
    for index, cf in tasks:
        if mode == MODE_THEOREM:
            report = verify_main_theorem(cf.v1, cf.v2, cache, config.record_timings)
        else:
            report = verify_factorization(cf.w, cache, config.record_timings, config.dimension_cap, factorization=cf)
        logger.debug(f"{report.w}: {report.status}")
        results.append((index, report.to_dict()))
    return results


def summarize(results: Sequence[Dict[str, Any]]) -> Dict[str, int]:
    statuses = [r["status"] for r in results]
    return {
        "total": len(statuses),
        "matched": statuses.count(STATUS_MATCH),
        "mismatched": statuses.count(STATUS_MISMATCH),
        "skipped": statuses.count(STATUS_SKIPPED),
    }


def run_verification(config: SuiteConfig, mode: str = MODE_COROLLARY, cache_dir: Optional[str] = None) -> Dict[str, Any]:
    """
    Verify every selected element and return the report.

    With config.jobs > 1 the tasks are dealt round-robin to worker processes;
    results are put back in enumeration order, so the report does not depend
    on the number of jobs.
    """
    datum = parse_datum(config.datum)
    if mode == MODE_THEOREM:
        items = theorem_pairs(datum, config.max_len)
    else:
        items = enumerate_lowest_cell(datum, config.max_len, config.max_coord)
    tasks = select_tasks(items, config)
    logger.info(f"Verifying {len(tasks)} elements of {datum.selector} ({mode}) with {config.jobs} job(s)")

    if config.jobs == 1 or len(tasks) <= 1:
        indexed = verify_tasks(tasks, config, mode, cache_dir)
    else:
        shards = [tasks[k::config.jobs] for k in range(config.jobs)]
        indexed = []
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            futures = [executor.submit(verify_tasks, shard, config, mode, cache_dir) for shard in shards if shard]
            for future in futures:
                indexed.extend(future.result())
    indexed.sort(key=lambda pair: pair[0])
    results = [r for _, r in indexed]

    config_data = config.to_dict()
    config_data["mode"] = mode
    summary = summarize(results)
    logger.info(f"Verification finished: {summary}")
    return {"config": config_data, "results": results, "summary": summary}


def report_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def write_report(report: Dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(report_json(report))
        f.write("\n")
    logger.info(f"Report written to {path}")
