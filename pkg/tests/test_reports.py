import json
import os

from verifier.cell_enumeration import enumerate_lowest_cell
from verifier.reports import (
    MODE_THEOREM,
    report_json,
    run_verification,
    select_tasks,
    theorem_pairs,
    write_report,
)
from verifier.settings import SuiteConfig


def test_select_all_tasks(sl3):
    items = enumerate_lowest_cell(sl3, 4)
    tasks = select_tasks(items, SuiteConfig(count=0))
    assert [i for i, _ in tasks] == list(range(len(items)))


def test_seeded_sample(sl3):
    items = enumerate_lowest_cell(sl3, 5)
    config = SuiteConfig(count=5, seed=11)
    tasks = select_tasks(items, config)
    indices = [i for i, _ in tasks]
    assert len(indices) == 5
    assert indices == sorted(indices)
    assert tasks == select_tasks(items, config)
    assert all(items[i] == cf for i, cf in tasks)


def test_corollary_report(tmp_path):
    report = run_verification(SuiteConfig(datum="SL:2", max_len=4, count=0))
    assert report["summary"]["mismatched"] == 0
    assert report["summary"]["matched"] == report["summary"]["total"] > 0
    assert report["config"]["mode"] == "corollary"
    path = tmp_path / "report.json"
    write_report(report, str(path))
    assert json.loads(path.read_text(encoding="utf-8")) == report


def test_job_count_does_not_change_the_report():
    single = run_verification(SuiteConfig(datum="SL:2", max_len=4, count=0, jobs=1))
    parallel = run_verification(SuiteConfig(datum="SL:2", max_len=4, count=0, jobs=2))
    assert report_json(single) == report_json(parallel)


def test_theorem_mode(sl3):
    pairs = theorem_pairs(sl3, 5)
    assert all(cf.w.length <= 5 for cf in pairs)
    report = run_verification(SuiteConfig(datum="SL:3", max_len=5, count=0), MODE_THEOREM)
    assert report["summary"]["total"] == len(pairs)
    assert report["summary"]["mismatched"] == 0


def test_store_backed_run(tmp_path):
    cache_dir = str(tmp_path / "kl")
    first = run_verification(SuiteConfig(datum="SL:2", max_len=3, count=0), cache_dir=cache_dir)
    second = run_verification(SuiteConfig(datum="SL:2", max_len=3, count=0), cache_dir=cache_dir)
    assert first == second
    assert any(name.endswith(".json") for name in os.listdir(cache_dir))
