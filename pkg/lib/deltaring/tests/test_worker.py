import threading
import time

from deltaring import storage
from deltaring.catalog import Catalog
from deltaring.handler import Report
from deltaring.regression import RegressionContext, regression_entries
from deltaring.worker import run_entries, run_parallel


def test_results_keep_input_order():
    def slow_square(x):
        time.sleep(0.01 * (5 - x))
        return x * x

    assert run_parallel(slow_square, range(5), max_workers=5) == [0, 1, 4, 9, 16]
    assert run_parallel(slow_square, []) == []


def test_work_is_spread_over_threads():
    seen = set()
    barrier = threading.Barrier(2, timeout=5)

    def record(x):
        seen.add(threading.get_ident())
        barrier.wait()
        return x

    assert run_parallel(record, [1, 2], max_workers=2) == [1, 2]
    assert len(seen) == 2


def test_repeated_runs_agree(evaluator):
    ids = ['maschke', 'non-maschke', 'swap-square-zero']
    context = RegressionContext(Catalog(evaluator, tier='small'))
    verdicts = []
    for max_workers in (1, 3, 3):
        report = run_entries(regression_entries(ids), context, Report(storage.DEFAULT_CONFIG), max_workers=max_workers)
        assert not any(state.exception for state in report.states)
        verdicts.append([(state.guid, state.verdict) for state in report.states])
    assert verdicts[0] == verdicts[1] == verdicts[2]
    assert [guid for guid, _ in verdicts[0]] == ids
