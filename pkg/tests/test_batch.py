import nilcomplete.batch as batch
from nilcomplete.batch import check_instance, iter_instances, run_batch
from nilcomplete.matrices import IntMatrix
from nilcomplete.partitions import Partition as P

from support import count_instances


def test_instance_counts_match_independent_count():
    assert count_instances(10) == 569
    assert sum(1 for _ in iter_instances(10)) == 569
    assert count_instances(14) == 3302
    assert count_instances(20) == 28199


def test_batch_max_n_10_passes():
    report = run_batch(10)
    assert report.instances == 569
    assert report.ok and report.failures == []
    assert "instances: 569" in report.summary()


def test_parallel_report_matches_serial():
    a = run_batch(9, jobs=1)
    b = run_batch(9, jobs=2, check=False)
    assert (a.instances, a.failures) == (b.instances, b.failures)


def test_failures_are_reported(monkeypatch):
    real_run = batch.run

    class Broken:
        def __init__(self, res):
            self.X = res.X + IntMatrix.elementary(res.X.n, 1, 2)

    def broken(n, r, lam, options=None):
        res = real_run(n, r, lam, options)
        return Broken(res) if (n, r) == (4, 2) else res

    monkeypatch.setattr(batch, "run", broken)
    report = run_batch(5)
    assert not report.ok
    assert {(n, r) for n, r, _, _ in report.failures} == {(4, 2)}
    assert "FAIL n=4 r=2" in report.summary()


def test_check_instance_reports_reason():
    assert check_instance(10, 3, P([5, 4, 1])) is None
    assert "NoCompletionExists" in check_instance(10, 3, P([3, 3, 3, 1]))
