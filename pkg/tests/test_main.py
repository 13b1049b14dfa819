import asyncio

from config import Config
from main import ReproductionRunner


def test_reproduction_run_passes():
    config = Config()
    runner = ReproductionRunner(config)

    assert asyncio.run(runner.initialize())
    assert asyncio.run(runner.run()) == 0
    assert runner.passed
    assert runner.errors == [] and runner.lemma_failures == []
    assert [report.basis for report in runner.oracles] == list(range(1, 9))
    assert all(report.trials == 500 and report.passed for report in runner.oracles)
    assert runner.classification.summary_line() == (
        "4 one-parameter families, 4 isolated subalgebras; bases 1,4,5,6,7,8: none"
    )
    asyncio.run(runner.shutdown())


def test_runner_refuses_small_max_n():
    config = Config()
    config.classify.max_n = 2
    runner = ReproductionRunner(config)
    assert not asyncio.run(runner.initialize())
    assert not runner.passed
