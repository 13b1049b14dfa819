"""
Clifford Subalgebras - Main Entry Point
Full reproduction run over g(3): classification, known subalgebras,
embeddings into higher g(n) and the sampling oracle
"""
import asyncio
import logging
import sys
from fractions import Fraction
from typing import List, Optional

from config import Config
from src.classify import (
    ClassificationResult,
    OracleReport,
    SignPatternReport,
    TheoremReport,
    classify_async,
    sampling_oracle,
    verify_lemma,
    verify_sign_patterns,
    verify_theorem,
)
from src.errors import CliffordError
from src.scalars import GaussianRational
from src.theorem import FAMILY_NAMES
from utils.logger import log_summary, setup_logging

logger = logging.getLogger(__name__)

N = 3
LEMMA_POINTS = (GaussianRational(0), GaussianRational(0, Fraction(5, 4)))
LEMMA_EMBEDDINGS = (1, 2)


class ReproductionRunner:
    """Runs every check once and collects a pass/fail status per stage"""

    def __init__(self, config: Config):
        self.config = config
        self.classification: Optional[ClassificationResult] = None
        self.theorem: Optional[TheoremReport] = None
        self.patterns: Optional[SignPatternReport] = None
        self.oracles: List[OracleReport] = []
        self.lemma_failures: List[str] = []
        self.errors: List[str] = []

    async def initialize(self) -> bool:
        logger.info("=" * 60)
        logger.info("CLIFFORD SUBALGEBRAS")
        logger.info("=" * 60)
        logger.info(f"Algebra: g({N}), subalgebras of dimension {(1 << N) - 1}")
        logger.info(f"Max branches: {self.config.solver.max_branches}")
        logger.info(f"Oracle: {self.config.oracle.trials} trials, seed {self.config.oracle.seed}")
        logger.info("=" * 60)

        if N > self.config.classify.max_n:
            logger.error(f"CLIFFSUB_MAX_N={self.config.classify.max_n} is below {N}")
            return False
        return True

    async def run(self) -> int:
        stages = (
            ("classification", self._classify),
            ("known subalgebras", self._verify_theorem),
            ("embeddings", self._verify_lemma),
            ("sampling oracle", self._run_oracles),
        )
        for name, stage in stages:
            logger.info(f"Stage: {name}")
            try:
                await stage()
            except CliffordError as e:
                logger.error(f"{name} failed: {e}")
                self.errors.append(f"{name}: {e}")
        return 0 if self.passed else 1

    async def _classify(self):
        self.classification = await classify_async(N, self.config)
        counts = self.classification.summary
        log_summary(
            N,
            counts["one_parameter_families"],
            counts["isolated"],
            counts["contradictions"],
            counts["unresolved"],
        )

    async def _verify_theorem(self):
        self.theorem = await asyncio.to_thread(verify_theorem, FAMILY_NAMES, self.classification)
        self.patterns = await asyncio.to_thread(verify_sign_patterns)
        if not self.patterns.passed:
            logger.warning("Sign-pattern controls differ from the printed patterns")

    async def _verify_lemma(self):
        checks = [(name, k, point) for name in FAMILY_NAMES for point in LEMMA_POINTS for k in LEMMA_EMBEDDINGS]
        results = await asyncio.gather(*(asyncio.to_thread(verify_lemma, *check) for check in checks))
        for (name, k, point), closed in zip(checks, results):
            if not closed:
                self.lemma_failures.append(f"{name} at a = {point} in g({N + k})")

    async def _run_oracles(self):
        oracle = self.config.oracle
        self.oracles = list(await asyncio.gather(*(
            asyncio.to_thread(sampling_oracle, m, oracle.trials, oracle.seed, N, oracle)
            for m in range(1, (1 << N) + 1)
        )))

    @property
    def passed(self) -> bool:
        return (
            not self.errors
            and self.classification is not None
            and self.classification.verified
            and self.theorem is not None
            and self.theorem.passed
            and self.patterns is not None
            and self.patterns.passed
            and not self.lemma_failures
            and bool(self.oracles)
            and all(report.passed for report in self.oracles)
        )

    async def shutdown(self):
        logger.info("=" * 60)
        logger.info("FINAL STATUS")
        if self.classification:
            logger.info(f"  Classification: {self.classification.summary_line()}")
        if self.theorem:
            verified = sum(1 for c in self.theorem.checks if c.closed and c.matched)
            logger.info(f"  Known subalgebras: {verified}/{len(self.theorem.checks)} closed and found")
        if self.patterns:
            logger.info(f"  Sign patterns: {'match' if self.patterns.passed else 'MISMATCH'}")
        total = len(FAMILY_NAMES) * len(LEMMA_POINTS) * len(LEMMA_EMBEDDINGS)
        logger.info(f"  Embeddings: {total - len(self.lemma_failures)}/{total} closed")
        for failure in self.lemma_failures:
            logger.warning(f"    not closed: {failure}")
        if self.oracles:
            disagreements = sum(len(r.disagreements) for r in self.oracles)
            hits = sum(len(r.hits) for r in self.oracles)
            logger.info(f"  Oracle: {len(self.oracles)} bases, {hits} closure hits, {disagreements} disagreements")
        for error in self.errors:
            logger.error(f"  {error}")
        logger.info(f"  Result: {'PASS' if self.passed else 'FAIL'}")
        logger.info("=" * 60)


async def main() -> int:
    config = Config.from_env()
    setup_logging(log_level=config.log.level, log_to_file=config.log.log_to_file)

    runner = ReproductionRunner(config)
    if not await runner.initialize():
        logger.error("Failed to initialize")
        return 2
    try:
        return await runner.run()
    finally:
        await runner.shutdown()


if __name__ == "__main__":
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        print("\nRun stopped by user")
        sys.exit(130)
