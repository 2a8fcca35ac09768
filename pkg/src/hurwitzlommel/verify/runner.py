"""Run identity cases, one at a time or concurrently"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import pandas as pd

from hurwitzlommel.errors import ConfigurationError
from hurwitzlommel.verify.cases import IdentityCase
from hurwitzlommel.verify.checks import DEFAULT_OPTIONS, CheckOptions, evaluate_case
from hurwitzlommel.verify.report import SuiteResult, VerificationReport

logger = logging.getLogger(__name__)


class SuiteRunner:
    """Evaluate identity cases with a fixed set of numerical controls"""

    def __init__(self, options: CheckOptions = DEFAULT_OPTIONS, parallelism: int = 1):
        """``parallelism`` is the number of worker threads; 1 evaluates in the calling thread"""
        if isinstance(parallelism, bool) or not isinstance(parallelism, int) or parallelism < 1:
            raise ConfigurationError(f"parallelism must be a positive integer, got {parallelism!r}")
        self.options = options
        self.parallelism = parallelism

    def run_one(self, case: IdentityCase) -> VerificationReport:
        return evaluate_case(case, self.options)

    def run(self, cases: Sequence[IdentityCase]) -> SuiteResult:
        """Evaluate every case and return the reports in case order

        Each case is computed by a single thread with fixed node sets, so the
        reports do not depend on ``parallelism``.
        """
        cases = list(cases)
        logger.info(f"Running {len(cases)} identity cases with parallelism {self.parallelism}")
        start = time.perf_counter()
        if self.parallelism == 1 or len(cases) <= 1:
            reports = [self.run_one(case) for case in cases]
        else:
            with ThreadPoolExecutor(max_workers=min(self.parallelism, len(cases))) as pool:
                reports = list(pool.map(self.run_one, cases))
        result = SuiteResult(reports)
        counts = ", ".join(f"{status}={count}" for status, count in result.counts().items() if count)
        logger.info(f"Finished {len(cases)} cases in {time.perf_counter() - start:.1f}s ({counts or 'empty'})")
        return result


def run_case(case: IdentityCase, options: CheckOptions = DEFAULT_OPTIONS) -> VerificationReport:
    """Evaluate one case"""
    return SuiteRunner(options).run_one(case)


def run_suite(
    cases: Sequence[IdentityCase],
    parallelism: int = 1,
    options: Optional[CheckOptions] = None,
) -> SuiteResult:
    """Evaluate cases concurrently, reports in input order"""
    return SuiteRunner(options or DEFAULT_OPTIONS, parallelism).run(cases)


def suite_frame(
    cases: Sequence[IdentityCase],
    parallelism: int = 1,
    options: Optional[CheckOptions] = None,
) -> pd.DataFrame:
    """Evaluate cases and return the reports as a DataFrame"""
    return run_suite(cases, parallelism, options).to_df()
