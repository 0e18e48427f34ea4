"""Oracle-equivalence harness for the run-series expansion.

For every tested sequence the run formula must reproduce the brute-force
autocorrelation and weight differences at every shift t in [1, N], and every
recurrence identity of the expansion must hold up to the recurrence depth.
Sequences are checked in partitions; the first failing sequence in input
order is reported, so the summary never depends on the worker count.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from src.core.errors import InvalidInput, TooLarge
from src.core.run_formula import expansion_identities, gamma_table
from src.core.sequence import BinarySequence, autocorr_bruteforce_profile, decompose_runs
from src.helper.helper import get_thread_count, timing_decorator
from src.helper.logger import get_logger
from src.services.report_service import VerifySummary

logger = get_logger("verify_service")

MAX_EXHAUSTIVE_VERIFY_PERIOD = 64
DEFAULT_RECURRENCE_DEPTH = 10
BATCH_SIZE = 4096

Job = TypeVar("Job")


@dataclass(frozen=True)
class BatchResult:
    sequences: int
    assertions: int
    counterexample: Optional[str] = None


def check_sequence(s: BinarySequence, recurrence_depth: int) -> Tuple[int, Optional[str]]:
    """Assertions made for `s` and a description of the first failure."""
    n = s.period
    oracle = autocorr_bruteforce_profile(s)
    rw = decompose_runs(s)
    table = gamma_table(rw, n - 1)
    via_runs = table.autocorrelations()
    diffs = table.wt_diffs()
    assertions = 0
    previous_wt = 0
    for t in range(1, n + 1):
        expected = oracle[t % n]
        wt = (n - expected) // 2
        assertions += 2
        if via_runs[t - 1] != expected:
            return assertions, f"{s}: C_s({t}) = {expected}, run formula gives {via_runs[t - 1]}"
        if diffs[t - 1] != wt - previous_wt:
            return assertions, f"{s}: weight difference at t={t} is {wt - previous_wt}, run formula gives {diffs[t - 1]}"
        previous_wt = wt
    for check in expansion_identities(rw, recurrence_depth):
        assertions += 1
        if not check.holds:
            return assertions, f"{s}: {check}"
    return assertions, None


def check_batch(job: Tuple[Sequence[str], int]) -> BatchResult:
    texts, depth = job
    assertions = 0
    for done, text in enumerate(texts, start=1):
        s = BinarySequence.from_bits([int(c) for c in text])
        count, failure = check_sequence(s, depth)
        assertions += count
        if failure is not None:
            return BatchResult(done, assertions, failure)
    return BatchResult(len(texts), assertions)


def exhaustive_batch(job: Tuple[int, int, int, int]) -> BatchResult:
    period, start, stop, depth = job
    texts = [format(value, f"0{period}b") for value in range(start, stop)]
    return check_batch((texts, depth))


class VerifyService:
    def __init__(self, workers: Optional[int] = None) -> None:
        self.workers = workers if workers is not None else get_thread_count()
        if self.workers < 1:
            raise InvalidInput(f"worker count must be positive, got {self.workers}")

    def _collect(self, kernel: Callable[[Job], BatchResult], jobs: Sequence[Job]) -> Tuple[int, int, Optional[str]]:
        results: Iterable[BatchResult]
        if self.workers == 1 or len(jobs) <= 1:
            results = map(kernel, jobs)
        else:
            with ProcessPoolExecutor(max_workers=min(self.workers, len(jobs))) as pool:
                results = list(pool.map(kernel, jobs))
        sequences = assertions = 0
        for result in results:
            sequences += result.sequences
            assertions += result.assertions
            if result.counterexample is not None:
                return sequences, assertions, result.counterexample
        return sequences, assertions, None

    @timing_decorator
    def exhaustive(self, period: int, recurrence_depth: int = DEFAULT_RECURRENCE_DEPTH) -> VerifySummary:
        """Every non-constant sequence of the period."""
        if period < 2:
            raise InvalidInput(f"period must be at least 2, got {period}")
        if period > MAX_EXHAUSTIVE_VERIFY_PERIOD:
            logger.error(f"exhaustive verification requested for period {period}")
            raise TooLarge(f"exhaustive mode is bounded to N <= {MAX_EXHAUSTIVE_VERIFY_PERIOD}, got {period}")
        last = (1 << period) - 1
        jobs = [(period, start, min(start + BATCH_SIZE, last), recurrence_depth)
                for start in range(1, last, BATCH_SIZE)]
        sequences, assertions, failure = self._collect(exhaustive_batch, jobs)
        logger.log_step(f"exhaustive period {period}: {sequences} sequences, {assertions} assertions")
        return VerifySummary(mode="exhaustive", periods=(period, period), sequences=sequences,
                             assertions=assertions, counterexample=failure)

    @timing_decorator
    def random(self,
               period: int,
               samples: int,
               seed: int,
               max_period: Optional[int] = None,
               recurrence_depth: int = DEFAULT_RECURRENCE_DEPTH) -> VerifySummary:
        """`samples` non-constant sequences drawn from default_rng(seed).

        Periods are uniform in [period, max_period] when max_period is given.
        """
        high = period if max_period is None else max_period
        if period < 2 or high < period:
            raise InvalidInput(f"invalid period range [{period}, {high}]")
        if samples < 1:
            raise InvalidInput(f"samples must be positive, got {samples}")
        rng = np.random.default_rng(seed)
        texts: List[str] = []
        while len(texts) < samples:
            n = int(rng.integers(period, high + 1))
            bits = rng.integers(0, 2, size=n)
            if bits.min() == bits.max():
                continue
            texts.append("".join(str(int(b)) for b in bits))
        jobs = [(texts[i:i + BATCH_SIZE // 8], recurrence_depth) for i in range(0, len(texts), BATCH_SIZE // 8)]
        sequences, assertions, failure = self._collect(check_batch, jobs)
        logger.log_step(f"random periods {period}..{high}: {sequences} sequences, {assertions} assertions")
        return VerifySummary(mode="random", periods=(period, high), sequences=sequences,
                             assertions=assertions, counterexample=failure)
