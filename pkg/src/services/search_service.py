"""Partitioned bit-parallel exhaustive search over packed binary sequences.

Candidates are the integers of [0, 2^N) held in numpy uint64 arrays, with
position 0 as the most significant of the N bits, so a left shift of a
sequence is a left rotation of its integer and lexicographic order is
numeric order. The range is cut into contiguous partitions; each partition
filters its candidates shift by shift and returns canonical (least)
rotations. Partitions are merged in order and deduplicated with np.unique,
so the result does not depend on the number of workers.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import InvalidInput, TooLarge
from src.helper.helper import get_thread_count, timing_decorator
from src.helper.logger import get_logger

logger = get_logger("search_service")

MAX_SEARCH_PERIOD = 28
PARTITION_BITS = 20

Partition = Tuple[int, int, int, Tuple[int, ...]]


def _rotate_left(values: np.ndarray, w: int, period: int) -> np.ndarray:
    w %= period
    if w == 0:
        return values
    mask = np.uint64((1 << period) - 1)
    return ((values << np.uint64(w)) | (values >> np.uint64(period - w))) & mask


def canonical_values(values: np.ndarray, period: int) -> np.ndarray:
    """Least rotation of every packed value, elementwise."""
    best = values.copy()
    for w in range(1, period):
        np.minimum(best, _rotate_left(values, w, period), out=best)
    return best


def partitions(period: int, args: Tuple[int, ...] = ()) -> List[Partition]:
    """Contiguous [start, stop) ranges covering [0, 2^period)."""
    total = 1 << period
    size = min(total, 1 << PARTITION_BITS)
    return [(period, start, min(start + size, total), args) for start in range(0, total, size)]


def scan_zero_autocorrelation(part: Partition) -> np.ndarray:
    """Canonical values in the partition with C_s(w) = 0 for every w in args."""
    period, start, stop, shifts = part
    if period % 2:
        return np.empty(0, dtype=np.uint64)
    half = period // 2
    values = np.arange(start, stop, dtype=np.uint64)
    for w in shifts:
        # C_s(w) = 0  <=>  wt(s xor T^w s) = N / 2
        differing = values ^ _rotate_left(values, w, period)
        values = values[np.bitwise_count(differing) == half]
        if values.size == 0:
            break
    return np.unique(canonical_values(values, period))


def scan_run_items(part: Partition) -> np.ndarray:
    """Canonical values with gamma = N/2 and N_s(R_1) = gamma/2.

    Bit i of d = s xor T^1 s marks a run boundary after position i, so
    gamma = wt(d), and a run of length 1 sits between two adjacent
    boundaries, so N_s(R_1) = wt(d and T^1 d).
    """
    period, start, stop, _ = part
    values = np.arange(start, stop, dtype=np.uint64)
    boundaries = values ^ _rotate_left(values, 1, period)
    gamma = np.bitwise_count(boundaries).astype(np.int64)
    singles = np.bitwise_count(boundaries & _rotate_left(boundaries, 1, period)).astype(np.int64)
    keep = (2 * gamma == period) & (2 * singles == gamma)
    return np.unique(canonical_values(values[keep], period))


class SearchService:
    """Runs a partition kernel over [0, 2^N) with a bounded worker pool."""

    def __init__(self, workers: Optional[int] = None) -> None:
        self.workers = workers if workers is not None else get_thread_count()
        if self.workers < 1:
            raise InvalidInput(f"worker count must be positive, got {self.workers}")

    @staticmethod
    def check_period(period: int) -> None:
        if period < 1:
            raise InvalidInput(f"period must be positive, got {period}")
        if period > MAX_SEARCH_PERIOD:
            logger.error(f"period {period} above the exhaustion bound {MAX_SEARCH_PERIOD}")
            raise TooLarge(f"exhaustive search is bounded to N <= {MAX_SEARCH_PERIOD}, got {period}")

    def _map(self, kernel: Callable[[Partition], np.ndarray], parts: Sequence[Partition]) -> Iterable[np.ndarray]:
        if self.workers == 1 or len(parts) == 1:
            return map(kernel, parts)
        with ProcessPoolExecutor(max_workers=min(self.workers, len(parts))) as pool:
            return list(pool.map(kernel, parts))

    def _run(self, kernel: Callable[[Partition], np.ndarray], period: int, args: Tuple[int, ...] = ()) -> List[int]:
        self.check_period(period)
        parts = partitions(period, args)
        logger.debug(f"{kernel.__name__}: {len(parts)} partitions, {self.workers} workers")
        found = [chunk for chunk in self._map(kernel, parts) if chunk.size]
        merged = np.unique(np.concatenate(found)) if found else np.empty(0, dtype=np.uint64)
        logger.log_step(f"{kernel.__name__} on period {period}: {merged.size} rotation classes")
        return [int(v) for v in merged]

    @timing_decorator
    def zero_autocorrelation_classes(self, period: int, max_shift: int) -> List[int]:
        """Rotation classes with C_s(w) = 0 for 1 <= w <= max_shift."""
        return self._run(scan_zero_autocorrelation, period, tuple(range(1, max_shift + 1)))

    @timing_decorator
    def run_item_classes(self, period: int) -> List[int]:
        """Rotation classes with gamma = N/2 and N_s(R_1) = gamma/2."""
        return self._run(scan_run_items, period)
