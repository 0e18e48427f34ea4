"""Characterisations built on the run formula.

Zero-correlation-zone sequences, run blocks, cyclic difference sets and
circulant Hadamard matrices. Zones are measured with the brute-force oracle;
the run-structure predicates are evaluated separately so the two can be
compared rather than one trusted to prune for the other.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.core.errors import CrossCheckFailure, InvalidInput
from src.core.run_formula import gamma_table
from src.core.sequence import (
    BinarySequence,
    RunPattern,
    RunWord,
    autocorr_bruteforce_profile,
    count_pattern,
    decompose_runs,
    run_length_counts,
)
from src.helper.logger import get_logger
from src.services.search_service import SearchService

logger = get_logger("applications")


@dataclass(frozen=True)
class BlockStructure:
    """Maximal cyclic groups P_i of consecutive runs of length exactly i."""
    run_length: int
    blocks: Tuple[int, ...]
    covers_whole_cycle: bool

    @property
    def count(self) -> int:
        """N_s(P_i)."""
        return len(self.blocks)

    @property
    def singletons(self) -> int:
        """Blocks with L(P_i) = 1."""
        return sum(1 for size in self.blocks if size == 1)


def blocks(rw: RunWord, i: int) -> BlockStructure:
    if all(length == i for length in rw.lengths):
        return BlockStructure(i, (rw.gamma,), True)
    # start scanning right after a run that is not R_i so no block is split
    anchor = next(q for q, length in enumerate(rw.lengths) if length != i)
    sizes: List[int] = []
    current = 0
    for step in range(1, rw.gamma + 1):
        if rw.length(anchor + step) == i:
            current += 1
        elif current:
            sizes.append(current)
            current = 0
    if current:
        sizes.append(current)
    return BlockStructure(i, tuple(sizes), False)


def zcz_zone(s: BinarySequence) -> int:
    """Largest T with C_s(w) = 0 for 1 <= w <= T."""
    profile = autocorr_bruteforce_profile(s)
    zone = 0
    for w in range(1, s.period):
        if profile[w]:
            break
        zone = w
    return zone


def is_almost_perfect(s: BinarySequence) -> bool:
    """C_s(t) = 0 for every t other than 0 and N/2."""
    profile = autocorr_bruteforce_profile(s)
    return all(profile[t] == 0 for t in range(1, s.period) if 2 * t != s.period)


def _gamma(s: BinarySequence) -> Tuple[Optional[RunWord], int]:
    if s.is_constant():
        return None, 0
    rw = decompose_runs(s)
    return rw, rw.gamma


@dataclass(frozen=True)
class ZczCharacterization:
    """The three run-structure items for C_s(w) = 0 on 1 <= w <= D."""
    zone: int
    gamma_half: bool
    singles_half: bool
    gamma_p_vanish: bool
    first_nonzero_t: Optional[int] = None

    @property
    def items(self) -> Tuple[bool, bool, bool]:
        return self.gamma_half, self.singles_half, self.gamma_p_vanish

    @property
    def holds(self) -> bool:
        return all(self.items)


def check_zcz_characterization(s: BinarySequence, D: int) -> ZczCharacterization:
    if not 1 <= D < s.period:
        raise InvalidInput(f"zone bound must satisfy 1 <= D < {s.period}, got {D}")
    rw, gamma = _gamma(s)
    if rw is None:
        return ZczCharacterization(D, False, False, False)
    gamma_half = 2 * gamma == s.period
    # C_s(2) = C_s(1) only matters once the zone reaches 2
    singles_half = D < 2 or 2 * count_pattern(rw, RunPattern((1,))) == gamma
    first_nonzero = None
    if D > 2:
        table = gamma_table(rw, D - 1)
        first_nonzero = next((t for t in range(2, D) if table.at(t)), None)
    return ZczCharacterization(D, gamma_half, singles_half, first_nonzero is None, first_nonzero)


@dataclass(frozen=True)
class ZoneFourConditions:
    """The four run items for C_s(1..4) = 0 with the counts behind them.

    Items that use N_s(P_1) are None when every run has length 1.
    """
    period: int
    gamma: int
    r1: int
    r2: int
    r1r2: int
    r2r1: int
    long_runs: int          # sum over l >= 4 of N_s(R_l)
    p1: Optional[int]
    p1_singletons: Optional[int]
    item1: bool
    item2: bool
    item3: Optional[bool]
    item4: Optional[bool]
    long_runs_match_blocks: Optional[bool]  # sum_{j>=3} N_s(R_j) == N_s(P_1)

    @property
    def items(self) -> Tuple[bool, bool, Optional[bool], Optional[bool]]:
        return self.item1, self.item2, self.item3, self.item4

    @property
    def holds(self) -> bool:
        return all(item is True for item in self.items)


@dataclass(frozen=True)
class ZczReport:
    zone: int
    conditions: ZoneFourConditions
    characterization_consistent: bool


def long_runs_match_blocks(rw: RunWord) -> Optional[bool]:
    """Run side of C_s(1) = C_s(3): sum_{j>=3} N_s(R_j) = N_s(P_1)."""
    block = blocks(rw, 1)
    if block.covers_whole_cycle:
        return None
    long = sum(count for length, count in run_length_counts(rw).items() if length >= 3)
    return long == block.count


def zone_four_conditions(rw: RunWord) -> ZoneFourConditions:
    counts = run_length_counts(rw)
    gamma = rw.gamma
    r1 = counts.get(1, 0)
    r2 = counts.get(2, 0)
    r1r2 = count_pattern(rw, RunPattern((1, 2)))
    r2r1 = count_pattern(rw, RunPattern((2, 1)))
    long_runs = sum(count for length, count in counts.items() if length >= 4)
    block = blocks(rw, 1)
    if block.covers_whole_cycle:
        p1 = p1_singletons = None
        item3 = item4 = None
    else:
        p1, p1_singletons = block.count, block.singletons
        item3 = 2 * (r2 + p1) == gamma
        item4 = 2 * (long_runs + p1 - p1_singletons + r2r1 + r1r2) == gamma
    return ZoneFourConditions(
        period=rw.period, gamma=gamma, r1=r1, r2=r2, r1r2=r1r2, r2r1=r2r1,
        long_runs=long_runs, p1=p1, p1_singletons=p1_singletons,
        item1=2 * gamma == rw.period, item2=2 * r1 == gamma,
        item3=item3, item4=item4, long_runs_match_blocks=long_runs_match_blocks(rw),
    )


def check_prop_5_3(s: BinarySequence) -> ZczReport:
    rw = decompose_runs(s)
    conditions = zone_four_conditions(rw)
    zone = zcz_zone(s)
    consistent = conditions.holds == (zone >= 4)
    if not consistent:
        logger.warning(f"run items and oracle zone disagree for {s}: zone {zone}, items {conditions.items}")
    return ZczReport(zone, conditions, consistent)


def enumerate_zcz(N: int, D: int, workers: Optional[int] = None) -> List[BinarySequence]:
    """Canonical rotations of every period-N sequence with C_s(1..D) = 0.

    Complementary sequences are distinct classes.
    """
    SearchService.check_period(N)
    if not 1 <= D < N:
        raise InvalidInput(f"zone must satisfy 1 <= D < {N}, got {D}")
    values = SearchService(workers).zero_autocorrelation_classes(N, D)
    return [BinarySequence.from_int(v, N) for v in values]


@dataclass(frozen=True)
class HadamardConditions:
    """Run-structure items of a circulant Hadamard sequence."""
    gamma_half: bool
    singles_half: bool
    gamma_p_vanish: bool
    has_r2: bool

    @property
    def necessary(self) -> bool:
        return self.gamma_half and self.singles_half and self.gamma_p_vanish

    def as_dict(self) -> Dict[str, bool]:
        return {
            "gamma_half": self.gamma_half,
            "singles_half": self.singles_half,
            "gamma_p_vanish": self.gamma_p_vanish,
            "has_r2": self.has_r2,
        }


def hadamard_conditions(s: BinarySequence) -> HadamardConditions:
    rw, gamma = _gamma(s)
    if rw is None:
        return HadamardConditions(False, False, False, False)
    table = gamma_table(rw, max(s.period - 2, 0))
    counts = run_length_counts(rw)
    return HadamardConditions(
        gamma_half=2 * gamma == s.period,
        singles_half=2 * counts.get(1, 0) == gamma,
        gamma_p_vanish=all(table.at(t) == 0 for t in range(2, s.period - 1)),
        has_r2=counts.get(2, 0) > 0,
    )


def run_prefilter_hadamard(N: int, workers: Optional[int] = None) -> List[BinarySequence]:
    """Rotation classes passing the run-structure items alone.

    The first two items are screened bit-parallel over all 2^N sequences;
    the vanishing gamma_P(t), t = 2..N-2, and N_s(R_2) != 0 (N != 4) are then
    checked with the run formula on the surviving class representatives.
    """
    SearchService.check_period(N)
    survivors = []
    for value in SearchService(workers).run_item_classes(N):
        s = BinarySequence.from_int(value, N)
        conditions = hadamard_conditions(s)
        if conditions.necessary and (N == 4 or conditions.has_r2):
            survivors.append(s)
    return survivors


def hadamard_search(N: int, workers: Optional[int] = None, cross_check: bool = False) -> List[BinarySequence]:
    """Canonical sequences of every circulant Hadamard matrix of order N."""
    SearchService.check_period(N)
    if N == 1:
        found = [BinarySequence(1, (0,)), BinarySequence(1, (1,))]
    elif N % 4:
        logger.info(f"order {N} is not a multiple of 4: no candidates")
        found = []
    else:
        found = enumerate_zcz(N, N - 1, workers)
    if cross_check and N > 1:
        screened = run_prefilter_hadamard(N, workers)
        if [str(s) for s in screened] != [str(s) for s in found]:
            logger.error(f"run-structure screen disagrees with exhaustive search at order {N}")
            raise CrossCheckFailure(
                f"order {N}: exhaustive {[str(s) for s in found]} vs run screen {[str(s) for s in screened]}"
            )
    return found


@dataclass(frozen=True)
class DiffSetSpec:
    v: int
    elements: FrozenSet[int]
    k: int
    lam: int

    def __post_init__(self) -> None:
        if self.v < 1:
            raise InvalidInput(f"group order must be positive, got {self.v}")
        if any(not 0 <= d < self.v for d in self.elements):
            raise InvalidInput(f"elements must lie in [0, {self.v})")
        if self.k != len(self.elements):
            raise InvalidInput(f"k = {self.k} but the set has {len(self.elements)} elements")
        if self.lam < 0:
            raise InvalidInput(f"lambda must be non-negative, got {self.lam}")

    @classmethod
    def of(cls, v: int, elements: List[int], lam: Optional[int] = None) -> "DiffSetSpec":
        if len(set(elements)) != len(elements):
            raise InvalidInput("difference set elements must be distinct")
        k = len(elements)
        if lam is None:
            if v == 1:
                lam = 0
            elif (k * (k - 1)) % (v - 1):
                raise InvalidInput(f"k(k-1) = {k * (k - 1)} is not divisible by v-1 = {v - 1}; pass lambda")
            else:
                lam = k * (k - 1) // (v - 1)
        return cls(v, frozenset(elements), k, lam)

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.lam})"


@dataclass(frozen=True)
class DiffSetVerdict:
    spec: DiffSetSpec
    sequence: BinarySequence
    valid: bool
    degenerate: bool
    expected_correlation: int
    constant_correlation: bool
    run_conditions: Optional[bool]
    first_bad_difference: Optional[Tuple[int, int]] = None  # (g, occurrences)


def sequence_from_difference_set(d: DiffSetSpec) -> BinarySequence:
    return BinarySequence(d.v, tuple(1 if i in d.elements else 0 for i in range(d.v)))


def difference_set_run_conditions(s: BinarySequence) -> Optional[bool]:
    """Run side of a constant out-of-phase profile.

    N_s(R_1) = gamma/2 and gamma_P(t) = 0 for t = 2..N-2; None for constant
    sequences, which have no runs.
    """
    if s.is_constant():
        return None
    rw = decompose_runs(s)
    table = gamma_table(rw, max(s.period - 2, 0))
    singles = run_length_counts(rw).get(1, 0)
    # with N < 3 there is no second shift to compare C_s(1) against
    return (s.period < 3 or 2 * singles == rw.gamma) and all(table.at(t) == 0 for t in range(2, s.period - 1))


def verify_difference_set(d: DiffSetSpec) -> DiffSetVerdict:
    """Count difference representations and compare with the profile."""
    occurrences = [0] * d.v
    for a in d.elements:
        for b in d.elements:
            if a != b:
                occurrences[(a - b) % d.v] += 1
    bad = next(((g, occurrences[g]) for g in range(1, d.v) if occurrences[g] != d.lam), None)

    s = sequence_from_difference_set(d)
    expected = d.v - 4 * (d.k - d.lam)
    profile = autocorr_bruteforce_profile(s)
    constant = all(profile[w] == expected for w in range(1, d.v))
    return DiffSetVerdict(
        spec=d,
        sequence=s,
        valid=bad is None,
        degenerate=d.k in (0, d.v),
        expected_correlation=expected,
        constant_correlation=constant,
        run_conditions=difference_set_run_conditions(s),
        first_bad_difference=bad,
    )

