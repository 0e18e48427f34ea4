"""Run-series expansion of the periodic autocorrelation function.

Every quantity here is a signed sum over compositions p of t of run-string
counts N_s(R^p). Rather than visiting all 2^(t-1) compositions, the sums are
driven by occurrences: from each of the gamma cyclic start runs we walk
forward, accumulating run lengths, and each prefix whose total hits t is
exactly one occurrence of one composition. That is O(gamma * t) work and
equal to the composition sum by rearrangement.

From the coefficients gamma_P(t):

    wt(s + T^t s) - wt(s + T^(t-1) s) = gamma + 2 * sum_{t' < t} gamma_P(t')
    C_s(t) = N - 2 * wt(s + T^t s)
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.core.compositions import contribution
from src.core.errors import InvalidInput, InvalidShift
from src.core.sequence import (
    BinarySequence,
    RunPattern,
    RunWord,
    autocorr_bruteforce_profile,
    count_pattern,
    decompose_runs,
)
from src.helper.logger import get_logger

logger = get_logger("run_formula")


def _sign(ell: int) -> int:
    return -1 if ell % 2 else 1


@dataclass(frozen=True)
class GammaTable:
    gamma: int
    period: int
    values: Tuple[int, ...]  # values[t - 1] = gamma_P(t)

    @property
    def depth(self) -> int:
        return len(self.values)

    def at(self, t: int) -> int:
        if not 1 <= t <= len(self.values):
            raise InvalidInput(f"gamma_P({t}) not tabulated (depth {len(self.values)})")
        return self.values[t - 1]

    def wt_diffs(self) -> List[int]:
        """wt(s + T^t s) - wt(s + T^(t-1) s) for t = 1 .. depth + 1."""
        diffs = [self.gamma]
        running = 0
        for value in self.values:
            running += value
            diffs.append(self.gamma + 2 * running)
        return diffs

    def weights(self) -> List[int]:
        """wt(s + T^t s) for t = 1 .. depth + 1."""
        total = 0
        result = []
        for diff in self.wt_diffs():
            total += diff
            result.append(total)
        return result

    def autocorrelations(self) -> List[int]:
        """C_s(t) for t = 1 .. depth + 1."""
        return [self.period - 2 * wt for wt in self.weights()]


def gamma_table(rw: RunWord, depth: int) -> GammaTable:
    """gamma_P(1..depth) in one pass over all run-string occurrences."""
    values = [0] * (depth + 1)
    for q in range(rw.gamma):
        total = 0
        ell = 0
        while True:
            total += rw.length(q + ell)
            ell += 1
            if total > depth:
                break
            values[total] += _sign(ell)
    return GammaTable(rw.gamma, rw.period, tuple(values[1:]))


def gamma_P(rw: RunWord, t: int) -> int:
    """Sum over compositions p of t of (-1)^|p| N_s(R^p)."""
    if t < 1:
        raise InvalidInput(f"t must be positive, got {t}")
    result = 0
    for q in range(rw.gamma):
        total = 0
        ell = 0
        while total < t:
            total += rw.length(q + ell)
            ell += 1
        if total == t:
            result += _sign(ell)
    return result


def gamma_P_append(rw: RunWord, t: int, k: int) -> int:
    """Sum over compositions p of t of (-1)^(|p|+1) N_s(R^(p, k))."""
    if t < 1 or k < 1:
        raise InvalidInput(f"t and k must be positive, got t={t}, k={k}")
    result = 0
    for q in range(rw.gamma):
        total = 0
        ell = 0
        while total < t:
            total += rw.length(q + ell)
            ell += 1
        if total == t and rw.length(q + ell) == k:
            result += _sign(ell + 1)
    return result


def gamma_P_k(rw: RunWord, t: int, k: int) -> int:
    """gamma^k_P(t), the partial sums the expansion's recurrence walks through.

    Term i pairs p = p_i(t - k) = (a_1, ..., a_s) with the dual set of
    p_{2^k i}(t) = (a_1 + k, a_2, ..., a_s) and counts run strings
    R_{>=a_1} R_{a_2} ... R_{a_s} R_j with j in that dual set. Driven by
    occurrences: a walk fixes a_2..a_s, hence a_1, and the run after it is j.
    """
    if t < 2 or not 0 <= k <= t - 1:
        raise InvalidInput(f"gamma^k_P(t) needs t >= 2 and 0 <= k <= t - 1, got t={t}, k={k}")
    base = t - k
    result = 0
    for q in range(rw.gamma):
        first = rw.length(q)
        middle: List[int] = []
        a1 = base
        while a1 >= 1:
            if a1 <= first:
                s = len(middle) + 1
                if contribution((a1 + k,) + tuple(middle), t, rw.length(q + s)):
                    result += _sign(s + 1)
            middle.append(rw.length(q + len(middle) + 1))
            a1 -= middle[-1]
    return result


def wt_diff_via_runs(rw: RunWord, t: int) -> int:
    """wt(s + T^t s) - wt(s + T^(t-1) s) from the run structure alone."""
    if t < 1:
        raise InvalidInput(f"t must be positive, got {t}")
    table = gamma_table(rw, t - 1)
    return rw.gamma + 2 * sum(table.values)


def autocorr_via_runs(rw: RunWord, N: int, t: int) -> int:
    if N != rw.period:
        raise InvalidInput(f"run word has period {rw.period}, not {N}")
    if not 1 <= t <= N:
        raise InvalidShift(f"shift {t} outside [1, {N}]")
    table = gamma_table(rw, t - 1)
    weighted = sum((t - tp) * value for tp, value in enumerate(table.values, start=1))
    return N - 2 * (rw.gamma * t + 2 * weighted)


def autocorr_profile(s: BinarySequence) -> Tuple[int, ...]:
    """C_s(0..N-1) from one gamma table; constant sequences use the oracle."""
    if s.is_constant():
        logger.debug(f"constant sequence of period {s.period}, using the oracle")
        return autocorr_bruteforce_profile(s)
    rw = decompose_runs(s)
    table = gamma_table(rw, s.period - 1)
    return (s.period,) + tuple(table.autocorrelations()[:s.period - 1])


def closed_form_wt_diff(rw: RunWord, t: int) -> int:
    """The explicit small-t forms of the weight difference (t = 2, 3, 4)."""
    if t not in (2, 3, 4):
        raise InvalidInput(f"closed forms exist for t in 2..4, got {t}")

    def n(*lengths: int) -> int:
        return count_pattern(rw, RunPattern(lengths))

    gamma = rw.gamma
    if t == 2:
        return gamma - 2 * n(1)
    if t == 3:
        return gamma - 2 * n(1) - 2 * n(2) + 2 * n(1, 1)
    return (gamma - 2 * (n(1) + n(2) + n(3))
            + 2 * (n(1, 1) + n(1, 2) + n(2, 1))
            - 2 * n(1, 1, 1))


@dataclass(frozen=True)
class TableRows:
    """The four rows of the run/autocorrelation table, indexed i = 0..N-1."""
    gamma_p: Tuple[int, ...]   # gamma_P(i), gamma_P(0) = 0
    wt_diff: Tuple[int, ...]   # wt(s + T^(i+1) s) - wt(s + T^i s)
    wt: Tuple[int, ...]        # wt(s + T^(i+1) s)
    autocorr: Tuple[int, ...]  # C_s(i+1)


def table_rows(s: BinarySequence) -> TableRows:
    rw = decompose_runs(s)
    table = gamma_table(rw, s.period - 1)
    return TableRows(
        gamma_p=(0,) + table.values,
        wt_diff=tuple(table.wt_diffs()),
        wt=tuple(table.weights()),
        autocorr=tuple(table.autocorrelations()),
    )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    t: int
    k: Optional[int]
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        where = f"t={self.t}" + (f", k={self.k}" if self.k is not None else "")
        relation = "==" if self.holds else "!="
        return f"{self.name} ({where}): {self.lhs} {relation} {self.rhs}"


def expansion_identities(rw: RunWord, max_t: int) -> Iterator[IdentityCheck]:
    """Yield every recurrence identity of the expansion for 2 <= t <= max_t.

    Covered: the gamma^k recurrence and its k = 0 case, the last-part
    decomposition of gamma_P(t), the closed value of gamma^(t-1)_P(t), the
    unrolled recurrence for every k, and gamma^0_P(t) equal to the weight
    difference. `max_t` is capped at the period.
    """
    max_t = min(max_t, rw.period)
    singles = {i: count_pattern(rw, RunPattern((i,))) for i in range(1, max_t + 1)}
    gp = {t: gamma_P(rw, t) for t in range(1, max_t + 1)}
    appended = {(i, j): gamma_P_append(rw, i, j)
                for i in range(1, max_t) for j in range(1, max_t - i + 1)}

    for t in range(2, max_t + 1):
        gk = {k: gamma_P_k(rw, t, k) for k in range(t)}

        yield IdentityCheck("gamma^0 equals weight difference", t, 0, gk[0], wt_diff_via_runs(rw, t))
        yield IdentityCheck("k = 0 recurrence", t, 0, gk[0], gk[1] + gp[t - 1])
        for k in range(1, t - 1):
            rest = t - k - 1
            rhs = gk[k + 1] + gp[rest] + sum(appended[(rest, j)] for j in range(1, k + 1))
            yield IdentityCheck("gamma^k recurrence", t, k, gk[k], rhs)
        yield IdentityCheck(
            "last-part decomposition", t, None, gp[t],
            sum(appended[(i, t - i)] for i in range(1, t)) - singles[t],
        )
        yield IdentityCheck(
            "gamma^(t-1) closed value", t, t - 1, gk[t - 1],
            rw.gamma - sum(singles[i] for i in range(1, t)),
        )
        for k in range(1, t):
            rhs = (gk[k]
                   + sum(gp[j] for j in range(t - k, t))
                   + sum(appended[(j, ell)]
                         for j in range(t - k, t - 1)
                         for ell in range(1, t - j)))
            yield IdentityCheck("unrolled recurrence", t, k, gk[0], rhs)
