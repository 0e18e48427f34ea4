"""Periodic binary sequences and their cyclic run structure.

A `BinarySequence` is one period of a cyclic 0/1 sequence. Its bits are also
kept packed in an integer with position 0 as the most significant bit, so
numeric order on packed values is lexicographic order on bit strings and a
left shift of the sequence is a left rotation of the integer.

A `RunWord` is the cyclic word of run lengths read from the run containing
position 0. Pattern counting on a run word follows the cyclic convention:
start positions range over the gamma runs and a pattern may wrap the word,
several times if it is longer than the word.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Container, Dict, Iterator, Optional, Sequence, Tuple

from src.core.errors import DegenerateSequence, InvalidInput, InvalidShift, PeriodMismatch


@dataclass(frozen=True)
class BinarySequence:
    period: int
    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise InvalidInput(f"period must be positive, got {self.period}")
        if len(self.bits) != self.period:
            raise InvalidInput(f"expected {self.period} bits, got {len(self.bits)}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BinarySequence":
        return cls(len(bits), tuple(int(b) for b in bits))

    @classmethod
    def from_int(cls, value: int, period: int) -> "BinarySequence":
        """Unpack `value`; bit (period - 1 - i) of the integer is position i."""
        if period < 1 or value < 0 or value >> period:
            raise InvalidInput(f"value {value} does not fit period {period}")
        return cls(period, tuple((value >> (period - 1 - i)) & 1 for i in range(period)))

    @cached_property
    def value(self) -> int:
        return int(str(self), 2)

    @property
    def mask(self) -> int:
        return (1 << self.period) - 1

    def bit(self, i: int) -> int:
        return self.bits[i % self.period]

    def is_constant(self) -> bool:
        return self.value == 0 or self.value == self.mask

    def __len__(self) -> int:
        return self.period

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class RunWord:
    lengths: Tuple[int, ...]
    start_symbol: int
    start_offset: int = 0

    def __post_init__(self) -> None:
        if len(self.lengths) < 2 or len(self.lengths) % 2:
            raise InvalidInput(f"a run word needs an even number (>= 2) of runs, got {len(self.lengths)}")
        if any(length < 1 for length in self.lengths):
            raise InvalidInput("run lengths must be positive")
        if self.start_symbol not in (0, 1):
            raise InvalidInput(f"start symbol must be 0 or 1, got {self.start_symbol}")
        if not 0 <= self.start_offset < self.lengths[0]:
            raise InvalidInput(f"start offset {self.start_offset} outside the first run")

    @property
    def gamma(self) -> int:
        return len(self.lengths)

    @property
    def period(self) -> int:
        return sum(self.lengths)

    def length(self, q: int) -> int:
        return self.lengths[q % len(self.lengths)]

    def symbol(self, q: int) -> int:
        """Symbol of run q; runs alternate, so it depends on the parity of q."""
        return self.start_symbol ^ (q % 2)

    def expand(self) -> BinarySequence:
        linear = []
        for q, length in enumerate(self.lengths):
            linear.extend([self.symbol(q)] * length)
        # position 0 sits start_offset symbols into run 0
        rotated = linear[self.start_offset:] + linear[:self.start_offset]
        return BinarySequence.from_bits(rotated)

    def __str__(self) -> str:
        return f"{self.start_symbol}:" + ",".join(str(length) for length in self.lengths)


@dataclass(frozen=True)
class RunPattern:
    lengths: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.lengths:
            raise InvalidInput("a run pattern needs at least one run")
        if any(length < 1 for length in self.lengths):
            raise InvalidInput("pattern lengths must be positive")

    def __len__(self) -> int:
        return len(self.lengths)

    def __str__(self) -> str:
        return "".join(f"R{length}" for length in self.lengths)


def parse_sequence(text: str) -> BinarySequence:
    if not text:
        raise InvalidInput("empty sequence")
    for position, char in enumerate(text):
        if char not in "01":
            raise InvalidInput(f"unexpected character {char!r}", position=position)
    return BinarySequence(len(text), tuple(1 if c == "1" else 0 for c in text))


def parse_run_word(text: str) -> RunWord:
    """Parse "1:2,1,1,6" (start symbol, colon, comma-separated run lengths)."""
    symbol, sep, body = text.partition(":")
    if not sep or symbol.strip() not in ("0", "1"):
        raise InvalidInput(f"run word must look like '1:2,1,...', got {text!r}")
    try:
        lengths = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise InvalidInput(f"run lengths must be integers, got {body!r}") from None
    return RunWord(lengths, int(symbol))


def parse_sequence_literal(text: str) -> BinarySequence:
    """Bitstring or run-word literal, as accepted on the command line."""
    text = text.strip()
    if ":" in text:
        return parse_run_word(text).expand()
    return parse_sequence(text)


def weight(s: BinarySequence) -> int:
    return sum(s.bits)


def _rotate_left(value: int, w: int, period: int) -> int:
    w %= period
    if w == 0:
        return value
    mask = (1 << period) - 1
    return ((value << w) | (value >> (period - w))) & mask


def shift(s: BinarySequence, w: int) -> BinarySequence:
    """T^w s: result bit i is s.bit(i + w); negative w shifts right."""
    w %= s.period
    return BinarySequence(s.period, s.bits[w:] + s.bits[:w])


def xor(s: BinarySequence, u: BinarySequence) -> BinarySequence:
    if s.period != u.period:
        raise PeriodMismatch(f"periods differ: {s.period} vs {u.period}")
    return BinarySequence(s.period, tuple(a ^ b for a, b in zip(s.bits, u.bits)))


def autocorr_bruteforce(s: BinarySequence, w: int) -> int:
    """C_s(w) = N - 2 wt(s xor T^w s), straight from the definition."""
    if not 0 <= w < s.period:
        raise InvalidShift(f"shift {w} outside [0, {s.period - 1}]")
    differing = s.value ^ _rotate_left(s.value, w, s.period)
    return s.period - 2 * differing.bit_count()


def autocorr_bruteforce_profile(s: BinarySequence) -> Tuple[int, ...]:
    return tuple(autocorr_bruteforce(s, w) for w in range(s.period))


def decompose_runs(s: BinarySequence) -> RunWord:
    if s.is_constant():
        raise DegenerateSequence(f"constant sequence {s} has no run structure")
    n = s.period
    starts = [i for i in range(n) if s.bits[i] != s.bits[i - 1]]
    # the run holding position 0 starts at the last boundary at or before 0, cyclically
    first = 0 if starts[0] == 0 else starts[-1]
    offset = (n - first) % n
    ordered = [b for b in starts if b >= first] + [b for b in starts if b < first]
    lengths = tuple((ordered[(q + 1) % len(ordered)] - ordered[q]) % n
                    for q in range(len(ordered)))
    return RunWord(lengths, s.bits[first], offset)


def _walk_matches(rw: RunWord, q: int, lengths: Sequence[int]) -> bool:
    return all(rw.length(q + k) == length for k, length in enumerate(lengths))


def count_pattern(rw: RunWord, p: RunPattern) -> int:
    """N_s(R_{i1} ... R_{il}): start positions among the gamma runs matching p."""
    return sum(1 for q in range(rw.gamma) if _walk_matches(rw, q, p.lengths))


def count_pattern_extended(rw: RunWord,
                           first_min: int,
                           middle: Sequence[int],
                           last_in: Container[int]) -> int:
    """Count R_{>=first_min} R_middle R_j occurrences with j in `last_in`."""
    tail = len(middle) + 1
    return sum(
        1 for q in range(rw.gamma)
        if rw.length(q) >= first_min
        and _walk_matches(rw, q + 1, middle)
        and rw.length(q + tail) in last_in
    )


def canonical_rotation(s: BinarySequence) -> BinarySequence:
    best = min(_rotate_left(s.value, w, s.period) for w in range(s.period))
    return BinarySequence.from_int(best, s.period)


def run_length_counts(rw: RunWord, symbol: Optional[int] = None) -> Dict[int, int]:
    """N_s(R_i) for every occurring i, optionally for 1-runs or 0-runs only."""
    counts: Counter = Counter(
        length for q, length in enumerate(rw.lengths)
        if symbol is None or rw.symbol(q) == symbol
    )
    return dict(sorted(counts.items()))


def iter_run_strings(rw: RunWord, runs: int) -> Iterator[Tuple[int, ...]]:
    """The gamma cyclic run strings of `runs` consecutive runs."""
    for q in range(rw.gamma):
        yield tuple(rw.length(q + k) for k in range(runs))


def pattern_counts(rw: RunWord, max_runs: int) -> Dict[Tuple[int, ...], int]:
    """Occurring run strings of 1..max_runs runs with their counts."""
    counts: Dict[Tuple[int, ...], int] = {}
    for runs in range(1, max_runs + 1):
        for key, count in sorted(Counter(iter_run_strings(rw, runs)).items()):
            counts[key] = count
    return counts
