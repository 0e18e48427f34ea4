"""Integer compositions in doubling/prepending order, and their dual sets.

P(n) is generated from P(n-1): element 2i increments the first part of
p_i(n-1), element 2i+1 prepends a 1. Read backwards, the binary expansion of
an index i in [0, 2^(n-1)) is the list of generation steps (bit 0 is the
most recent one), so a single composition can be produced or ranked without
materialising P(n).

The contribution function C_p(j) of a composition p of t is constant for
j >= t, which makes every dual set Q_i(t) finite or cofinite.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.core.errors import InvalidIndex, InvalidInput, NotInImage

MAX_COMPOSITION_ORDER = 24


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]
    n: int
    index: int

    def __post_init__(self) -> None:
        if not self.parts or any(a < 1 for a in self.parts):
            raise InvalidInput(f"composition parts must be positive, got {self.parts}")
        if sum(self.parts) != self.n:
            raise InvalidInput(f"parts {self.parts} do not sum to {self.n}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Composition":
        parts = tuple(parts)
        n = sum(parts)
        return cls(parts, n, index_of_parts(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return render_composition(self)


def render_composition(p: Composition) -> str:
    return "(" + ",".join(str(a) for a in p.parts) + ")"


def _check_order(n: int) -> None:
    if n < 1:
        raise InvalidInput(f"composition order must be positive, got {n}")


def compositions(n: int) -> List[Composition]:
    """P(n) in generation order, built level by level from P(1) = [(1)]."""
    _check_order(n)
    if n > MAX_COMPOSITION_ORDER:
        raise InvalidInput(f"P({n}) has 2^{n - 1} elements; the bound is {MAX_COMPOSITION_ORDER}")
    level: List[Tuple[int, ...]] = [(1,)]
    for _ in range(2, n + 1):
        next_level: List[Tuple[int, ...]] = []
        for parts in level:
            next_level.append((parts[0] + 1,) + parts[1:])
            next_level.append((1,) + parts)
        level = next_level
    return [Composition(parts, n, i) for i, parts in enumerate(level)]


def composition_at(n: int, i: int) -> Composition:
    _check_order(n)
    if not 0 <= i < 1 << (n - 1):
        raise InvalidIndex(f"index {i} outside [0, 2^{n - 1})")
    parts = [1]
    # replay generation steps oldest first: bit (n - level) decides level `level`
    for level in range(2, n + 1):
        if (i >> (n - level)) & 1:
            parts.insert(0, 1)
        else:
            parts[0] += 1
    return Composition(tuple(parts), n, i)


def index_of_parts(parts: Tuple[int, ...]) -> int:
    parts_list = list(parts)
    index = 0
    bit = 0
    while len(parts_list) > 1 or parts_list[0] > 1:
        if parts_list[0] == 1:
            parts_list.pop(0)
            index |= 1 << bit
        else:
            parts_list[0] -= 1
        bit += 1
    return index


def index_of(p: Composition) -> int:
    return index_of_parts(p.parts)


def phi_I(p: Composition) -> Composition:
    """p_i(n) -> p_2i(n+1): increment the first part."""
    return Composition((p.parts[0] + 1,) + p.parts[1:], p.n + 1, 2 * p.index)


def phi_II(p: Composition) -> Composition:
    """p_i(n) -> p_2i+1(n+1): prepend a 1."""
    return Composition((1,) + p.parts, p.n + 1, 2 * p.index + 1)


def phi_I_inv(p: Composition) -> Composition:
    if p.parts[0] < 2:
        raise NotInImage(f"{p} does not start with a part >= 2")
    return Composition((p.parts[0] - 1,) + p.parts[1:], p.n - 1, p.index >> 1)


def phi_II_inv(p: Composition) -> Composition:
    if p.parts[0] != 1 or len(p.parts) < 2:
        raise NotInImage(f"{p} does not start with a 1 followed by further parts")
    return Composition(p.parts[1:], p.n - 1, p.index >> 1)


def append_part(p: Composition, k: int) -> Composition:
    """(p, k): p with k appended, a composition of p.n + k."""
    return Composition.of(p.parts + (k,))


def decompose_by_last_part(n: int) -> List[Composition]:
    """{(n)} together with {P(i), j} for i + j = n, as one list."""
    result = [Composition((n,), n, 0)]
    for i in range(1, n):
        result.extend(append_part(p, n - i) for p in compositions(i))
    return result


def contribution(parts: Tuple[int, ...], t: int, j: int) -> int:
    """C_p(j) for raw parts of a composition of t; no validation."""
    if j >= t:
        ell = len(parts) + 1
    else:
        ell = 0
        total = 0
        while total < j + 1:
            total += parts[ell]
            ell += 1
    if ell % 2:
        return 0
    return 1 if len(parts) % 2 else -1


def c_value(p: Composition, t: int, j: int) -> int:
    """Contribution C_p(j) in {-1, 0, +1} of a composition p of t at offset j."""
    if p.n != t:
        raise InvalidInput(f"{p} is not a composition of {t}")
    if j < 1:
        raise InvalidInput(f"offset must be positive, got {j}")
    return contribution(p.parts, t, j)


@dataclass(frozen=True)
class OffsetSet:
    """Finite-or-cofinite set of positive integers in normal form.

    `members` lie below `tail_from`; every j >= tail_from is a member
    (`tail_from is None` means the set is finite).
    """
    members: FrozenSet[int]
    tail_from: Optional[int] = None

    def __post_init__(self) -> None:
        if any(j < 1 for j in self.members):
            raise InvalidInput("offsets are positive integers")
        members = set(self.members)
        tail_from = self.tail_from
        if tail_from is not None:
            members = {j for j in members if j < tail_from}
            while tail_from - 1 in members:
                tail_from -= 1
                members.discard(tail_from)
        object.__setattr__(self, "members", frozenset(members))
        object.__setattr__(self, "tail_from", tail_from)

    @classmethod
    def from_start(cls, start: int) -> "OffsetSet":
        return cls(frozenset(), start)

    @classmethod
    def of(cls, members: Iterable[int]) -> "OffsetSet":
        return cls(frozenset(members))

    def __contains__(self, j: object) -> bool:
        if not isinstance(j, int):
            return False
        return j in self.members or (self.tail_from is not None and j >= self.tail_from)

    def __or__(self, other: "OffsetSet") -> "OffsetSet":
        tails = [x for x in (self.tail_from, other.tail_from) if x is not None]
        return OffsetSet(self.members | other.members, min(tails) if tails else None)

    def render(self) -> str:
        finite = "{" + ",".join(str(j) for j in sorted(self.members)) + "}"
        if self.tail_from is None:
            return finite
        tail = f"[{self.tail_from},∞)"
        return f"{finite} ∪ {tail}" if self.members else tail


@dataclass(frozen=True)
class DualSet:
    """Q_i(t): offsets j where p_i(t) contributes, all with the same sign."""
    t: int
    members_below_t: int
    has_tail: bool
    sign: int

    def __contains__(self, j: object) -> bool:
        if not isinstance(j, int) or j < 1:
            return False
        if j >= self.t:
            return self.has_tail
        return bool(self.members_below_t >> (j - 1) & 1)

    def below(self) -> List[int]:
        return [j for j in range(1, self.t) if self.members_below_t >> (j - 1) & 1]

    def offsets(self) -> OffsetSet:
        return OffsetSet(frozenset(self.below()), self.t if self.has_tail else None)

    def render(self, style: str = "set") -> str:
        """"{1,2} ∪ [4,∞)" by default; style "table" gives "1, 2, 4, 5, ..."."""
        if style == "table":
            items = [str(j) for j in self.below()]
            if self.has_tail:
                items += [str(self.t), str(self.t + 1), "..."]
            return ", ".join(items)
        return self.offsets().render()

    def __str__(self) -> str:
        return self.render()


def dual_set(p: Composition, t: int) -> DualSet:
    if p.n != t:
        raise InvalidInput(f"{p} is not a composition of {t}")
    mask = 0
    for j in range(1, t):
        if c_value(p, t, j):
            mask |= 1 << (j - 1)
    return DualSet(t, mask, c_value(p, t, t) != 0, 1 if len(p.parts) % 2 else -1)
