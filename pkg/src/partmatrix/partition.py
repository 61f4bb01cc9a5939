"""Partitions stored as part -> multiplicity maps, and class-restricted enumeration."""

from __future__ import annotations

import enum
import re
from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class Partition:
    """Immutable multiset of positive integers.

    Built from a ``{part: count}`` mapping; zero counts are dropped.  Use
    :meth:`from_parts` to build one from a flat list of parts.
    """

    __slots__ = ("_items", "_lookup", "_weight", "_hash")

    def __init__(self, multiplicities: Mapping[int, int] | None = None):
        lookup: dict[int, int] = {}
        for part, count in (multiplicities or {}).items():
            part, count = int(part), int(count)
            if part < 1:
                raise DomainError(f"parts must be positive, got {part}")
            if count < 0:
                raise DomainError(f"multiplicity of {part} is negative")
            if count:
                lookup[part] = count
        self._set(tuple(sorted(lookup.items(), reverse=True)))

    def _set(self, items: tuple[tuple[int, int], ...]) -> None:
        self._items = items
        self._lookup = dict(items)
        self._weight = sum(v * c for v, c in items)
        self._hash = hash(items)

    @classmethod
    def _trusted(cls, items: tuple[tuple[int, int], ...]) -> Partition:
        # items already decreasing by part, all counts >= 1
        obj = cls.__new__(cls)
        obj._set(items)
        return obj

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        return cls(Counter(parts))

    @property
    def multiplicities(self) -> Mapping[int, int]:
        return MappingProxyType(self._lookup)

    @property
    def weight(self) -> int:
        return self._weight

    def multiplicity(self, part: int) -> int:
        return self._lookup.get(part, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """``(part, count)`` pairs in decreasing part order."""
        return self._items

    def parts(self) -> list[int]:
        """Flat list of parts in decreasing order."""
        return [v for v, c in self._items for _ in range(c)]

    def __contains__(self, part: object) -> bool:
        return part in self._lookup

    def __len__(self) -> int:
        return num_parts(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Partition) -> bool:
        return self.parts() < other.parts()

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def num_parts(lam: Partition) -> int:
    return sum(c for _, c in lam.items())


def num_distinct_parts(lam: Partition) -> int:
    return len(lam.items())


def is_odd(lam: Partition) -> bool:
    return all(v & 1 for v, _ in lam.items())


def is_distinct(lam: Partition) -> bool:
    return all(c == 1 for _, c in lam.items())


class Kind(enum.Enum):
    ALL = "all"
    ODD = "odd"
    DISTINCT = "distinct"
    G = "G"
    H = "H"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ClassPredicate:
    """Membership test for a restricted class of partitions.

    ``test`` is required for G, H and CUSTOM kinds.  For CUSTOM, ``within``
    optionally names a base kind (ODD or DISTINCT) every member belongs to,
    which lets enumeration prune instead of filtering.
    """

    kind: Kind
    test: Callable[[Partition], bool] | None = None
    name: str = ""
    within: Kind = Kind.ALL

    def __post_init__(self):
        if self.kind in (Kind.G, Kind.H, Kind.CUSTOM) and self.test is None:
            raise DomainError(f"{self.kind.name} predicate needs a membership test")

    def __call__(self, lam: Partition) -> bool:
        if self.kind is Kind.ALL:
            return True
        if self.kind is Kind.ODD:
            return is_odd(lam)
        if self.kind is Kind.DISTINCT:
            return is_distinct(lam)
        return bool(self.test(lam))

    @property
    def base(self) -> Kind:
        if self.kind in (Kind.ODD, Kind.H):
            return Kind.ODD
        if self.kind in (Kind.DISTINCT, Kind.G):
            return Kind.DISTINCT
        if self.kind is Kind.CUSTOM:
            return self.within
        return Kind.ALL

    @classmethod
    def custom(cls, test: Callable[[Partition], bool], name: str = "custom",
               within: Kind = Kind.ALL) -> ClassPredicate:
        return cls(Kind.CUSTOM, test, name, within)


ALL = ClassPredicate(Kind.ALL, name="all")
ODD = ClassPredicate(Kind.ODD, name="odd")
DISTINCT = ClassPredicate(Kind.DISTINCT, name="distinct")


def _generate(n: int, odd_only: bool, distinct_only: bool) -> Iterator[Partition]:
    # Depth-first over part values, largest first; for a fixed top part, higher
    # multiplicities come first, which is decreasing-lexicographic order.
    stack: list[tuple[int, int]] = []

    def rec(rest: int, below: int) -> Iterator[Partition]:
        if rest == 0:
            yield Partition._trusted(tuple(stack))
            return
        top = min(rest, below - 1)
        for v in range(top, 0, -1):
            if distinct_only and v * (v + 1) // 2 < rest:
                break
            if odd_only and not v & 1:
                continue
            most = 1 if distinct_only else rest // v
            for c in range(most, 0, -1):
                stack.append((v, c))
                yield from rec(rest - v * c, v)
                stack.pop()

    yield from rec(n, n + 1)


def gen_partitions(n: int, pred: ClassPredicate = ALL) -> Iterator[Partition]:
    """Yield every partition of ``n`` accepted by ``pred``, each exactly once.

    Order is decreasing-lexicographic on the decreasing part lists, so
    ``gen_partitions(4)`` starts with ``4`` and ends with ``1,1,1,1``.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    base = pred.base
    stream = _generate(n, base is Kind.ODD, base is Kind.DISTINCT)
    if pred.kind in (Kind.ALL, Kind.ODD, Kind.DISTINCT):
        yield from stream
    else:
        yield from filter(pred, stream)


def class_part_stats(n: int, pred: ClassPredicate = ALL) -> tuple[int, int]:
    """Return ``(total parts, total distinct parts)`` summed over the class."""
    total = distinct = 0
    for lam in gen_partitions(n, pred):
        total += num_parts(lam)
        distinct += num_distinct_parts(lam)
    return total, distinct


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1,1"``; whitespace is ignored and ``""`` is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not re.fullmatch(r"[0-9]+", token):
            raise DomainError(f"not a positive integer: {token!r}")
        value = int(token)
        if value < 1:
            raise DomainError(f"parts must be positive, got {value}")
        parts.append(value)
    return Partition.from_parts(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam.parts()))
