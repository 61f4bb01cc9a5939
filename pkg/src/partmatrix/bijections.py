"""Weight-preserving partition bijections and a brute-force verifier."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .bitmatrix import Position, apply_cell_permutation, decode, encode
from .partition import ClassPredicate, DomainError, Partition, gen_partitions

PartitionMap = Callable[[Partition], Partition]


def _check_d(d: int) -> None:
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")


def _check_p(p: int) -> None:
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")


def glaisher_d_forward(lam: Partition, d: int) -> Partition:
    """Split each multiplicity into base-``d`` digits.

    ``m = sum(c_i * d**i)`` copies of ``v`` become ``c_i`` copies of
    ``v * d**i``.  Requires that no part is divisible by ``d``.
    """
    _check_d(d)
    out: dict[int, int] = {}
    for v, m in lam.items():
        if v % d == 0:
            raise DomainError(f"part {v} is divisible by d={d}")
        scale = v
        while m:
            m, digit = divmod(m, d)
            if digit:
                out[scale] = digit
            scale *= d
    return Partition(out)


def glaisher_d_inverse(lam: Partition, d: int) -> Partition:
    """Merge ``c`` copies of ``u * d**i`` into ``c * d**i`` copies of ``u``.

    Requires every multiplicity to be at most ``d - 1``.
    """
    _check_d(d)
    out: dict[int, int] = {}
    for v, c in lam.items():
        if c >= d:
            raise DomainError(f"part {v} has multiplicity {c} >= d={d}")
        u, scale = v, 1
        while u % d == 0:
            u //= d
            scale *= d
        out[u] = out.get(u, 0) + c * scale
    return Partition(out)


def _map_cells(lam: Partition, perm: Callable[[Position], Position]) -> Partition:
    family = encode(lam)
    return decode({x: apply_cell_permutation(m, perm) for x, m in family.items()})


def _thm3_cell(pos: Position) -> Position:
    i, j = pos
    if j >= 1:
        return i + 1, j - 1
    if i >= 1:
        return 0, i
    return pos


def _thm3_cell_inverse(pos: Position) -> Position:
    i, j = pos
    if i >= 1:
        return i - 1, j + 1
    if j >= 1:
        return j, 0
    return pos


def thm3_map(lam: Partition) -> Partition:
    """Even parts to repeated parts.

    In every matrix, cells with ``j >= 1`` slide one step down-left, column 0
    below the corner is reflected into row 0, and ``(0, 0)`` stays.  A
    partition with ``k`` distinct even parts goes to one with ``k`` repeated
    parts.
    """
    return _map_cells(lam, _thm3_cell)


def thm3_inverse(lam: Partition) -> Partition:
    return _map_cells(lam, _thm3_cell_inverse)


@dataclass(frozen=True)
class FamilySelector:
    """A permutation of the top-left ``p x p`` block that keeps ``i + j`` fixed.

    ``block_permutation`` maps block positions to block positions; positions
    it omits stay put.
    """

    block_permutation: Mapping[Position, Position] = MappingProxyType({})

    def __post_init__(self):
        perm = dict(self.block_permutation)
        if sorted(perm) != sorted(perm.values()):
            raise DomainError("block permutation is not a bijection of its positions")
        for (a, b), (c, e) in perm.items():
            if a + b != c + e:
                raise DomainError(f"{(a, b)} -> {(c, e)} leaves its diagonal")
        object.__setattr__(self, "block_permutation", MappingProxyType(perm))
        object.__setattr__(self, "_inverse", {t: s for s, t in perm.items()})

    def check_fits(self, p: int) -> None:
        for a, b in self.block_permutation:
            if a >= p or b >= p:
                raise DomainError(f"selector moves {(a, b)}, outside the {p}x{p} block")

    def forward(self, pos: Position) -> Position:
        return self.block_permutation.get(pos, pos)

    def backward(self, pos: Position) -> Position:
        return self._inverse.get(pos, pos)

    @classmethod
    def identity(cls) -> FamilySelector:
        return cls()

    @classmethod
    def transpose(cls, p: int) -> FamilySelector:
        """Reflect the block across its main diagonal."""
        return cls({(a, b): (b, a) for a in range(p) for b in range(p) if a != b})

    @classmethod
    def reverse_diagonals(cls, p: int) -> FamilySelector:
        """Reverse the cell order along every anti-diagonal of the block."""
        perm = {}
        for k in range(2 * p - 1):
            diag = [(a, k - a) for a in range(p) if 0 <= k - a < p]
            perm.update(zip(diag, reversed(diag)))
        return cls({s: t for s, t in perm.items() if s != t})


IDENTITY_SELECTOR = FamilySelector()


def thm5_map(lam: Partition, p: int, sel: FamilySelector = IDENTITY_SELECTOR) -> Partition:
    """Parts divisible by ``2**p`` to parts repeated at least ``2**p`` times.

    Per matrix: columns ``j >= p`` shift by ``p`` down-left, cells below the
    ``p x p`` block in its columns are transposed into the rows beside it, and
    the block itself is permuted by ``sel``.
    """
    _check_p(p)
    sel.check_fits(p)

    def cell(pos: Position) -> Position:
        i, j = pos
        if j >= p:
            return i + p, j - p
        if i >= p:
            return j, i
        return sel.forward(pos)

    return _map_cells(lam, cell)


def thm5_inverse(lam: Partition, p: int, sel: FamilySelector = IDENTITY_SELECTOR) -> Partition:
    _check_p(p)
    sel.check_fits(p)

    def cell(pos: Position) -> Position:
        i, j = pos
        if i >= p:
            return i - p, j + p
        if j >= p:
            return j, i
        return sel.backward(pos)

    return _map_cells(lam, cell)


@dataclass
class BijectionReport:
    n: int
    domain_size: int = 0
    image_in_target: int = 0
    roundtrip_failures: int = 0
    collisions: int = 0
    target_size: int | None = None

    @property
    def passed(self) -> bool:
        ok = (self.image_in_target == self.domain_size
              and self.roundtrip_failures == 0 and self.collisions == 0)
        if self.target_size is not None:
            ok = ok and self.target_size == self.domain_size
        return ok

    def merge(self, other: BijectionReport) -> BijectionReport:
        sizes = (self.target_size, other.target_size)
        return BijectionReport(
            self.n,
            self.domain_size + other.domain_size,
            self.image_in_target + other.image_in_target,
            self.roundtrip_failures + other.roundtrip_failures,
            self.collisions + other.collisions,
            None if None in sizes else sizes[0] + sizes[1],
        )


def verify_bijection(n: int, forward: PartitionMap, inverse: PartitionMap,
                     source_pred: ClassPredicate, target_pred: ClassPredicate,
                     count_target: bool = True) -> BijectionReport:
    """Check ``forward`` on every member of the source class of ``n``.

    Counts images landing in the target class, duplicate images, and failures
    of ``inverse(forward(lam)) == lam``.  A map that raises counts as a
    round-trip failure.  With ``count_target`` the target class is also
    enumerated so that surjectivity is checked.
    """
    report = BijectionReport(n)
    seen: set[Partition] = set()
    for lam in gen_partitions(n, source_pred):
        report.domain_size += 1
        try:
            image = forward(lam)
        except DomainError:
            report.roundtrip_failures += 1
            continue
        if image.weight == n and target_pred(image):
            report.image_in_target += 1
        if image in seen:
            report.collisions += 1
        seen.add(image)
        try:
            back = inverse(image)
        except DomainError:
            back = None
        if back != lam:
            report.roundtrip_failures += 1
    if count_target:
        report.target_size = sum(1 for _ in gen_partitions(n, target_pred))
    return report

