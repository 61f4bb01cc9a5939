"""Binary multiplicity matrices.

For each odd ``x`` a partition gets a 0/1 matrix whose column ``j`` holds the
binary digits of the multiplicity of ``x * 2**j``: cell ``(i, j)`` is set iff
bit ``i`` of that multiplicity is 1.  A set cell contributes ``x * 2**(i+j)``
to the weight, so moving cells along an anti-diagonal ``i + j = k`` gives
another partition of the same number.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple

from .partition import DomainError, Partition

Position = tuple[int, int]


class CellCollisionError(ValueError):
    """Two cells were sent to the same position by a cell permutation."""


class PartKey(NamedTuple):
    x: int
    j: int

    @property
    def value(self) -> int:
        return self.x << self.j


def split_part(v: int) -> PartKey:
    """Write ``v`` as ``x * 2**j`` with ``x`` odd."""
    if v < 1:
        raise DomainError(f"part must be positive, got {v}")
    j = (v & -v).bit_length() - 1
    return PartKey(v >> j, j)


@dataclass(frozen=True)
class BitMatrix:
    cells: frozenset[Position] = frozenset()

    def __post_init__(self):
        for i, j in self.cells:
            if i < 0 or j < 0:
                raise DomainError(f"negative cell position {(i, j)}")

    @classmethod
    def of(cls, cells: Iterable[Position]) -> BitMatrix:
        return cls(frozenset((int(i), int(j)) for i, j in cells))

    def __iter__(self) -> Iterator[Position]:
        return iter(sorted(self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, pos: object) -> bool:
        return pos in self.cells

    def __bool__(self) -> bool:
        return bool(self.cells)

    def column(self, j: int) -> int:
        """The multiplicity encoded by column ``j``."""
        return sum(1 << i for i, jj in self.cells if jj == j)

    def row(self, i: int) -> frozenset[int]:
        return frozenset(j for ii, j in self.cells if ii == i)


MatrixFamily = Mapping[int, BitMatrix]


def encode(lam: Partition) -> dict[int, BitMatrix]:
    cells: dict[int, set[Position]] = {}
    for v, m in lam.items():
        x, j = split_part(v)
        bucket = cells.setdefault(x, set())
        i = 0
        while m:
            if m & 1:
                bucket.add((i, j))
            m >>= 1
            i += 1
    return {x: BitMatrix(frozenset(c)) for x, c in sorted(cells.items())}


def decode(family: MatrixFamily) -> Partition:
    mult: dict[int, int] = {}
    for x, matrix in family.items():
        if x < 1 or not x & 1:
            raise DomainError(f"matrix key must be a positive odd integer, got {x}")
        for i, j in matrix.cells:
            part = x << j
            mult[part] = mult.get(part, 0) + (1 << i)
    return Partition(mult)


def matrix_weight(x: int, matrix: BitMatrix) -> int:
    if not x & 1:
        raise DomainError(f"x must be odd, got {x}")
    return sum(x << (i + j) for i, j in matrix.cells)


def family_weight(family: MatrixFamily) -> int:
    return sum(matrix_weight(x, m) for x, m in family.items())


def diagonal(matrix: BitMatrix, k: int) -> frozenset[Position]:
    if k < 0:
        raise DomainError(f"diagonal index must be nonnegative, got {k}")
    return frozenset(c for c in matrix.cells if c[0] + c[1] == k)


def apply_cell_permutation(matrix: BitMatrix,
                           perm: Callable[[Position], Position]) -> BitMatrix:
    """Move every cell ``c`` to ``perm(c)``.

    All sources are read before any target is written, so swaps of two
    occupied cells are well defined.  Raises CellCollisionError if two cells
    land on the same position.
    """
    out: dict[Position, Position] = {}
    for c in matrix.cells:
        target = perm(c)
        if target in out:
            raise CellCollisionError(
                f"cells {out[target]} and {c} both map to {target}")
        out[target] = c
    return BitMatrix.of(out)


def render_matrix(x: int, matrix: BitMatrix) -> str:
    """Text grid of one matrix; only occupied rows are printed."""
    if not matrix:
        return f"x={x}\n(empty)"
    width = max(j for _, j in matrix.cells) + 1
    rows = sorted({i for i, _ in matrix.cells})
    label = max(len(f"i={i}") for i in rows)
    cw = len(str(width - 1))
    lines = [f"x={x}",
             "j".rjust(label) + " " + " ".join(str(j).rjust(cw) for j in range(width))]
    for i in rows:
        marks = ("1" if (i, j) in matrix.cells else "." for j in range(width))
        lines.append(f"i={i}".rjust(label) + " " + " ".join(m.rjust(cw) for m in marks))
    return "\n".join(lines)


def render_family(family: MatrixFamily) -> str:
    return "\n\n".join(render_matrix(x, family[x]) for x in sorted(family))
