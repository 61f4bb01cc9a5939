"""Partition counters and the identity checks built on them.

Every counter here is computed by enumerating partitions and filtering, so the
two sides of each identity are counted independently of the bijections.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from .bitmatrix import encode
from .partition import (
    ALL,
    DISTINCT,
    ODD,
    ClassPredicate,
    DomainError,
    Kind,
    Partition,
    class_part_stats,
    gen_partitions,
    num_distinct_parts,
    num_parts,
)


def _check_p(p: int) -> None:
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")


def _check_d(d: int) -> None:
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")


# ---------------------------------------------------------------------------
# per-partition statistics

def distinct_even_count(lam: Partition) -> int:
    return sum(1 for v, _ in lam.items() if not v & 1)


def repeated_count(lam: Partition) -> int:
    return sum(1 for _, c in lam.items() if c >= 2)


def high_valuation_count(lam: Partition, p: int) -> int:
    """Number of distinct part values divisible by ``2**p``."""
    mask = (1 << p) - 1
    return sum(1 for v, _ in lam.items() if not v & mask)


def high_multiplicity_count(lam: Partition, p: int) -> int:
    """Number of distinct part values repeated at least ``2**p`` times."""
    bound = 1 << p
    return sum(1 for _, c in lam.items() if c >= bound)


def _single_special_multiplicity(lam: Partition, special: int) -> bool:
    counts = [c for _, c in lam.items()]
    return counts.count(special) == 1 and all(c in (1, special) for c in counts)


def is_one_triple(lam: Partition) -> bool:
    return _single_special_multiplicity(lam, 3)


def is_one_quintuple(lam: Partition) -> bool:
    return _single_special_multiplicity(lam, 5)


def is_one_even(lam: Partition) -> bool:
    return distinct_even_count(lam) == 1


def is_G_member(lam: Partition) -> bool:
    """Distinct parts, and never both ``v`` and ``2v``."""
    return all(c == 1 and 2 * v not in lam for v, c in lam.items())


def _fibbinary(m: int) -> bool:
    return m & (m >> 1) == 0


def is_H_member(lam: Partition) -> bool:
    """Odd parts whose multiplicities have no two adjacent 1 bits."""
    return all(v & 1 and _fibbinary(c) for v, c in lam.items())


G = ClassPredicate(Kind.G, is_G_member, "G")
H = ClassPredicate(Kind.H, is_H_member, "H")
ONE_EVEN = ClassPredicate.custom(is_one_even, "one-even")
ONE_TRIPLE = ClassPredicate.custom(is_one_triple, "one-triple")
ONE_QUINTUPLE = ClassPredicate.custom(is_one_quintuple, "one-quintuple")


def exactly_k_distinct_even(k: int) -> ClassPredicate:
    return ClassPredicate.custom(lambda lam: distinct_even_count(lam) == k,
                                 f"{k}-distinct-even")


def exactly_k_repeated(k: int) -> ClassPredicate:
    return ClassPredicate.custom(lambda lam: repeated_count(lam) == k,
                                 f"{k}-repeated")


def exactly_k_high_valuation(k: int, p: int) -> ClassPredicate:
    _check_p(p)
    return ClassPredicate.custom(lambda lam: high_valuation_count(lam, p) == k,
                                 f"{k}-divisible-by-2^{p}")


def exactly_k_high_multiplicity(k: int, p: int) -> ClassPredicate:
    _check_p(p)
    return ClassPredicate.custom(lambda lam: high_multiplicity_count(lam, p) == k,
                                 f"{k}-repeated-2^{p}-times")


def no_part_divisible_by(d: int) -> ClassPredicate:
    _check_d(d)
    return ClassPredicate.custom(lambda lam: all(v % d for v, _ in lam.items()),
                                 f"no-part-divisible-by-{d}")


def multiplicities_below(d: int) -> ClassPredicate:
    _check_d(d)
    return ClassPredicate.custom(lambda lam: all(c < d for _, c in lam.items()),
                                 f"multiplicities-below-{d}")


# ---------------------------------------------------------------------------
# counters

def count(n: int, pred: ClassPredicate) -> int:
    return sum(1 for _ in gen_partitions(n, pred))


def a_exactly_one_even(n: int) -> int:
    return count(n, ONE_EVEN)


def a1_one_triple(n: int) -> int:
    return count(n, ONE_TRIPLE)


def f_one_quintuple(n: int) -> int:
    return count(n, ONE_QUINTUPLE)


def count_exactly_k_distinct_even(n: int, k: int) -> int:
    return count(n, exactly_k_distinct_even(k))


def count_exactly_k_repeated(n: int, k: int) -> int:
    return count(n, exactly_k_repeated(k))


def count_Ak_valuation(n: int, k: int, p: int) -> int:
    return count(n, exactly_k_high_valuation(k, p))


def count_Bk_multiplicity(n: int, k: int, p: int) -> int:
    return count(n, exactly_k_high_multiplicity(k, p))


def glaisher_counts(n: int, d: int) -> tuple[int, int]:
    return count(n, no_part_divisible_by(d)), count(n, multiplicities_below(d))


def statistic_histogram(n: int, stat) -> Counter:
    """``Counter`` of ``stat(lam)`` over all partitions of ``n`` in one pass."""
    return Counter(stat(lam) for lam in gen_partitions(n, ALL))


def parts_G(n: int) -> int:
    return sum(num_parts(lam) for lam in gen_partitions(n, G))


def distinct_parts_H(n: int) -> int:
    return sum(num_distinct_parts(lam) for lam in gen_partitions(n, H))


# ---------------------------------------------------------------------------
# proof decompositions

def conj1_local(gamma: Sequence[int] | int) -> int:
    """``sum((2**i - 1) * gamma[i])`` for the bits ``gamma`` of a multiplicity.

    Accepts the bit list (least significant first) or the multiplicity itself.
    """
    if isinstance(gamma, int):
        if gamma < 0:
            raise DomainError(f"multiplicity must be nonnegative, got {gamma}")
        gamma = [(gamma >> i) & 1 for i in range(gamma.bit_length())]
    if any(g not in (0, 1) for g in gamma):
        raise DomainError("binary digits must be 0 or 1")
    return sum(((1 << i) - 1) * g for i, g in enumerate(gamma))


def split_count(m: int) -> int:
    # ways to write m*x as (r copies of x) + (q copies of x*2**j), j >= 1, q >= 1
    total, j = 0, 1
    while m >> j:
        total += m >> j
        j += 1
    return total


def conj1_decomposed(n: int) -> int:
    return sum(conj1_local(m) for lam in gen_partitions(n, ODD) for _, m in lam.items())


def conj1_split_count(n: int) -> int:
    return sum(split_count(m) for lam in gen_partitions(n, ODD) for _, m in lam.items())


def conj2_decomposed(n: int) -> int:
    """Sum of ``d_x - 1`` over distinct partitions and the odd ``x`` they use.

    ``d_x`` is the number of filled cells in row 0 of the matrix of ``x``.
    """
    total = 0
    for lam in gen_partitions(n, DISTINCT):
        total += sum(len(m) - 1 for m in encode(lam).values())
    return total


# ---------------------------------------------------------------------------
# checks

class TheoremId(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    C1Decomp = "C1Decomp"
    C1Split = "C1Split"
    C2Decomp = "C2Decomp"


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: TheoremId
    n: int
    lhs: int
    rhs: int
    params: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def describe(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.params.items())
        verdict = "pass" if self.passed else "FAIL"
        return f"{self.theorem_id.value} n={self.n}{extra} lhs={self.lhs} rhs={self.rhs} {verdict}"


def _positive(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


def thm1_check(n: int) -> TheoremCheck:
    _positive(n)
    odd_parts, _ = class_part_stats(n, ODD)
    distinct_parts, _ = class_part_stats(n, DISTINCT)
    return TheoremCheck(TheoremId.T1, n, a_exactly_one_even(n), odd_parts - distinct_parts)


def thm2_check(n: int) -> TheoremCheck:
    _positive(n)
    distinct_parts, _ = class_part_stats(n, DISTINCT)
    _, odd_distinct = class_part_stats(n, ODD)
    return TheoremCheck(TheoremId.T2, n, a1_one_triple(n), distinct_parts - odd_distinct)


def thm3_check(n: int, k: int) -> TheoremCheck:
    return TheoremCheck(TheoremId.T3, n, count_exactly_k_distinct_even(n, k),
                        count_exactly_k_repeated(n, k), {"k": k})


def thm4_check(n: int, d: int) -> TheoremCheck:
    c, e = glaisher_counts(n, d)
    return TheoremCheck(TheoremId.T4, n, c, e, {"d": d})


def thm5_check(n: int, k: int, p: int) -> TheoremCheck:
    return TheoremCheck(TheoremId.T5, n, count_Ak_valuation(n, k, p),
                        count_Bk_multiplicity(n, k, p), {"k": k, "p": p})


def thm6_check(n: int) -> TheoremCheck:
    _positive(n)
    return TheoremCheck(TheoremId.T6, n, f_one_quintuple(n), parts_G(n) - distinct_parts_H(n))


def conj1_decomp_check(n: int) -> TheoremCheck:
    return TheoremCheck(TheoremId.C1Decomp, n, conj1_decomposed(n), a_exactly_one_even(n))


def conj1_split_check(n: int) -> TheoremCheck:
    return TheoremCheck(TheoremId.C1Split, n, conj1_split_count(n), conj1_decomposed(n))


def conj2_decomp_check(n: int) -> TheoremCheck:
    return TheoremCheck(TheoremId.C2Decomp, n, conj2_decomposed(n), a1_one_triple(n))


def thm3_checks(n: int) -> list[TheoremCheck]:
    """``thm3_check`` for every ``k`` where either side is nonzero, in one pass each."""
    evens = statistic_histogram(n, distinct_even_count)
    repeats = statistic_histogram(n, repeated_count)
    ks = sorted(set(evens) | set(repeats))
    return [TheoremCheck(TheoremId.T3, n, evens[k], repeats[k], {"k": k}) for k in ks]


def thm5_checks(n: int, p: int) -> list[TheoremCheck]:
    _check_p(p)
    high_val = statistic_histogram(n, lambda lam: high_valuation_count(lam, p))
    high_mult = statistic_histogram(n, lambda lam: high_multiplicity_count(lam, p))
    ks = sorted(set(high_val) | set(high_mult))
    return [TheoremCheck(TheoremId.T5, n, high_val[k], high_mult[k], {"k": k, "p": p})
            for k in ks]
