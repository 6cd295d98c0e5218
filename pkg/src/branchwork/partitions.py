"""Integer partitions and cycle types.

Partitions are stored as tuples of positive parts in weakly decreasing
order. Trailing zeros are stripped on construction, so ``Partition((3, 0))``
and ``Partition((3,))`` are the same value. Every enumeration in the package
uses descending lexicographic order, e.g. ``(4), (3,1), (2,2), (2,1,1),
(1,1,1,1)``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 0])
    Partition(3, 1)
    >>> Partition.parse("11,9").size
    20
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if type(parts) is cls:
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the comma-separated text form; ``"-"`` or ``""`` is the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition text: {text!r}") from None
        if any(p < 0 for p in parts):
            raise ValueError(f"malformed partition text: {text!r}")
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if k < len(self):
            raise ValueError(f"{self} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def text(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return self.text()


class CycleType(Partition):
    """A partition read as a conjugacy class of the symmetric group."""

    __slots__ = ()

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map from cycle length r to the number of r-cycles."""
        return dict(sorted(Counter(self).items()))

    @property
    def centralizer_order(self) -> int:
        return centralizer_order(self)

    @property
    def class_size(self) -> int:
        return factorial(self.size) // centralizer_order(self)


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _descending(n, n))


def partitions_with_max_parts(n: int, k: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(n) if len(p) <= k)


@lru_cache(maxsize=None)
def cycle_types(n: int) -> tuple[CycleType, ...]:
    return tuple(CycleType(p) for p in partitions_of(n))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def centralizer_order(rho: Iterable[int]) -> int:
    """z_rho = prod over r of r**m_r * m_r!."""
    return prod(r**m * factorial(m) for r, m in Counter(Partition(rho)).items())


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    lam = Partition(lam)
    cols = conjugate(lam)
    return [[lam[i] - j + cols[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def hook_dimension(mu: Iterable[int]) -> int:
    """Dimension of the symmetric group irrep labelled by ``mu`` (hook length formula)."""
    mu = Partition(mu)
    hooks = prod(h for row in hook_lengths(mu) for h in row)
    return factorial(mu.size) // hooks


def gl_dimension(lam: Iterable[int], n: int) -> int:
    """Weyl dimension of the GL_n irrep with highest weight ``lam``."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam.text()} has more than {n} parts")
    w = lam.padded(n)
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den
