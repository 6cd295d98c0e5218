"""Restriction of GL_n irreps to the permutation matrices.

The multiplicity of the S_n irrep mu in the GL_n irrep lam is the class
average

    b(lam, mu) = sum over rho |- n of chi^mu(rho) * s_lam(rho) / z_rho.

All terms are brought onto the common denominator lcm(z_rho), summed as
integers, and divided once; a remainder or a negative result raises
:class:`ConsistencyError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterable, Iterator

from . import kernels
from .characters import CharacterTable, character_table
from .errors import ConsistencyError
from .partitions import Partition, centralizer_order, gl_dimension, hook_dimension, partitions_of
from .schur_eval import schur_values


@dataclass(frozen=True)
class BranchingTable:
    """Multiplicities of every S_n irrep in one GL_n irrep.

    Zero entries are kept; ``multiplicities`` is ordered descending lex.
    """

    lam: Partition
    n: int
    multiplicities: dict

    def __getitem__(self, mu: Iterable[int]) -> int:
        return self.multiplicities[Partition(mu)]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.multiplicities)

    def __len__(self) -> int:
        return len(self.multiplicities)

    def items(self):
        return self.multiplicities.items()

    def missing(self) -> list[Partition]:
        return [mu for mu, b in self.multiplicities.items() if b == 0]

    def dimension(self) -> int:
        """sum of b(mu) * dim Y^mu; equals gl_dimension(lam, n)."""
        return sum(b * hook_dimension(mu) for mu, b in self.multiplicities.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": self.lam.text(),
            "multiplicities": {mu.text(): str(b) for mu, b in self.multiplicities.items()},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BranchingTable":
        mults = {Partition.parse(k): int(v) for k, v in doc["multiplicities"].items()}
        return cls(Partition.parse(doc["lambda"]), int(doc["n"]), mults)


def _check_shape(lam: Partition, n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(lam) > n:
        raise ValueError(f"{lam.text()} has more than {n} parts; F^lam_n is not defined")


@lru_cache(maxsize=None)
def _class_weights(n: int) -> tuple[int, tuple[int, ...]]:
    rhos = partitions_of(n)
    denom = lcm(*(centralizer_order(r) for r in rhos)) if rhos else 1
    return denom, tuple(denom // centralizer_order(r) for r in rhos)


def _finish(total: int, denom: int, lam: Partition, mu: Partition) -> int:
    b, rem = divmod(total, denom)
    if rem or b < 0:
        raise ConsistencyError(
            f"branching multiplicity of {mu.text()} in {lam.text()} is {total}/{denom}, not a non-negative integer"
        )
    return b


def branch(lam: Iterable[int], n: int, table: CharacterTable | None = None) -> BranchingTable:
    """Decompose F^lam_n restricted to S_n; returns every b(lam, mu), mu |- n."""
    lam = Partition(lam)
    _check_shape(lam, n)
    table = table or character_table(n)
    denom, weights = _class_weights(n)
    weighted = [w * s for w, s in zip(weights, schur_values(lam, n))]
    totals = kernels.class_sums(table.values, weighted)
    mults = {mu: _finish(t, denom, lam, mu) for mu, t in zip(table.partitions, totals)}
    return BranchingTable(lam, n, mults)


def branch_one(lam: Iterable[int], mu: Iterable[int], n: int | None = None,
               table: CharacterTable | None = None) -> int:
    """Single multiplicity b(lam, mu); ``n`` defaults to |mu|."""
    lam, mu = Partition(lam), Partition(mu)
    n = mu.size if n is None else n
    if mu.size != n:
        raise ValueError(f"|{mu.text()}| != {n}")
    _check_shape(lam, n)
    table = table or character_table(n)
    denom, weights = _class_weights(n)
    weighted = [w * s for w, s in zip(weights, schur_values(lam, n))]
    (total,) = kernels.class_sums([table.row(mu)], weighted)
    return _finish(total, denom, lam, mu)


def contains_all(lam: Iterable[int], n: int, table: CharacterTable | None = None) -> tuple[bool, list[Partition]]:
    missing = branch(lam, n, table).missing()
    return not missing, missing


def one_row_rule(d: int, mu: Iterable[int]) -> int:
    """Count fillings of ``mu`` by 0, 1, 2, ... with weakly increasing rows,
    strictly increasing columns and entry sum ``d``.

    This equals the multiplicity of Y^mu in Sym^d C^|mu|.
    """
    mu = Partition(mu)
    if d < 0:
        return 0
    cells = [(i, j) for i, row in enumerate(mu) for j in range(row)]
    # Every cell (i, j) carries at least i; later cells can add no less than that.
    floor_after = [0] * (len(cells) + 1)
    for k in range(len(cells) - 1, -1, -1):
        floor_after[k] = floor_after[k + 1] + cells[k][0]
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int, remaining: int) -> int:
        if k == len(cells):
            return 1 if remaining == 0 else 0
        i, j = cells[k]
        low = max(grid[(i, j - 1)] if j else 0, grid[(i - 1, j)] + 1 if i else 0)
        count = 0
        v = low
        # each cell from k on in the same row is at least v
        rest_of_row = mu[i] - j
        while v * rest_of_row + floor_after[k + rest_of_row] <= remaining:
            grid[(i, j)] = v
            count += fill(k + 1, remaining - v)
            v += 1
        grid.pop((i, j), None)
        return count

    return fill(0, d)


def gl_dimension_check(result: BranchingTable) -> bool:
    return result.dimension() == gl_dimension(result.lam, result.n)
