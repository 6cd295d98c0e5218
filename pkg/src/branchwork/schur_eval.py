"""Symmetric functions evaluated at the eigenvalues of a permutation matrix.

A permutation of cycle type rho has, for each r-cycle, all r-th roots of
unity as eigenvalues. No complex number is ever formed:

* the k-th power sum is the sum of the cycle lengths r dividing k;
* h_0, h_1, ... are the coefficients of prod_r 1/(1 - t^r);
* a Schur value is the trace of the permutation on the GL_n irrep and is
  obtained either from the power-sum expansion, using characters of
  S_|lam|, or from the Jacobi-Trudi determinant in the h's.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable

from . import kernels
from .characters import mn_character
from .errors import ConsistencyError
from .partitions import Partition, centralizer_order, partitions_of


def power_sum_at(k: int, rho: Iterable[int]) -> int:
    if k < 1:
        raise ValueError("power sum index must be positive")
    return sum(r for r in rho if k % r == 0)


@lru_cache(maxsize=4096)
def _series(rho: tuple[int, ...], degree: int) -> tuple[int, ...]:
    return tuple(kernels.complete_series(rho, degree))


def complete_series_at(rho: Iterable[int], degree: int) -> tuple[int, ...]:
    """(h_0, ..., h_degree) at cycle type ``rho``."""
    return _series(tuple(Partition(rho)), degree)


def complete_homogeneous_at(d: int, rho: Iterable[int]) -> int:
    if d < 0:
        return 0
    return complete_series_at(rho, d)[d]


def _int_det(matrix: list[list[int]]) -> int:
    # Bareiss fraction-free elimination; every division is exact.
    a = [row[:] for row in matrix]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def schur_at_jacobi_trudi(lam: Iterable[int], rho: Iterable[int]) -> int:
    lam, rho = Partition(lam), Partition(rho)
    if not lam:
        return 1
    h = complete_series_at(rho, lam[0] + len(lam) - 1)

    def hh(d: int) -> int:
        return h[d] if d >= 0 else 0

    if len(lam) == 1:
        return h[lam[0]]
    if len(lam) == 2:
        a, b = lam
        return h[a] * h[b] - h[a + 1] * hh(b - 1)
    k = len(lam)
    return _int_det([[hh(lam[i] - i + j) for j in range(k)] for i in range(k)])


@lru_cache(maxsize=1024)
def _scaled_character_row(lam: Partition) -> tuple[int, ...]:
    # chi^lam(sigma) * N!/z_sigma over sigma |- N, descending lex
    n_fact = factorial(lam.size)
    return tuple(mn_character(lam, s) * (n_fact // centralizer_order(s)) for s in partitions_of(lam.size))


@lru_cache(maxsize=4096)
def _power_products(size: int, rho: tuple[int, ...]) -> tuple[int, ...]:
    psum = {}
    out = []
    for sigma in partitions_of(size):
        value = 1
        for part in sigma:
            if part not in psum:
                psum[part] = power_sum_at(part, rho)
            value *= psum[part]
            if not value:
                break
        out.append(value)
    return tuple(out)


def schur_at_power_sum(lam: Iterable[int], rho: Iterable[int]) -> int:
    lam, rho = Partition(lam), Partition(rho)
    row = _scaled_character_row(lam)
    (total,) = kernels.class_sums([row], _power_products(lam.size, tuple(rho)))
    value, rem = divmod(total, factorial(lam.size))
    if rem:
        raise ConsistencyError(f"s_{lam.text()} at cycle type {rho.text()} is not an integer")
    return value


def schur_at(lam: Iterable[int], rho: Iterable[int], method: str = "auto") -> int:
    """Trace of a permutation of cycle type ``rho`` on the GL_|rho| irrep ``lam``.

    ``method`` is ``"jacobi_trudi"``, ``"power_sum"``, or ``"auto"``, which
    takes Jacobi-Trudi for at most two rows and the power-sum expansion
    otherwise. ``"both"`` runs both and raises ConsistencyError if they differ.
    """
    lam, rho = Partition(lam), Partition(rho)
    if len(lam) > rho.size:
        raise ValueError(f"{lam.text()} has more than {rho.size} parts")
    if method == "auto":
        method = "jacobi_trudi" if len(lam) <= 2 else "power_sum"
    if method == "jacobi_trudi":
        return schur_at_jacobi_trudi(lam, rho)
    if method == "power_sum":
        return schur_at_power_sum(lam, rho)
    if method == "both":
        a, b = schur_at_power_sum(lam, rho), schur_at_jacobi_trudi(lam, rho)
        if a != b:
            raise ConsistencyError(f"s_{lam.text()} at {rho.text()}: power sum {a} != Jacobi-Trudi {b}")
        return a
    raise ValueError(f"unknown method {method!r}")


def schur_values(lam: Iterable[int], n: int, method: str = "auto") -> tuple[int, ...]:
    """Schur values at every cycle type of S_n, descending lex."""
    return tuple(schur_at(lam, rho, method) for rho in partitions_of(n))

