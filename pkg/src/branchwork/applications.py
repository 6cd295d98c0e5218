"""Two counting problems answered by restricting to permutation matrices.

* Simple graphs on n vertices up to isomorphism: a class average over
  cycle types of the number of edge sets a permutation fixes.
* Dynamical systems (self-maps up to simultaneous relabelling) on n
  points: the sum over lam |- n of b(lam, lam).

Both have brute-force orbit counters for small n. This module also computes
the S_n-invariant dimension of the exterior algebra on Lambda^2 C^n, by a
trace formula and by Schur expansion plus branching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial, gcd, lcm
from typing import Iterable

from . import kernels
from .branching import branch_one
from .characters import character_table
from .errors import ConsistencyError
from .partitions import Partition, centralizer_order, cycle_types, partitions_of
from .schur_eval import power_sum_at

GRAPH_ORACLE_MAX = 6
DYNAMICS_ORACLE_MAX = 5
EXTERIOR_CHECK_MAX = 4


@dataclass(frozen=True)
class CountReport:
    kind: str
    n: int
    method: str
    count: int
    summands: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "n": self.n, "method": self.method, "count": str(self.count)}
        if self.summands:
            doc["summands"] = {k: str(v) for k, v in self.summands.items()}
        return doc


def edge_orbit_lengths(rho: Iterable[int]) -> list[int]:
    """Orbit lengths of a permutation of cycle type ``rho`` on 2-subsets."""
    rho = list(Partition(rho))
    lengths = []
    for r in rho:
        if r % 2:
            lengths += [r] * ((r - 1) // 2)
        else:
            lengths += [r] * (r // 2 - 1) + [r // 2]
    for r, s in combinations(rho, 2):
        lengths += [lcm(r, s)] * gcd(r, s)
    return lengths


def _class_average(n: int, trace) -> int:
    total = sum(Fraction(trace(rho), centralizer_order(rho)) for rho in cycle_types(n))
    if total.denominator != 1:
        raise ConsistencyError(f"class average {total} is not an integer")
    return total.numerator


def count_graphs(n: int) -> CountReport:
    """Isomorphism classes of simple graphs on ``n`` vertices.

    A permutation fixes exactly 2**(number of edge orbits) edge sets, so the
    invariant count is the class average of that trace.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    count = _class_average(n, lambda rho: 2 ** len(edge_orbit_lengths(rho)))
    return CountReport("graphs", n, "character-formula", count)


def _all_permutations(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(n)))


def graph_representatives(n: int) -> list[int]:
    """Minimal edge-set bitmask of each isomorphism class (edges in colex order)."""
    if not 1 <= n <= GRAPH_ORACLE_MAX:
        raise ValueError(f"graph oracle runs for 1 <= n <= {GRAPH_ORACLE_MAX}")
    edges = list(combinations(range(n), 2))
    index = {e: k for k, e in enumerate(edges)}
    positions = [
        [index[tuple(sorted((s[i], s[j])))] for i, j in edges] for s in _all_permutations(n)
    ]
    letters = [[0, 1]] * len(positions)
    return kernels.orbit_representatives(positions, letters, len(edges), 2)


def graphs_bruteforce(n: int) -> CountReport:
    return CountReport("graphs", n, "brute-force", len(graph_representatives(n)))


def count_dynamics(n: int) -> CountReport:
    """Self-maps of an n-set up to relabelling, as the sum of b(lam, lam)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = character_table(n)
    summands = {lam.text(): branch_one(lam, lam, n, table) for lam in partitions_of(n)}
    return CountReport("dynamics", n, "character-formula", sum(summands.values()), summands)


def dynamics_representatives(n: int) -> list[int]:
    """Minimal word sum(f(k) * n**k) of each conjugacy orbit of self-maps."""
    if not 1 <= n <= DYNAMICS_ORACLE_MAX:
        raise ValueError(f"dynamics oracle runs for 1 <= n <= {DYNAMICS_ORACLE_MAX}")
    perms = [list(s) for s in _all_permutations(n)]
    # (s.f)(s(k)) = s(f(k)): position k moves to s(k), letter c becomes s(c)
    return kernels.orbit_representatives(perms, perms, n, n)


def dynamics_bruteforce(n: int) -> CountReport:
    return CountReport("dynamics", n, "brute-force", len(dynamics_representatives(n)))


def exterior_trace(rho: Iterable[int]) -> int:
    """Trace of a permutation matrix of cycle type ``rho`` on Lambda(Lambda^2 C^n).

    The eigenvalues on Lambda^2 are the pairwise products of eigenvalues on
    C^n, whose power sums are (p_k^2 - p_2k)/2; Newton's identities turn
    them into the elementary values e_k, and the trace is their sum.
    """
    rho = Partition(rho)
    top = comb(rho.size, 2)
    pair_sums = [None] + [
        Fraction(power_sum_at(k, rho) ** 2 - power_sum_at(2 * k, rho), 2) for k in range(1, top + 1)
    ]
    e = [Fraction(1)]
    for k in range(1, top + 1):
        e.append(sum((-1) ** (i - 1) * e[k - i] * pair_sums[i] for i in range(1, k + 1)) / k)
    total = sum(e)
    if total.denominator != 1:
        raise ConsistencyError(f"exterior trace at {rho.text()} is {total}")
    return total.numerator


def exterior_invariant_dimension(n: int) -> int:
    """dim of the S_n-fixed vectors in Lambda(Lambda^2 C^n), by class averaging."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _class_average(n, exterior_trace)


def _semistandard_monomials(lam: Partition, n: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of s_lam(x_1..x_n) by enumerating tableaux."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid: dict[tuple[int, int], int] = {}
    out: dict[tuple[int, ...], int] = {}
    content = [0] * n

    def fill(k: int) -> None:
        if k == len(cells):
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        i, j = cells[k]
        low = max(grid[(i, j - 1)] if j else 0, grid[(i - 1, j)] + 1 if i else 0)
        for v in range(low, n):
            grid[(i, j)] = v
            content[v] += 1
            fill(k + 1)
            content[v] -= 1
        grid.pop((i, j), None)

    fill(0)
    return out


def exterior_schur_constituents(n: int) -> dict[Partition, int]:
    """Schur expansion of prod_{i<j} (1 + x_i x_j) in n variables."""
    poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i, j in combinations(range(n), 2):
        nxt = dict(poly)
        for key, c in poly.items():
            shifted = list(key)
            shifted[i] += 1
            shifted[j] += 1
            shifted = tuple(shifted)
            nxt[shifted] = nxt.get(shifted, 0) + c
        poly = nxt
    constituents: dict[Partition, int] = {}
    while poly:
        # the lex-largest exponent of a symmetric polynomial is its top Schur index
        lead = max(poly)
        c = poly[lead]
        lam = Partition(lead)
        if c < 0 or list(lead) != sorted(lead, reverse=True):
            raise ConsistencyError(f"Schur expansion failed at {lead}")
        constituents[lam] = c
        for key, v in _semistandard_monomials(lam, n).items():
            left = poly.get(key, 0) - c * v
            if left:
                poly[key] = left
            else:
                poly.pop(key, None)
    return dict(sorted(constituents.items(), reverse=True))


def exterior_invariants_by_branching(n: int) -> int:
    """Trivial-isotypic dimension of Lambda(Lambda^2 C^n), summed over its Schur constituents."""
    if not 1 <= n <= EXTERIOR_CHECK_MAX:
        raise ValueError(f"exterior check runs for 1 <= n <= {EXTERIOR_CHECK_MAX}")
    table = character_table(n)
    trivial = Partition((n,))
    return sum(c * branch_one(lam, trivial, n, table) for lam, c in exterior_schur_constituents(n).items())


def invariant_dimension_check(n: int) -> bool:
    """Does count_graphs(n) equal the S_n-invariant dimension of Lambda(Lambda^2 C^n)?"""
    return count_graphs(n).count == exterior_invariants_by_branching(n)
