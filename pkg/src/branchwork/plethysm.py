"""GL_2 decompositions of Schur functors applied to binary forms.

The character of F^mu(Sym^m C^2) is s_mu evaluated at the m+1 monomials
x^(m-i) y^i. It is assembled from the power-sum expansion of s_mu with
exact integer bivariate polynomials. The multiplicity of the GL_2 weight
(a, b), a >= b, is the drop between neighbouring weight spaces,
coeff(x^a y^b) - coeff(x^(a+1) y^(b-1)).

For the graded space Sym C^2 the alphabet is every monomial x^a y^b; the
computation is cut off at a total degree D, which leaves every coefficient
of degree <= D exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable

from . import kernels
from .branching import branch_one
from .characters import mn_character
from .errors import ConsistencyError, TheoremViolation
from .partitions import Partition, centralizer_order, gl_dimension, partitions_of

Poly = dict  # {(x exponent, y exponent): integer coefficient}


@dataclass(frozen=True)
class GL2Decomposition:
    """Multiplicities of GL_2 irreps (a, b), a >= b, in one homogeneous piece."""

    mu: Partition
    m: int | None
    degree: int
    weights: dict

    def __getitem__(self, weight: tuple[int, int]) -> int:
        return self.weights.get(tuple(weight), 0)

    def dimension(self) -> int:
        return sum((a - b + 1) * c for (a, b), c in self.weights.items())

    def to_json(self, witnesses: Iterable[int] | None = None) -> dict:
        doc = {
            "mu": self.mu.text(),
            "m": self.m,
            "weights": {f"{a},{b}": str(c) for (a, b), c in self.weights.items()},
        }
        if self.m is None:
            doc["degree"] = self.degree
        if witnesses is not None:
            doc["witnesses"] = list(witnesses)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "GL2Decomposition":
        mu = Partition.parse(doc["mu"])
        m = doc["m"]
        weights = {}
        for key, value in doc["weights"].items():
            a, b = (int(t) for t in key.split(","))
            weights[(a, b)] = int(value)
        degree = doc["degree"] if m is None else mu.size * m
        return cls(mu, m, degree, weights)


def _schur_character(mu: Partition, power_sum, bound: int) -> Poly:
    """s_mu as a bivariate polynomial; ``power_sum(k)`` gives p_k of the alphabet."""
    size = mu.size
    n_fact = factorial(size)
    cache: dict[tuple[int, ...], Poly] = {(): {(0, 0): 1}}

    def product(sigma: tuple[int, ...]) -> Poly:
        if sigma not in cache:
            cache[sigma] = kernels.poly_mul_truncated(product(sigma[:-1]), power_sum(sigma[-1]), bound)
        return cache[sigma]

    acc: Poly = {}
    for sigma in partitions_of(size):
        chi = mn_character(mu, sigma)
        if not chi:
            continue
        coef = chi * (n_fact // centralizer_order(sigma))
        for key, c in product(tuple(sigma)).items():
            acc[key] = acc.get(key, 0) + coef * c
    out: Poly = {}
    for key, total in acc.items():
        c, rem = divmod(total, n_fact)
        if rem:
            raise ConsistencyError(f"character of F^{mu.text()} has non-integral coefficient at {key}")
        if c < 0:
            raise ConsistencyError(f"character of F^{mu.text()} has negative coefficient at {key}")
        if c:
            out[key] = c
    return out


def _extract(char: Poly, mu: Partition) -> dict[int, dict[tuple[int, int], int]]:
    by_degree: dict[int, dict[tuple[int, int], int]] = {}
    for (a, b), c in char.items():
        if char.get((b, a), 0) != c:
            raise ConsistencyError(f"character of F^{mu.text()} is not symmetric at {(a, b)}")
        if a < b:
            continue
        mult = c - char.get((a + 1, b - 1), 0) if b else c
        if mult < 0:
            raise ConsistencyError(f"negative multiplicity {mult} of ({a},{b}) in F^{mu.text()}")
        if mult:
            by_degree.setdefault(a + b, {})[(a, b)] = mult
    return {e: dict(sorted(w.items(), reverse=True)) for e, w in by_degree.items()}


@lru_cache(maxsize=None)
def _sym(mu: Partition, m: int) -> GL2Decomposition:
    degree = mu.size * m

    def power_sum(k: int) -> Poly:
        return {(k * (m - i), k * i): 1 for i in range(m + 1)}

    pieces = _extract(_schur_character(mu, power_sum, degree), mu)
    stray = [e for e in pieces if e != degree]
    if stray:
        raise ConsistencyError(f"F^{mu.text()}(Sym^{m}) has weights outside total degree {degree}: {stray}")
    return GL2Decomposition(mu, m, degree, pieces.get(degree, {}))


def plethysm_sym(mu: Iterable[int], m: int) -> GL2Decomposition:
    """Decompose F^mu(Sym^m C^2) into GL_2 irreps."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _sym(Partition(mu), m)


@lru_cache(maxsize=None)
def _graded(mu: Partition, top: int) -> dict[int, GL2Decomposition]:
    def power_sum(k: int) -> Poly:
        reach = top // k
        return {(k * a, k * (e - a)): 1 for e in range(reach + 1) for a in range(e + 1)}

    pieces = _extract(_schur_character(mu, power_sum, top), mu)
    return {e: GL2Decomposition(mu, None, e, pieces.get(e, {})) for e in range(top + 1)}


def plethysm_graded(mu: Iterable[int], top: int) -> dict[int, GL2Decomposition]:
    """Degree 0..top pieces of F^mu(Sym C^2); higher degrees are not computed."""
    if top < 0:
        raise ValueError("degree bound must be non-negative")
    return dict(_graded(Partition(mu), top))


def duality_sides(mu: Iterable[int], lam: Iterable[int]) -> tuple[int, int]:
    """(branching multiplicity, plethysm multiplicity) for a two-row ``lam``."""
    mu, lam = Partition(mu), Partition(lam)
    if len(lam) > 2:
        raise ValueError("lam must have at most two rows")
    n = mu.size
    # F^lam_n vanishes when lam has more than n rows
    left = branch_one(lam, mu, n) if len(lam) <= n else 0
    right = plethysm_graded(mu, lam.size)[lam.size][(lam.part(0), lam.part(1))]
    return left, right


def verify_duality(mu: Iterable[int], lam: Iterable[int]) -> bool:
    left, right = duality_sides(mu, lam)
    return left == right


def short_tail_weights(n: int, m: int) -> list[tuple[int, int]]:
    """GL_2 weights ((nm+d)/2, (nm-d)/2) for 0 <= d <= m with d = nm mod 2."""
    total = n * m
    return [((total + d) // 2, (total - d) // 2) for d in range(total % 2, m + 1, 2)]


def verify_theorem(mu: Iterable[int], m: int) -> list[int]:
    """Tail lengths d <= m whose weight occurs in F^mu(Sym^m C^2).

    The guarantee concerns the nonzero GL_(m+1) irrep F^mu(C^(m+1)), so
    ``mu`` may have at most m + 1 rows; longer ``mu`` raise ValueError.
    Raises TheoremViolation if there are no witnesses.
    """
    mu = Partition(mu)
    if mu.size < 1:
        raise ValueError("mu must be a partition of n >= 1")
    if m < 2:
        raise ValueError("the existence guarantee needs m >= 2")
    if len(mu) > m + 1:
        raise ValueError(f"F^{mu.text()}(Sym^{m} C^2) is zero: {mu.text()} has more than {m + 1} rows")
    decomposition = plethysm_sym(mu, m)
    witnesses = [a - b for a, b in short_tail_weights(mu.size, m) if decomposition[(a, b)]]
    if not witnesses:
        raise TheoremViolation(f"F^{mu.text()}(Sym^{m} C^2) has no short-tail constituent")
    return witnesses


def verify_injection(mu: Iterable[int], m: int, lam: Iterable[int]) -> bool:
    """Multiplicity of ``lam`` in F^mu(Sym^m) is at most its multiplicity in F^mu(Sym)."""
    mu, lam = Partition(mu), Partition(lam)
    if lam.size != mu.size * m or len(lam) > 2:
        raise ValueError("lam must be a two-row partition of |mu| * m")
    weight = (lam.part(0), lam.part(1))
    return plethysm_sym(mu, m)[weight] <= plethysm_graded(mu, lam.size)[lam.size][weight]


def expected_dimension(mu: Iterable[int], m: int) -> int:
    """dim F^mu(C^(m+1)), zero when mu has more than m+1 rows."""
    mu = Partition(mu)
    return gl_dimension(mu, m + 1) if len(mu) <= m + 1 else 0
