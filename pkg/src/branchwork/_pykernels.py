"""Pure-Python inner loops.

Each function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and results. The compiled versions work in machine integers and
raise ``OverflowError`` when a value leaves that range; callers then come
back to these, which use Python integers throughout.
"""

from __future__ import annotations

from typing import Sequence


def complete_series(parts: Sequence[int], degree: int) -> list[int]:
    """Coefficients of t^0..t^degree in prod over r in parts of 1/(1 - t^r)."""
    if degree < 0:
        return []
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    for r in parts:
        for i in range(r, degree + 1):
            coeffs[i] += coeffs[i - r]
    return coeffs


def class_sums(rows: Sequence[Sequence[int]], weights: Sequence[int]) -> list[int]:
    """sum_j rows[i][j] * weights[j] for every row i."""
    return [sum(c * w for c, w in zip(row, weights)) for row in rows]


def poly_mul_truncated(a: dict, b: dict, bound: int) -> dict:
    """Product of two bivariate polynomials {(i, j): c}, dropping terms with i + j > bound."""
    out: dict = {}
    for (i1, j1), c1 in a.items():
        room = bound - i1 - j1
        for (i2, j2), c2 in b.items():
            if i2 + j2 > room:
                continue
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def orbit_representatives(
    positions: Sequence[Sequence[int]], letters: Sequence[Sequence[int]], digits: int, base: int
) -> list[int]:
    """Minimal word of every orbit of a group acting on base-``base`` words.

    A word is ``sum(w[k] * base**k)``. Group element g sends letter c at
    position k to letter ``letters[g][c]`` at position ``positions[g][k]``.
    Words are swept in increasing order, so the first unseen word of an
    orbit is its numerically smallest member.
    """
    size = base**digits
    seen = bytearray(size)
    powers = [base**k for k in range(digits)]
    reps = []
    word_letters = [0] * digits
    for word in range(size):
        if seen[word]:
            continue
        reps.append(word)
        w = word
        for k in range(digits):
            w, word_letters[k] = divmod(w, base)
        for pos, let in zip(positions, letters):
            image = 0
            for k in range(digits):
                image += let[word_letters[k]] * powers[pos[k]]
            seen[image] = 1
    return reps
