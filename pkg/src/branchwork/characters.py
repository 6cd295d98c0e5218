"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule, worked on beta-sets: removing
a border strip of length r from a shape is the same as sliding one bead of
its beta-set down by r onto a free position, with sign (-1) to the number
of beads jumped over. The recursion consumes the largest cycle first and is
memoized on (remaining shape, remaining cycles).

A full table for S_n can be persisted as ``chartable-<n>.json`` in a cache
directory and is reloaded from there on later calls.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .partitions import Partition, partitions_of

CACHE_VERSION = 1
CACHE_ORDER = "desclex"


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    k = len(shape)
    beta = [shape[i] + k - 1 - i for i in range(k)]
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        t = b - r
        if t < 0 or t in occupied:
            continue
        # beads strictly between t and b are exactly those at indices i+1..j-1
        jumped = sum(1 for c in beta[i + 1:] if c > t)
        new_beta = sorted(beta[:i] + beta[i + 1:] + [t], reverse=True)
        new_shape = [new_beta[j] - (k - 1 - j) for j in range(k)]
        while new_shape and new_shape[-1] == 0:
            new_shape.pop()
        value = _mn(tuple(new_shape), rest)
        total += -value if jumped & 1 else value
    return total


def mn_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """chi^lam evaluated at a permutation of cycle type ``rho``."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam.text()}| != |{rho.text()}|")
    return _mn(tuple(lam), tuple(rho))


@dataclass(frozen=True)
class CharacterTable:
    """Exact character table of S_n with rows and columns in descending lex order."""

    n: int
    values: tuple[tuple[int, ...], ...]
    partitions: tuple[Partition, ...] = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        parts = partitions_of(self.n)
        if len(self.values) != len(parts) or any(len(r) != len(parts) for r in self.values):
            raise ValueError(f"character table for n={self.n} must be {len(parts)}x{len(parts)}")
        object.__setattr__(self, "partitions", parts)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(parts)})

    def index(self, lam: Iterable[int]) -> int:
        return self._index[Partition(lam)]

    def row(self, lam: Iterable[int]) -> tuple[int, ...]:
        return self.values[self.index(lam)]

    def value(self, lam: Iterable[int], rho: Iterable[int]) -> int:
        return self.values[self.index(lam)][self.index(rho)]

    def to_json(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "n": self.n,
            "order": CACHE_ORDER,
            "rows": {lam.text(): [str(v) for v in row] for lam, row in zip(self.partitions, self.values)},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CharacterTable":
        if doc.get("version") != CACHE_VERSION or doc.get("order") != CACHE_ORDER:
            raise ValueError("unsupported character table cache format")
        n = int(doc["n"])
        rows = doc["rows"]
        parts = partitions_of(n)
        if sorted(rows) != sorted(p.text() for p in parts):
            raise ValueError("character table rows do not match the partitions of n")
        return cls(n, tuple(tuple(int(v) for v in rows[p.text()]) for p in parts))


def compute_character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    return CharacterTable(n, tuple(tuple(_mn(lam, rho) for rho in parts) for lam in parts))


def cache_path(cache_dir: str | os.PathLike, n: int) -> Path:
    return Path(cache_dir) / f"chartable-{n}.json"


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render(table: CharacterTable) -> str:
    return json.dumps(table.to_json(), separators=(",", ":")) + "\n"


def file_checksum(path: str | os.PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


_memory: dict[int, CharacterTable] = {}


def character_table(n: int, cache_dir: str | os.PathLike | None = None) -> CharacterTable:
    """The character table of S_n.

    Tables are kept in memory per process. With ``cache_dir`` set, a valid
    file is loaded instead of recomputing; a missing file is written, and a
    corrupt one is recomputed and overwritten with a warning.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if cache_dir is None:
        if n not in _memory:
            _memory[n] = compute_character_table(n)
        return _memory[n]

    path = cache_path(cache_dir, n)
    if path.exists():
        try:
            table = CharacterTable.from_json(json.loads(path.read_text()))
            if table.n != n:
                raise ValueError(f"cache file holds n={table.n}")
        except (ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"corrupt character table cache {path}: {exc}; recomputing", RuntimeWarning)
        else:
            _memory.setdefault(n, table)
            return table
    table = _memory.get(n) or compute_character_table(n)
    _memory.setdefault(n, table)
    _write_atomic(path, _render(table))
    return table
