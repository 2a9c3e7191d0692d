"""s-inversion sequences, their statistics, and brute-force tallies.

An s-inversion sequence is a tuple ``e`` with ``0 <= e[i] < s[i]``.  All
fraction comparisons below are integer cross-multiplications.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Callable, Iterator, Sequence

from .pqpoly import PQPoly

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "StatBundle",
    "InvSeq",
    "STAT_NAMES",
    "check_s",
    "enum_budget",
    "ascent_set",
    "asc",
    "amaj",
    "ifmaj",
    "ascent_set_d",
    "asc_d",
    "affine_asc_d",
    "stats",
    "iter_invseqs",
    "partition_bounds",
    "oracle_poly",
    "oracle_asc",
    "wreath_k",
    "is_type_b",
]

DEFAULT_BUDGET = 10**8
PARALLEL_MIN = 200_000

STAT_NAMES = ("asc", "amaj", "weight", "ifmaj", "asc_d", "affine_asc_d")


class BudgetExceeded(ValueError):
    """Raised when an enumeration would exceed the configured budget."""


def enum_budget() -> int:
    return int(os.environ.get("EULERIAN_ENUM_BUDGET", DEFAULT_BUDGET))


def default_workers() -> int:
    env = os.environ.get("EULERIAN_WORKERS")
    return int(env) if env else (os.cpu_count() or 1)


def check_s(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(v) for v in s)
    if any(v < 1 for v in s):
        raise ValueError(f"s must contain positive integers, got {s}")
    return s


def wreath_k(s: Sequence[int]) -> int:
    """The k with ``s == (k, 2k, ..., nk)``; ValueError otherwise."""
    if not s or any(v != (i + 1) * s[0] for i, v in enumerate(s)):
        raise ValueError(f"statistic needs s = (k, 2k, ..., nk), got {tuple(s)}")
    return s[0]


def is_type_b(s: Sequence[int]) -> bool:
    return bool(s) and all(v == 2 * (i + 1) for i, v in enumerate(s))


def _require_type_b(s: Sequence[int]):
    if not is_type_b(s):
        raise ValueError(f"type D statistics need s = (2, 4, ..., 2n), got {tuple(s)}")
    if len(s) < 2:
        raise ValueError("type D statistics need n >= 2")


def ascent_set(e: Sequence[int], s: Sequence[int]) -> frozenset[int]:
    """Indices ``i`` in ``0..n-1`` with ``e_i/s_i < e_{i+1}/s_{i+1}``,
    where ``e_0 = 0`` and ``s_0 = 1``."""
    out = []
    pe, ps = 0, 1
    for i, (ei, si) in enumerate(zip(e, s)):
        if pe * si < ei * ps:
            out.append(i)
        pe, ps = ei, si
    return frozenset(out)


def asc(e, s) -> int:
    n, pe, ps = 0, 0, 1
    for ei, si in zip(e, s):
        if pe * si < ei * ps:
            n += 1
        pe, ps = ei, si
    return n


def amaj(e, s) -> int:
    n = len(e)
    return sum(n - j for j in ascent_set(e, s))


def ifmaj(e, s) -> int:
    k = wreath_k(s)
    return k * amaj(e, s) - sum(ej // j for j, ej in enumerate(e, start=1))


def ascent_set_d(e, s) -> frozenset[int]:
    """Type D ascent set on ``I_n^(2,4,...,2n)``."""
    _require_type_b(s)
    out = {i for i in range(1, len(e)) if e[i - 1] * (i + 1) < e[i] * i}
    if 2 * e[0] + e[1] >= 3:
        out.add(0)
    return frozenset(out)


def asc_d(e, s) -> int:
    return len(ascent_set_d(e, s))


def affine_asc_d(e, s) -> int:
    n = len(e)
    extra = n * e[n - 2] + (n - 1) * e[n - 1] < (2 * n - 1) * (n - 1)
    return asc_d(e, s) + extra


@dataclass(frozen=True)
class StatBundle:
    asc: int
    amaj: int
    weight: int
    ifmaj: int | None = None
    asc_d: int | None = None
    affine_asc_d: int | None = None


def stats(e, s, k: int | None = None, type_d: bool = False) -> StatBundle:
    """All statistics of ``e``.  ``k`` requests Ifmaj (s must be (k,...,nk));
    ``type_d`` requests the type D ascent counts (s must be (2,...,2n))."""
    s = check_s(s)
    if k is not None and wreath_k(s) != k:
        raise ValueError(f"s is not (k, 2k, ..., nk) for k={k}")
    a = ascent_set(e, s)
    n = len(e)
    return StatBundle(
        asc=len(a),
        amaj=sum(n - j for j in a),
        weight=sum(e),
        ifmaj=ifmaj(e, s) if k is not None else None,
        asc_d=asc_d(e, s) if type_d else None,
        affine_asc_d=affine_asc_d(e, s) if type_d else None,
    )


@dataclass(frozen=True)
class InvSeq:
    """An s-inversion sequence together with its bounding sequence."""

    e: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        e, s = tuple(self.e), check_s(self.s)
        if len(e) != len(s):
            raise ValueError("e and s must have the same length")
        if any(not 0 <= ei < si for ei, si in zip(e, s)):
            raise ValueError(f"{e} is not an inversion sequence for s={s}")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "s", s)

    def ascent_set(self) -> frozenset[int]:
        return ascent_set(self.e, self.s)

    def stats(self, k: int | None = None, type_d: bool = False) -> StatBundle:
        return stats(self.e, self.s, k=k, type_d=type_d)


# ---------------------------------------------------------------------------
# enumeration


def _check_budget(s, budget):
    total = prod(s)
    limit = enum_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"enumeration of {total} inversion sequences exceeds budget {limit}")
    return total


def partition_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous ranges."""
    return [(j * total // parts, (j + 1) * total // parts) for j in range(parts)]


def _unrank(s, idx):
    digits = [0] * len(s)
    for i in range(len(s) - 1, -1, -1):
        idx, digits[i] = divmod(idx, s[i])
    return digits


def _iter_range(s: tuple[int, ...], start: int, stop: int) -> Iterator[tuple[int, ...]]:
    if start >= stop:
        return
    digits = _unrank(s, start)
    n = len(s)
    for _ in range(stop - start):
        yield tuple(digits)
        i = n - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < s[i]:
                break
            digits[i] = 0
            i -= 1


def iter_invseqs(s: Sequence[int], part: tuple[int, int] | None = None,
                 budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """All of ``I_n^(s)`` in lexicographic order.

    ``part=(j, w)`` yields only the j-th of w contiguous slices, so that
    workers can tally disjoint ranges independently.
    """
    s = check_s(s)
    total = _check_budget(s, budget)
    if part is None:
        return _iter_range(s, 0, total)
    j, w = part
    if not 0 <= j < w:
        raise ValueError("part index out of range")
    lo, hi = partition_bounds(total, w)[j]
    return _iter_range(s, lo, hi)


def _stat_fn(name: str, s: tuple[int, ...]) -> Callable:
    if name == "asc":
        return lambda e: asc(e, s)
    if name == "amaj":
        return lambda e: amaj(e, s)
    if name == "weight":
        return sum
    if name == "ifmaj":
        wreath_k(s)
        return lambda e: ifmaj(e, s)
    if name == "asc_d":
        _require_type_b(s)
        return lambda e: asc_d(e, s)
    if name == "affine_asc_d":
        _require_type_b(s)
        return lambda e: affine_asc_d(e, s)
    raise ValueError(f"unknown statistic {name!r}; choose from {', '.join(STAT_NAMES)}")


def _tally(s, names, start, stop) -> dict:
    fx, fp, fq = (_stat_fn(n, s) if n else None for n in names)
    acc: dict = defaultdict(int)
    for e in _iter_range(s, start, stop):
        acc[(fx(e), fp(e) if fp else 0, fq(e) if fq else 0)] += 1
    return dict(acc)


def oracle_poly(s: Sequence[int], x: str = "asc", p: str | None = None, q: str | None = None,
                workers: int | None = None, budget: int | None = None) -> PQPoly:
    """Brute-force generating polynomial ``sum_e x^{X(e)} p^{P(e)} q^{Q(e)}``.

    ``x``, ``p`` and ``q`` name statistics from :data:`STAT_NAMES`.  The
    selection ``x=asc, p=weight, q=amaj`` gives the (p,q)-analog and
    ``x=asc, q=ifmaj`` the flag-major tally.
    """
    s = check_s(s)
    total = _check_budget(s, budget)
    names = (x, p, q)
    for n in names:
        if n:
            _stat_fn(n, s)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or total < PARALLEL_MIN:
        return PQPoly(_tally(s, names, 0, total))
    out = PQPoly()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(_tally, s, names, lo, hi) for lo, hi in partition_bounds(total, workers)]
        for f in futs:
            out = out + PQPoly(f.result())
    return out


def oracle_asc(s: Sequence[int], stat: str = "asc", **kw):
    """Single-statistic tally as an :class:`ExactPoly`."""
    return oracle_poly(s, x=stat, **kw).to_exact()
