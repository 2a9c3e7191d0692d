"""Lattice points in dilated s-lecture hall polytopes and the generating
function identities tying them to s-Eulerian numerators."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Sequence

from .eulerian import e_poly, type_b_s
from .groups import multiset_poly
from .invseq import check_s
from .polyx import ExactPoly

__all__ = [
    "EhrhartData",
    "lattice_count",
    "lattice_counts",
    "series_from_numerator",
    "ehrhart_data",
    "ehrhart_check",
    "SERIES_KINDS",
    "series_identity_check",
    "series_identity_report",
]


def lattice_count(s: Sequence[int], t: int) -> int:
    """``|tP ∩ Z^n|`` for ``P = {0 <= l_1/s_1 <= ... <= l_n/s_n <= 1}``.

    Layered dynamic program: ``ways[v]`` counts valid prefixes ending in
    ``l_i = v``; the next layer sums a prefix of it, cut where
    ``l_i * s_{i+1} <= l_{i+1} * s_i``.
    """
    s = check_s(s)
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    ways = [1]  # l_0 = 0 with s_0 = 1
    prev_s = 1
    for si in s:
        prefix = [0]
        for w in ways:
            prefix.append(prefix[-1] + w)
        top = len(ways) - 1
        # largest previous value allowed under new value v is floor(v*prev_s/si)
        ways = [prefix[min(v * prev_s // si, top) + 1] for v in range(t * si + 1)]
        prev_s = si
    return sum(ways)


def lattice_counts(s: Sequence[int], t_max: int) -> list[int]:
    return [lattice_count(s, t) for t in range(t_max + 1)]


def series_from_numerator(h: ExactPoly, dim: int, t_max: int) -> list[int]:
    """Coefficients of ``h(x) / (1-x)^(dim+1)`` through ``x^t_max``."""
    coeffs = h.coeffs
    return [
        sum(c * comb(t - j + dim, dim) for j, c in enumerate(coeffs) if j <= t)
        for t in range(t_max + 1)
    ]


@dataclass(frozen=True)
class EhrhartData:
    s: tuple[int, ...]
    counts: tuple[int, ...]
    hstar: ExactPoly

    @property
    def matches(self) -> bool:
        expected = series_from_numerator(self.hstar, len(self.s), len(self.counts) - 1)
        return list(self.counts) == expected

    def to_json(self) -> dict:
        return {
            "s": list(self.s),
            "counts": [str(c) for c in self.counts],
            "hstar": self.hstar.to_json(),
            "series": [str(c) for c in series_from_numerator(
                self.hstar, len(self.s), len(self.counts) - 1)],
            "matches": self.matches,
        }


def ehrhart_data(s: Sequence[int], t_max: int, n: int | None = None) -> EhrhartData:
    s = check_s(s)
    n = len(s) if n is None else n
    if not 1 <= n <= len(s):
        raise ValueError(f"n must be in 1..{len(s)}")
    s = s[:n]
    return EhrhartData(s, tuple(lattice_counts(s, t_max)), e_poly(s))


def ehrhart_check(s: Sequence[int], n: int | None = None, T: int = 8) -> bool:
    return ehrhart_data(s, T, n).matches


def _signed_multiset_s(n):
    return tuple(v for i in range(1, n + 1) for v in (2 * i - 1, 4 * i))


def _multiset2_s(n):
    return tuple(v for i in range(1, n + 1) for v in (2 * i - 1, i))


def _macmahon_count(parts, t):
    return prod(comb(t + p, p) for p in parts)


SERIES_KINDS = ("signedB", "kary", "multiset2", "signedMultiset", "macmahon")


def _series_case(kind: str, n: int, k: int | None, parts: Sequence[int] | None):
    """(numerator, dimension, closed-form count function) for a kind."""
    if kind == "signedB":
        return e_poly(type_b_s(n)), n, lambda t: (2 * t + 1) ** n
    if kind == "kary":
        if k is None or k < 1:
            raise ValueError("kary needs k >= 1")
        return e_poly((k,) * n), n, lambda t: comb(n + k * t, n)
    if kind == "multiset2":
        return e_poly(_multiset2_s(n)), 2 * n, lambda t: ((t + 1) * (t + 2) // 2) ** n
    if kind == "signedMultiset":
        return e_poly(_signed_multiset_s(n)), 2 * n, lambda t: ((t + 1) * (2 * t + 1)) ** n
    if kind == "macmahon":
        parts = tuple(parts) if parts else (2,) * n
        if any(p < 1 for p in parts):
            raise ValueError("multiplicities must be positive")
        word = [i for i, p in enumerate(parts, start=1) for _ in range(p)]
        return multiset_poly(word), sum(parts), lambda t: _macmahon_count(parts, t)
    raise ValueError(f"unknown series kind {kind!r}; choose from {', '.join(SERIES_KINDS)}")


def series_identity_report(kind: str, n: int, k: int | None = None, T: int = 10,
                           parts: Sequence[int] | None = None) -> dict:
    if n < 1:
        raise ValueError("n must be positive")
    h, dim, count = _series_case(kind, n, k, parts)
    closed = [count(t) for t in range(T + 1)]
    series = series_from_numerator(h, dim, T)
    return {
        "kind": kind,
        "numerator": h.to_json(),
        "dimension": dim,
        "closed_form": [str(c) for c in closed],
        "series": [str(c) for c in series],
        "matches": closed == series,
    }


def series_identity_check(kind: str, n: int, k: int | None = None, T: int = 10,
                          parts: Sequence[int] | None = None) -> bool:
    """Compare the first ``T+1`` coefficients of ``numerator/(1-x)^(dim+1)``
    with the closed-form point counts for the given family."""
    return series_identity_report(kind, n, k, T, parts)["matches"]
