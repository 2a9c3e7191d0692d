"""Permutation-like groups, their descent statistics, and the bijections
into inversion sequences.

Elements are small frozen dataclasses around tuples; enumeration helpers
yield them in a fixed order so tallies are deterministic.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence, Union

from .invseq import BudgetExceeded, ascent_set, enum_budget
from .polyx import ExactPoly
from .pqpoly import PQPoly

__all__ = [
    "Perm",
    "SignedPerm",
    "ColoredPerm",
    "MultisetPerm",
    "BijectionError",
    "STATISTICS",
    "stat",
    "phi",
    "theta",
    "psi",
    "psi_properties",
    "iter_group",
    "group_size",
    "group_poly",
    "exc_cyc_poly",
    "multiset_poly",
    "distinct_permutations",
]


class BijectionError(AssertionError):
    """A bijection image violated one of its certified properties."""


@dataclass(frozen=True)
class Perm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
        object.__setattr__(self, "window", w)

    @property
    def n(self):
        return len(self.window)


@dataclass(frozen=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.window)
        if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation")
        object.__setattr__(self, "window", w)

    @property
    def n(self):
        return len(self.window)

    @property
    def negatives(self) -> int:
        return sum(1 for v in self.window if v < 0)

    @property
    def is_even(self) -> bool:
        """Member of the type D subgroup (even number of negative entries)."""
        return self.negatives % 2 == 0

    def as_colored(self) -> ColoredPerm:
        return ColoredPerm(Perm(tuple(abs(v) for v in self.window)),
                           tuple(int(v < 0) for v in self.window), 2)


@dataclass(frozen=True)
class ColoredPerm:
    perm: Perm
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        c = tuple(self.colors)
        if len(c) != self.perm.n or any(not 0 <= v < self.k for v in c):
            raise ValueError("colors must be in 0..k-1, one per entry")
        object.__setattr__(self, "colors", c)

    @property
    def n(self):
        return self.perm.n


@dataclass(frozen=True)
class MultisetPerm:
    word: tuple[int, ...]
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.signs is not None:
            s = tuple(self.signs)
            if len(s) != len(self.word) or any(v not in (1, -1) for v in s):
                raise ValueError("signs must be +-1, one per letter")
            object.__setattr__(self, "signs", s)

    @property
    def n(self):
        return len(self.word)

    @property
    def values(self) -> tuple[int, ...]:
        if self.signs is None:
            return self.word
        return tuple(a * b for a, b in zip(self.word, self.signs))


GroupElement = Union[Perm, SignedPerm, ColoredPerm, MultisetPerm]


# ---------------------------------------------------------------------------
# statistics on plain words


def _descent_set(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def _inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def _exc(w: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if v > i)


def _cyc(w: Sequence[int]) -> int:
    seen = [False] * (len(w) + 1)
    cycles = 0
    for start in range(1, len(w) + 1):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = w[j - 1]
    return cycles


def _wreath_descents(perm: Sequence[int], colors: Sequence[int]) -> list[int]:
    """Descent set with ``pi_0 = xi_0 = 0``: i is a descent iff
    ``xi_i < xi_{i+1}`` or (equal colors and ``pi_i > pi_{i+1}``)."""
    out = []
    pp, pc = 0, 0
    for i, (v, c) in enumerate(zip(perm, colors)):
        if pc < c or (pc == c and pp > v):
            out.append(i)
        pp, pc = v, c
    return out


def _signed_descents_b(w: Sequence[int]) -> list[int]:
    """Natural-order type B descents: ``sigma_0 = 0``."""
    return ([0] if w[0] < 0 else []) + _descent_set(w)


def _signed_descents_d(w: Sequence[int]) -> list[int]:
    if len(w) < 2:
        raise ValueError("type D descents need n >= 2")
    return ([0] if w[0] + w[1] < 0 else []) + _descent_set(w)


def _as_wreath(x: GroupElement) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    if isinstance(x, ColoredPerm):
        return x.perm.window, x.colors, x.k
    if isinstance(x, SignedPerm):
        c = x.as_colored()
        return c.perm.window, c.colors, 2
    if isinstance(x, Perm):
        return x.window, (0,) * x.n, 1
    raise ValueError(f"wreath statistics do not apply to {type(x).__name__}")


def _word(x: GroupElement) -> tuple[int, ...]:
    if isinstance(x, (Perm, SignedPerm)):
        return x.window
    if isinstance(x, MultisetPerm):
        return x.values
    raise ValueError(f"statistic does not apply to {type(x).__name__}")


def _perm_only(x: GroupElement) -> tuple[int, ...]:
    if isinstance(x, Perm):
        return x.window
    raise ValueError(f"statistic only applies to Perm, not {type(x).__name__}")


def _signed_only(x: GroupElement) -> tuple[int, ...]:
    if isinstance(x, SignedPerm):
        return x.window
    raise ValueError(f"statistic only applies to SignedPerm, not {type(x).__name__}")


def _des(x):
    if isinstance(x, ColoredPerm):
        raise ValueError("use des_wreath for colored permutations")
    if isinstance(x, SignedPerm):
        raise ValueError("signed permutations: choose des_wreath or des_B explicitly")
    return len(_descent_set(_word(x)))


def _maj(x):
    if isinstance(x, (ColoredPerm, SignedPerm)):
        return sum(_wreath_descents(*_as_wreath(x)[:2]))
    return sum(_descent_set(_perm_only(x)))


def _comaj(x):
    if isinstance(x, (ColoredPerm, SignedPerm)):
        w, c, _ = _as_wreath(x)
        return sum(len(w) - j for j in _wreath_descents(w, c))
    w = _perm_only(x)
    return sum(len(w) - j for j in _descent_set(w))


def _inv_any(x):
    if isinstance(x, (ColoredPerm, SignedPerm)):
        return _inv(_as_wreath(x)[0])
    return _inv(_word(x))


def _finv(x):
    w, c, _ = _as_wreath(x)
    return _inv(w) + sum(i * v for i, v in enumerate(c, start=1))


def _fmaj(x):
    w, c, k = _as_wreath(x)
    return k * sum(len(w) - j for j in _wreath_descents(w, c)) - sum(c)


def _affine_des_b(x):
    w = _signed_only(x)
    if len(w) < 2:
        raise ValueError("affine descents need n >= 2")
    return (w[0] < 0) + len(_descent_set(w)) + (w[-2] + w[-1] > 0)


def _affine_des_d(x):
    w = _signed_only(x)
    if len(w) < 2:
        raise ValueError("affine descents need n >= 2")
    return (w[0] + w[1] < 0) + len(_descent_set(w)) + (w[-2] + w[-1] > 0)


def _des_multiset(x):
    if not isinstance(x, MultisetPerm):
        raise ValueError("des_multiset applies to multiset permutations")
    if x.signs is None:
        return len(_descent_set(x.word))
    return len(_signed_descents_b(x.values))


STATISTICS = {
    "des": _des,
    "inv": _inv_any,
    "maj": _maj,
    "comaj": _comaj,
    "exc": lambda x: _exc(_perm_only(x)),
    "cyc": lambda x: _cyc(_perm_only(x)),
    "des_wreath": lambda x: len(_wreath_descents(*_as_wreath(x)[:2])),
    "des_B": lambda x: len(_signed_descents_b(_signed_only(x))),
    "des_D": lambda x: len(_signed_descents_d(_signed_only(x))),
    "affine_des_B": _affine_des_b,
    "affine_des_D": _affine_des_d,
    "finv": _finv,
    "fmaj": _fmaj,
    "des_multiset": _des_multiset,
}


def stat(x: GroupElement, name: str) -> int:
    """Evaluate a named statistic; ValueError for inapplicable pairings.

    Two type B descent notions coexist: ``des_wreath`` orders
    ``-1 < -2 < ... < -n < 0 < 1 < ... < n`` (the k=2 colored descent) and
    ``des_B`` uses the natural order of the integers.
    """
    try:
        fn = STATISTICS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}") from None
    return fn(x)


# ---------------------------------------------------------------------------
# bijections


def _lehmer_left(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for j in range(i) if w[j] > w[i]) for i in range(len(w)))


def phi(pi: Perm, check: bool = True) -> tuple[int, ...]:
    """``t_i = #{j < i : pi_j > pi_i}``, an inversion sequence for (1, ..., n)."""
    t = _lehmer_left(pi.window)
    if check:
        s = tuple(range(1, pi.n + 1))
        if ascent_set(t, s) != frozenset(_descent_set(pi.window)):
            raise BijectionError(f"phi{pi.window}: descent set != ascent set")
        if sum(t) != _inv(pi.window):
            raise BijectionError(f"phi{pi.window}: inv != |t|")
    return t


def theta(x: ColoredPerm, check: bool = True) -> tuple[int, ...]:
    """``e_i = i * xi_i + t_i`` into ``I_n^(k, 2k, ..., nk)``."""
    t = _lehmer_left(x.perm.window)
    e = tuple(i * c + ti for i, (c, ti) in enumerate(zip(x.colors, t), start=1))
    if check:
        s = tuple(x.k * i for i in range(1, x.n + 1))
        if ascent_set(e, s) != frozenset(_wreath_descents(x.perm.window, x.colors)):
            raise BijectionError(f"theta: ascent set != descent set for {x}")
        if sum(e) != _finv(x):
            raise BijectionError(f"theta: finv != |e| for {x}")
    return e


def psi(sigma: SignedPerm, check: bool = True) -> tuple[int, ...]:
    """``e_i = t_i`` if ``sigma_i > 0`` else ``2i - 1 - t_i``, where t is
    :func:`phi` of ``|sigma|``; lands in ``I_n^(2, 4, ..., 2n)``."""
    w = sigma.window
    t = _lehmer_left([abs(v) for v in w])
    e = tuple(ti if v > 0 else 2 * i - 1 - ti for i, (v, ti) in enumerate(zip(w, t), start=1))
    if check:
        bad = [k for k, ok in psi_properties(sigma, e).items() if not ok]
        if bad:
            raise BijectionError(f"psi{w}: properties {bad} fail")
    return e


def psi_properties(sigma: SignedPerm, e: Sequence[int]) -> dict[str, bool]:
    """The five transport properties of psi, each as an exact equivalence."""
    w, n = sigma.window, sigma.n
    out = {
        "first_sign": (w[0] < 0) == (e[0] > 0),
        "last_sign": (w[-1] > 0) == (e[-1] < n),
        "descents": all(
            (w[i - 1] > w[i]) == (e[i - 1] * (i + 1) < e[i] * i) for i in range(1, n)
        ),
    }
    if n >= 2:
        out["type_d_zero"] = (w[0] + w[1] < 0) == (2 * e[0] + e[1] >= 3)
        # e_{n-1}/(n-1) + e_n/n < (2n-1)/n, scaled by n(n-1)
        out["affine_tail"] = (w[-2] + w[-1] > 0) == (
            n * e[-2] + (n - 1) * e[-1] < (2 * n - 1) * (n - 1)
        )
    return out


# ---------------------------------------------------------------------------
# enumeration


def distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements in lexicographic order (next-permutation)."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _multiset_count(m: Sequence[int]) -> int:
    return factorial(len(m)) // prod(factorial(c) for c in Counter(m).values())


def group_size(kind: str, n: int = 0, k: int = 1, multiset: Sequence[int] = ()) -> int:
    if kind == "S":
        return factorial(n)
    if kind == "B":
        return 2**n * factorial(n)
    if kind == "D":
        return 2 ** max(n - 1, 0) * factorial(n)
    if kind == "wreath":
        return k**n * factorial(n)
    if kind == "multiset":
        return _multiset_count(multiset)
    if kind == "signed_multiset":
        return _multiset_count(multiset) * 2 ** len(multiset)
    raise ValueError(f"unknown group kind {kind!r}")


def iter_group(kind: str, n: int = 0, k: int = 1, multiset: Sequence[int] = (),
               budget: int | None = None) -> Iterator[GroupElement]:
    """Enumerate S|B|D|wreath|multiset|signed_multiset elements."""
    size = group_size(kind, n, k, multiset)
    limit = enum_budget() if budget is None else budget
    if size > limit:
        raise BudgetExceeded(f"enumeration of {size} group elements exceeds budget {limit}")
    if kind == "S":
        return (Perm(p) for p in permutations(range(1, n + 1)))
    if kind in ("B", "D"):
        def signed():
            for p in permutations(range(1, n + 1)):
                for signs in product((1, -1), repeat=n):
                    sp = SignedPerm(tuple(a * b for a, b in zip(p, signs)))
                    if kind == "B" or sp.is_even:
                        yield sp
        return signed()
    if kind == "wreath":
        return (ColoredPerm(Perm(p), c, k)
                for p in permutations(range(1, n + 1))
                for c in product(range(k), repeat=n))
    if kind == "multiset":
        return (MultisetPerm(w) for w in distinct_permutations(multiset))
    if kind == "signed_multiset":
        return (MultisetPerm(w, sg)
                for w in distinct_permutations(multiset)
                for sg in product((1, -1), repeat=len(multiset)))
    raise ValueError(f"unknown group kind {kind!r}")


def group_poly(kind: str, n: int = 0, x: str = "des", q: str | None = None,
               p: str | None = None, k: int = 1, multiset: Sequence[int] = (),
               budget: int | None = None) -> PQPoly:
    """Tally ``x^{X} p^{P} q^{Q}`` over a group by enumeration."""
    acc: dict = defaultdict(int)
    fx = STATISTICS.get(x)
    if fx is None:
        raise ValueError(f"unknown statistic {x!r}")
    fp = STATISTICS[p] if p else None
    fq = STATISTICS[q] if q else None
    for g in iter_group(kind, n, k, multiset, budget):
        acc[(fx(g), fp(g) if fp else 0, fq(g) if fq else 0)] += 1
    return PQPoly(acc)


def exc_cyc_poly(n: int, k: int, budget: int | None = None) -> ExactPoly:
    """``k^n A^{exc,cyc}_n(x, 1/k)`` as the integer tally
    ``sum_pi x^exc k^(n - cyc)``."""
    coeffs: dict[int, int] = defaultdict(int)
    for g in iter_group("S", n, budget=budget):
        coeffs[_exc(g.window)] += k ** (n - _cyc(g.window))
    deg = max(coeffs, default=0)
    return ExactPoly(tuple(coeffs.get(i, 0) for i in range(deg + 1)))


def multiset_poly(multiset: Sequence[int], signed: bool = False,
                  budget: int | None = None) -> ExactPoly:
    """Descent polynomial over (signed) rearrangements of a multiset.

    Signed words use the natural order with ``w_0 = 0``, so a negative first
    letter counts as a descent at position 0.
    """
    kind = "signed_multiset" if signed else "multiset"
    return group_poly(kind, x="des_multiset", multiset=multiset, budget=budget).to_exact()
