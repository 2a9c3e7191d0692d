"""Refined s-Eulerian recurrences and the polynomials assembled from them.

Every family here is produced by :func:`weighted_recurrence`, a single
engine for recurrences of the shape

    R[m+1][i] = d(m, i) * ( sum_{j <  l} c(m, j) x R[m][j](c(m, j) x)
                          + sum_{j >= l}           R[m][j](c(m, j) x) )

with ``l = ceil(i * s_m / s_{m+1})`` and level one ``R[1][0] = b(0)``,
``R[1][i] = b(i) x``.  The weights ``b, c, d`` are monomials in p and q, so
the standard, (p,q), and flag-major families differ only in their weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .invseq import check_s
from .polyx import ExactPoly, certify_interlaces, parse_rational
from .pqpoly import PQPoly

__all__ = [
    "RefinedFamily",
    "ceil_div",
    "weighted_recurrence",
    "refined",
    "e_poly",
    "t_refined",
    "t_poly",
    "d_poly",
    "T1",
    "D1",
    "affine_b_poly",
    "refined_pq",
    "pq_poly",
    "fmaj_refined",
    "fmaj_poly",
    "specialize",
    "interlace_chain",
    "a_inv",
    "a_comaj",
    "a_maj",
    "g_finv",
    "g_comaj",
    "g_maj",
    "type_b_s",
    "wreath_s",
]

Monomial = tuple[int, int]  # (p exponent, q exponent)
KINDS = ("standard", "typeD", "pq", "fmaj")

T1 = ExactPoly((1, 1))
D1 = ExactPoly((1,))


def ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def type_b_s(n: int) -> tuple[int, ...]:
    return tuple(2 * i for i in range(1, n + 1))


def wreath_s(n: int, k: int) -> tuple[int, ...]:
    return tuple(k * i for i in range(1, n + 1))


@dataclass(frozen=True)
class RefinedFamily:
    kind: str
    s: tuple[int, ...]
    n: int
    polys: tuple

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __iter__(self):
        return iter(self.polys)

    def total(self):
        out = self.polys[0]
        for p in self.polys[1:]:
            out = out + p
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "s": list(self.s),
            "n": self.n,
            "polys": [p.to_json() for p in self.polys],
        }


def _default_threshold(s):
    return lambda m, i: ceil_div(i * s[m - 1], s[m])


def weighted_recurrence(
    s: Sequence[int],
    n: int,
    base: Callable[[int], Monomial] = lambda i: (0, 0),
    dilation: Callable[[int, int], Monomial] = lambda m, j: (0, 0),
    prefactor: Callable[[int, int], Monomial] = lambda m, i: (0, 0),
    threshold: Callable[[int, int], int] | None = None,
    start: tuple[int, Sequence[PQPoly]] | None = None,
) -> list[PQPoly]:
    """Level ``n`` of the weighted refined recurrence (see module doc).

    ``threshold(m, i)`` gives ``l`` when building entry ``i`` of level
    ``m + 1`` from level ``m``; ``start=(level, family)`` replaces the
    level-one initial conditions.
    """
    s = check_s(s)
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > len(s):
        raise ValueError(f"n={n} exceeds the length of s ({len(s)})")
    threshold = threshold or _default_threshold(s)
    if start is None:
        level = 1
        fam = []
        for i in range(s[0]):
            bp, bq = base(i)
            fam.append(PQPoly.monomial(x=0 if i == 0 else 1, p=bp, q=bq))
    else:
        level, fam = start
        fam = list(fam)
        if len(fam) != s[level - 1]:
            raise ValueError("starting family size does not match s")
        if level > n:
            raise ValueError("starting level is above the requested level")
    while level < n:
        m = level
        dil = []
        for j, r in enumerate(fam):
            cp, cq = dilation(m, j)
            dil.append((r.dilate_x(cp, cq), cp, cq))
        # prefix sums of the ascent branch, suffix sums of the other branch
        size = len(fam)
        prefix = [PQPoly()]
        for d, cp, cq in dil:
            prefix.append(prefix[-1] + d.mul_monomial(x=1, p=cp, q=cq))
        suffix = [PQPoly()] * (size + 1)
        for j in range(size - 1, -1, -1):
            suffix[j] = suffix[j + 1] + dil[j][0]
        nxt = []
        for i in range(s[m]):
            ell = threshold(m, i)
            if not 0 <= ell <= size:
                raise ValueError(f"threshold {ell} out of range at level {m + 1}")
            dp, dq = prefactor(m, i)
            nxt.append((prefix[ell] + suffix[ell]).mul_monomial(p=dp, q=dq))
        fam = nxt
        level += 1
    return fam


def refined(s: Sequence[int], n: int) -> RefinedFamily:
    """The refined s-Eulerian polynomials ``P_{n,i}``, ``0 <= i < s_n``."""
    s = check_s(s)
    fam = weighted_recurrence(s, n)
    return RefinedFamily("standard", s[:n], n, tuple(p.to_exact() for p in fam))


def e_poly(s: Sequence[int], n: int | None = None) -> ExactPoly:
    """The s-Eulerian polynomial (``n`` defaults to ``len(s)``)."""
    s = check_s(s)
    return refined(s, len(s) if n is None else n).total()


_T2 = tuple(ExactPoly(c) for c in ((2,), (0, 2), (0, 2), (0, 0, 2)))


def t_refined(n: int) -> RefinedFamily:
    """``T_{n,i}``, ``0 <= i < 2n``: type D descents over signed permutations
    refined by the last entry of the inversion sequence, for ``n >= 2``.

    ``n = 1`` is not covered by the recurrence; see :data:`T1`, :data:`D1`.
    """
    if n < 2:
        raise ValueError("t_refined needs n >= 2 (T_1 = x + 1 and D_1 = 1 are constants)")
    s = type_b_s(n)
    start = (2, [PQPoly.from_exact(p) for p in _T2])
    fam = weighted_recurrence(s, n, start=start)
    return RefinedFamily("typeD", s, n, tuple(p.to_exact() for p in fam))


def t_poly(n: int) -> ExactPoly:
    if n == 1:
        return T1
    return t_refined(n).total()


def d_poly(n: int) -> ExactPoly:
    """Type D Eulerian polynomial: half of ``T_n`` for ``n >= 2``."""
    if n == 1:
        return D1
    return t_poly(n).halve()


def affine_b_poly(n: int) -> ExactPoly:
    """Affine type B Eulerian polynomial, ``T_{n+1, n+1}``."""
    if n < 2:
        raise ValueError("affine_b_poly needs n >= 2")
    return t_refined(n + 1).polys[n + 1]


def refined_pq(s: Sequence[int], n: int,
               threshold: Callable[[int, int], int] | None = None) -> RefinedFamily:
    """Refined ``sum x^asc q^amaj p^|e|`` families."""
    s = check_s(s)
    fam = weighted_recurrence(
        s, n,
        base=lambda i: (i, 1) if i else (0, 0),
        dilation=lambda m, j: (0, 1),
        prefactor=lambda m, i: (i, 0),
        threshold=threshold,
    )
    return RefinedFamily("pq", s[:n], n, tuple(fam))


def pq_poly(s: Sequence[int], n: int | None = None) -> PQPoly:
    s = check_s(s)
    return refined_pq(s, len(s) if n is None else n).total()


def fmaj_refined(n: int, k: int) -> RefinedFamily:
    """Refined flag-major families over ``I_n^(k, 2k, ..., nk)`` (in x and q).

    Intermediate members may carry negative q-exponents; only the sum is
    guaranteed to be an ordinary polynomial in q.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    s = wreath_s(n, k)
    fam = weighted_recurrence(
        s, n,
        base=lambda i: (0, k - i) if i else (0, 0),
        dilation=lambda m, j: (0, k),
        prefactor=lambda m, i: (0, -(i // (m + 1))),
    )
    return RefinedFamily("fmaj", s, n, tuple(fam))


def fmaj_poly(n: int, k: int) -> PQPoly:
    out = fmaj_refined(n, k).total()
    if out.min_q_exponent() < 0:
        raise ArithmeticError("assembled flag-major polynomial has a negative q-exponent")
    return out


def specialize(fam: RefinedFamily, p=1, q=1) -> list[ExactPoly]:
    """Substitute positive rationals for p and q in every member."""
    p, q = Fraction(parse_rational(p)), Fraction(parse_rational(q))
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive")
    return [poly.specialize(p, q) if isinstance(poly, PQPoly) else poly for poly in fam.polys]


def interlace_chain(s: Sequence[int], N: int) -> bool:
    """Whether ``E_n`` interlaces ``E_{n+1}`` for every ``1 <= n < N``."""
    s = check_s(s)
    if N > len(s):
        raise ValueError(f"N={N} exceeds the length of s")
    polys = [e_poly(s, n) for n in range(1, N + 1)]
    return all(certify_interlaces(a, b) for a, b in zip(polys, polys[1:]))


# q-analogs read off the (p,q) family; returned as PQPoly in x and q only


def _to_xq(poly: PQPoly, fn) -> PQPoly:
    return poly.map_exponents(fn)


def a_inv(n: int) -> PQPoly:
    """``sum_{S_n} x^des q^inv``."""
    return _to_xq(pq_poly(range(1, n + 1)), lambda a, b, c: (a, 0, b))


def a_comaj(n: int) -> PQPoly:
    """``sum_{S_n} x^des q^comaj``."""
    return _to_xq(pq_poly(range(1, n + 1)), lambda a, b, c: (a, 0, c))


def a_maj(n: int) -> PQPoly:
    """MacMahon-Carlitz ``sum_{S_n} x^des q^maj`` (equal to the comaj form)."""
    return a_comaj(n)


def g_finv(n: int, k: int) -> PQPoly:
    return _to_xq(pq_poly(wreath_s(n, k)), lambda a, b, c: (a, 0, b))


def g_comaj(n: int, k: int) -> PQPoly:
    return _to_xq(pq_poly(wreath_s(n, k)), lambda a, b, c: (a, 0, c))


def g_maj(n: int, k: int) -> PQPoly:
    """``sum x^des q^maj`` on the wreath product: maj = n*des - comaj."""
    return _to_xq(pq_poly(wreath_s(n, k)), lambda a, b, c: (a, 0, n * a - c))
