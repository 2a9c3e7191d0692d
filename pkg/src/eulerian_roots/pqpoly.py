"""Polynomials in x with Laurent-monomial coefficients in p and q."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from .polyx import ExactPoly, parse_rational

__all__ = ["PQPoly"]


class PQPoly:
    """Sparse integer combination of monomials ``x^a p^b q^c``.

    ``a`` is a nonnegative integer, ``b`` and ``c`` may be negative.  Values
    are immutable; every operation returns a new instance and zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int, int], int] = defaultdict(int)
        for key, c in items:
            a, b, e = key
            if a < 0:
                raise ValueError("x-exponents must be nonnegative")
            if not isinstance(c, int):
                raise TypeError("PQPoly coefficients are integers")
            acc[(int(a), int(b), int(e))] += c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def monomial(cls, x: int = 0, p: int = 0, q: int = 0, c: int = 1) -> PQPoly:
        return cls({(x, p, q): c})

    @classmethod
    def from_exact(cls, f: ExactPoly) -> PQPoly:
        if f.ring != "ZZ":
            raise ValueError("PQPoly needs integer coefficients")
        return cls({(i, 0, 0): c for i, c in enumerate(f.coeffs)})

    @property
    def terms(self) -> dict[tuple[int, int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PQPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __len__(self):
        return len(self._terms)

    @property
    def x_degree(self) -> int:
        return max((a for a, _, _ in self._terms), default=-1)

    def min_q_exponent(self) -> int:
        return min((c for _, _, c in self._terms), default=0)

    def __add__(self, other: PQPoly) -> PQPoly:
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return PQPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PQPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: PQPoly) -> PQPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PQPoly({k: v * other for k, v in self._terms.items()})
        acc: dict = defaultdict(int)
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in other._terms.items():
                acc[(a1 + a2, b1 + b2, c1 + c2)] += v1 * v2
        return PQPoly(acc)

    __rmul__ = __mul__

    def mul_monomial(self, x: int = 0, p: int = 0, q: int = 0) -> PQPoly:
        return PQPoly({(a + x, b + p, c + q): v for (a, b, c), v in self._terms.items()})

    def dilate_x(self, p: int = 0, q: int = 0) -> PQPoly:
        """Substitute ``x -> x * p^p * q^q`` (exact exponent shifting)."""
        return PQPoly({(a, b + p * a, c + q * a): v for (a, b, c), v in self._terms.items()})

    def specialize(self, p=1, q=1) -> ExactPoly:
        """Exact polynomial in x after substituting rational ``p`` and ``q``."""
        p, q = Fraction(parse_rational(p)), Fraction(parse_rational(q))
        out: dict[int, Fraction] = defaultdict(Fraction)
        for (a, b, c), v in self._terms.items():
            out[a] += v * p**b * q**c
        deg = max(out, default=-1)
        return ExactPoly(tuple(out.get(i, 0) for i in range(deg + 1)))

    def x_marginal(self) -> ExactPoly:
        """``specialize(1, 1)`` kept over the integers."""
        out: dict[int, int] = defaultdict(int)
        for (a, _, _), v in self._terms.items():
            out[a] += v
        deg = max(out, default=-1)
        return ExactPoly(tuple(out.get(i, 0) for i in range(deg + 1)))

    def to_exact(self) -> ExactPoly:
        """View as a polynomial in x; fails if p or q actually occurs."""
        if any(b or c for _, b, c in self._terms):
            raise ValueError("polynomial depends on p or q")
        return self.x_marginal()

    def map_exponents(self, fn) -> PQPoly:
        acc: dict = defaultdict(int)
        for key, v in self._terms.items():
            acc[fn(*key)] += v
        return PQPoly(acc)

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted(self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"x": a, "p": b, "q": c, "c": str(v)} for (a, b, c), v in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> PQPoly:
        return cls({(int(t["x"]), int(t["p"]), int(t["q"])): int(t["c"]) for t in data})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), v in sorted(self._terms.items(), reverse=True):
            mono = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in (("x", a), ("p", b), ("q", c))
                if e
            )
            coef = "" if (v in (1, -1) and mono) else str(abs(v))
            parts.append(("-" if v < 0 else "+", coef + mono if mono else str(abs(v))))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"PQPoly({self.sorted_terms()!r})"
