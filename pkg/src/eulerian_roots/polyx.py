"""Exact univariate polynomials and certified real-root analysis.

Everything here runs on Python ints and :class:`fractions.Fraction`; no
floating point value ever enters a decision.  Root counting goes through
Sturm chains built from integer pseudo-remainders, so a certificate is a
proof for the exact input polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "ExactPoly",
    "X",
    "IsolatingInterval",
    "RootCertificate",
    "GammaVector",
    "CoeffShape",
    "poly_gcd",
    "squarefree_part",
    "sturm_sequence",
    "sturm_count",
    "certify_real_rooted",
    "isolate_roots",
    "refine_to",
    "certify_interlaces",
    "certify_compatible_pair",
    "gamma_expansion",
    "coeff_shape",
    "factored_form",
    "parse_rational",
]


def parse_rational(value) -> int | Fraction:
    """Coerce ``value`` to an exact int or Fraction (floats rejected)."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_rational(Fraction(value.strip()))
    if isinstance(value, Rational):
        return parse_rational(Fraction(value.numerator, value.denominator))
    raise TypeError(f"inexact or unsupported coefficient {value!r}")


def _fmt_coeff(c) -> str:
    return str(c)


@dataclass(frozen=True)
class ExactPoly:
    """Polynomial in ``x`` with exact coefficients, constant term first.

    Trailing zeros are stripped on construction, so ``coeffs == ()`` is the
    zero polynomial.  ``ring`` is ``"ZZ"`` when every coefficient is an
    integer and ``"QQ"`` otherwise.
    """

    coeffs: tuple = ()
    ring: str = field(init=False, compare=False)

    def __post_init__(self):
        cs = [parse_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        ring = "QQ" if any(isinstance(c, Fraction) for c in cs) else "ZZ"
        object.__setattr__(self, "ring", ring)

    # -- construction -------------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c=1) -> ExactPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lc=1) -> ExactPoly:
        p = cls((lc,))
        for r in roots:
            p = p * cls((-parse_rational(r), 1))
        return p

    @classmethod
    def parse(cls, text: str) -> ExactPoly:
        """Parse comma-separated coefficients, constant term first."""
        parts = [t for t in text.replace(" ", "").split(",") if t]
        if not parts:
            raise ValueError("empty coefficient list")
        return cls(tuple(parse_rational(t) for t in parts))

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def is_palindromic(self) -> bool:
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    def has_nonnegative_coeffs(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _lift(other) -> ExactPoly:
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly((parse_rational(other),))

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExactPoly):
            c = parse_rational(other)
            return ExactPoly(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ExactPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ExactPoly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
        """Exact division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        db, lb = other.degree, Fraction(other.lc)
        q = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            t = r[-1] / lb
            q[k] = t
            for i, b in enumerate(other.coeffs):
                r[i + k] -= t * b
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return ExactPoly(tuple(q)), ExactPoly(tuple(r))

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def exact_div(self, other) -> ExactPoly:
        q, r = self.divmod(self._lift(other))
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def derivative(self) -> ExactPoly:
        return ExactPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, x):
        x = parse_rational(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return parse_rational(acc) if isinstance(acc, Fraction) else acc

    def dilate(self, c) -> ExactPoly:
        """Substitute ``x -> c*x``."""
        c = parse_rational(c)
        out, pw = [], 1
        for a in self.coeffs:
            out.append(a * pw)
            pw *= c
        return ExactPoly(tuple(out))

    def shift(self, k: int = 1) -> ExactPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return ExactPoly((0,) * k + self.coeffs)

    def halve(self) -> ExactPoly:
        """Divide by 2, requiring every coefficient to stay integral."""
        if any(not isinstance(c, int) or c % 2 for c in self.coeffs):
            raise ArithmeticError("polynomial is not divisible by 2 over ZZ")
        return ExactPoly(tuple(c // 2 for c in self.coeffs))

    def content(self) -> Fraction:
        """Positive rational content; the primitive part has coprime ints."""
        if not self.coeffs:
            return Fraction(0)
        fs = [Fraction(c) for c in self.coeffs]
        den = lcm(*(f.denominator for f in fs))
        num = gcd(*(int(f * den) for f in fs))
        return Fraction(num, den)

    def primitive(self) -> ExactPoly:
        """Integer primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        ints = _int_primitive(self.coeffs)
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return ExactPoly(tuple(ints))

    def monic(self) -> ExactPoly:
        lc = Fraction(self.lc)
        return ExactPoly(tuple(Fraction(c) / lc for c in self.coeffs))

    # -- presentation --------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = _fmt_coeff(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                if a == 1:
                    body = mono
                elif isinstance(a, Fraction):
                    body = f"({a}){mono}"
                else:
                    body = f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ExactPoly({list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {"variable": "x", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> ExactPoly:
        if data.get("variable", "x") != "x":
            raise ValueError("only polynomials in x are supported")
        return cls(tuple(parse_rational(c) for c in data["coeffs"]))


X = ExactPoly((0, 1))


# ---------------------------------------------------------------------------
# integer kernels (lowest-degree-first lists of ints)


def _strip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_primitive(coeffs: Sequence) -> list[int]:
    """Scale by a positive rational so coefficients become coprime ints."""
    fs = [Fraction(c) for c in coeffs]
    den = lcm(*(f.denominator for f in fs)) if fs else 1
    ints = [int(f * den) for f in fs]
    g = gcd(*ints)
    return [c // g for c in ints] if g > 1 else ints


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b`` over ZZ."""
    db, lb = len(b) - 1, b[-1]
    delta = len(a) - len(b) + 1
    if delta <= 0:
        return list(a)
    r = list(a)
    steps = delta
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] -= lr * bc
        r.pop()
        _strip(r)
        steps -= 1
    if steps:
        f = lb**steps
        r = [c * f for c in r]
    return r


def _primitive_signed(a: list[int]) -> list[int]:
    """Divide by the positive content, keeping signs."""
    g = gcd(*a) if a else 0
    return [c // g for c in a] if g > 1 else list(a)


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive GCD with positive leading coefficient (primitive PRS)."""
    a, b = _strip(list(a)), _strip(list(b))
    if len(a) < len(b):
        a, b = b, a
    if not b:
        out = _primitive_signed(a)
    else:
        a, b = _primitive_signed(a), _primitive_signed(b)
        while b:
            r = _primitive_signed(_prem(a, b))
            a, b = b, r
        out = a
    if out and out[-1] < 0:
        out = [-c for c in out]
    return out


def _int_derivative(a: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(a)][1:]


def _int_exact_div(a: list[int], b: list[int]) -> list[int]:
    q, r = ExactPoly(tuple(a)).divmod(ExactPoly(tuple(b)))
    if r:
        raise ArithmeticError("division is not exact")
    return _int_primitive(q.coeffs)


def _sign_at(p: Sequence[int], x) -> int:
    """Sign of ``p(x)`` for rational ``x`` or ``x = +-inf`` (as floats)."""
    if not p:
        return 0
    if isinstance(x, float):
        lead = 1 if p[-1] > 0 else -1
        if x > 0:
            return lead
        return lead if (len(p) - 1) % 2 == 0 else -lead
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # den**deg * p(num/den) by homogeneous Horner; den > 0 keeps the sign
    acc, dpow = 0, 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _variations(seq: Sequence[Sequence[int]], x) -> int:
    prev, count = 0, 0
    for p in seq:
        s = _sign_at(p, x)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _as_bound(v, default: float):
    if v is None:
        return default
    if isinstance(v, float):
        if v in (float("inf"), float("-inf")):
            return v
        raise TypeError("finite float bounds are inexact; pass a Fraction")
    return Fraction(parse_rational(v))


def _require_nonzero(f: ExactPoly, msg: str):
    if not isinstance(f, ExactPoly):
        raise TypeError("expected ExactPoly")
    if f.is_zero():
        raise ValueError(msg)


# ---------------------------------------------------------------------------
# gcd / squarefree


def poly_gcd(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """Primitive integer GCD with positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        return ExactPoly()
    a = _int_primitive(f.coeffs) if f else []
    b = _int_primitive(g.coeffs) if g else []
    return ExactPoly(tuple(_int_gcd(a, b)))


def _sqfree_ints(coeffs: Sequence) -> list[int]:
    a = _int_primitive(coeffs)
    if len(a) <= 2:
        return a
    g = _int_gcd(a, _int_derivative(a))
    if len(g) == 1:
        return a
    return _int_exact_div(a, g)


def squarefree_part(f: ExactPoly) -> ExactPoly:
    _require_nonzero(f, "zero polynomial has no squarefree part")
    out = _sqfree_ints(f.coeffs)
    if out[-1] < 0:
        out = [-c for c in out]
    return ExactPoly(tuple(out))


def _gcd_chain(f: ExactPoly) -> list[list[int]]:
    """``f, gcd(f, f'), gcd of that with its derivative, ...`` (nonconstant)."""
    chain = []
    cur = _int_primitive(f.coeffs)
    while len(cur) > 1:
        chain.append(cur)
        cur = _int_gcd(cur, _int_derivative(cur))
    return chain


def _sturm_ints(sqfree: list[int]) -> list[list[int]]:
    seq = [sqfree]
    if len(sqfree) <= 1:
        return seq
    seq.append(_primitive_signed(_int_derivative(sqfree)))
    while len(seq[-1]) > 1:
        a, b = seq[-2], seq[-1]
        r = _prem(a, b)
        if not r:
            break
        delta = len(a) - len(b) + 1
        if b[-1] < 0 and delta % 2:
            r = [-c for c in r]
        seq.append(_primitive_signed([-c for c in r]))
    return seq


def sturm_sequence(f: ExactPoly) -> list[ExactPoly]:
    """Sturm chain of the squarefree part of ``f`` (positively rescaled)."""
    _require_nonzero(f, "zero polynomial has no Sturm sequence")
    return [ExactPoly(tuple(p)) for p in _sturm_ints(_sqfree_ints(f.coeffs))]


def _count_in(seq, lo, hi) -> int:
    if lo >= hi:
        return 0
    return _variations(seq, lo) - _variations(seq, hi)


def sturm_count(f: ExactPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``f`` in ``(lo, hi]``.

    ``None`` (or a float infinity) stands for an unbounded end.
    """
    _require_nonzero(f, "zero polynomial has no Sturm sequence")
    lo, hi = _as_bound(lo, float("-inf")), _as_bound(hi, float("inf"))
    seq = _sturm_ints(_sqfree_ints(f.coeffs))
    return _count_in(seq, lo, hi)


# ---------------------------------------------------------------------------
# isolation


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open ``(lo, hi]`` holding one distinct root, or ``[r, r]``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    exact_root: Fraction | None = None

    def contains(self, x) -> bool:
        x = Fraction(parse_rational(x))
        if self.exact_root is not None:
            return x == self.exact_root
        return self.lo < x <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def approx(self) -> float:
        if self.exact_root is not None:
            return float(self.exact_root)
        return float((self.lo + self.hi) / 2)

    def to_json(self) -> dict:
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "multiplicity": self.multiplicity,
            "exact_root": None if self.exact_root is None else str(self.exact_root),
            "approx": round(self.approx(), 6),
        }


def _cauchy_bound(p: Sequence[int]) -> int:
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + -(-m // lead)


def _isolate_sqfree(g: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint ascending ``(lo, hi]`` each holding one root of squarefree g."""
    if len(g) <= 1:
        return []
    seq = _sturm_ints(g)
    bound = Fraction(_cauchy_bound(g))
    out = []
    stack = [(-bound, bound, _count_in(seq, -bound, bound))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count_in(seq, lo, mid)
        stack.append((mid, hi, n - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


def _bisect_root(g: list[int], lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink ``(lo, hi]`` around the single simple root of ``g``.

    Returns ``(lo, hi, exact)`` where ``exact`` is the root if it was hit.
    """
    s_hi = _sign_at(g, hi)
    if s_hi == 0:
        return hi, hi, hi
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = _sign_at(g, mid)
        if s == 0:
            return mid, mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi, None


def _rational_root_in(g: list[int], lo: Fraction, hi: Fraction):
    """Exact rational root of primitive squarefree ``g`` in ``(lo, hi]``.

    A rational root ``p/q`` of a primitive integer polynomial has ``q | lc``,
    so after shrinking below ``1/|lc|`` at most one candidate remains.
    """
    if g[0] == 0 and lo < 0 <= hi:
        return lo, hi, Fraction(0)
    lead = abs(g[-1])
    lo, hi, exact = _bisect_root(g, lo, hi, Fraction(1, lead))
    if exact is not None:
        return lo, hi, exact
    m = (hi * lead).__floor__()
    cand = Fraction(m, lead)
    if cand > lo and _sign_at(g, cand) == 0:
        return lo, hi, cand
    return lo, hi, None


def _multiplicity(chain, lo, hi, exact) -> int:
    if exact is not None:
        return sum(1 for p in chain if _sign_at(p, exact) == 0)
    return sum(1 for p in chain if _count_in(_sturm_ints(_sqfree_ints(p)), lo, hi))


def isolate_roots(f: ExactPoly, exact: bool = True) -> list[IsolatingInterval]:
    """Isolate every distinct real root of ``f`` with its multiplicity.

    With ``exact=True`` each interval is also searched for a rational root,
    which is then reported as a degenerate interval ``[r, r]``.
    """
    _require_nonzero(f, "cannot isolate roots of the zero polynomial")
    g = _sqfree_ints(f.coeffs)
    chain = _gcd_chain(f)
    out = []
    for lo, hi in _isolate_sqfree(g):
        root = None
        if exact:
            _, _, root = _rational_root_in(g, lo, hi)
        if root is not None:
            lo = hi = root
        out.append(IsolatingInterval(lo, hi, _multiplicity(chain, lo, hi, root), root))
    return out


def refine_to(f: ExactPoly, intervals: Sequence[IsolatingInterval], width) -> list[IsolatingInterval]:
    """Bisect each interval until it is narrower than ``width``."""
    _require_nonzero(f, "cannot refine roots of the zero polynomial")
    width = Fraction(parse_rational(width))
    if width <= 0:
        raise ValueError("width must be positive")
    g = _sqfree_ints(f.coeffs)
    out = []
    for iv in intervals:
        if iv.exact_root is not None:
            out.append(iv)
            continue
        lo, hi, root = _bisect_root(g, iv.lo, iv.hi, width)
        out.append(IsolatingInterval(lo, hi, iv.multiplicity, root))
    return out


@dataclass(frozen=True)
class RootCertificate:
    degree: int
    real_root_count_with_multiplicity: int
    intervals: tuple[IsolatingInterval, ...]
    is_real_rooted: bool

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "real_root_count_with_multiplicity": self.real_root_count_with_multiplicity,
            "is_real_rooted": self.is_real_rooted,
            "intervals": [iv.to_json() for iv in self.intervals],
        }


def _real_root_count(f: ExactPoly) -> int:
    return sum(_count_in(_sturm_ints(_sqfree_ints(p)), float("-inf"), float("inf"))
               for p in _gcd_chain(f))


def certify_real_rooted(f: ExactPoly, with_intervals: bool = True) -> RootCertificate:
    """Count real roots with multiplicity and compare with the degree.

    Multiplicities come from the chain ``f, gcd(f, f'), ...``: a root of
    multiplicity m appears in the first m members, so summing distinct-root
    counts over the chain counts roots with multiplicity.
    """
    _require_nonzero(f, "zero polynomial cannot be certified")
    count = _real_root_count(f)
    intervals = tuple(isolate_roots(f, exact=False)) if with_intervals else ()
    return RootCertificate(f.degree, count, intervals, count == f.degree)


def is_real_rooted(f: ExactPoly) -> bool:
    return certify_real_rooted(f, with_intervals=False).is_real_rooted


# ---------------------------------------------------------------------------
# interlacing / compatibility


def _root_profile(f: ExactPoly, g: ExactPoly) -> list[tuple[int, int]]:
    """Multiplicities ``(in f, in g)`` at the distinct roots of ``f*g``,
    largest root first.

    The isolating intervals of the squarefree part of ``f*g`` separate every
    distinct root of either polynomial, so a root shared by ``f`` and ``g``
    (a root of their gcd) lands in one interval with both counts positive.
    """
    h = _sqfree_ints((f * g).coeffs)
    cf, cg = _gcd_chain(f), _gcd_chain(g)
    sf = [_sturm_ints(_sqfree_ints(p)) for p in cf]
    sg = [_sturm_ints(_sqfree_ints(p)) for p in cg]
    prof = []
    for lo, hi in reversed(_isolate_sqfree(h)):
        mf = sum(1 for s in sf if _count_in(s, lo, hi))
        mg = sum(1 for s in sg if _count_in(s, lo, hi))
        prof.append((mf, mg))
    return prof


def _require_real_rooted(f: ExactPoly, g: ExactPoly, what: str):
    for p in (f, g):
        _require_nonzero(p, f"{what} undefined for the zero polynomial")
        if _real_root_count(p) != p.degree:
            raise ValueError(f"{what} undefined for non-real-rooted polynomial")


def certify_interlaces(f: ExactPoly, g: ExactPoly) -> bool:
    """True iff the roots of ``f`` and ``g`` weakly alternate as
    ``... <= x2 <= xi2 <= x1 <= xi1`` (f roots ``x``, g roots ``xi``),
    which forces ``deg f <= deg g <= deg f + 1``.
    """
    _require_real_rooted(f, g, "interlacing")
    if not f.degree <= g.degree <= f.degree + 1:
        return False
    # roots listed with multiplicity, descending; compared by position in the
    # merged list of distinct roots (smaller index = larger root)
    xs, xis = [], []
    for idx, (mf, mg) in enumerate(_root_profile(f, g)):
        xs.extend([idx] * mf)
        xis.extend([idx] * mg)
    for i, x in enumerate(xs):
        if not xis[i] <= x:
            return False
        if i + 1 < len(xis) and not x <= xis[i + 1]:
            return False
    return True


def certify_compatible_pair(f: ExactPoly, g: ExactPoly) -> bool:
    """True iff ``|n_f(t) - n_g(t)| <= 1`` for every real ``t``, where
    ``n_p(t)`` counts roots of ``p`` in ``[t, oo)`` with multiplicity.

    Both inputs must be real-rooted with positive leading coefficients.
    """
    _require_real_rooted(f, g, "compatibility")
    if f.lc <= 0 or g.lc <= 0:
        raise ValueError("compatibility check needs positive leading coefficients")
    nf = ng = 0
    for mf, mg in _root_profile(f, g):
        nf += mf
        ng += mg
        if abs(nf - ng) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# coefficient structure


@dataclass(frozen=True)
class GammaVector:
    gammas: tuple
    degree: int

    @property
    def gamma_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self) -> ExactPoly:
        one_x = ExactPoly((1, 1))
        out = ExactPoly()
        for i, g in enumerate(self.gammas):
            out = out + (one_x ** (self.degree - 2 * i)).shift(i) * g
        return out

    def to_json(self) -> dict:
        return {
            "gammas": [str(g) for g in self.gammas],
            "degree": self.degree,
            "gamma_nonnegative": self.gamma_nonnegative,
        }


def gamma_expansion(h: ExactPoly) -> GammaVector:
    """Coefficients of ``h`` in the basis ``x**i * (1+x)**(n-2i)``."""
    if h.is_zero() or not h.is_palindromic():
        raise ValueError("gamma expansion requires palindromic polynomial")
    n = h.degree
    rest = list(h.coeffs)
    gammas = []
    one_x = ExactPoly((1, 1))
    for i in range(n // 2 + 1):
        gi = rest[i]
        gammas.append(gi)
        if gi:
            basis = (one_x ** (n - 2 * i)).coeffs
            for j, b in enumerate(basis):
                rest[i + j] -= gi * b
    if any(rest):
        raise ArithmeticError("gamma expansion left a nonzero remainder")
    return GammaVector(tuple(gammas), n)


class CoeffShape(NamedTuple):
    unimodal: bool
    log_concave: bool


def coeff_shape(coeffs: Sequence) -> CoeffShape:
    """Unimodality and log-concavity (without internal zeros) of a sequence."""
    cs = [parse_rational(c) for c in coeffs]
    if not cs:
        raise ValueError("empty coefficient sequence")
    i, n = 0, len(cs)
    while i + 1 < n and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < n and cs[i] >= cs[i + 1]:
        i += 1
    unimodal = i == n - 1
    nz = [k for k, c in enumerate(cs) if c != 0]
    no_gaps = not nz or all(cs[k] != 0 for k in range(nz[0], nz[-1] + 1))
    lc_ok = all(cs[k] * cs[k] >= cs[k - 1] * cs[k + 1] for k in range(1, n - 1))
    return CoeffShape(unimodal, no_gaps and lc_ok)


def factored_form(f: ExactPoly) -> str | None:
    """``c(q1 x - p1)^m1 ...`` when every root of ``f`` is rational, else None."""
    if f.is_zero():
        return None
    if f.degree == 0:
        return str(f)
    ivs = isolate_roots(f, exact=True)
    if sum(iv.multiplicity for iv in ivs) != f.degree or any(iv.exact_root is None for iv in ivs):
        return None
    const = Fraction(f.lc)
    factors = []
    for iv in reversed(ivs):
        r = iv.exact_root
        p, q = r.numerator, r.denominator
        const /= Fraction(q) ** iv.multiplicity
        lin = "x" if q == 1 else f"{q}x"
        if p == 0:
            body = lin
            factors.append(body if iv.multiplicity == 1 else f"{body}^{iv.multiplicity}")
            continue
        body = f"({lin} {'-' if p > 0 else '+'} {abs(p)})"
        factors.append(body if iv.multiplicity == 1 else f"{body}^{iv.multiplicity}")
    c = parse_rational(const)
    prefix = "" if c == 1 else "-" if c == -1 else (f"({c})" if isinstance(c, Fraction) else str(c))
    if not prefix and len(factors) == 1 and factors[0].endswith(")"):
        return factors[0][1:-1]
    return prefix + "".join(factors)
