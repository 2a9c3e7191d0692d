"""Cross-checks between the recurrences, brute-force enumeration, the group
bijections and the lattice-point identities, plus the conjecture explorers.

Each suite returns a list of :class:`CaseResult` in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Callable

from . import eulerian as eu
from . import groups as gr
from .geometry import ehrhart_check, series_identity_check
from .invseq import oracle_asc, oracle_poly
from .polyx import ExactPoly, certify_real_rooted

__all__ = [
    "CaseResult",
    "SUITES",
    "run_suite",
    "oracle_suite",
    "bijection_suite",
    "ehrhart_suite",
    "identity_suite",
    "random_s",
    "signed_multiset_s",
    "affine_d_poly",
    "conjecture_signed_multiset",
    "conjecture_affine_d",
    "CONJECTURES",
]


@dataclass
class CaseResult:
    name: str
    params: dict
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "params": self.params, "passed": self.passed,
                "detail": self.detail}


@dataclass
class _Collector:
    results: list = field(default_factory=list)

    def check(self, name: str, params: dict, fn: Callable[[], bool]):
        try:
            ok, detail = bool(fn()), ""
        except gr.BijectionError as exc:
            ok, detail = False, str(exc)
        self.results.append(CaseResult(name, params, ok, detail))


def random_s(count: int, max_n: int, max_entry: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Reproducible random sequences with ``len <= max_n`` and entries ``<= max_entry``."""
    rng = random.Random(seed)
    return [
        tuple(rng.randint(1, max_entry) for _ in range(rng.randint(1, max_n)))
        for _ in range(count)
    ]


def _s_families(n: int, max_k: int) -> list[tuple[int, ...]]:
    fams = [
        tuple(range(1, n + 1)),
        eu.type_b_s(n),
        tuple(2 * i - 1 for i in range(1, n + 1)),
    ]
    fams += [(k,) * n for k in range(1, max_k + 1)]
    fams += [eu.wreath_s(n, k) for k in range(3, max_k + 1)]
    out = []
    for s in fams:
        if s not in out:
            out.append(s)
    return out


def oracle_suite(max_n: int = 5, max_k: int = 2, samples: int = 10, seed: int = 0,
                 workers: int | None = None) -> list[CaseResult]:
    """Recurrence outputs against inversion-sequence enumeration."""
    col = _Collector()
    cases = []
    for n in range(1, max_n + 1):
        cases += _s_families(n, max_k)
    cases += random_s(samples, max_n, 6, seed)
    for s in cases:
        p = {"s": list(s)}
        col.check("standard", p, lambda s=s: eu.e_poly(s) == oracle_asc(s, workers=workers))
        col.check("pq", p, lambda s=s: eu.pq_poly(s) == oracle_poly(
            s, x="asc", p="weight", q="amaj", workers=workers))
    for n in range(2, max_n + 1):
        s = eu.type_b_s(n)
        col.check("typeD", {"n": n}, lambda s=s, n=n: eu.t_poly(n) == oracle_asc(
            s, "asc_d", workers=workers))
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            s = eu.wreath_s(n, k)
            col.check("fmaj", {"n": n, "k": k}, lambda s=s, n=n, k=k: eu.fmaj_poly(n, k) == oracle_poly(
                s, x="asc", q="ifmaj", workers=workers))
    return col.results


def _all_invseqs(s):
    return set(product(*(range(v) for v in s)))


def bijection_suite(max_n: int = 4, max_k: int = 3) -> list[CaseResult]:
    """phi, theta and psi are bijections carrying every stated property."""
    col = _Collector()
    for n in range(1, max_n + 1):
        def phi_ok(n=n):
            images = {gr.phi(g) for g in gr.iter_group("S", n)}
            return images == _all_invseqs(range(1, n + 1))
        col.check("phi", {"n": n}, phi_ok)
        for k in range(1, max_k + 1):
            def theta_ok(n=n, k=k):
                images = {gr.theta(g) for g in gr.iter_group("wreath", n, k)}
                return images == _all_invseqs(eu.wreath_s(n, k))
            col.check("theta", {"n": n, "k": k}, theta_ok)

        def psi_ok(n=n):
            images = {gr.psi(g) for g in gr.iter_group("B", n)}
            return images == _all_invseqs(eu.type_b_s(n))
        col.check("psi", {"n": n}, psi_ok)
    return col.results


def ehrhart_suite(max_n: int = 3, t_max: int = 8, max_k: int = 3) -> list[CaseResult]:
    col = _Collector()
    for n in range(1, max_n + 1):
        fams = _s_families(n, max_k) + [eu.wreath_s(n, 3)]
        fams.append(tuple(v for i in range(1, n + 1) for v in (2 * i - 1, i))[:n])
        seen = []
        for s in fams:
            if s in seen:
                continue
            seen.append(s)
            col.check("ehrhart", {"s": list(s), "t_max": t_max},
                      lambda s=s: ehrhart_check(s, T=t_max))
    return col.results


def affine_d_poly(n: int, budget: int | None = None) -> ExactPoly:
    """Affine type D descent polynomial over D_n by enumeration."""
    return gr.group_poly("D", n, x="affine_des_D", budget=budget).to_exact()


def identity_suite(max_n: int = 4, max_k: int = 3, t_max: int = 10) -> list[CaseResult]:
    """Group tallies against recurrences, q-analogs, and series identities."""
    col = _Collector()
    for n in range(1, max_n + 1):
        p = {"n": n}
        col.check("A_n des", p, lambda n=n: gr.group_poly("S", n, "des").to_exact()
                  == eu.e_poly(range(1, n + 1)))
        col.check("B_n des_wreath", p, lambda n=n: gr.group_poly("B", n, "des_wreath").to_exact()
                  == eu.e_poly(eu.type_b_s(n)))
        col.check("B_n des_B", p, lambda n=n: gr.group_poly("B", n, "des_B").to_exact()
                  == eu.e_poly(eu.type_b_s(n)))
        col.check("A^maj = A^comaj", p, lambda n=n: gr.group_poly("S", n, "des", q="maj")
                  == gr.group_poly("S", n, "des", q="comaj") == eu.a_maj(n))
        col.check("A^inv", p, lambda n=n: gr.group_poly("S", n, "des", q="inv") == eu.a_inv(n))
        for k in range(1, max_k + 1):
            pk = {"n": n, "k": k}
            col.check("G_nk des", pk, lambda n=n, k=k: gr.group_poly(
                "wreath", n, "des_wreath", k=k).to_exact() == eu.e_poly(eu.wreath_s(n, k)))
            col.check("G^finv", pk, lambda n=n, k=k: gr.group_poly(
                "wreath", n, "des_wreath", q="finv", k=k) == eu.g_finv(n, k))
            col.check("G^comaj", pk, lambda n=n, k=k: gr.group_poly(
                "wreath", n, "des_wreath", q="comaj", k=k) == eu.g_comaj(n, k))
            col.check("G^maj", pk, lambda n=n, k=k: gr.group_poly(
                "wreath", n, "des_wreath", q="maj", k=k) == eu.g_maj(n, k))
            col.check("G^fmaj", pk, lambda n=n, k=k: gr.group_poly(
                "wreath", n, "des_wreath", q="fmaj", k=k) == eu.fmaj_poly(n, k))
            col.check("exc/cyc", pk, lambda n=n, k=k: gr.exc_cyc_poly(n, k)
                      == eu.e_poly([(i - 1) * k + 1 for i in range(1, n + 1)]))
        if n >= 2:
            col.check("T_n des_D", p, lambda n=n: gr.group_poly("B", n, "des_D").to_exact()
                      == eu.t_poly(n))
            col.check("2 D_n = T_n", p, lambda n=n: gr.group_poly("D", n, "des_D").to_exact() * 2
                      == gr.group_poly("B", n, "des_D").to_exact())
            col.check("affine B", p, lambda n=n: gr.group_poly("B", n, "affine_des_B").to_exact()
                      == eu.affine_b_poly(n))
            col.check("affine D", p, lambda n=n: affine_d_poly(n) * 2
                      == oracle_asc(eu.type_b_s(n), "affine_asc_d"))
    for n in range(1, max_n + 1):
        col.check("series signedB", {"n": n, "t_max": t_max},
                  lambda n=n: series_identity_check("signedB", n, T=t_max))
        for k in range(1, max_k + 1):
            col.check("series kary", {"n": n, "k": k, "t_max": t_max},
                      lambda n=n, k=k: series_identity_check("kary", n, k, T=t_max))
    for n in range(1, min(max_n, 3) + 1):
        col.check("series multiset2", {"n": n, "t_max": t_max},
                  lambda n=n: series_identity_check("multiset2", n, T=t_max))
        col.check("multiset = E", {"n": n}, lambda n=n: gr.multiset_poly(
            [v for i in range(1, n + 1) for v in (i, i)])
            == eu.e_poly(tuple(v for i in range(1, n + 1) for v in (2 * i - 1, i))))
    for n in range(1, min(max_n, 2) + 1):
        col.check("series signedMultiset", {"n": n, "t_max": t_max},
                  lambda n=n: series_identity_check("signedMultiset", n, T=t_max))
    return col.results


SUITES = {
    "oracle": oracle_suite,
    "bijections": bijection_suite,
    "ehrhart": ehrhart_suite,
    "identities": identity_suite,
}


def run_suite(name: str, max_n: int, max_k: int = 3, t_max: int = 8,
              workers: int | None = None) -> list[CaseResult]:
    if name == "oracle":
        return oracle_suite(max_n, max_k, workers=workers)
    if name == "bijections":
        return bijection_suite(max_n, max_k)
    if name == "ehrhart":
        return ehrhart_suite(max_n, t_max, max_k)
    if name == "identities":
        return identity_suite(max_n, max_k, t_max)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


# ---------------------------------------------------------------------------
# conjecture explorers: they report what enumeration shows and nothing more


def signed_multiset_s(n: int) -> tuple[int, ...]:
    return tuple(v for i in range(1, n + 1) for v in (2 * i - 1, 4 * i))


def conjecture_signed_multiset(n: int, budget: int | None = None,
                               workers: int | None = None) -> dict:
    if n < 1:
        raise ValueError("n must be positive")
    word = [i for i in range(1, n + 1) for _ in range(2)]
    lhs = gr.multiset_poly(word, signed=True, budget=budget)
    s = signed_multiset_s(n)
    rhs = oracle_asc(s, budget=budget, workers=workers)
    return {
        "name": "signed-multiset",
        "n": n,
        "group_size": 2**n * factorial(2 * n),
        "descent_poly": lhs.to_json(),
        "ascent_poly": rhs.to_json(),
        "s": list(s),
        "equal": lhs == rhs,
        "holds": lhs == rhs,
    }


def conjecture_affine_d(n: int, budget: int | None = None) -> dict:
    if n < 2:
        raise ValueError("affine type D needs n >= 2")
    poly = affine_d_poly(n, budget)
    cert = certify_real_rooted(poly)
    return {
        "name": "affine-D",
        "n": n,
        "group_size": 2 ** (n - 1) * factorial(n),
        "poly": poly.to_json(),
        "certificate": cert.to_json(),
        "holds": cert.is_real_rooted,
    }


CONJECTURES = {
    "signed-multiset": conjecture_signed_multiset,
    "affine-D": conjecture_affine_d,
}
