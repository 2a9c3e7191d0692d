from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerian_roots import eulerian as eu
from eulerian_roots import groups as gr
from eulerian_roots.groups import ColoredPerm, MultisetPerm, Perm, SignedPerm, stat
from eulerian_roots.invseq import BudgetExceeded, oracle_asc
from eulerian_roots.polyx import ExactPoly

P = ExactPoly


def test_types_validate():
    with pytest.raises(ValueError):
        Perm((1, 1, 2))
    with pytest.raises(ValueError):
        SignedPerm((1, -1))
    with pytest.raises(ValueError):
        ColoredPerm(Perm((1, 2)), (0, 2), 2)
    assert SignedPerm((-1, -2)).is_even and not SignedPerm((-1, 2)).is_even


def test_identity_statistics():
    e = Perm(tuple(range(1, 6)))
    assert [stat(e, name) for name in ("des", "inv", "maj", "exc")] == [0, 0, 0, 0]
    assert stat(e, "cyc") == 5


def test_finv_example():
    x = ColoredPerm(Perm((2, 1)), (0, 1), 2)
    assert stat(x, "finv") == 3


def test_type_d_table_row():
    sigma = SignedPerm((-2, -1))
    assert gr.psi(sigma) == (1, 2)
    assert stat(sigma, "des_D") == 1


def test_inapplicable_statistics():
    with pytest.raises(ValueError):
        stat(SignedPerm((1,)), "des_D")
    with pytest.raises(ValueError):
        stat(Perm((1, 2)), "des_B")
    with pytest.raises(ValueError):
        stat(SignedPerm((1, 2)), "exc")
    with pytest.raises(ValueError):
        stat(Perm((1, 2)), "nope")


def test_two_type_b_descents_differ():
    sigma = SignedPerm((-1, -2))
    assert stat(sigma, "des_wreath") == 1   # -1 <_B -2, only position 0
    assert stat(sigma, "des_B") == 2        # natural order: 0 > -1 > -2


def test_phi_examples():
    assert gr.phi(Perm((1, 2, 3))) == (0, 0, 0)
    assert gr.phi(Perm((3, 1, 2))) == (0, 1, 1)
    assert gr.phi(Perm((4, 3, 2, 1))) == (0, 1, 2, 3)


def test_theta_examples():
    assert gr.theta(ColoredPerm(Perm((2, 1)), (0, 1), 2)) == (0, 3)
    p = Perm((3, 1, 2))
    assert gr.theta(ColoredPerm(p, (0, 0, 0), 4)) == gr.phi(p)
    assert gr.theta(ColoredPerm(p, (0, 0, 0), 1)) == gr.phi(p)


@pytest.mark.parametrize("window,image", [((1, 2), (0, 0)), ((-2, 1), (1, 1)), ((-1, -2), (1, 3))])
def test_psi_table(window, image):
    assert gr.psi(SignedPerm(window)) == image


@pytest.mark.parametrize("n", range(1, 6))
def test_bijectivity(n):
    assert len({gr.phi(g) for g in gr.iter_group("S", n)}) == factorial(n)
    assert len({gr.psi(g) for g in gr.iter_group("B", n)}) == 2**n * factorial(n)
    for k in (1, 2, 3):
        if n <= 4 or k <= 2:
            images = {gr.theta(g) for g in gr.iter_group("wreath", n, k)}
            assert len(images) == k**n * factorial(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_psi_properties_all_hold(n):
    for g in gr.iter_group("B", n):
        assert all(gr.psi_properties(g, gr.psi(g, check=False)).values())


def test_group_poly_examples():
    assert gr.group_poly("S", 3, "des").to_exact() == P((1, 4, 1))
    assert gr.group_poly("B", 2, "des_wreath").to_exact() == P((1, 6, 1))
    assert gr.group_poly("B", 2, "des_D").to_exact() == P((2, 4, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_transport_to_oracles(n):
    assert gr.group_poly("S", n, "des").to_exact() == oracle_asc(range(1, n + 1))
    if n <= 5:
        assert gr.group_poly("B", n, "des_wreath").to_exact() == oracle_asc(eu.type_b_s(n))
    if n >= 2 and n <= 5:
        assert gr.group_poly("B", n, "des_D").to_exact() == oracle_asc(eu.type_b_s(n), "asc_d")


@pytest.mark.parametrize("n", range(2, 7))
def test_involution_halves_type_d(n):
    d = gr.group_poly("D", n, "des_D").to_exact()
    assert d * 2 == gr.group_poly("B", n, "des_D").to_exact()


@pytest.mark.parametrize("n", range(2, 6))
def test_affine_d_identity(n):
    twice = gr.group_poly("D", n, "affine_des_D").to_exact() * 2
    assert twice == oracle_asc(eu.type_b_s(n), "affine_asc_d")


@pytest.mark.parametrize("n", range(1, 7))
def test_maj_comaj_symmetry(n):
    assert gr.group_poly("S", n, "des", q="maj") == gr.group_poly("S", n, "des", q="comaj")


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in (1, 2, 3)])
def test_exc_cyc_identity(n, k):
    s = [(i - 1) * k + 1 for i in range(1, n + 1)]
    assert gr.exc_cyc_poly(n, k) == oracle_asc(s)


def test_multiset_examples():
    assert gr.multiset_poly((1, 1)) == P((1,))
    assert gr.multiset_poly((1, 1, 2, 2)) == eu.e_poly((1, 1, 3, 2))
    # signed words on {1,2}: (1,2) (1,-2) (-1,2) (-1,-2) and their rearrangements
    assert gr.multiset_poly((1, 2), signed=True) == P((1, 6, 1))


def test_multiset_counts_distinct_words():
    words = list(gr.distinct_permutations((1, 1, 2, 2)))
    assert len(words) == 6 == len(set(words))
    assert len(list(gr.iter_group("signed_multiset", multiset=(1, 1)))) == 4


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_distinct_permutations_matches_itertools(word):
    assert list(gr.distinct_permutations(word)) == sorted(set(permutations(word)))


def test_multiset_perm_signs():
    w = MultisetPerm((1, 1), (1, -1))
    assert w.values == (1, -1)
    assert stat(w, "des_multiset") == 1
    with pytest.raises(ValueError):
        MultisetPerm((1, 2), (1, 0))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        list(gr.iter_group("B", 6, budget=1000))


def test_wreath_descent_definition():
    # brute check of the colored descent rule for n=2, k=3
    for p, c in product(permutations((1, 2)), product(range(3), repeat=2)):
        x = ColoredPerm(Perm(p), c, 3)
        w = [(0, 0)] + list(zip(c, p))
        expected = sum(1 for (c1, p1), (c2, p2) in zip(w, w[1:])
                       if c1 < c2 or (c1 == c2 and p1 > p2))
        assert stat(x, "des_wreath") == expected
