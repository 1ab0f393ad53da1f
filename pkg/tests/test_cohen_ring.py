"""Tests for the symbolic cohomology ring of F(R^n, k)."""

from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from configtop import cohen_ring
from configtop.cohen_ring import (
    RingError,
    all_normal_forms,
    basis,
    cuplength,
    element_degree,
    generator,
    generator_indices,
    is_zero,
    make_ring,
    multiply,
    normal_form,
    poincare_table,
    unit,
)


def matrix_rank(rows):
    """Rank over Q by Gaussian elimination (independent of the ring code)."""
    rows = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    col = 0
    width = max((len(r) for r in rows), default=0)
    while rows and col < width:
        pivot = next((r for r in rows if r[col]), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        rows = [
            [x - r[col] / pivot[col] * p for x, p in zip(r, pivot)]
            for r in rows
        ]
        rows = [r for r in rows if any(r)]
        rank += 1
        col += 1
    return rank


def test_make_ring_fields():
    ctx = make_ring(3, 4)
    assert ctx.gen_degree == 2
    assert ctx.gen_parity == "even"
    ctx = make_ring(2, 2)
    assert ctx.gen_degree == 1
    assert ctx.gen_parity == "odd"


@pytest.mark.parametrize("n,k", [(1, 3), (0, 2), (2, 0), (3, -1)])
def test_make_ring_rejects(n, k):
    with pytest.raises(RingError):
        make_ring(n, k)


def test_generator_validation():
    ctx = make_ring(2, 3)
    a = generator(ctx, 3, 1)
    assert a.terms == {((3, 1),): 1}
    with pytest.raises(RingError, match="j < i"):
        generator(ctx, 1, 1)
    with pytest.raises(RingError):
        generator(ctx, 4, 1)


def test_unique_generator_for_two_points():
    ctx = make_ring(3, 2)
    assert generator_indices(ctx) == [(2, 1)]
    assert generator(ctx, 2, 1).terms == {((2, 1),): 1}


@pytest.mark.parametrize("n", [2, 3])
def test_square_relation(n):
    ctx = make_ring(n, 2)
    a = generator(ctx, 2, 1)
    assert is_zero(a * a)


@pytest.mark.parametrize("n", [2, 3])
def test_three_term_relation_example(n):
    # A_{3,1} A_{3,2} = A_{2,1} A_{3,2} - A_{2,1} A_{3,1}
    ctx = make_ring(n, 3)
    lhs = generator(ctx, 3, 1) * generator(ctx, 3, 2)
    rhs = normal_form(ctx, [(2, 1), (3, 2)]) - normal_form(ctx, [(2, 1), (3, 1)])
    assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
def test_triple_product_nonzero(n):
    ctx = make_ring(n, 4)
    p = generator(ctx, 2, 1) * generator(ctx, 3, 1) * generator(ctx, 4, 1)
    assert not is_zero(p)
    assert element_degree(p) == 3 * (n - 1)
    # independent check: the reduced expression has a nonzero coordinate in
    # the enumerated admissible basis of that degree
    words = {m.factors for m in basis(ctx, 3)}
    assert any(w in words and c != 0 for w, c in p.terms.items())


def test_koszul_sign_odd_degree():
    # n even, so generators are odd: factors anticommute
    ctx = make_ring(2, 3)
    assert generator(ctx, 3, 1) * generator(ctx, 2, 1) == \
        -1 * normal_form(ctx, [(2, 1), (3, 1)])


@pytest.mark.parametrize("n", [2, 3])
def test_normal_form_swapped_pair(n):
    ctx = make_ring(n, 3)
    got = normal_form(ctx, [(3, 2), (3, 1)])
    sign = (-1) ** (n - 1)
    want = sign * (
        normal_form(ctx, [(2, 1), (3, 2)]) - normal_form(ctx, [(2, 1), (3, 1)])
    )
    assert got == want


def test_normal_form_empty_word():
    ctx = make_ring(3, 3)
    assert normal_form(ctx, [], 5) == unit(ctx, 5)
    assert element_degree(unit(ctx, 5)) == 0


def test_basis_small_cases():
    ctx = make_ring(3, 3)
    assert sorted(m.factors for m in basis(ctx, 1)) == \
        [((2, 1),), ((3, 1),), ((3, 2),)]
    assert sorted(m.factors for m in basis(ctx, 2)) == \
        [((2, 1), (3, 1)), ((2, 1), (3, 2))]
    assert len(basis(make_ring(3, 4), 3)) == 6
    assert basis(ctx, 3) == []


@pytest.mark.parametrize("n", [2, 3])
def test_rank_by_row_reduction(n):
    # all products of two generators, reduced, span exactly the q=2 basis
    ctx = make_ring(n, 3)
    cols = {m.factors: idx for idx, m in enumerate(basis(ctx, 2))}
    rows = []
    for wa in generator_indices(ctx):
        for wb in generator_indices(ctx):
            elt = normal_form(ctx, [wa, wb])
            row = [0] * len(cols)
            for w, c in elt.terms.items():
                row[cols[w]] = c
            rows.append(row)
    assert matrix_rank(rows) == 2


def test_poincare_table_examples():
    assert poincare_table(make_ring(3, 3)) == [(0, 1), (2, 3), (4, 2)]
    assert poincare_table(make_ring(2, 1)) == [(0, 1)]
    assert [r for _d, r in poincare_table(make_ring(2, 4))] == [1, 6, 11, 6]


@pytest.mark.parametrize("k", range(1, 9))
def test_total_rank_is_factorial(k):
    for n in (2, 3):
        assert sum(r for _d, r in poincare_table(make_ring(n, k))) == factorial(k)


def test_rank_parity_independence():
    for k in range(1, 7):
        ranks2 = [r for _d, r in poincare_table(make_ring(2, k))]
        ranks3 = [r for _d, r in poincare_table(make_ring(3, k))]
        assert ranks2 == ranks3


def test_cuplength_examples():
    value, witness = cuplength(make_ring(3, 2))
    assert (value, witness.factors) == (1, ((2, 1),))
    value, witness = cuplength(make_ring(2, 4))
    assert value == 3
    assert witness.factors == ((2, 1), (3, 1), (4, 1))
    value, witness = cuplength(make_ring(4, 1))
    assert (value, witness.factors) == (0, ())


@pytest.mark.parametrize("n,k", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_products_of_k_generators_vanish(n, k):
    # products are determined up to sign by the factor multiset
    ctx = make_ring(n, k)
    gens = generator_indices(ctx)
    for word in combinations_with_replacement(gens, k):
        assert is_zero(normal_form(ctx, word))


def test_is_zero_and_degree():
    ctx = make_ring(3, 3)
    a = generator(ctx, 2, 1)
    assert is_zero(a - a)
    assert element_degree(normal_form(ctx, [(2, 1), (3, 1)])) == 4
    assert element_degree(a + unit(ctx)) == "inhomogeneous"


def test_context_mismatch():
    a = generator(make_ring(3, 3), 2, 1)
    b = generator(make_ring(3, 4), 2, 1)
    with pytest.raises(RingError, match="context mismatch"):
        multiply(a, b)


@pytest.mark.parametrize("n", [2, 3])
def test_relation_soundness_all_instances(n):
    # A_{i,j} A_{i,l} = A_{l,j} A_{i,l} - A_{l,j} A_{i,j} for j < l < i, k <= 6
    ctx = make_ring(n, 6)
    for i in range(3, 7):
        for l in range(2, i):
            for j in range(1, l):
                lhs = normal_form(ctx, [(i, j), (i, l)])
                rhs = normal_form(ctx, [(l, j), (i, l)]) - \
                    normal_form(ctx, [(l, j), (i, j)])
                assert lhs == rhs, (i, j, l)


words_k4 = st.lists(
    st.tuples(st.integers(2, 4), st.integers(1, 3)).filter(lambda p: p[1] < p[0]),
    min_size=0,
    max_size=3,
)


@settings(max_examples=150, deadline=None)
@given(wa=words_k4, wb=words_k4, n=st.sampled_from([2, 3]))
def test_graded_commutativity(wa, wb, n):
    ctx = make_ring(n, 4)
    a = normal_form(ctx, wa)
    b = normal_form(ctx, wb)
    sign = (-1) ** (len(wa) * len(wb) * ctx.gen_degree)
    assert a * b == sign * (b * a)


@settings(max_examples=150, deadline=None)
@given(wa=words_k4, wb=words_k4, wc=words_k4, n=st.sampled_from([2, 3]))
def test_associativity(wa, wb, wc, n):
    ctx = make_ring(n, 4)
    a, b, c = (normal_form(ctx, w) for w in (wa, wb, wc))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("odd", [False, True])
def test_confluence_short_words(odd):
    gens = generator_indices(make_ring(2, 4))
    memo = {}
    for word in product(gens, repeat=2):
        forms = all_normal_forms(word, odd, memo)
        assert len(forms) == 1, word
        assert cohen_ring._normalize_word(word, odd) in forms
