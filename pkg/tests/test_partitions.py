import itertools

import pytest
from hypothesis import given, strategies as st

from decompclasses.oracle import generic_induced_type
from decompclasses.partitions import (
    Partition,
    as_partition,
    centralizer_dim,
    compositions,
    dominance_leq,
    induce,
    orbit_dim,
    partitions_of,
    transpose,
)

import reference

P = Partition


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    parts, left = [], n
    while left:
        k = draw(st.integers(1, left))
        parts.append(k)
        left -= k
    return Partition.from_parts(parts)


def test_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P(()).size == 0 and len(P(())) == 0
    assert Partition.from_parts([1, 3, 0, 2]) == P((3, 2, 1))
    assert str(P((2, 1))) == "(2,1)" and P((2, 1)).to_json() == [2, 1]


def test_transpose_examples():
    assert transpose(P((3,))) == P((1, 1, 1))
    assert transpose(P((2, 1))) == P((2, 1))
    assert transpose(P(())) == P(())


@given(partitions(max_size=20))
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert dominance_leq((2, 2), (3, 1)) and not dominance_leq((3, 1), (2, 2))
    # the same verdicts from ranks of powers of nilpotent Jordan matrices
    assert reference.dominance_by_ranks((2, 2), (3, 1)) and not reference.dominance_by_ranks((3, 1), (2, 2))
    assert dominance_leq((2, 1), (2, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_partial_order_and_transpose_antiautomorphism(n):
    parts = partitions_of(n)
    for lam, mu in itertools.product(parts, repeat=2):
        le = dominance_leq(lam, mu)
        if le and dominance_leq(mu, lam):
            assert lam == mu
        assert le == dominance_leq(transpose(mu), transpose(lam))


@pytest.mark.parametrize("n", range(1, 7))
def test_dominance_matches_rank_criterion(n):
    for lam, mu in itertools.product(partitions_of(n), repeat=2):
        assert dominance_leq(lam, mu) == reference.dominance_by_ranks(lam.parts, mu.parts)


@pytest.mark.parametrize("n", range(1, 7))
def test_dominance_transitive(n):
    parts = partitions_of(n)
    for a, b, c in itertools.product(parts, repeat=3):
        if dominance_leq(a, b) and dominance_leq(b, c):
            assert dominance_leq(a, c)


def test_centralizer_dim_examples():
    assert centralizer_dim((1, 1)) == 4
    assert centralizer_dim((2,)) == 2
    assert centralizer_dim((2, 1)) == 5
    assert orbit_dim((3,)) == 6


@pytest.mark.parametrize("lam", [tuple(p) for n in range(1, 6) for p in partitions_of(n)])
def test_centralizer_dim_by_brute_force(lam):
    assert centralizer_dim(lam) == reference.commutant_dim(reference.jordan_matrix([(0, lam)]))


def test_induce_examples():
    assert induce([(1, 1), (1,)]) == P((2, 1))
    assert induce([(2,), (1,)]) == P((3,))
    assert induce([(3, 1)]) == P((3, 1))
    with pytest.raises(ValueError):
        induce([])


def test_induce_examples_against_sympy_jordan_form():
    import sympy

    # blockdiag(0_2, 0_1) + strictly block-upper part with generic entries
    M = sympy.Matrix([[0, 0, 3], [0, 0, -7], [0, 0, 0]])
    assert reference.jordan_partitions(M) == {0: (2, 1)}
    M = sympy.Matrix([[0, 1, 5], [0, 0, 11], [0, 0, 0]])
    assert reference.jordan_partitions(M) == {0: (3,)}


@st.composite
def tuples_of_partitions(draw, max_total=8):
    out, total = [], 0
    while total < max_total:
        lam = draw(partitions(max_size=max_total - total))
        if lam.size == 0:
            break
        out.append(lam)
        total += lam.size
        if draw(st.booleans()):
            break
    if not out:
        out = [P((1,))]
    return out


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


@given(tuples_of_partitions())
def test_induce_size_and_transitivity(lams):
    flat = induce(lams)
    assert flat.size == sum(l.size for l in lams)
    for grouping in itertools.islice(_set_partitions(lams), 60):
        assert induce([induce(g) for g in grouping]) == flat


@given(tuples_of_partitions())
def test_induce_order_independent(lams):
    assert induce(lams) == induce(list(reversed(lams)))


def _all_tuples(n):
    for comp in compositions(n):
        yield from itertools.product(*(partitions_of(m) for m in comp))


@pytest.mark.parametrize("n", range(1, 9))
def test_dimension_identity_exhaustive(n):
    for lams in _all_tuples(n):
        sizes = [l.size for l in lams]
        lhs = n * n - centralizer_dim(induce(lams))
        rhs = sum(m * m - centralizer_dim(l) for m, l in zip(sizes, lams)) + (n * n - sum(m * m for m in sizes))
        assert lhs == rhs


@pytest.mark.parametrize("comp", [c for n in range(1, 6) for c in compositions(n)])
def test_richardson_case_against_oracle(comp):
    zeros = [P((1,) * m) for m in comp]
    expected = transpose(Partition.from_parts(comp))
    assert induce(zeros) == expected
    assert generic_induced_type([(0, z) for z in zeros], seed=3)[0] == expected


def test_partitions_of_counts_and_order():
    assert [len(partitions_of(n)) for n in range(9)] == [len(reference.partitions_list(n)) if n else 1 for n in range(9)]
    assert partitions_of(4)[0] == P((4,)) and partitions_of(4)[-1] == P((1, 1, 1, 1))
    assert [tuple(p) for p in partitions_of(5)] == reference.partitions_list(5)
    with pytest.raises(ValueError):
        partitions_of(-1)
    assert len(list(compositions(5))) == 16
    assert as_partition([2, 1]) == P((2, 1))
