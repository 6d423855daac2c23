import itertools
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from decompclasses.engine import (
    MAX_CLOSURE_N,
    ClassInfo,
    GLDecompDatum,
    LeviShape,
    center_class,
    class_dim,
    class_infos,
    closure_leq,
    closure_matrix,
    enumerate_classes,
    group_class_infos,
    group_hasse,
    hasse,
    induce_orbit,
    level_of,
    levi_shape,
    nilpotent_class,
    pgl_transport,
    regular_semisimple_class,
    sheet_nilpotent,
    sheets,
    transitive_reduction,
)
from decompclasses.partitions import Partition, centralizer_dim, dominance_leq, induce, partitions_of

import reference

D = GLDecompDatum.of
P = Partition


# --- data -----------------------------------------------------------------------


def test_canonical_form_and_serialization():
    a = D((1, (1,)), (2, (1, 1)))
    b = D((2, (1, 1)), (1, (1,)))
    assert a == b and hash(a) == hash(b)
    assert a.blocks[0] == (2, P((1, 1)))
    assert str(a) == "(2,(1,1))(1,(1))"
    assert a.to_json() == [[2, [1, 1]], [1, [1]]]
    assert GLDecompDatum.from_json(a.to_json()) == a
    assert a.n == 3 and a.block_sizes == (2, 1)
    with pytest.raises(ValueError):
        D((2, (1,)))
    with pytest.raises(ValueError):
        GLDecompDatum(())


def test_levi_shape():
    s = levi_shape(D((2, (2,)), (1, (1,)), (1, (1,))))
    assert s == LeviShape((2, 1, 1))
    assert (s.dim_levi, s.dim_center, s.dim_unipotent_radical) == (6, 3, 5)
    for n in range(1, 7):
        for lam in partitions_of(n):
            sh = LeviShape(lam.parts)
            assert sh.dim_levi + 2 * sh.dim_unipotent_radical == n * n


# --- enumeration ----------------------------------------------------------------


def test_enumerate_examples():
    assert [len(enumerate_classes(n)) for n in (1, 2, 3)] == [1, 3, 6]
    assert set(enumerate_classes(2)) == {D((2, (2,))), D((2, (1, 1))), D((1, (1,)), (1, (1,)))}


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_matches_independent_enumeration(n):
    ours = enumerate_classes(n)
    assert len(ours) == len(set(ours))
    theirs = {tuple((m, P(lam)) for m, lam in blocks) for blocks in reference.gl_classes(n)}
    assert {d.blocks for d in ours} == theirs


def test_class_counts_match_generating_function():
    series = reference.class_count_series(12)
    assert [len(enumerate_classes(n)) for n in range(1, 13)] == series[1:]


# --- dims and levels ---------------------------------------------------------------


def test_dim_and_level_examples():
    assert class_dim(D((1, (1,)), (1, (1,)))) == 4
    assert class_dim(D((2, (2,)))) == 3
    for n in range(1, 7):
        assert class_dim(center_class(n)) == 1
    assert level_of(D((2, (1, 1)))) == 4
    assert level_of(D((1, (1,)), (1, (1,)))) == 2
    assert level_of(D((3, (2, 1)))) == 5


@pytest.mark.parametrize("n", range(1, 5))
def test_dim_and_level_against_commutant_of_representative(n):
    for d in enumerate_classes(n):
        assert (class_dim(d), level_of(d)) == reference.class_dim_and_level([(m, lam.parts) for m, lam in d.blocks])


@pytest.mark.parametrize("n", range(1, 9))
def test_levels_partition_the_classes(n):
    classes = enumerate_classes(n)
    by_level = Counter(level_of(d) for d in classes)
    assert sum(by_level.values()) == len(classes)
    for d in classes:
        assert level_of(d) == sum(centralizer_dim(lam) for lam in d.nilpotent_parts)
        assert n <= level_of(d) <= n * n and 1 <= class_dim(d) <= n * n


# --- closure order --------------------------------------------------------------------


def test_closure_examples():
    assert closure_leq(D((2, (2,))), D((1, (1,)), (1, (1,))))
    assert closure_leq(D((2, (1, 1))), D((2, (2,))))
    assert not closure_leq(D((1, (1,)), (1, (1,))), D((2, (2,))))
    for d in enumerate_classes(4):
        assert closure_leq(d, d)
    with pytest.raises(ValueError):
        closure_leq(D((2, (2,))), D((3, (3,))))


@pytest.mark.parametrize("n", range(1, 6))
def test_closure_partial_order_and_dimension(n):
    data = enumerate_classes(n)
    leq = closure_matrix(data)
    for i, j in itertools.product(range(len(data)), repeat=2):
        if leq[i][j] and i != j:
            assert not leq[j][i]
            assert class_dim(data[i]) < class_dim(data[j])
        if leq[i][j]:
            for k in range(len(data)):
                if leq[j][k]:
                    assert leq[i][k]


def _closure_by_brute_force(d1, d2):
    # every map from d2's blocks to d1's blocks, straight from the definition
    for phi in itertools.product(range(len(d1.blocks)), repeat=len(d2.blocks)):
        fibers = [[d2.blocks[i][1] for i in range(len(phi)) if phi[i] == j] for j in range(len(d1.blocks))]
        if any(sum(l.size for l in f) != m for f, (m, _) in zip(fibers, d1.blocks)):
            continue
        if all(dominance_leq(f, induce(fib)) for fib, (_, f) in zip(fibers, d1.blocks)):
            return True
    return False


@pytest.mark.parametrize("n", range(1, 6))
def test_closure_search_matches_exhaustive_map_search(n):
    data = enumerate_classes(n)
    for d1, d2 in itertools.product(data, repeat=2):
        assert closure_leq(d1, d2) == _closure_by_brute_force(d1, d2)


@pytest.mark.parametrize("n", range(1, 8))
def test_nilpotent_restriction_is_dominance(n):
    for lam, mu in itertools.product(partitions_of(n), repeat=2):
        assert closure_leq(nilpotent_class(lam), nilpotent_class(mu)) == dominance_leq(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_regular_semisimple_is_unique_maximum(n):
    top = regular_semisimple_class(n)
    assert class_dim(top) == n * n
    for d in enumerate_classes(n):
        assert closure_leq(d, top)
        if d != top:
            assert not closure_leq(top, d)


# --- Hasse diagrams ---------------------------------------------------------------------


def test_hasse_small():
    h1 = hasse(1)
    assert len(h1.nodes) == 1 and h1.covers == ()
    h2 = hasse(2)
    assert [c.dim for c in h2.nodes] == [4, 3, 1]
    assert sorted((h2.nodes[a].dim, h2.nodes[b].dim) for a, b in h2.covers) == [(1, 3), (3, 4)]
    h3 = hasse(3)
    assert [c.dim for c in h3.nodes] == [9, 8, 7, 6, 5, 1]
    assert sorted(h3.covers) == [(1, 0), (2, 1), (3, 1), (4, 2), (4, 3), (5, 4)]
    centre = [i for i, c in enumerate(h3.nodes) if c.datum == center_class(3)]
    assert not any(lo != centre[0] and hi == centre[0] for lo, hi in h3.covers)
    assert all(lo != hi for lo, hi in h3.covers)


@pytest.mark.parametrize("n", range(1, 7))
def test_covers_are_transitive_reduction(n):
    h = hasse(n)
    data = [c.datum for c in h.nodes]
    g = nx.DiGraph()
    g.add_nodes_from(range(len(data)))
    g.add_edges_from((i, j) for i in range(len(data)) for j in range(len(data)) if i != j and closure_leq(data[i], data[j]))
    assert set(nx.transitive_reduction(g).edges()) == set(h.covers)
    for lo, hi in h.covers:
        assert h.nodes[lo].dim < h.nodes[hi].dim


def test_transitive_reduction_of_chain_and_diamond():
    chain = [[i <= j for j in range(4)] for i in range(4)]
    assert sorted(transitive_reduction(chain)) == [(0, 1), (1, 2), (2, 3)]
    rel = {(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)}
    diamond = [[i == j or (i, j) in rel for j in range(4)] for i in range(4)]
    assert sorted(transitive_reduction(diamond)) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_tractability_bound():
    with pytest.raises(ValueError):
        hasse(MAX_CLOSURE_N + 1)
    with pytest.raises(ValueError):
        class_infos(MAX_CLOSURE_N + 1)


def test_dot_and_json_shapes():
    import pydot

    h = hasse(3)
    (graph,) = pydot.graph_from_dot_data(h.to_dot())
    assert len([e for e in graph.get_edges()]) == len(h.covers)
    labels = {n.get_name(): n.get("label") for n in graph.get_nodes() if n.get("label")}
    assert labels["n5"] == '"(3,(1,1,1)) | dim 1"'
    doc = h.to_json()
    assert doc["group"] == "GL" and doc["n"] == 3 and len(doc["nodes"]) == 6


# --- sheets -----------------------------------------------------------------------------


def test_sheets_gl2():
    s = sheets(2)
    assert [lvl for lvl, _ in s] == [2, 4]
    (_, low), (_, high) = s
    dense = [c for c in low if c.is_sheet_dense]
    assert [c.datum for c in dense] == [D((1, (1,)), (1, (1,)))]
    assert [c.datum for c in high] == [D((2, (1, 1)))] and high[0].is_isolated and high[0].is_sheet_dense


def test_sheets_gl3():
    s = sheets(3)
    assert [lvl for lvl, _ in s] == [3, 5, 9]
    nil = [c.sheet_nilpotent for _, cs in s for c in cs if c.is_sheet_dense]
    assert nil == [P((3,)), P((2, 1)), P((1, 1, 1))]


@pytest.mark.parametrize("n", range(1, 7))
def test_sheet_flags_and_nilpotent_bijection(n):
    infos = class_infos(n)
    dense = [c for c in infos if c.is_sheet_dense]
    assert sorted(c.sheet_nilpotent for c in dense) == sorted(partitions_of(n))
    for lvl, members in sheets(n):
        for c in members:
            others = [e.datum for e in members if e is not c]
            maximal = not any(closure_leq(c.datum, e) for e in others)
            minimal = not any(closure_leq(e, c.datum) for e in others)
            assert c.is_sheet_dense == maximal
            assert c.is_isolated == (maximal and minimal)
            assert (c.sheet_nilpotent is not None) == c.is_sheet_dense
    centre = next(c for c in infos if c.datum == center_class(n))
    assert centre.is_isolated and centre.is_sheet_dense and centre.level == n * n


def test_sheet_nilpotent_examples():
    assert sheet_nilpotent(D((1, (1,)), (1, (1,)), (1, (1,)))) == P((3,))
    assert sheet_nilpotent(D((4, (2, 1, 1)))) == P((2, 1, 1))
    assert sheet_nilpotent(D((2, (1, 1)), (1, (1,)))) == P((2, 1))


# --- induction of arbitrary orbits ----------------------------------------------------------


def test_induce_orbit_examples():
    assert induce_orbit([("a", P((1, 1))), ("b", P((1,)))]) == [("a", P((1, 1))), ("b", P((1,)))]
    assert induce_orbit([("a", P((1, 1))), ("a", P((1,)))]) == [("a", P((2, 1)))]
    assert induce_orbit([(2, (1,)), (1, (2,)), (2, (1,))]) == [(1, P((2,))), (2, P((2,)))]


@given(st.randoms(use_true_random=False))
def test_induce_orbit_nested_equals_flat(rng):
    for _ in range(100):
        total = rng.randint(1, 8)
        labeled = []
        while total:
            m = rng.randint(1, total)
            labeled.append((rng.choice("abc"), rng.choice(partitions_of(m))))
            total -= m
        flat = induce_orbit(labeled)
        # induce within random sub-groups of equal tags first, then again
        rng.shuffle(labeled)
        cut = rng.randint(0, len(labeled))
        nested = induce_orbit(induce_orbit(labeled[:cut]) + induce_orbit(labeled[cut:]))
        assert nested == flat
        sizes = Counter()
        for t, lam in labeled:
            sizes[t] += lam.size
        assert {t: lam.size for t, lam in flat} == dict(sizes)


# --- PGL transport -----------------------------------------------------------------------


def test_pgl_transport_examples():
    h = pgl_transport(hasse(2))
    assert [c.dim for c in h.nodes] == [3, 2, 0]
    assert h.covers == hasse(2).covers and h.group == "PGL"
    assert group_hasse("pgl", 2) == h
    with pytest.raises(ValueError):
        pgl_transport(h)
    with pytest.raises(ValueError):
        group_hasse("sl", 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_pgl_transport_shifts_dims(n):
    g, p = hasse(n), pgl_transport(hasse(n))
    assert g.covers == p.covers
    assert all(a.dim - 1 == b.dim and a.level - 1 == b.level and a.datum == b.datum for a, b in zip(g.nodes, p.nodes))
    assert min(c.dim for c in p.nodes) == 0
    assert [c.dim for c in group_class_infos("pgl", n)] == [c.dim for c in p.nodes]


def test_class_info_json():
    info = ClassInfo(D((2, (2,))), 3, 2)
    assert info.to_json() == {"blocks": [[2, [2]]], "dim": 3, "level": 2, "sheet_dense": False, "isolated": False}


@pytest.mark.parametrize("n", range(1, 7))
def test_prefilter_only_rejects_what_the_search_rejects(n):
    from decompclasses.engine import _fits, _multiset, _raw

    data = enumerate_classes(n)
    for d1, d2 in itertools.product(data, repeat=2):
        assert closure_leq(d1, d2) == _fits(_raw(d1.blocks), _multiset(d2.blocks))
