"""Randomised engine invariants over corpus groups and their subgroups."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from sigmagroups import corpus
from sigmagroups.embedding import permutes
from sigmagroups.groups import conjugate, intersection, is_normal, join, normal_closure, quotient
from sigmagroups.lattice import chief_series, lattice
from sigmagroups.perm import Permutation

ENTRIES = corpus.default_corpus(corpus.CorpusConfig(max_order=200, pinned_tags=frozenset({"worked-example"})))

entries = st.sampled_from(ENTRIES)


@st.composite
def group_and_pair(draw):
    e = draw(entries)
    lat = lattice(e.group)
    n = len(lat.subs)
    return e, lat, draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))


@st.composite
def permutations(draw, max_degree=9):
    n = draw(st.integers(1, max_degree))
    return Permutation(draw(st.permutations(range(n))))


FAST = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@FAST
@given(group_and_pair())
def test_lagrange_and_product_formula(case):
    e, lat, i, j = case
    A, B = lat.subs[i], lat.subs[j]
    assert e.order % A.order == 0
    M = intersection(A, B)
    J = join(A, B)
    assert J.order % A.order == 0 and A.order % M.order == 0
    if permutes(A, B, e.group):
        assert J.order * M.order == A.order * B.order
    else:
        assert J.order * M.order > A.order * B.order


@FAST
@given(group_and_pair(), st.integers(0, 10**6))
def test_conjugation_preserves_order(case, seed):
    e, lat, i, _ = case
    G = e.group
    x = G.elements[seed % G.order]
    H = lat.subs[i]
    Hx = conjugate(H, x)
    assert Hx.order == H.order and Hx <= G


@FAST
@given(group_and_pair())
def test_quotient_soundness(case):
    e, lat, i, _ = case
    G = e.group
    N = normal_closure(G, lat.subs[i])
    assert is_normal(N, G)
    Q, f = quotient(G, N)
    assert Q.order * N.order == G.order
    images = {f(g) for g in G.generators}
    assert Q.subgroup(list(images)) == Q
    for g in G.generators[:3]:
        assert (f(g) == Q.identity()) == (g in N)


@settings(max_examples=len(ENTRIES) * 2, deadline=None)
@given(entries)
def test_jordan_holder(e):
    a = chief_series(e.group, "lex")
    b = chief_series(e.group, "revlex")
    assert sorted(a.factor_orders) == sorted(b.factor_orders)
    prod = 1
    for f in a.factor_orders:
        prod *= f
    assert prod == e.order
    for T in a.terms:
        assert is_normal(T, e.group)


@settings(max_examples=300, deadline=None)
@given(permutations(), st.data())
def test_permutation_group_axioms(p, data):
    n = len(p)
    q = Permutation(data.draw(st.permutations(range(n))))
    r = Permutation(data.draw(st.permutations(range(n))))
    e = Permutation.identity(n)
    assert (p * q) * r == p * (q * r)
    assert p * e == p == e * p
    assert (p * p.inverse()) == e
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert sorted(p) == list(range(n))
    assert Permutation.from_cycles(p.cycle_string(), n) == p
