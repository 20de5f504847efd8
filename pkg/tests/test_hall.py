import pytest

import oracles
from sigmagroups import corpus
from sigmagroups.embedding import is_sigma_soluble
from sigmagroups.groups import is_normal, join_all
from sigmagroups.hall import (complete_hall_sets, hall_subgroups, is_pi_closed, is_pi_full, is_sylow_type, o_pi_lower,
                              o_pi_upper, sylow)
from sigmagroups.lattice import all_subgroups
from sigmagroups.perm import ResourceLimitError
from sigmagroups.sigma import PiSelector, SigmaPartition, all_partitions, part, pi_of


def test_sylow_and_hall_counts(s4, a5):
    assert len(sylow(s4, 2)) == 3
    assert all(P.order == 8 for P in sylow(s4, 2))
    assert len(hall_subgroups(a5, {2, 3})) == 5
    assert hall_subgroups(a5, {2, 5}) == []


def test_complete_hall_sets(s3, a5):
    sigma = SigmaPartition.singletons([2, 3])
    assert len(complete_hall_sets(s3, PiSelector(sigma, {0, 1}))) == 3
    sigma = SigmaPartition.parse("2,3|5")
    assert len(complete_hall_sets(a5, PiSelector.parse(sigma, "2,3"))) == 5
    sigma = SigmaPartition.parse("2,5|3")
    assert not is_pi_full(a5, PiSelector.parse(sigma, "2,5"))


def test_empty_selection_is_full():
    sigma = SigmaPartition.parse("2|3|5")
    pi = PiSelector.parse(sigma, "5")
    C6 = corpus.cyclic(6)
    assert is_pi_full(C6, pi)
    assert [len(h) for h in complete_hall_sets(C6, pi)] == [0]


def test_hall_set_cap():
    sigma = SigmaPartition.singletons([2, 3, 5])
    with pytest.raises(ResourceLimitError):
        complete_hall_sets(corpus.alternating(5), PiSelector(sigma, {0, 1, 2}), cap=10)


def test_sylow_type():
    a5 = corpus.alternating(5)
    sigma = SigmaPartition.parse("2,3|5")
    assert not is_sylow_type(a5, PiSelector.parse(sigma, "2,3"))
    s3 = corpus.symmetric(3)
    one = SigmaPartition.parse("2,3")
    assert is_sylow_type(s3, PiSelector(one, {0}))


@pytest.mark.parametrize("name", ["S4", "A4xC3", "SL(2,3)", "C7_x_Aut(C7)", "D12", "S3xS3"])
def test_soluble_groups_are_of_sylow_type(name):
    G = corpus.builtin_entry(name).group
    for sigma in all_partitions(pi_of(G.order)):
        assert is_sigma_soluble(G, sigma)
        for pi in sigma.all_selectors():
            assert is_sylow_type(G, pi)
            assert is_pi_full(G, pi)


def test_radicals(s3, s4):
    assert o_pi_lower(s4, {2}).order == 4
    assert o_pi_upper(s3, {2}).order == 3
    assert is_pi_closed(corpus.alternating(4), {2})
    assert not is_pi_closed(s4, {2})


def test_upper_radical_matches_join_of_complement_subgroups(s4):
    for G in (s4, corpus.builtin_entry("A4xC3").group, corpus.builtin_entry("C5_x_C4").group):
        for primes in ({2}, {3}, {2, 3}, {5}):
            rest = [H for H in all_subgroups(G) if not pi_of(H.order) & primes]
            assert o_pi_upper(G, primes) == join_all(rest, G)


def test_radical_properties(s4):
    for G in (s4, corpus.builtin_entry("S3xC3").group, corpus.builtin_entry("D20").group):
        for primes in ({2}, {3}, {5}):
            O = o_pi_lower(G, primes)
            assert is_normal(O, G)
            for H in hall_subgroups(G, primes):
                assert O <= H
            U = o_pi_upper(G, primes)
            assert is_normal(U, G)
            assert pi_of(G.order // U.order) <= primes


@pytest.mark.parametrize("name", ["S4", "A5", "D12", "C5_x_C4", "SL(2,3)", "S3xC5"])
def test_hall_subgroups_match_brute_force(name):
    G = corpus.builtin_entry(name).group
    elems = frozenset(tuple(g) for g in G.elements)
    subs = oracles.all_subgroups(elems, G.degree)
    primes = sorted(pi_of(G.order))
    for r in range(1, len(primes) + 1):
        for i in range(1 << len(primes)):
            chosen = {p for k, p in enumerate(primes) if i >> k & 1}
            if len(chosen) != r:
                continue
            mine = {frozenset(tuple(g) for g in H.elements) for H in hall_subgroups(G, chosen)}
            assert mine == set(oracles.halls(subs, G.order, chosen))


def test_hall_orders():
    G = corpus.builtin_entry("S3xC5").group
    for H in hall_subgroups(G, {2, 5}):
        assert H.order == part(G.order, {2, 5})
        assert pi_of(G.order // H.order) <= {3}
