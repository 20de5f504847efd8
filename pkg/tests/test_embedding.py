import pytest

import oracles
from conftest import perm
from sigmagroups import corpus
from sigmagroups.embedding import (check_sigma_subnormal_chain, is_L_permutable, is_LE_permutable,
                                   is_minimal_non_sigma_nilpotent, is_pi_decomposable, is_pi_permutable,
                                   is_S_permutable, is_S_semipermutable, is_schmidt, is_sigma_nilpotent,
                                   is_sigma_nilpotent_direct, is_sigma_primary, is_sigma_soluble,
                                   is_sigma_subnormal, permutes, sigma_nilpotent_residual, witnessing_hall_sets)
from sigmagroups.groups import is_normal, join
from sigmagroups.hall import is_pi_full, sylow
from sigmagroups.lattice import all_subgroups, is_nilpotent, lattice
from sigmagroups.sigma import PartitionError, PiSelector, SigmaPartition, all_partitions, pi_of

SINGLE23 = SigmaPartition.singletons([2, 3])


def _elements(H):
    return frozenset(tuple(g) for g in H.elements)


class TestPermutes:
    def test_examples(self, s3):
        t, c, u = (s3.subgroup([perm(x, 3)]) for x in ("(0 1)", "(0 1 2)", "(0 2)"))
        assert permutes(t, c, s3)
        assert permutes(t, s3.trivial_subgroup(), s3)
        assert not permutes(t, u, s3)

    @pytest.mark.parametrize("name", ["S4", "D8xC3", "SL(2,3)", "C3_x_C4", "A4xC2"])
    def test_matches_element_products(self, name):
        G = corpus.builtin_entry(name).group
        subs = all_subgroups(G)
        for A in subs[::3]:
            for B in subs[::2]:
                assert permutes(A, B, G) == oracles.permutes(_elements(A), _elements(B))


class TestLPermutability:
    def test_normal_subgroup_permutes_with_everything(self, s4):
        V = s4.subgroup([perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)])
        assert is_LE_permutable(V, all_subgroups(s4), s4)

    def test_trivial_e_reduces_to_plain(self, s4):
        A = s4.subgroup([perm("(0 1)", 4)])
        L = sylow(s4, 3)
        assert is_LE_permutable(A, L, s4.trivial_subgroup()) == is_L_permutable(A, L)

    def test_order_three_against_normal_sylow(self, g42):
        G = g42.group
        H = next(X for X in all_subgroups(G) if X.order == 3)
        assert is_LE_permutable(H, sylow(G, 7), G)


class TestPiPermutable:
    def test_example_294(self, g294):
        from sigmagroups.corpus import example_294_parts

        L = example_294_parts(g294)["L"]
        G = g294.group
        sigma = SigmaPartition.parse("2,7|3")
        ok, witness = is_pi_permutable(L, G, PiSelector(sigma, {0, 1}))
        assert ok and len(witness) == 2
        assert not is_S_permutable(L, G)
        single = SigmaPartition.singletons([2, 3, 7])
        assert not is_pi_permutable(L, G, PiSelector(single, {0, 1, 2}))[0]

    def test_whole_group(self, s3):
        assert is_pi_permutable(s3, s3, PiSelector(SINGLE23, {0, 1}))[0]

    def test_false_without_hall_set(self, a5):
        sigma = SigmaPartition.parse("2,5|3")
        pi = PiSelector.parse(sigma, "2,5")
        assert not is_pi_permutable(a5.trivial_subgroup(), a5, pi)[0]

    def test_trivial_subgroup(self, s4):
        for sigma in all_partitions([2, 3]):
            for pi in sigma.all_selectors():
                assert is_pi_permutable(s4.trivial_subgroup(), s4, pi)[0] == is_pi_full(s4, pi)

    def test_witness_sets_are_exhaustive(self, s3):
        t = s3.subgroup([perm("(0 1)", 3)])
        pi = PiSelector(SINGLE23, {1})
        assert len(witnessing_hall_sets(t, s3, pi)) == 1
        assert witnessing_hall_sets(t, s3, PiSelector(SINGLE23, {0})) == []

    def test_order_42_remark(self, g42):
        G = g42.group
        sigma = SigmaPartition.parse("2,3|7")
        pi = PiSelector.parse(sigma, "7")
        for H in all_subgroups(G):
            if H.order == 3:
                assert is_pi_permutable(H, G, pi)[0]
                assert not is_S_semipermutable(H, G)

    @pytest.mark.parametrize("name", ["S4", "SL(2,3)", "S3xC3", "C7_x_Aut(C7)", "A5", "D12"])
    def test_normal_implies_s_permutable_implies_pi_permutable(self, name):
        G = corpus.builtin_entry(name).group
        sigmas = all_partitions(pi_of(G.order))
        for H in all_subgroups(G):
            if is_normal(H, G):
                assert is_S_permutable(H, G)
            if is_S_permutable(H, G):
                for sigma in sigmas:
                    for pi in sigma.all_selectors():
                        if is_pi_full(G, pi):
                            assert is_pi_permutable(H, G, pi)[0]


class TestSigmaSubnormal:
    def test_examples(self, s3):
        t = s3.subgroup([perm("(0 1)", 3)])
        assert not is_sigma_subnormal(t, s3, SINGLE23)[0]
        ok, chain = is_sigma_subnormal(s3.subgroup([perm("(0 1 2)", 3)]), s3, SINGLE23)
        assert ok and check_sigma_subnormal_chain(chain, SINGLE23)
        assert is_sigma_subnormal(t, s3, SigmaPartition.parse("2,3"))[0]

    def test_trivial_subgroup(self, s4):
        for sigma in all_partitions([2, 3]):
            assert is_sigma_subnormal(s4.trivial_subgroup(), s4, sigma)[0]

    def test_uncovered(self, s3):
        with pytest.raises(PartitionError):
            is_sigma_subnormal(s3, s3, SigmaPartition.parse("2"))

    @pytest.mark.parametrize("name", ["S4", "D12", "S3xC3", "C5_x_C4", "A4xC2", "SL(2,3)"])
    def test_matches_naive_recursion(self, name):
        G = corpus.builtin_entry(name).group
        elems = _elements(G)
        for sigma in all_partitions(pi_of(G.order)):
            sn, _ = oracles.sigma_subnormal_oracle(elems, G.degree, sigma.blocks)
            for H in all_subgroups(G):
                ok, chain = is_sigma_subnormal(H, G, sigma)
                assert ok == sn(_elements(H), elems)
                if ok:
                    assert check_sigma_subnormal_chain(chain, sigma)
                    assert chain.chain[0] == H and chain.chain[-1] == G


class TestSigmaNilpotent:
    def test_s3(self, s3):
        one = SigmaPartition.parse("2,3")
        assert is_sigma_primary(s3, one) and is_sigma_nilpotent(s3, one) and is_sigma_soluble(s3, one)
        assert not is_sigma_nilpotent(s3, SINGLE23)
        assert is_sigma_soluble(s3, SINGLE23)

    def test_a5_not_soluble(self, a5):
        assert not is_sigma_soluble(a5, SigmaPartition.parse("2,3|5"))
        assert is_sigma_soluble(a5, SigmaPartition.parse("2,3,5"))

    def test_residuals(self, s3, s4):
        assert sigma_nilpotent_residual(s3, SINGLE23).order == 3
        assert sigma_nilpotent_residual(s4, SINGLE23).order == 12
        assert sigma_nilpotent_residual(corpus.cyclic(6), SINGLE23).order == 1

    @pytest.mark.parametrize("name", ["S4", "D12", "C3_x_C4", "S3xC5", "A4xC3", "Q8xC3", "C15"])
    def test_element_criterion_matches_direct_product(self, name):
        G = corpus.builtin_entry(name).group
        elems = _elements(G)
        for sigma in all_partitions(pi_of(G.order)):
            mine = is_sigma_nilpotent(G, sigma)
            assert mine == is_sigma_nilpotent_direct(G, sigma)
            assert mine == oracles.sigma_nilpotent(elems, G.degree, sigma.blocks)
            assert mine == (sigma_nilpotent_residual(G, sigma).order == 1)

    def test_singletons_agree_with_nilpotency(self):
        for e in corpus.default_corpus(corpus.CorpusConfig(max_order=60)):
            sigma = SigmaPartition.singletons(pi_of(e.order))
            assert is_sigma_nilpotent(e.group, sigma) == is_nilpotent(e.group), e.name


class TestSchmidtAndDecomposable:
    def test_schmidt(self, s3, s4):
        assert is_schmidt(s3)
        assert not is_schmidt(s4)
        assert is_schmidt(corpus.alternating(4))
        assert is_schmidt(corpus.quaternion8()) is False

    def test_minimal_non_sigma_nilpotent(self, s3, s4):
        assert is_minimal_non_sigma_nilpotent(s3, SINGLE23)
        assert not is_minimal_non_sigma_nilpotent(s4, SINGLE23)

    def test_pi_decomposable(self, s3):
        assert is_pi_decomposable(corpus.cyclic(6), {2})
        assert not is_pi_decomposable(s3, {2})


def test_product_formula_on_permuting_pairs():
    G = corpus.builtin_entry("S3xC3").group
    lat = lattice(G)
    for A in lat.subs:
        for B in lat.subs[::2]:
            if permutes(A, B, G):
                J = join(A, B)
                M = lat.subs[lat.pos[A._mask & B._mask]]
                assert J.order * M.order == A.order * B.order
