"""Suite definitions: one hypothesis/conclusion pair per theorem clause.

Each suite has an instance generator (what to quantify over) and an
evaluator (hypothesis, then conclusion).  The evaluator is the single source
of truth; ``check`` replays it on one instance.  Generators may skip
combinations whose base hypothesis is already false, but never skip a
combination whose hypothesis holds.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from ..corpus import CorpusEntry, example_294_parts
from ..hall import orbit_ids
from ..lattice import chief_series, frattini, lattice
from ..perm import ResourceLimitError
from ..sigma import PiSelector, SigmaPartition, part, pi_of
from .harness import Ctx, Inst, SuiteSpec, Verdict

_WORKED = frozenset({"worked-example"})


# ---------------------------------------------------------------------------
# helpers


def _sigma_pi(ctx: Ctx, entry: CorpusEntry) -> Iterator[tuple[SigmaPartition, PiSelector]]:
    for sigma in ctx.partitions(entry):
        for pi in sigma.all_selectors():
            yield sigma, pi


def _singletons(entry: CorpusEntry) -> SigmaPartition:
    return SigmaPartition.singletons(pi_of(entry.order))


def _is_pi_group(order: int, primes: frozenset[int]) -> bool:
    return pi_of(order) <= primes


def _proper(lat, i: int, k: int | None = None) -> bool:
    return i != 0 and i != (lat.top if k is None else k)


def _sigma_blocks(order: int, sigma: SigmaPartition) -> frozenset[int]:
    return sigma.block_ids_of(order)


def _complement_primes(lat, pi: PiSelector) -> frozenset[int]:
    return pi_of(lat.orders[lat.top]) - pi.primes


def _lat(inst: Inst):
    return lattice(inst.entry.group)


def _subgroup_ids(lat, reps: bool) -> list[int]:
    return lat.class_reps() if reps else list(range(len(lat.subs)))


def _complete_hall_sets(ctx: Ctx, lat, k: int, pi: PiSelector) -> list[tuple[int, ...]]:
    P = ctx.pred
    choices = [P.halls(lat, k, pi.partition.blocks[b]) for b in P.blocks(lat.orders[k], pi)]
    total = 1
    for c in choices:
        total *= len(c)
    if total > ctx.config.hall_cap:
        raise ResourceLimitError(f"{total} complete Hall sets exceed cap {ctx.config.hall_cap}")
    return list(itertools.product(*choices))


def _l_set(ctx: Ctx, lat, members: tuple[int, ...], k: int) -> list[int]:
    """``{X^y : X in members, y in subs[k]}`` as ids."""
    out: set[int] = set()
    for x in members:
        out.update(ctx.pred.conjugates(lat, x, k))
    return sorted(out)


# ---------------------------------------------------------------------------
# sigma-subnormality from permuting with Hall conjugates under the residual


def _thm_i_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma, pi in _sigma_pi(ctx, entry):
        for h in lat.class_reps():
            if _is_pi_group(lat.orders[h], pi.primes):
                yield Inst("main", entry, sigma, pi, h)


def _thm_i_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    h, sigma, pi, top = inst.h, inst.sigma, inst.pi, _lat(inst).top
    hyp = _is_pi_group(lat.orders[h], pi.primes) and P.pi_full(lat, top, pi)
    if hyp:
        d = P.residual(lat, sigma)
        for b in P.blocks(lat.orders[top], pi):
            if not any(P.permutes_with_all(lat, h, P.conjugates(lat, x, d))
                       for x in P.halls(lat, top, pi.partition.blocks[b])):
                hyp = False
                break
    if not hyp:
        return Verdict(False)
    sn = P.sigma_subnormal(lat, h, top, sigma)
    hg = P.normal_closure(lat, h, top)
    closure_pi = _is_pi_group(lat.orders[hg], pi.primes)
    return Verdict(True, sn and closure_pi, _proper(lat, h),
                   {"sigma_subnormal": sn, "normal_closure_order": lat.orders[hg]})


# ---------------------------------------------------------------------------
# Pi-permutable Pi-subgroups: the section H^G/H_G and the normalizer


def _thm_ii_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma, pi in _sigma_pi(ctx, entry):
        for h in lat.class_reps():
            if _is_pi_group(lat.orders[h], pi.primes):
                for clause in ("section", "normalizer", "moreover"):
                    yield Inst(clause, entry, sigma, pi, h)


def _thm_ii_hyp(ctx: Ctx, lat, h: int, sigma: SigmaPartition, pi: PiSelector) -> bool:
    P = ctx.pred
    top = lat.top
    if not _is_pi_group(lat.orders[h], pi.primes) or not P.pi_permutable(lat, h, top, pi):
        return False
    present = _sigma_blocks(lat.orders[top], sigma)
    rest = sorted(present - pi.chosen)
    if not rest:
        return True
    ctx.note("k_clause_checked")
    for b in rest:
        halls = P.halls(lat, top, sigma.blocks[b])
        if ctx.config.k_reading == "conjugates":
            ok = any(P.permutes_with_all(lat, h, P.conjugates(lat, x, top)) for x in halls)
        else:
            ok = any(P.permutes(lat, h, x) for x in halls)
        if not ok:
            return False
    ctx.note("k_clause_satisfied")
    return True


def _thm_ii_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    h, sigma, pi, top = inst.h, inst.sigma, inst.pi, lat.top
    if not _thm_ii_hyp(ctx, lat, h, sigma, pi):
        return Verdict(False)
    nontrivial = _proper(lat, h)
    if inst.clause == "section":
        hg, hc = P.normal_closure(lat, h, top), P.core(lat, h, top)
        ok = P.sigma_nilpotent(P.section(lat, hg, hc), sigma)
        return Verdict(True, ok, nontrivial, {"closure_order": lat.orders[hg], "core_order": lat.orders[hc]})
    n = P.normalizer(lat, h, top)
    if inst.clause == "normalizer":
        return Verdict(True, P.pi_permutable(lat, n, top, pi), nontrivial, {"normalizer_order": lat.orders[n]})
    # every Hall member all of whose conjugates permute with H also works for N_G(H)
    bad = []
    for b in P.blocks(lat.orders[top], pi):
        primes = pi.partition.blocks[b]
        good_n = set(P.conj_permuting_halls(lat, n, top, primes))
        bad += [x for x in P.conj_permuting_halls(lat, h, top, primes) if x not in good_n]
    return Verdict(True, not bad, nontrivial, {"normalizer_order": lat.orders[n], "failing_hall_members": len(bad)})


# ---------------------------------------------------------------------------
# sigma-nilpotent Hall complements in the normal closure


def _thm_iii_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma, pi in _sigma_pi(ctx, entry):
        if pi.complement_selector() is None:
            continue
        for h in lat.class_reps():
            if _is_pi_group(lat.orders[h], pi.primes):
                yield Inst("main", entry, sigma, pi, h)


def _thm_iii_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    h, sigma, pi, top = inst.h, inst.sigma, inst.pi, lat.top
    comp = pi.complement_selector()
    if comp is None or not _is_pi_group(lat.orders[h], pi.primes):
        return Verdict(False)
    hyp = (P.sylow_type(lat, top, comp, ctx.config.d_property) and P.pi_full(lat, top, comp)
           and P.pi_permutable(lat, h, top, comp))
    if not hyp:
        return Verdict(False)
    hg = P.normal_closure(lat, h, top)
    halls = P.halls(lat, hg, comp.primes)
    ok = any(P.sigma_nilpotent(lat.subs[x], sigma) for x in halls)
    return Verdict(True, ok, _proper(lat, h), {"closure_order": lat.orders[hg], "halls": len(halls)})


# ---------------------------------------------------------------------------
# classical specialisations (singleton and two-block partitions)


def _all_subgroups_instances(clause: str = "main"):
    def gen(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
        lat = ctx.lat(entry)
        for h in range(len(lat.subs)):
            yield Inst(clause, entry, None, None, h)
    return gen


def _cor_1_4_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    if not P.s_permutable(lat, inst.h, lat.top):
        return Verdict(False)
    return Verdict(True, P.subnormal(lat, inst.h, lat.top), _proper(lat, inst.h))


def _pi_subsets_instances(reps: bool = True, require_pi_h: bool = True):
    """Quantify over pi subsets of pi(G) (as singleton-partition selectors)."""
    def gen(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
        lat = ctx.lat(entry)
        sigma = _singletons(entry)
        if not sigma.blocks:
            return
        for pi in sigma.all_selectors():
            for h in _subgroup_ids(lat, reps):
                if not require_pi_h or _is_pi_group(lat.orders[h], pi.primes):
                    yield Inst("main", entry, sigma, pi, h)
    return gen


def _cor_1_5_hyp(ctx: Ctx, lat, h: int, pi: PiSelector) -> bool:
    P = ctx.pred
    top = lat.top
    if not _is_pi_group(lat.orders[h], pi.primes) or not P.pi_permutable(lat, h, top, pi):
        return False
    return all(any(P.permutes(lat, h, x) for x in P.halls(lat, top, frozenset([p])))
               for p in sorted(_complement_primes(lat, pi)))


def _cor_1_5_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    if not _cor_1_5_hyp(ctx, lat, inst.h, inst.pi):
        return Verdict(False)
    n = P.normalizer(lat, inst.h, lat.top)
    return Verdict(True, P.pi_permutable(lat, n, lat.top, inst.pi), _proper(lat, inst.h))


def _cor_1_6_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    if not P.s_permutable(lat, inst.h, lat.top):
        return Verdict(False)
    n = P.normalizer(lat, inst.h, lat.top)
    return Verdict(True, P.s_permutable(lat, n, lat.top), _proper(lat, inst.h), {"normalizer_order": lat.orders[n]})


def _quotient_by_core_nilpotent(ctx: Ctx, lat, h: int) -> bool:
    P = ctx.pred
    return P.nilpotent(P.section(lat, h, P.core(lat, h, lat.top)))


def _cor_1_7_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat = _lat(inst)
    if not _cor_1_5_hyp(ctx, lat, inst.h, inst.pi):
        return Verdict(False)
    return Verdict(True, _quotient_by_core_nilpotent(ctx, lat, inst.h), _proper(lat, inst.h))


def _cor_1_8_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    if not P.s_permutable(lat, inst.h, lat.top):
        return Verdict(False)
    return Verdict(True, _quotient_by_core_nilpotent(ctx, lat, inst.h), _proper(lat, inst.h))


def _two_block_instances(single_prime: bool):
    def gen(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
        lat = ctx.lat(entry)
        primes = sorted(pi_of(entry.order))
        if len(primes) < 2:
            return
        if single_prime:
            subsets = [frozenset([p]) for p in primes]
        else:
            subsets = [frozenset(c) for r in range(1, len(primes)) for c in itertools.combinations(primes, r)]
        for pi_primes in subsets:
            sigma = SigmaPartition.two_block(pi_primes, set(primes) - pi_primes)
            pi = PiSelector.of_blocks(sigma, [pi_primes])
            for h in lat.class_reps():
                yield Inst("main", entry, sigma, pi, h)
    return gen


def _cor_1_9_eval(ctx: Ctx, inst: Inst) -> Verdict:
    """Permuting with all Hall pi- and pi'-subgroups in a pi-separable group."""
    lat, P = _lat(inst), ctx.pred
    top, pi = lat.top, inst.pi
    rest = _complement_primes(lat, pi)
    if len(inst.sigma.blocks) != 2 or not rest:
        return Verdict(False)
    hyp = (P.sigma_soluble(lat.group, inst.sigma)
           and P.permutes_with_all(lat, inst.h, P.halls(lat, top, pi.primes))
           and P.permutes_with_all(lat, inst.h, P.halls(lat, top, rest)))
    if not hyp:
        return Verdict(False)
    hg, hc = P.normal_closure(lat, inst.h, top), P.core(lat, inst.h, top)
    return Verdict(True, P.pi_decomposable(P.section(lat, hg, hc), pi.primes), _proper(lat, inst.h))


def _cor_1_11_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma in ctx.partitions(entry):
        if not sigma.blocks:
            continue
        pi = PiSelector(sigma, frozenset(range(len(sigma.blocks))))
        for h in lat.class_reps():
            yield Inst("main", entry, sigma, pi, h)


def _cor_1_11_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, sigma, pi = lat.top, inst.sigma, inst.pi
    if pi.chosen != frozenset(range(len(sigma.blocks))):
        return Verdict(False)
    if not (P.pi_full(lat, top, pi) and P.pi_permutable(lat, inst.h, top, pi)):
        return Verdict(False)
    hg, hc = P.normal_closure(lat, inst.h, top), P.core(lat, inst.h, top)
    return Verdict(True, P.sigma_nilpotent(P.section(lat, hg, hc), sigma), _proper(lat, inst.h))


def _nilpotent_complement(ctx: Ctx, lat, h: int, primes: frozenset[int]) -> tuple[bool, int]:
    P = ctx.pred
    hg = P.normal_closure(lat, h, lat.top)
    rest = pi_of(lat.orders[lat.top]) - primes
    return any(P.nilpotent(lat.subs[x]) for x in P.halls(lat, hg, rest)), hg


def _cor_1_12_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    pi = inst.pi
    if not _is_pi_group(lat.orders[inst.h], pi.primes):
        return Verdict(False)
    if not P.sylows_permuting(lat, inst.h, lat.top, _complement_primes(lat, pi)):
        return Verdict(False)
    ok, hg = _nilpotent_complement(ctx, lat, inst.h, pi.primes)
    return Verdict(True, ok, _proper(lat, inst.h), {"closure_order": lat.orders[hg]})


def _cor_1_13_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    sigma = _singletons(entry)
    if not sigma.blocks:
        return
    for h in range(len(lat.subs)):
        for pi in sigma.all_selectors():
            if _is_pi_group(lat.orders[h], pi.primes):
                yield Inst("main", entry, sigma, pi, h)


def _cor_1_13_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    if not _is_pi_group(lat.orders[inst.h], inst.pi.primes) or not P.s_semipermutable(lat, inst.h, lat.top):
        return Verdict(False)
    ok, hg = _nilpotent_complement(ctx, lat, inst.h, inst.pi.primes)
    return Verdict(True, ok, _proper(lat, inst.h), {"closure_order": lat.orders[hg]})


# ---------------------------------------------------------------------------
# closure properties of sigma-subnormal subgroups


_L21 = ("1", "2", "3", "4", "5", "6", "7", "8", "9")


def _lemma_2_1_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    P = ctx.pred
    top = lat.top
    n_subs = len(lat.subs)
    normals = [n for n in lat.normal_ids() if n != 0]
    for sigma in ctx.partitions(entry):
        for a in lat.class_reps():
            if not P.sigma_subnormal(lat, a, top, sigma):
                # base hypothesis fails for every clause; record it once
                yield Inst("1", entry, sigma, None, a, {"K": top})
                continue
            for k in range(n_subs):
                yield Inst("1", entry, sigma, None, a, {"K": k})
                yield Inst("3", entry, sigma, None, a, {"K": k})
            for k in lat.below(a):
                yield Inst("2", entry, sigma, None, a, {"K": k})
                yield Inst("6", entry, sigma, None, a, {"K": k})
            for n in normals:
                yield Inst("4", entry, sigma, None, a, {"N": n})
            for pi in sigma.all_selectors():
                yield Inst("8", entry, sigma, pi, a)
                yield Inst("9", entry, sigma, pi, a)
                for x in P.halls(lat, top, pi.primes):
                    yield Inst("7", entry, sigma, pi, a, {"H": x})
        for n in normals:
            for k in lat.above(n):
                yield Inst("5", entry, sigma, None, k, {"N": n})


def _lemma_2_1_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, sigma, a, c = lat.top, inst.sigma, inst.h, inst.clause
    sn = lambda i, k=top: P.sigma_subnormal(lat, i, k, sigma)  # noqa: E731
    if c == "5":
        n, k = inst.extras["N"], a
        if not (P.is_normal(lat, n, top) and lat.masks[n] & ~lat.masks[k] == 0):
            return Verdict(False)
        qlat, img = ctx.quotient_lattice(lat, n)
        if not P.sigma_subnormal(qlat, img[k], qlat.top, sigma):
            return Verdict(False)
        return Verdict(True, sn(k), _proper(lat, k) and n != 0)
    if not sn(a):
        return Verdict(False)
    nontrivial = _proper(lat, a)
    if c == "1":
        k = inst.extras["K"]
        return Verdict(True, sn(lat.pos[lat.masks[a] & lat.masks[k]], k), nontrivial and _proper(lat, k))
    if c == "2":
        k = inst.extras["K"]
        if lat.masks[k] & ~lat.masks[a] or not sn(k, a):
            return Verdict(False)
        return Verdict(True, sn(k), nontrivial)
    if c == "3":
        k = inst.extras["K"]
        if not sn(k):
            return Verdict(False)
        meet = lat.pos[lat.masks[a] & lat.masks[k]]
        return Verdict(True, sn(meet) and sn(P.join(lat, a, k)), nontrivial and _proper(lat, k))
    if c == "4":
        n = inst.extras["N"]
        if not P.is_normal(lat, n, top):
            return Verdict(False)
        qlat, img = ctx.quotient_lattice(lat, n)
        return Verdict(True, P.sigma_subnormal(qlat, img[a], qlat.top, sigma), nontrivial and n != 0)
    if c == "6":
        k = inst.extras["K"]
        if lat.masks[k] & ~lat.masks[a] or not P.sigma_nilpotent(lat.subs[a], sigma):
            return Verdict(False)
        return Verdict(True, sn(k), nontrivial)
    pi = inst.pi
    rest = pi.complement_primes & pi_of(lat.orders[top])
    if c == "7":
        x = inst.extras["H"]
        if x == 0 or lat.orders[x] != part(lat.orders[top], pi.primes):
            return Verdict(False)
        if _is_pi_group(lat.orders[a], rest):
            return Verdict(False)
        meet = lat.pos[lat.masks[a] & lat.masks[x]]
        ok = meet != 0 and lat.orders[meet] == part(lat.orders[a], pi.primes)
        return Verdict(True, ok, nontrivial)
    if c == "8":
        if not _is_pi_group(lat.orders[top] // lat.orders[a], pi.primes):
            return Verdict(False)
        return Verdict(True, P.o_pi_upper(lat, a, pi.primes) == P.o_pi_upper(lat, top, pi.primes), nontrivial)
    if c == "9":
        if not (P.pi_full(lat, top, pi) and _is_pi_group(lat.orders[a], pi.primes)):
            return Verdict(False)
        o = P.o_pi(lat, top, pi.primes)
        return Verdict(True, lat.masks[a] & ~lat.masks[o] == 0, nontrivial)
    raise ValueError(f"unknown clause {c!r}")


# ---------------------------------------------------------------------------
# closure properties of L-permutable subgroups


def _lemma_2_2_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    P = ctx.pred
    top = lat.top
    n_subs = range(len(lat.subs))
    normals = [n for n in lat.normal_ids() if n != 0]
    for sigma, pi in _sigma_pi(ctx, entry):
        sets = _complete_hall_sets(ctx, lat, top, pi)
        for members in sets:
            for k in lat.class_reps():
                ell = _l_set(ctx, lat, members, k)
                extras = {"Hall": members, "K": k}
                perm_h = [h for h in n_subs if P.permutes_with_all(lat, h, ell)]
                for h in perm_h:
                    for e in lat.above(h):
                        yield Inst("1", entry, sigma, pi, h, dict(extras, E=e))
                    for n in normals:
                        yield Inst("2", entry, sigma, pi, h, dict(extras, N=n))
                    if k in perm_h:
                        yield Inst("4", entry, sigma, pi, h, extras)
        for h in lat.class_reps():
            if P.pi_permutable(lat, h, top, pi):
                for e in lat.above(h):
                    yield Inst("1b", entry, sigma, pi, h, {"E": e})
        if P.sylow_type(lat, top, pi, ctx.config.d_property):
            for n in normals:
                qlat, img = ctx.quotient_lattice(lat, n)
                for e in lat.above(n):
                    yield Inst("3", entry, sigma, pi, e, {"N": n})


def _lemma_2_2_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, pi, h, c = lat.top, inst.pi, inst.h, inst.clause
    if c == "1b":
        e = inst.extras["E"]
        if lat.masks[h] & ~lat.masks[e] or not P.pi_permutable(lat, h, top, pi):
            return Verdict(False)
        if not (P.sylow_type(lat, top, pi, ctx.config.d_property) or P.is_normal(lat, e, top)):
            return Verdict(False)
        return Verdict(True, P.pi_permutable(lat, h, e, pi), _proper(lat, h) and _proper(lat, e))
    if c == "3":
        n, e = inst.extras["N"], h
        if not (P.is_normal(lat, n, top) and lat.masks[n] & ~lat.masks[e] == 0):
            return Verdict(False)
        if not P.sylow_type(lat, top, pi, ctx.config.d_property):
            return Verdict(False)
        qlat, img = ctx.quotient_lattice(lat, n)
        if not P.pi_permutable(qlat, img[e], qlat.top, pi):
            return Verdict(False)
        return Verdict(True, P.pi_permutable(lat, e, top, pi), _proper(lat, e) and n != 0)
    members, k = inst.extras["Hall"], inst.extras["K"]
    if not _is_complete_hall_set(ctx, lat, members, pi):
        return Verdict(False)
    ell = _l_set(ctx, lat, members, k)
    if not P.permutes_with_all(lat, h, ell):
        return Verdict(False)
    nontrivial = _proper(lat, h)
    if c == "1":
        e = inst.extras["E"]
        if lat.masks[h] & ~lat.masks[e]:
            return Verdict(False)
        ke = lat.pos[lat.masks[k] & lat.masks[e]]
        starred = _l_set(ctx, lat, tuple(lat.pos[lat.masks[x] & lat.masks[e]] for x in members), ke)
        return Verdict(True, P.permutes_with_all(lat, h, starred), nontrivial and _proper(lat, e))
    if c == "2":
        n = inst.extras["N"]
        if not P.is_normal(lat, n, top):
            return Verdict(False)
        qlat, img = ctx.quotient_lattice(lat, n)
        starred: set[int] = set()
        for x in members:
            starred.update(orbit_ids(qlat, img[x], qlat.subs[img[k]]._gen_idx))
        return Verdict(True, P.permutes_with_all(qlat, img[h], sorted(starred)), nontrivial and n != 0)
    if c == "4":
        if not P.permutes_with_all(lat, k, ell):
            return Verdict(False)
        return Verdict(True, P.permutes_with_all(lat, P.join(lat, h, k), ell), nontrivial and _proper(lat, k))
    raise ValueError(f"unknown clause {c!r}")


def _is_complete_hall_set(ctx: Ctx, lat, members: tuple[int, ...], pi: PiSelector) -> bool:
    blocks = ctx.pred.blocks(lat.orders[lat.top], pi)
    if len(members) != len(blocks):
        return False
    return all(x in ctx.pred.halls(lat, lat.top, pi.partition.blocks[b]) for x, b in zip(members, blocks))


# ---------------------------------------------------------------------------
# normal Hall subgroups and Pi-closed triples


def _lemma_2_3_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma, pi in _sigma_pi(ctx, entry):
        for n in lat.normal_ids():
            yield Inst("main", entry, sigma, pi, n)


def _frattini_id(lat) -> int:
    hit = lat.cache.get("frattini_id")
    if hit is None:
        hit = lat.cache["frattini_id"] = lat.pos[frattini(lat.group)._mask]
    return hit


def _lemma_2_3_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, h, pi = lat.top, inst.h, inst.pi
    if not P.is_normal(lat, h, top):
        return Verdict(False)
    meet = lat.pos[lat.masks[h] & lat.masks[_frattini_id(lat)]]
    if not _is_pi_group(lat.orders[h] // lat.orders[meet], pi.primes):
        return Verdict(False)
    ok = any(P.is_normal(lat, e, top) for e in P.halls(lat, h, pi.primes))
    return Verdict(True, ok, _proper(lat, h))


def _lemma_2_4_triple(ctx: Ctx, lat, sigma: SigmaPartition, pi: PiSelector) -> tuple[int, int, int] | None:
    """Three Pi-closed subgroups with pairwise sigma-coprime indices, preferring proper ones."""
    P = ctx.pred
    top = lat.top
    by_sig: dict[frozenset[int], list[int]] = {}
    for i in range(len(lat.subs)):
        if P.pi_closed(lat, i, pi.primes):
            by_sig.setdefault(_sigma_blocks(lat.orders[top] // lat.orders[i], sigma), []).append(i)
    best = None
    sigs = sorted(by_sig, key=lambda s: sorted(s))
    for s1, s2, s3 in itertools.combinations_with_replacement(sigs, 3):
        if s1 & s2 or s1 & s3 or s2 & s3:
            continue
        pools = [list(by_sig[s]) for s in (s1, s2, s3)]
        choice = []
        for pool in pools:
            rest = [x for x in pool if x not in choice] or pool
            choice.append(max(rest))
        triple = tuple(choice)
        score = sum(x != top for x in triple)
        if best is None or score > best[0]:
            best = (score, triple)
    return best[1] if best else None


def _lemma_2_4_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    for sigma, pi in _sigma_pi(ctx, entry):
        if not ctx.pred.sigma_soluble(lat.group, sigma):
            yield Inst("main", entry, sigma, pi, None, {})
            continue
        triple = _lemma_2_4_triple(ctx, lat, sigma, pi)
        yield Inst("main", entry, sigma, pi, None, {"ABC": triple} if triple else {})


def _lemma_2_4_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, sigma, pi = lat.top, inst.sigma, inst.pi
    triple = inst.extras.get("ABC")
    if not triple or not P.sigma_soluble(lat.group, sigma):
        return Verdict(False)
    if not all(P.pi_closed(lat, x, pi.primes) for x in triple):
        return Verdict(False)
    sigs = [_sigma_blocks(lat.orders[top] // lat.orders[x], sigma) for x in triple]
    if any(a & b for a, b in itertools.combinations(sigs, 2)):
        return Verdict(False)
    return Verdict(True, P.pi_closed(lat, top, pi.primes), all(x != top for x in triple))


# ---------------------------------------------------------------------------
# minimal non-closed and minimal non-sigma-nilpotent groups (ambient groups: subgroups of corpus groups)


def _ambient_instances(per_block: bool):
    def gen(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
        lat = ctx.lat(entry)
        for e in lat.class_reps():
            if e == 0:
                continue
            for sigma in _partitions_of(lat.orders[e]):
                if per_block:
                    for b in range(len(sigma.blocks)):
                        yield Inst("main", entry, sigma, PiSelector(sigma, frozenset([b])), None, {"E": e})
                else:
                    yield Inst("main", entry, sigma, None, None, {"E": e})
    return gen


def _partitions_of(order: int) -> list[SigmaPartition]:
    from ..sigma import all_partitions

    return all_partitions(pi_of(order))


def _is_schmidt_ids(ctx: Ctx, lat, e: int) -> bool:
    P = ctx.pred
    if P.nilpotent(lat.subs[e]):
        return False
    return all(P.nilpotent(lat.subs[x]) for x in lat.below(e) if x != e)


def _prop_2_5_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    e, sigma, pi = inst.extras["E"], inst.sigma, inst.pi
    if len(pi.chosen) != 1:
        return Verdict(False)
    block = pi.primes
    others = pi_of(lat.orders[e]) - block
    if not P.sigma_soluble(lat.subs[e], sigma) or P.pi_closed(lat, e, others):
        return Verdict(False)
    if not all(P.pi_closed(lat, x, others) for x in lat.below(e) if x != e):
        return Verdict(False)
    ok = P.pi_closed(lat, e, block) and _is_schmidt_ids(ctx, lat, e)
    return Verdict(True, ok, True, {"ambient_order": lat.orders[e]})


def _cor_2_6_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    e, sigma = inst.extras["E"], inst.sigma
    E = lat.subs[e]
    if not P.sigma_soluble(E, sigma) or P.sigma_nilpotent(E, sigma):
        return Verdict(False)
    if not all(P.sigma_nilpotent(lat.subs[x], sigma) for x in lat.below(e) if x != e):
        return Verdict(False)
    return Verdict(True, _is_schmidt_ids(ctx, lat, e), True, {"ambient_order": lat.orders[e]})


# ---------------------------------------------------------------------------
# sigma-soluble Hall Pi-subgroups


def _prop_2_7_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    lat = ctx.lat(entry)
    P = ctx.pred
    top = lat.top
    for sigma, pi in _sigma_pi(ctx, entry):
        halls = P.halls(lat, top, pi.primes)
        if not halls or not P.sylow_type(lat, top, pi, ctx.config.d_property):
            yield Inst("contained", entry, sigma, pi, halls[0] if halls else None, {})
            continue
        for h in halls:
            if not P.sigma_nilpotent(lat.subs[h], sigma):
                continue
            yield Inst("conjugate", entry, sigma, pi, h, {})
            for k in range(len(lat.subs)):
                if _is_pi_group(lat.orders[k], pi.primes):
                    yield Inst("contained", entry, sigma, pi, h, {"K": k})


def _prop_2_7_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, sigma, pi, h = lat.top, inst.sigma, inst.pi, inst.h
    if h is None or lat.orders[h] != part(lat.orders[top], pi.primes):
        return Verdict(False)
    if not (P.sylow_type(lat, top, pi, ctx.config.d_property) and P.sigma_nilpotent(lat.subs[h], sigma)):
        return Verdict(False)
    conj = P.conjugates(lat, h, top)
    if inst.clause == "conjugate":
        soluble = [x for x in P.halls(lat, top, pi.primes) if P.sigma_soluble(lat.subs[x], sigma)]
        return Verdict(True, set(soluble) <= set(conj), _proper(lat, h), {"soluble_halls": len(soluble)})
    k = inst.extras.get("K")
    if k is None or not _is_pi_group(lat.orders[k], pi.primes) or not P.sigma_soluble(lat.subs[k], sigma):
        return Verdict(False)
    ok = any(lat.masks[k] & ~lat.masks[c] == 0 for c in conj)
    return Verdict(True, ok, _proper(lat, h) and _proper(lat, k))


def _cor_2_8_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    for sigma, pi in _sigma_pi(ctx, entry):
        yield Inst("main", entry, sigma, pi, None, {})


def _cor_2_8_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, sigma, pi = lat.top, inst.sigma, inst.pi
    if not P.sylow_type(lat, top, pi, ctx.config.d_property):
        return Verdict(False)
    terms = chief_series(lat.group).terms
    for lo, hi in zip(terms, terms[1:]):
        F = P.section(lat, lat.pos[hi._mask], lat.pos[lo._mask])
        flat = lattice(F)
        if not any(P.sigma_nilpotent(flat.subs[x], sigma) for x in P.halls(flat, flat.top, pi.primes)):
            return Verdict(False)
    present = _sigma_blocks(lat.orders[top], sigma)
    ok = any(P.sigma_soluble(lat.subs[x], sigma) for x in P.halls(lat, top, pi.primes))
    return Verdict(True, ok, bool(present & pi.chosen) and bool(present - pi.chosen))


# ---------------------------------------------------------------------------
# the two worked example groups

_EX3_CLAUSES = ("L_normal_in_PQ", "L_inside_P", "pi_permutable", "not_S_permutable", "not_normal",
                "not_sigma_nilpotent", "module_larger_than_p", "module_simple")


def _ex3_parts(entry: CorpusEntry) -> dict[str, int]:
    lat = lattice(entry.group)
    key = "ex3_parts"
    hit = lat.cache.get(key)
    if hit is None:
        hit = lat.cache[key] = {k: lat.id(v) for k, v in example_294_parts(entry).items()}
    return hit


def _ex3_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    if "module-example" not in entry.tags:
        return
    lat = ctx.lat(entry)
    parts = _ex3_parts(entry)
    p = entry.provenance["p"]
    r = entry.provenance["r"]
    sigma = SigmaPartition.of([p, r], pi_of(entry.order) - {p, r})
    pi = PiSelector(sigma, frozenset(range(len(sigma.blocks))))
    # every normal subgroup L of PQ with 1 < L < P
    ells = [i for i in lat.between(0, parts["P"]) if _proper(lat, i, parts["P"])
            and lat.is_normal_in(i, parts["PQ"])]
    for ell in ells:
        for clause in _EX3_CLAUSES:
            yield Inst(clause, entry, sigma, pi, ell, {"P": parts["P"], "PQ": parts["PQ"]})


def _ex3_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, ell, c = lat.top, inst.h, inst.clause
    p_id, pq = inst.extras["P"], inst.extras["PQ"]
    p = inst.entry.provenance["p"]
    if c == "L_normal_in_PQ":
        ok = P.is_normal(lat, ell, pq)
    elif c == "L_inside_P":
        ok = ell != 0 and ell != p_id and lat.masks[ell] & ~lat.masks[p_id] == 0
    elif c == "pi_permutable":
        ok = P.pi_permutable(lat, ell, top, inst.pi)
    elif c == "not_S_permutable":
        ok = not P.s_permutable(lat, ell, top)
    elif c == "not_normal":
        ok = not P.is_normal(lat, ell, top)
    elif c == "not_sigma_nilpotent":
        ok = not P.sigma_nilpotent(lat.group, inst.sigma)
    elif c == "module_larger_than_p":
        ok = lat.orders[p_id] > p
    elif c == "module_simple":
        ok = not any(lat.orders[i] == p and P.is_normal(lat, i, top) for i in lat.below(p_id))
    else:
        raise ValueError(f"unknown clause {c!r}")
    return Verdict(True, ok, True)


_EX42_CLAUSES = ("pi_prime_permutable", "not_S_semipermutable", "closure_has_nilpotent_complement")


def _ex42_instances(ctx: Ctx, entry: CorpusEntry) -> Iterator[Inst]:
    if "holomorph-example" not in entry.tags:
        return
    lat = ctx.lat(entry)
    sigma = SigmaPartition.two_block({2, 3}, pi_of(entry.order) - {2, 3})
    pi = PiSelector.of_blocks(sigma, [pi_of(entry.order) - {2, 3}])
    for h in range(len(lat.subs)):
        if lat.orders[h] == 3:
            for clause in _EX42_CLAUSES:
                yield Inst(clause, entry, sigma, pi, h)


def _ex42_eval(ctx: Ctx, inst: Inst) -> Verdict:
    lat, P = _lat(inst), ctx.pred
    top, h, c = lat.top, inst.h, inst.clause
    if lat.orders[h] != 3:
        return Verdict(False)
    if c == "pi_prime_permutable":
        ok = P.pi_permutable(lat, h, top, inst.pi)
    elif c == "not_S_semipermutable":
        ok = not P.s_semipermutable(lat, h, top)
    elif c == "closure_has_nilpotent_complement":
        ok, _ = _nilpotent_complement(ctx, lat, h, frozenset({2, 3}))
    else:
        raise ValueError(f"unknown clause {c!r}")
    return Verdict(True, ok, True)


# ---------------------------------------------------------------------------
# registry


def _spec(id, title, instances, evaluate, **kw) -> SuiteSpec:
    return SuiteSpec(id, title, instances, evaluate, **kw)


SUITES: dict[str, SuiteSpec] = {s.id: s for s in [
    _spec("thm_1_3_i", "H^D-permutable Pi-subgroups are sigma-subnormal with Pi-group normal closure",
          _thm_i_instances, _thm_i_eval, pinned=_WORKED, equivariant=True),
    _spec("thm_1_3_ii", "Pi-permutable Pi-subgroups: sigma-nilpotent H^G/H_G and Pi-permutable normalizer",
          _thm_ii_instances, _thm_ii_eval, clauses=("section", "normalizer", "moreover"), pinned=_WORKED,
          equivariant=True),
    _spec("thm_1_3_iii", "Pi'-permutable subgroups in Pi'-full groups of Sylow type",
          _thm_iii_instances, _thm_iii_eval, pinned=_WORKED, equivariant=True),
    _spec("cor_1_4", "S-permutable subgroups are subnormal",
          _all_subgroups_instances(), _cor_1_4_eval, floor=25, max_order=100),
    _spec("cor_1_5", "normalizer of a pi-permutable pi-subgroup is pi-permutable",
          _pi_subsets_instances(), _cor_1_5_eval, max_order=100, equivariant=True),
    _spec("cor_1_6", "normalizer of an S-permutable subgroup is S-permutable",
          _all_subgroups_instances(), _cor_1_6_eval, floor=25, max_order=100),
    _spec("cor_1_7", "H/H_G is nilpotent for pi-permutable pi-subgroups",
          _pi_subsets_instances(), _cor_1_7_eval, max_order=100, equivariant=True),
    _spec("cor_1_8", "H/H_G is nilpotent for S-permutable subgroups",
          _all_subgroups_instances(), _cor_1_8_eval, floor=25, max_order=100),
    _spec("cor_1_9", "H^G/H_G is pi-decomposable in pi-separable groups",
          _two_block_instances(False), _cor_1_9_eval, max_order=100, equivariant=True),
    _spec("cor_1_10", "H^G/H_G is p-decomposable in p-soluble groups",
          _two_block_instances(True), _cor_1_9_eval, max_order=100, equivariant=True),
    _spec("cor_1_11", "H^G/H_G is sigma-nilpotent for sigma-permutable subgroups",
          _cor_1_11_instances, _cor_1_11_eval, max_order=100, equivariant=True),
    _spec("cor_1_12", "H^G has a nilpotent pi-complement",
          _pi_subsets_instances(), _cor_1_12_eval, max_order=100, equivariant=True),
    _spec("cor_1_13", "S-semipermutable pi-subgroups: H^G has a nilpotent pi-complement",
          _cor_1_13_instances, _cor_1_13_eval, floor=25, max_order=100),
    _spec("lemma_2_1", "closure properties of sigma-subnormal subgroups",
          _lemma_2_1_instances, _lemma_2_1_eval, clauses=_L21, max_order=100),
    _spec("lemma_2_2", "closure properties of L-permutable subgroups",
          _lemma_2_2_instances, _lemma_2_2_eval, clauses=("1", "1b", "2", "3", "4"), max_order=48),
    _spec("lemma_2_3", "normal subgroups with Pi-group Frattini quotient have a normal Hall Pi-subgroup",
          _lemma_2_3_instances, _lemma_2_3_eval, max_order=100),
    _spec("lemma_2_4", "three Pi-closed subgroups with pairwise sigma-coprime indices",
          _lemma_2_4_instances, _lemma_2_4_eval, floor=3, max_order=100),
    _spec("prop_2_5", "minimal non-sigma_i'-closed sigma-soluble groups are sigma_i-closed Schmidt groups",
          _ambient_instances(True), _prop_2_5_eval, floor=3, max_order=100),
    _spec("cor_2_6", "sigma-soluble minimal non-sigma-nilpotent groups are Schmidt groups",
          _ambient_instances(False), _cor_2_6_eval, max_order=100),
    _spec("prop_2_7", "sigma-soluble Pi-subgroups lie in conjugates of a sigma-nilpotent Hall Pi-subgroup",
          _prop_2_7_instances, _prop_2_7_eval, clauses=("contained", "conjugate"), max_order=100),
    _spec("cor_2_8", "sigma-soluble Hall Pi-subgroups from chief factors",
          _cor_2_8_instances, _cor_2_8_eval, max_order=100),
    _spec("example_1_2_3", "a sigma-permutable non-S-permutable subgroup of the order-294 affine group", _ex3_instances, _ex3_eval, clauses=_EX3_CLAUSES,
          floor=1, max_order=0, pinned=frozenset({"module-example"})),
    _spec("example_42", "order-3 subgroups of the holomorph of C7", _ex42_instances, _ex42_eval, clauses=_EX42_CLAUSES,
          floor=1, max_order=0, pinned=frozenset({"holomorph-example"})),
]}


def get_suite(suite_id: str) -> SuiteSpec:
    try:
        return SUITES[suite_id]
    except KeyError:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}") from None
