"""Subgroup embedding predicates: permutability variants, sigma-subnormality,
sigma-nilpotency and related group classes.

Public functions take ``PermGroup`` arguments.  The ``*_ids`` helpers work on
ids of a subgroup lattice and are what the verifier uses in its inner loops;
the public functions are thin wrappers around them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import _pair, coerce, quotient
from .hall import (
    CompleteHallSet,
    conjugacy_partition,
    hall_ids,
    o_pi_lower,
    orbit_ids,
    prime_set,
    relevant_blocks,
)
from .lattice import Lattice, chief_series, is_nilpotent, lattice
from .perm import PermGroup, ResourceLimitError, _bits, _Universe
from .sigma import PiSelector, SigmaPartition, _check_covered, part, pi_of, sigma_of


# ---------------------------------------------------------------------------
# permutability


def _permutes(uni: _Universe, A: PermGroup, B: PermGroup) -> bool:
    ma, mb = A._mask, B._mask
    if ma & ~mb == 0 or mb & ~ma == 0:
        return True
    key = ("permutes", ma, mb) if ma < mb else ("permutes", mb, ma)
    hit = uni.memo.get(key)
    if hit is not None:
        return hit
    # AB as a union of right cosets Ab; b already in AB adds nothing new
    a_idx = A.indices
    prod = 0
    for b in B.indices:
        if (prod >> b) & 1:
            continue
        col = uni.right(b)
        for a in a_idx:
            prod |= 1 << col[a]
    result = True
    prod_idx = _bits(prod)
    for g in A._gen_idx:
        col = uni.right(g)
        if any(not (prod >> col[x]) & 1 for x in prod_idx):
            result = False
            break
    uni.memo[key] = result
    return result


def permutes(A: PermGroup, B: PermGroup, ambient: PermGroup | None = None) -> bool:
    """``AB = BA``, i.e. the element-set product is a subgroup."""
    A, B = _pair(A, B, ambient)
    return _permutes(A._uni, A, B)


def perm_ids(lat: Lattice, i: int, j: int) -> bool:
    mi, mj = lat.masks[i], lat.masks[j]
    if mi & ~lat.normalizer_mask(j) == 0 or mj & ~lat.normalizer_mask(i) == 0:
        return True
    return _permutes(lat.uni, lat.subs[i], lat.subs[j])


def is_L_permutable(A: PermGroup, L: Iterable[PermGroup]) -> bool:
    return all(permutes(A, H) for H in L)


def conjugates_under(H: PermGroup, E: PermGroup) -> list[PermGroup]:
    """Distinct conjugates ``H^x`` for ``x`` in ``E``."""
    H, E = _pair(H, E, None)
    uni = H._uni
    seen = {H._mask: H}
    frontier = [H]
    for X in frontier:
        for g in E._gen_idx:
            m = uni.conj_mask(X._mask, g, X.indices)
            if m not in seen:
                Y = uni.groups.get(m) or uni.group(m, [uni.conj(g)[x] for x in X._gen_idx])
                seen[m] = Y
                frontier.append(Y)
    return frontier


def is_LE_permutable(A: PermGroup, L: Iterable[PermGroup], E: PermGroup) -> bool:
    """``A H^x = H^x A`` for every ``H`` in ``L`` and every ``x`` in ``E``."""
    for H in L:
        for X in conjugates_under(H, E):
            if not permutes(A, X):
                return False
    return True


def permutes_with_all_ids(lat: Lattice, h: int, ids: Iterable[int]) -> bool:
    return all(perm_ids(lat, h, x) for x in ids)


def hall_good_classes(lat: Lattice, h: int, k: int, primes: frozenset[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Classes (under ``subs[k]``) of Hall ``primes``-subgroups of ``subs[k]``,
    split into those all of whose members permute with ``subs[h]`` and the rest."""
    key = ("goodcls", h, k, primes)
    hit = lat.cache.get(key)
    if hit is None:
        good, bad = [], []
        for cls in conjugacy_partition(lat, hall_ids(lat, k, primes), k):
            (good if permutes_with_all_ids(lat, h, cls) else bad).append(cls)
        hit = (good, bad)
        lat.cache[key] = hit
    return hit


def _blocks_meeting(order: int, pi: PiSelector, chosen: Iterable[int] | None = None) -> list[int]:
    sigma = pi.partition
    _check_covered(order, sigma)
    chosen = pi.chosen if chosen is None else frozenset(chosen)
    return sorted(chosen & sigma.block_ids_of(order))


def pi_permutable_ids(lat: Lattice, h: int, k: int, pi: PiSelector, blocks: Iterable[int] | None = None) -> dict[int, list[list[int]]] | None:
    """Witness data for ``subs[h]`` being Pi-permutable in ``subs[k]``.

    Returns ``{block: [good classes]}`` or ``None`` when some block has no
    class of Hall subgroups all of whose conjugates permute with ``subs[h]``
    (this includes the case that ``subs[k]`` is not Pi-full).  The whole
    conjugacy class matters because Pi-permutability quantifies
    over all conjugates of each member.
    """
    out = {}
    for b in _blocks_meeting(lat.orders[k], pi, blocks):
        good, _ = hall_good_classes(lat, h, k, pi.partition.blocks[b])
        if not good:
            return None
        out[b] = good
    return out


def is_pi_permutable(H: PermGroup, G: PermGroup, pi: PiSelector) -> tuple[bool, CompleteHallSet | None]:
    """Is ``H`` Pi-permutable in ``G``?  Returns ``(verdict, witness)``.

    The witness is a complete Hall Pi-set such that ``H`` permutes with every
    conjugate of every member.  When ``G`` has no complete Hall Pi-set the
    answer is ``False``.
    """
    lat = lattice(G)
    h = lat.id(H)
    data = pi_permutable_ids(lat, h, lat.top, pi)
    if data is None:
        return False, None
    return True, CompleteHallSet(tuple((b, lat.subs[cls[0][0]]) for b, cls in data.items()))


def witnessing_hall_sets(H: PermGroup, G: PermGroup, pi: PiSelector, cap: int = 512) -> list[CompleteHallSet]:
    """All complete Hall Pi-sets witnessing Pi-permutability of ``H``."""
    lat = lattice(G)
    data = pi_permutable_ids(lat, lat.id(H), lat.top, pi)
    if data is None:
        return []
    choices = [[i for cls in data[b] for i in cls] for b in data]
    total = 1
    for c in choices:
        total *= len(c)
    if total > cap:
        raise ResourceLimitError(f"{total} witnessing Hall sets exceed cap {cap}")
    blocks = list(data)
    return [CompleteHallSet(tuple((b, lat.subs[i]) for b, i in zip(blocks, combo)))
            for combo in itertools.product(*choices)]


def permutes_with_sylows(H: PermGroup, G: PermGroup, primes: Iterable[int]) -> bool:
    """``H`` permutes with every Sylow p-subgroup of ``G`` for each listed prime."""
    lat = lattice(G)
    h = lat.id(H)
    return all(permutes_with_all_ids(lat, h, hall_ids(lat, lat.top, frozenset([p])))
               for p in sorted(set(primes) & pi_of(G.order)))


def permutes_with_some_sylow(H: PermGroup, G: PermGroup, p: int) -> bool:
    lat = lattice(G)
    h = lat.id(H)
    return any(perm_ids(lat, h, x) for x in hall_ids(lat, lat.top, frozenset([p])))


def is_S_permutable(H: PermGroup, G: PermGroup) -> bool:
    return permutes_with_sylows(H, G, pi_of(G.order))


def is_S_semipermutable(H: PermGroup, G: PermGroup) -> bool:
    """``H`` permutes with every Sylow p-subgroup of ``G`` with ``p`` not dividing ``|H|``."""
    return permutes_with_sylows(H, G, pi_of(G.order) - pi_of(H.order))


# ---------------------------------------------------------------------------
# sigma-subnormality


@dataclass(frozen=True)
class SigmaSubnormalChain:
    """``A = A_0 <= A_1 <= ... <= A_n = G`` with one step kind per link.

    A step kind is ``"normal"`` or ``("primary", block_index)``.
    """

    chain: tuple[PermGroup, ...]
    step_kinds: tuple


def _step_info(lat: Lattice) -> list[list[tuple[int, frozenset[int] | None]]]:
    steps = lat.cache.get("steps")
    if steps is None:
        steps = []
        for k in range(len(lat.subs)):
            row = []
            for m in lat.below(k)[:-1]:
                if lat.is_normal_in(m, k):
                    row.append((m, None))
                else:
                    c = lat.core_id(m, k)
                    row.append((m, pi_of(lat.orders[k] // lat.orders[c])))
            steps.append(row)
        lat.cache["steps"] = steps
    return steps


def _primary_block(primes: frozenset[int], sigma: SigmaPartition) -> int | None:
    blocks = {sigma.classify(p) for p in primes}
    return next(iter(blocks)) if len(blocks) == 1 else None


def sn_table(lat: Lattice, sigma: SigmaPartition) -> list[int]:
    """``table[k]`` is a bitset of the ids sigma-subnormal in ``subs[k]``."""
    key = ("sn", sigma)
    table = lat.cache.get(key)
    if table is None:
        _check_covered(lat.orders[lat.top], sigma)
        steps = _step_info(lat)
        block_count = {}
        table = []
        for k, row in enumerate(steps):
            acc = 1 << k
            for m, primes in row:
                if primes is None:
                    acc |= table[m]
                else:
                    ok = block_count.get(primes)
                    if ok is None:
                        ok = block_count[primes] = len({sigma.classify(p) for p in primes}) <= 1
                    if ok:
                        acc |= table[m]
            table.append(acc)
        lat.cache[key] = table
    return table


def _root(G: PermGroup) -> tuple[Lattice, int]:
    lat = lattice(G)
    root = lat.parent or lat
    return root, root.pos[G._mask]


def sigma_subnormal_chain_ids(lat: Lattice, h: int, k: int, sigma: SigmaPartition) -> list[tuple[int, object]] | None:
    table = sn_table(lat, sigma)
    if not (table[k] >> h) & 1:
        return None
    path = [(k, None)]
    cur = k
    steps = _step_info(lat)
    while cur != h:
        for m, primes in steps[cur]:
            if not (table[m] >> h) & 1:
                continue
            if primes is None:
                kind = "normal"
            else:
                b = _primary_block(primes, sigma)
                if b is None:
                    continue
                kind = ("primary", b)
            path.append((m, kind))
            cur = m
            break
        else:  # pragma: no cover - table guarantees a step exists
            raise AssertionError("inconsistent sigma-subnormal table")
    path.reverse()
    return path


def is_sigma_subnormal(H: PermGroup, G: PermGroup, sigma: SigmaPartition) -> tuple[bool, SigmaSubnormalChain | None]:
    """Is ``H`` sigma-subnormal in ``G``?  The witness is an ascending chain."""
    root, k = _root(G)
    h = root.id(coerce(H, G))
    path = sigma_subnormal_chain_ids(root, h, k, sigma)
    if path is None:
        return False, None
    chain = tuple(root.subs[i] for i, _ in path)
    # the kind stored with A_{i-1} describes the step A_{i-1} -> A_i
    kinds = tuple(kind for _, kind in path[:-1])
    return True, SigmaSubnormalChain(chain, kinds)


def check_sigma_subnormal_chain(chain: SigmaSubnormalChain, sigma: SigmaPartition) -> bool:
    """Independent validation of a witness chain against the definition."""
    from .groups import core, is_normal

    for (a, b), kind in zip(zip(chain.chain, chain.chain[1:]), chain.step_kinds):
        if not a <= b:
            return False
        if kind == "normal":
            if not is_normal(a, b):
                return False
        else:
            c = core(b, a)
            if sigma_of(b.order // c.order, sigma) - {kind[1]}:
                return False
    return True


# ---------------------------------------------------------------------------
# sigma-nilpotency and friends


def is_sigma_primary(G: PermGroup, sigma: SigmaPartition) -> bool:
    return len(sigma_of(G.order, sigma)) <= 1


def _is_closed_set(uni: _Universe, mask: int) -> bool:
    gens: list[int] = []
    cur = 1
    for i in _bits(mask):
        if not (cur >> i) & 1:
            gens.append(i)
            cur, _ = uni.closure(gens, _bits(cur))
            if cur & ~mask:
                return False
    return cur == mask


def is_sigma_nilpotent(G: PermGroup, sigma: SigmaPartition) -> bool:
    """For each block meeting pi(G), the block-elements form a subgroup."""
    uni = G._require_universe()
    key = ("signil", G._mask, sigma)
    hit = uni.memo.get(key)
    if hit is not None:
        return hit
    result = True
    orders = uni.element_orders()
    for b in sorted(sigma_of(G.order, sigma)):
        block = sigma.blocks[b]
        mask = 0
        for i in G.indices:
            if pi_of(orders[i]) <= block:
                mask |= 1 << i
        if mask.bit_count() != part(G.order, block) or not _is_closed_set(uni, mask):
            result = False
            break
    uni.memo[key] = result
    return result


def is_sigma_nilpotent_direct(G: PermGroup, sigma: SigmaPartition) -> bool:
    """Oracle: some complete Hall sigma-set is normal and its members generate
    ``G`` as an internal direct product (pairwise commuting, orders multiply)."""
    lat = lattice(G)
    members = []
    for b in sorted(sigma_of(G.order, sigma)):
        normal = [i for i in hall_ids(lat, lat.top, sigma.blocks[b]) if lat.is_normal_in(i, lat.top)]
        if not normal:
            return False
        members.append(lat.subs[normal[0]])
    for A, B in itertools.combinations(members, 2):
        if any(a * b != b * a for a in A.generators for b in B.generators):
            return False
        if (A._mask & B._mask) != 1:
            return False
    total = 1
    for A in members:
        total *= A.order
    return total == G.order


def is_sigma_soluble(G: PermGroup, sigma: SigmaPartition) -> bool:
    """Every chief factor is sigma-primary."""
    _check_covered(G.order, sigma)
    return all(len(sigma.block_ids_of(f)) <= 1 for f in chief_series(G).factor_orders)


def sigma_nilpotent_residual(G: PermGroup, sigma: SigmaPartition) -> PermGroup:
    """Intersection of the normal ``N`` with ``G/N`` sigma-nilpotent."""
    lat = lattice(G)
    key = ("residual", sigma)
    hit = lat.cache.get(key)
    if hit is not None:
        return hit
    mask = G._mask
    for i in lat.normal_ids():
        if mask & ~lat.masks[i] == 0:
            continue
        Q, _ = quotient(G, lat.subs[i])
        if is_sigma_nilpotent(Q, sigma):
            mask &= lat.masks[i]
    D = G._uni.group(mask)
    Q, _ = quotient(G, D)
    assert is_sigma_nilpotent(Q, sigma), "residual quotient must be sigma-nilpotent"
    lat.cache[key] = D
    return D


def is_schmidt(G: PermGroup) -> bool:
    """Non-nilpotent with every proper subgroup nilpotent (maximal ones suffice)."""
    from .lattice import maximal_subgroups

    return not is_nilpotent(G) and all(is_nilpotent(M) for M in maximal_subgroups(G))


def is_minimal_non_sigma_nilpotent(G: PermGroup, sigma: SigmaPartition) -> bool:
    from .lattice import maximal_subgroups

    return (not is_sigma_nilpotent(G, sigma)
            and all(is_sigma_nilpotent(M, sigma) for M in maximal_subgroups(G)))


def is_pi_decomposable(G: PermGroup, primes) -> bool:
    """``G = O_pi(G) x O_pi'(G)``."""
    primes = prime_set(primes)
    A = o_pi_lower(G, primes)
    B = o_pi_lower(G, pi_of(G.order) - primes)
    return A.order * B.order == G.order and (A._mask & B._mask) == 1


def is_pi_closed_by(G: PermGroup, primes) -> bool:
    from .hall import is_pi_closed

    return is_pi_closed(G, primes)


def all_relevant_blocks(G: PermGroup, pi: PiSelector) -> list[int]:
    return relevant_blocks(G, pi)


def conjugate_ids_by(lat: Lattice, i: int, gens: Sequence[int]) -> list[int]:
    return orbit_ids(lat, i, gens)
