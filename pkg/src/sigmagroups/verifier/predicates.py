"""Lattice-level predicates used by the verification suites.

Every group-theoretic notion a suite evaluates goes through one ``Predicates``
instance.  Fault-injection tests subclass it and override a single method;
results of overridable methods are memoized per instance so a mutant never
sees the default's cache.
"""

from __future__ import annotations

from ..embedding import is_pi_decomposable, is_sigma_nilpotent, perm_ids, sn_table
from ..groups import join, quotient
from ..hall import d_property, hall_ids, o_pi_lower_id, o_pi_upper, orbit_ids
from ..lattice import Lattice, chief_series, is_nilpotent
from ..perm import PermGroup
from ..sigma import PiSelector, SigmaPartition, _check_covered, part, pi_of


class Predicates:
    """Default (correct) implementations."""

    name = "default"

    def __init__(self):
        self._memo: dict = {}

    def _cached(self, key, fn):
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = fn()
        return hit

    # -- structure ---------------------------------------------------------

    def conjugates(self, lat: Lattice, i: int, k: int) -> list[int]:
        """Ids of ``subs[i]^x`` for ``x`` in ``subs[k]``."""
        return orbit_ids(lat, i, lat.subs[k]._gen_idx)

    def normalizer(self, lat: Lattice, i: int, k: int) -> int:
        return lat.pos[lat.normalizer_mask(i) & lat.masks[k]]

    def core(self, lat: Lattice, i: int, k: int) -> int:
        return lat.core_id(i, k)

    def normal_closure(self, lat: Lattice, i: int, k: int) -> int:
        for j in lat.between(i, k):
            if lat.is_normal_in(j, k):
                return j
        raise AssertionError("the ambient group is normal in itself")

    def is_normal(self, lat: Lattice, i: int, k: int) -> bool:
        return lat.is_normal_in(i, k)

    def section(self, lat: Lattice, a: int, b: int) -> PermGroup:
        """``subs[a] / subs[b]`` as a permutation group."""
        return quotient(lat.subs[a], lat.subs[b])[0]

    # -- permutability -----------------------------------------------------

    def permutes(self, lat: Lattice, i: int, j: int) -> bool:
        return perm_ids(lat, i, j)

    def permutes_with_all(self, lat: Lattice, h: int, ids) -> bool:
        return all(self.permutes(lat, h, x) for x in ids)

    def halls(self, lat: Lattice, k: int, primes: frozenset[int]) -> list[int]:
        return hall_ids(lat, k, primes)

    def blocks(self, order: int, pi: PiSelector) -> list[int]:
        _check_covered(order, pi.partition)
        return sorted(pi.chosen & pi.partition.block_ids_of(order))

    def conj_permuting_halls(self, lat: Lattice, h: int, k: int, primes: frozenset[int]) -> list[int]:
        """Hall ``primes``-subgroups X of ``subs[k]`` with ``subs[h]`` permuting with every ``X^x``."""
        return self._cached(("cph", id(lat), h, k, primes), lambda: [
            x for x in self.halls(lat, k, primes)
            if self.permutes_with_all(lat, h, self.conjugates(lat, x, k))])

    def pi_full(self, lat: Lattice, k: int, pi: PiSelector) -> bool:
        return all(self.halls(lat, k, pi.partition.blocks[b]) for b in self.blocks(lat.orders[k], pi))

    def pi_permutable(self, lat: Lattice, h: int, k: int, pi: PiSelector) -> bool:
        """Some complete Hall Pi-set of ``subs[k]`` has all conjugates (under
        ``subs[k]``) of all members permuting with ``subs[h]``."""
        return all(self.conj_permuting_halls(lat, h, k, pi.partition.blocks[b])
                   for b in self.blocks(lat.orders[k], pi))

    def sylows_permuting(self, lat: Lattice, h: int, k: int, primes) -> bool:
        """``subs[h]`` permutes with every Sylow p-subgroup of ``subs[k]`` for the given primes."""
        return all(self.permutes_with_all(lat, h, self.halls(lat, k, frozenset([p])))
                   for p in sorted(set(primes) & pi_of(lat.orders[k])))

    def s_permutable(self, lat: Lattice, h: int, k: int) -> bool:
        return self.sylows_permuting(lat, h, k, pi_of(lat.orders[k]))

    def s_semipermutable(self, lat: Lattice, h: int, k: int) -> bool:
        return self.sylows_permuting(lat, h, k, pi_of(lat.orders[k]) - pi_of(lat.orders[h]))

    # -- sigma properties --------------------------------------------------

    def sigma_subnormal(self, lat: Lattice, h: int, k: int, sigma: SigmaPartition) -> bool:
        return bool((sn_table(lat, sigma)[k] >> h) & 1)

    def sigma_nilpotent(self, G: PermGroup, sigma: SigmaPartition) -> bool:
        return is_sigma_nilpotent(G, sigma)

    def nilpotent(self, G: PermGroup) -> bool:
        return is_nilpotent(G)

    def sigma_soluble(self, G: PermGroup, sigma: SigmaPartition) -> bool:
        _check_covered(G.order, sigma)
        return all(len(sigma.block_ids_of(f)) <= 1 for f in chief_series(G).factor_orders)

    def sylow_type(self, lat: Lattice, k: int, pi: PiSelector, mode: str = "ECD") -> bool:
        return all(d_property(lat, e, pi.partition.blocks[b], mode)
                   for b in sorted(pi.chosen) for e in lat.below(k))

    def o_pi(self, lat: Lattice, k: int, primes: frozenset[int]) -> int:
        """Id of O_Pi(subs[k])."""
        if k == lat.top:
            return o_pi_lower_id(lat, primes)
        sub = lat.sublattice(k)
        return lat.pos[sub.masks[o_pi_lower_id(sub, primes)]]

    def pi_closed(self, lat: Lattice, k: int, primes: frozenset[int]) -> bool:
        return lat.orders[self.o_pi(lat, k, primes)] == part(lat.orders[k], primes)

    def o_pi_upper(self, lat: Lattice, k: int, primes: frozenset[int]) -> int:
        """Id of the subgroup of ``subs[k]`` generated by its Pi'-elements."""
        return lat.pos[o_pi_upper(lat.subs[k], primes)._mask]

    def subnormal(self, lat: Lattice, h: int, k: int) -> bool:
        cur = k
        while cur != h:
            nxt = self.normal_closure(lat, h, cur)
            if nxt == cur:
                return False
            cur = nxt
        return True

    def residual(self, lat: Lattice, sigma: SigmaPartition) -> int:
        """Id of the sigma-nilpotent residual of the lattice's group."""
        top = lat.top
        mask = lat.masks[top]
        for n in lat.normal_ids():
            if mask & ~lat.masks[n] and self.sigma_nilpotent(self.section(lat, top, n), sigma):
                mask &= lat.masks[n]
        return lat.pos[mask]

    def pi_decomposable(self, G: PermGroup, primes: frozenset[int]) -> bool:
        return is_pi_decomposable(G, primes)

    def join(self, lat: Lattice, i: int, j: int) -> int:
        return lat.pos[join(lat.subs[i], lat.subs[j])._mask]


DEFAULT = Predicates()
