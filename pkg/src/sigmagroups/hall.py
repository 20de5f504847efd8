"""Sylow and Hall subgroups, complete Hall sets, and the Pi-radicals.

Hall subgroups are found by filtering the subgroup lattice by order.  Functions
taking ``primes`` accept either an iterable of primes or a ``PiSelector``; a
Hall Pi-subgroup only depends on the union of the selected blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .groups import coerce
from .lattice import Lattice, lattice
from .perm import PermGroup, ResourceLimitError, _mask_of
from .sigma import PiSelector, _check_covered, part, pi_of


def prime_set(primes) -> frozenset[int]:
    if isinstance(primes, PiSelector):
        return primes.primes
    if isinstance(primes, int):
        return frozenset([primes])
    return frozenset(primes)


def is_pi_group(G: PermGroup, primes) -> bool:
    return pi_of(G.order) <= prime_set(primes)


# ---------------------------------------------------------------------------
# lattice-level helpers (ids refer to ``lat.subs``)


def hall_ids(lat: Lattice, k: int, primes: frozenset[int]) -> list[int]:
    """Ids of the Hall ``primes``-subgroups of ``lat.subs[k]``."""
    key = ("hall", k, primes)
    ids = lat.cache.get(key)
    if ids is None:
        target = part(lat.orders[k], primes)
        ids = [i for i in lat.below(k) if lat.orders[i] == target]
        lat.cache[key] = ids
    return ids


def orbit_ids(lat: Lattice, i: int, gens: Iterable[int]) -> list[int]:
    """Conjugates of ``lat.subs[i]`` under the group generated by element indices ``gens``."""
    uni = lat.uni
    gens = tuple(gens)
    key = ("orbit", i, gens)
    hit = lat.cache.get(key)
    if hit is None:
        seen = {i}
        orbit = [i]
        for a in orbit:
            idx = lat.subs[a].indices
            for g in gens:
                b = lat.pos[uni.conj_mask(lat.masks[a], g, idx)]
                if b not in seen:
                    seen.add(b)
                    orbit.append(b)
        hit = sorted(orbit)
        lat.cache[key] = hit
    return hit


def conjugacy_partition(lat: Lattice, ids: list[int], k: int) -> list[list[int]]:
    """Split ``ids`` into conjugacy classes under ``lat.subs[k]``."""
    gens = lat.subs[k]._gen_idx
    rest = set(ids)
    out = []
    for i in ids:
        if i in rest:
            orb = orbit_ids(lat, i, gens)
            rest.difference_update(orb)
            out.append(orb)
    return out


def d_property(lat: Lattice, k: int, primes: frozenset[int], mode: str = "ECD") -> bool:
    """Hall ``primes``-subgroups of ``subs[k]`` exist (E), are conjugate (C)
    and contain every ``primes``-subgroup up to conjugacy (D)."""
    if mode not in ("EC", "ECD"):
        raise ValueError("mode must be 'EC' or 'ECD'")
    key = ("dprop", k, primes, mode)
    hit = lat.cache.get(key)
    if hit is not None:
        return hit
    halls = hall_ids(lat, k, primes)
    ok = bool(halls)
    if ok:
        ok = len(orbit_ids(lat, halls[0], lat.subs[k]._gen_idx)) == len(halls)
    if ok and mode == "ECD":
        hall_masks = [lat.masks[h] for h in halls]
        for i in lat.below(k):
            if pi_of(lat.orders[i]) <= primes:
                m = lat.masks[i]
                if not any(m & ~h == 0 for h in hall_masks):
                    ok = False
                    break
    lat.cache[key] = ok
    return ok


# ---------------------------------------------------------------------------
# public API


def sylow(G: PermGroup, p: int) -> list[PermGroup]:
    lat = lattice(G)
    out = [lat.subs[i] for i in hall_ids(lat, lat.top, frozenset([p]))]
    assert out, "Sylow's theorem guarantees a Sylow subgroup"
    return out


def hall_subgroups(G: PermGroup, primes) -> list[PermGroup]:
    lat = lattice(G)
    return [lat.subs[i] for i in hall_ids(lat, lat.top, prime_set(primes))]


@dataclass(frozen=True)
class CompleteHallSet:
    """One Hall sigma_i-subgroup for each selected block meeting pi(G)."""

    members: tuple[tuple[int, PermGroup], ...]

    def groups(self) -> list[PermGroup]:
        return [g for _, g in self.members]

    def as_dict(self) -> dict[int, PermGroup]:
        return dict(self.members)

    def __len__(self) -> int:
        return len(self.members)


def relevant_blocks(G: PermGroup, pi: PiSelector) -> list[int]:
    """Block indices of Pi that meet pi(G), ascending."""
    sigma = pi.partition
    _check_covered(G.order, sigma)
    return sorted(pi.chosen & sigma.block_ids_of(G.order))


def complete_hall_sets(G: PermGroup, pi: PiSelector, cap: int = 512) -> list[CompleteHallSet]:
    """Every complete Hall Pi-set of ``G`` (the full cartesian product of choices)."""
    blocks = relevant_blocks(G, pi)
    choices = [hall_subgroups(G, pi.partition.blocks[b]) for b in blocks]
    total = 1
    for c in choices:
        total *= len(c)
    if total > cap:
        raise ResourceLimitError(f"{total} complete Hall sets exceed cap {cap}")
    return [CompleteHallSet(tuple(zip(blocks, combo))) for combo in itertools.product(*choices)]


def is_pi_full(G: PermGroup, pi: PiSelector) -> bool:
    lat = lattice(G)
    return all(hall_ids(lat, lat.top, pi.partition.blocks[b]) for b in relevant_blocks(G, pi))


def has_d_property(G: PermGroup, primes, mode: str = "ECD") -> bool:
    lat = lattice(G)
    return d_property(lat, lat.top, prime_set(primes), mode)


def is_sylow_type(G: PermGroup, pi: PiSelector, d_property_mode: str = "ECD") -> bool:
    """Every subgroup of ``G`` has the D-property for every block of Pi."""
    lat = lattice(G)
    return sylow_type_ids(lat, lat.top, pi, d_property_mode)


def sylow_type_ids(lat: Lattice, k: int, pi: PiSelector, mode: str = "ECD") -> bool:
    blocks = [pi.partition.blocks[b] for b in sorted(pi.chosen)]
    key = ("sylow_type", k, tuple(blocks), mode)
    hit = lat.cache.get(key)
    if hit is None:
        hit = all(d_property(lat, e, b, mode) for b in blocks for e in lat.below(k))
        lat.cache[key] = hit
    return hit


def o_pi_lower(G: PermGroup, primes) -> PermGroup:
    """O_Pi(G): the largest normal Pi-subgroup."""
    lat = lattice(G)
    return lat.subs[o_pi_lower_id(lat, prime_set(primes))]


def o_pi_lower_id(lat: Lattice, primes: frozenset[int]) -> int:
    best = 0
    for i in lat.normal_ids():
        if pi_of(lat.orders[i]) <= primes:
            best = i
    return best


def o_pi_upper(G: PermGroup, primes) -> PermGroup:
    """O^Pi(G): generated by the elements whose order is a Pi'-number."""
    primes = prime_set(primes)
    uni = G._require_universe()
    orders = uni.element_orders()
    gens = [i for i in G.indices if not (pi_of(orders[i]) & primes)]
    return uni.subgroup_from_indices(gens)


def is_pi_closed(G: PermGroup, primes) -> bool:
    primes = prime_set(primes)
    return o_pi_lower(G, primes).order == part(G.order, primes)


def pi_element_mask(G: PermGroup, primes) -> int:
    primes = prime_set(primes)
    uni = G._require_universe()
    orders = uni.element_orders()
    return _mask_of(i for i in G.indices if pi_of(orders[i]) <= primes)


def hall_subgroups_of(E: PermGroup, G: PermGroup, primes) -> list[PermGroup]:
    """Hall subgroups of a subgroup ``E`` of ``G``, using ``G``'s lattice."""
    lat = lattice(G)
    k = lat.id(coerce(E, G))
    return [lat.subs[i] for i in hall_ids(lat, k, prime_set(primes))]
