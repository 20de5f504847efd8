"""Subgroup lattices and the structural queries built on them.

Subgroups are enumerated by cyclic extension: start from the trivial group and
repeatedly join every known subgroup with every cyclic subgroup of prime-power
order.  Every subgroup is generated by its elements of prime-power order, so
this reaches all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import coerce, join, normal_closure
from .perm import PermGroup, ResourceLimitError, _mask_of, limits


def _prime_power_base(n: int) -> int | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def cyclic_subgroup(G: PermGroup, i: int) -> PermGroup:
    uni = G._uni
    key = ("cyclic", i)
    hit = uni.memo.get(key)
    if hit is None:
        powers = [0]
        j = i
        while j != 0:
            powers.append(j)
            j = uni.mul(j, i)
        mask = _mask_of(powers)
        hit = uni.groups.get(mask) or uni.group(mask, (i,) if i else (), sorted(powers))
        uni.memo[key] = hit
    return hit


def _enumerate_subgroups(G: PermGroup) -> list[PermGroup]:
    uni = G._require_universe()
    if G.order > limits.lattice_cap:
        raise ResourceLimitError(f"lattice of a group of order {G.order} exceeds cap {limits.lattice_cap}")
    orders = uni.element_orders()
    cyclics: dict[int, PermGroup] = {}
    for i in G.indices:
        if _prime_power_base(orders[i]) is not None:
            C = cyclic_subgroup(G, i)
            cyclics.setdefault(C._mask, C)
    cyc = sorted(cyclics.values(), key=lambda c: (c.order, c._mask))
    trivial = G.trivial_subgroup()
    found = {trivial._mask: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for S in frontier:
            sm = S._mask
            for C in cyc:
                if C._mask & ~sm == 0:
                    continue
                J = join(S, C)
                if J._mask not in found:
                    found[J._mask] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s._mask))


class Lattice:
    """All subgroups of one group, with normalizers, classes and cores cached.

    ``subs`` is sorted by (order, mask), so every proper subgroup of
    ``subs[k]`` has an id smaller than ``k``.
    """

    def __init__(self, group: PermGroup, subs: list[PermGroup], parent: "Lattice | None" = None):
        self.group = group
        self.uni = group._uni
        self.subs = subs
        self.masks = [s._mask for s in subs]
        self.orders = [s.order for s in subs]
        self.pos = {m: i for i, m in enumerate(self.masks)}
        self.top = self.pos[group._mask]
        self.parent = parent
        self._norm: list[int | None] = [None] * len(subs)
        self._class_of: list[int] | None = None
        self._classes: list[list[int]] | None = None
        self._below: dict[int, list[int]] = {}
        self._cores: dict[tuple[int, int], int] = {}
        self.cache: dict = {}

    def __len__(self) -> int:
        return len(self.subs)

    def id(self, H: PermGroup) -> int:
        H = coerce(H, self.group)
        return self.pos[H._mask]

    def below(self, k: int) -> list[int]:
        """Ids of all subgroups of ``subs[k]`` (ascending order, including ``k``)."""
        ids = self._below.get(k)
        if ids is None:
            mk = self.masks[k]
            ids = [i for i in range(k + 1) if self.masks[i] & ~mk == 0]
            self._below[k] = ids
        return ids

    def above(self, i: int) -> list[int]:
        mi = self.masks[i]
        return [k for k in range(i, len(self.subs)) if mi & ~self.masks[k] == 0]

    def between(self, i: int, k: int) -> list[int]:
        mi = self.masks[i]
        return [j for j in self.below(k) if mi & ~self.masks[j] == 0]

    # -- conjugation -------------------------------------------------------

    def _compute_classes(self) -> None:
        uni = self.uni
        n = len(self.subs)
        class_of = [-1] * n
        classes: list[list[int]] = []
        gens = self.group._gen_idx
        for i in range(n):
            if class_of[i] >= 0:
                continue
            c = len(classes)
            orbit = [i]
            trans = {i: 0}
            class_of[i] = c
            schreier: set[int] = set()
            for a in orbit:
                idx_a = self.subs[a].indices
                for g in gens:
                    b = self.pos[uni.conj_mask(self.masks[a], g, idx_a)]
                    t = uni.mul(trans[a], g)
                    if b not in trans:
                        trans[b] = t
                        orbit.append(b)
                        class_of[b] = c
                    elif self.parent is None:
                        s = uni.mul(t, uni.inv[trans[b]])
                        if s:
                            schreier.add(s)
            classes.append(sorted(orbit))
            if self.parent is None:
                nmask, nidx = uni.closure(sorted(schreier), self.subs[i].indices)
                self._norm[i] = nmask
                for b, t in trans.items():
                    if b != i:
                        self._norm[b] = _mask_of(uni.conj_indices(nidx, t))
        self._class_of = class_of
        self._classes = classes

    def classes(self) -> list[list[int]]:
        """Conjugacy classes of subgroups under the lattice's group."""
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_of(self, i: int) -> int:
        if self._class_of is None:
            self._compute_classes()
        return self._class_of[i]

    def class_reps(self) -> list[int]:
        return [c[0] for c in self.classes()]

    def normalizer_mask(self, i: int) -> int:
        m = self._norm[i]
        if m is None:
            if self.parent is not None:
                pid = self.parent.pos[self.masks[i]]
                m = self.parent.normalizer_mask(pid) & self.group._mask
                self._norm[i] = m
            else:
                self._compute_classes()
                m = self._norm[i]
        return m

    def normalizer(self, i: int) -> PermGroup:
        return self.uni.group(self.normalizer_mask(i))

    def is_normal_in(self, i: int, k: int) -> bool:
        """Is ``subs[i]`` normal in ``subs[k]`` (assuming ``subs[i] <= subs[k]``)?"""
        mk = self.masks[k]
        return self.normalizer_mask(i) & mk == mk

    def normal_ids(self) -> list[int]:
        return [i for i in range(len(self.subs)) if self.is_normal_in(i, self.top)]

    def core_id(self, i: int, k: int) -> int:
        """Id of the core of ``subs[i]`` in ``subs[k]``."""
        key = (i, k)
        c = self._cores.get(key)
        if c is None:
            for j in reversed(self.below(i)):
                if self.is_normal_in(j, k):
                    c = j
                    break
            self._cores[key] = c
        return c

    def normal_closure_id(self, i: int) -> int:
        mi = self.masks[i]
        for j in self.normal_ids():
            if mi & ~self.masks[j] == 0:
                return j
        raise AssertionError("the whole group is normal")

    def maximal_ids(self) -> list[int]:
        top = self.top
        out = []
        for i in range(len(self.subs)):
            if i == top:
                continue
            mi = self.masks[i]
            if not any(mi & ~self.masks[j] == 0 for j in range(i + 1, len(self.subs))
                       if j != top and self.orders[j] > self.orders[i]):
                out.append(i)
        return out

    def sublattice(self, k: int) -> "Lattice":
        """Lattice of ``subs[k]``, derived by filtering (no re-enumeration)."""
        if k == self.top:
            return self
        H = self.subs[k]
        lat = H.cache.get("lattice")
        if lat is None:
            root = self if self.parent is None else self.parent
            lat = Lattice(H, [self.subs[i] for i in self.below(k)], parent=root)
            H.cache["lattice"] = lat
        return lat


def lattice(G: PermGroup) -> Lattice:
    """The (cached) subgroup lattice of ``G``."""
    lat = G.cache.get("lattice")
    if lat is not None:
        return lat
    uni = G._require_universe()
    top = uni.groups.get(uni.full)
    if top is not None and top is not G and "lattice" in top.cache:
        root = top.cache["lattice"]
        lat = root.sublattice(root.pos[G._mask])
    else:
        lat = Lattice(G, _enumerate_subgroups(G))
        G.cache["lattice"] = lat
    return lat


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    return list(lattice(G).subs)


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    lat = lattice(G)
    return [lat.subs[i] for i in lat.normal_ids()]


def maximal_subgroups(G: PermGroup) -> list[PermGroup]:
    lat = lattice(G)
    return [lat.subs[i] for i in lat.maximal_ids()]


def minimal_normal_subgroups(G: PermGroup) -> list[PermGroup]:
    lat = lattice(G)
    normals = [i for i in lat.normal_ids() if lat.orders[i] > 1]
    return [lat.subs[i] for i in normals
            if not any(j != i and lat.masks[j] & ~lat.masks[i] == 0 for j in normals)]


def subgroups_between(H: PermGroup, G: PermGroup) -> list[PermGroup]:
    lat = lattice(G)
    return [lat.subs[j] for j in lat.between(lat.id(H), lat.top)]


def conjugacy_classes_of_subgroups(G: PermGroup) -> list[list[PermGroup]]:
    lat = lattice(G)
    return [[lat.subs[i] for i in c] for c in lat.classes()]


def frattini(G: PermGroup) -> PermGroup:
    """Intersection of all maximal subgroups (``G`` itself when trivial)."""
    lat = lattice(G)
    mask = G._mask
    for i in lat.maximal_ids():
        mask &= lat.masks[i]
    return G._uni.group(mask)


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple[PermGroup, ...]
    factor_orders: tuple[int, ...]


def chief_series(G: PermGroup, tie_break: str = "lex") -> ChiefSeries:
    """Chief series ``1 = N_0 < N_1 < ... < N_r = G`` built bottom-up.

    At each step the minimal normal subgroup of ``G/N_i`` with the
    lexicographically smallest sorted element list is taken (``tie_break="revlex"``
    takes the largest instead; used to test Jordan-Hölder invariance).
    """
    if tie_break not in ("lex", "revlex"):
        raise ValueError("tie_break must be 'lex' or 'revlex'")
    lat = lattice(G)
    normals = lat.normal_ids()
    cur = normals[0]
    terms = [lat.subs[cur]]
    while cur != lat.top:
        mc = lat.masks[cur]
        above = [j for j in normals if j != cur and mc & ~lat.masks[j] == 0]
        minimal = [j for j in above
                   if not any(k != j and lat.masks[k] & ~lat.masks[j] == 0 for k in above)]
        pick = min if tie_break == "lex" else max
        cur = pick(minimal, key=lambda j: lat.subs[j].sorted_key())
        terms.append(lat.subs[cur])
    factors = tuple(b.order // a.order for a, b in zip(terms, terms[1:]))
    return ChiefSeries(tuple(terms), factors)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_nilpotent(G: PermGroup) -> bool:
    """Every Sylow subgroup is normal, i.e. each prime has exactly ``|G|_p`` p-elements."""
    uni = G._require_universe()
    orders = uni.element_orders()
    for p in _prime_factors(G.order):
        part = 1
        n = G.order
        while n % p == 0:
            n //= p
            part *= p
        count = sum(1 for i in G.indices if _is_power_of(orders[i], p))
        if count != part:
            return False
    return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def is_subnormal(H: PermGroup, G: PermGroup) -> bool:
    """Descending normal-closure chain from ``G`` stabilises at ``H``."""
    H = coerce(H, G)
    K = G
    while True:
        nxt = normal_closure(K, H)
        if nxt == K:
            return K == H
        K = nxt


def subnormal_ids(lat: Lattice) -> list[int]:
    return [i for i in range(len(lat.subs)) if is_subnormal(lat.subs[i], lat.group)]


__all__ = [
    "ChiefSeries",
    "Lattice",
    "all_subgroups",
    "chief_series",
    "conjugacy_classes_of_subgroups",
    "cyclic_subgroup",
    "frattini",
    "is_nilpotent",
    "is_subnormal",
    "lattice",
    "maximal_subgroups",
    "minimal_normal_subgroups",
    "normal_subgroups",
    "subgroups_between",
]
