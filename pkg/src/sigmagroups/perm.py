"""Permutations, permutation groups and the element universe behind them.

Every group whose order is below the element cap gets an *universe*: the sorted
list of its elements together with lazily filled multiplication columns.
Subgroups created from such a group live in the same universe and are stored
as bitmasks over the element indices, so intersection, containment and
equality are single integer operations.

Composition is left to right: ``(p * q)[i] == q[p[i]]``, i.e. ``p`` acts first.
Conjugation is ``h ** x == x**-1 * h * x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GroupError(Exception):
    """Base class for errors raised by this package."""


class PermutationError(GroupError, ValueError):
    pass


class ContainmentError(GroupError, ValueError):
    """An argument is not contained in the ambient group it was used with."""


class NotNormalError(GroupError, ValueError):
    pass


class ResourceLimitError(GroupError):
    """A configured cap (element count, lattice size, ...) was exceeded."""


@dataclass
class Limits:
    element_cap: int = 10_000
    lattice_cap: int = 2_000


limits = Limits()


def configure(**kwargs) -> Limits:
    """Update the global caps, e.g. ``configure(element_cap=5000)``."""
    for key, value in kwargs.items():
        if not hasattr(limits, key):
            raise TypeError(f"unknown limit {key!r}")
        setattr(limits, key, value)
    return limits


# ---------------------------------------------------------------------------
# permutations


class Permutation(tuple):
    """A bijection of ``{0, ..., n-1}`` stored as its image list."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        p = tuple.__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise PermutationError(f"not a permutation: {tuple(p)}")
        return p

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, cycles: str | Sequence[Sequence[int]], degree: int | None = None) -> "Permutation":
        """Build a permutation from cycle notation like ``"(0 1 2)(3 4)"``.

        The degree defaults to one more than the largest point mentioned.
        """
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        top = max((max(c) for c in cycles if c), default=-1) + 1
        if degree is None:
            degree = top
        elif top > degree:
            raise PermutationError(f"cycle point {top - 1} outside degree {degree}")
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            if len(set(cycle)) != len(cycle) or seen.intersection(cycle):
                raise PermutationError(f"cycles are not disjoint: {cycles}")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls._raw(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other) != len(self):
            raise PermutationError("degree mismatch in composition")
        return Permutation._raw(map(other.__getitem__, self))

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return other.inverse() * self * other
        n = int(other)
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(len(self))
        for _ in range(abs(n)):
            result = result * base
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[list[int]]:
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self[j]
            out.append(cycle)
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_string(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={len(self)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``"(0 1 2)(3,4)"`` into ``[[0, 1, 2], [3, 4]]``; ``"()"`` is the identity."""
    stripped = text.strip()
    if not stripped:
        raise PermutationError("empty cycle string")
    pos = 0
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise PermutationError(f"cannot parse {text!r} at position {pos}")
        body = match.group(1).replace(",", " ").split()
        try:
            cycle = [int(x) for x in body]
        except ValueError:
            raise PermutationError(f"non-integer point in {text!r}") from None
        if any(x < 0 for x in cycle):
            raise PermutationError(f"negative point in {text!r}")
        if cycle:
            cycles.append(cycle)
        pos = match.end()
    if stripped[pos:].strip():
        raise PermutationError(f"cannot parse {text!r} at position {pos}")
    return cycles


def parse_generator_list(text: str, degree: int) -> list[Permutation]:
    """Parse generators separated by ``,`` / ``;`` where each is a cycle product.

    Example: ``"(0 1 2), (0 1)"``.  A bare ``"()"`` denotes the identity.
    """
    gens = []
    for chunk in re.findall(r"(?:\([^()]*\)\s*)+", text):
        gens.append(Permutation.from_cycles(chunk, degree))
    rest = re.sub(r"(?:\([^()]*\)\s*)+", "", text)
    if rest.strip(" ,;\t\n"):
        raise PermutationError(f"cannot parse generator list {text!r}")
    return gens


# ---------------------------------------------------------------------------
# stabilizer chain (order and membership without enumerating elements)


class _StabChain:
    def __init__(self, degree: int):
        self.degree = degree
        self.base_point: int | None = None
        self.gens: list[Permutation] = []
        self.trans: dict[int, Permutation] = {}
        self.stab: _StabChain | None = None

    def order(self) -> int:
        if self.base_point is None:
            return 1
        return len(self.trans) * self.stab.order()

    def sift(self, g: Permutation) -> Permutation:
        level = self
        while level.base_point is not None:
            u = level.trans.get(g[level.base_point])
            if u is None:
                return g
            g = g * u.inverse()
            level = level.stab
        return g

    def contains(self, g: Permutation) -> bool:
        return self.sift(g).is_identity()

    def add_gen(self, g: Permutation) -> None:
        if self.contains(g):
            return
        if self.base_point is None:
            self.base_point = next(i for i, j in enumerate(g) if i != j)
            self.trans = {self.base_point: Permutation.identity(self.degree)}
            self.stab = _StabChain(self.degree)
        self.gens.append(g)
        queue = list(self.trans)
        while queue:
            pt = queue.pop()
            u = self.trans[pt]
            for s in self.gens:
                q = s[pt]
                if q not in self.trans:
                    self.trans[q] = u * s
                    queue.append(q)
        for pt, u in list(self.trans.items()):
            for s in self.gens:
                sg = u * s * self.trans[s[pt]].inverse()
                if not sg.is_identity():
                    self.stab.add_gen(sg)


# ---------------------------------------------------------------------------
# element universe


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class _Universe:
    """All elements of one top-level group plus lazily built operation tables."""

    _counter = 0

    def __init__(self, degree: int, elements: Iterable[Permutation]):
        self.degree = degree
        self.elements: list[Permutation] = sorted(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.n = len(self.elements)
        self.full = (1 << self.n) - 1
        self.inv = [self.index[e.inverse()] for e in self.elements]
        self._right: dict[int, list[int]] = {}
        self._conj: dict[int, list[int]] = {}
        self._orders: list[int] | None = None
        self.groups: dict[int, PermGroup] = {}
        self.memo: dict = {}
        _Universe._counter += 1
        self.uid = _Universe._counter

    def right(self, j: int) -> list[int]:
        """Column ``i -> index(e_i * e_j)``."""
        col = self._right.get(j)
        if col is None:
            g = self.elements[j]
            idx = self.index
            getter = g.__getitem__
            col = [idx[Permutation._raw(map(getter, e))] for e in self.elements]
            self._right[j] = col
        return col

    def mul(self, i: int, j: int) -> int:
        col = self._right.get(j)
        if col is not None:
            return col[i]
        return self.index[self.elements[i] * self.elements[j]]

    def conj_indices(self, indices: Iterable[int], x: int) -> list[int]:
        """Images of ``indices`` under conjugation by element ``x``."""
        col = self._conj.get(x)
        if col is not None:
            return [col[i] for i in indices]
        xe = self.elements[x]
        xi = self.elements[self.inv[x]]
        idx = self.index
        els = self.elements
        return [idx[xi * els[i] * xe] for i in indices]

    def conj(self, x: int) -> list[int]:
        """Column ``i -> index(x^-1 e_i x)``."""
        col = self._conj.get(x)
        if col is None:
            xe = self.elements[x]
            xi = self.elements[self.inv[x]]
            idx = self.index
            col = [idx[xi * e * xe] for e in self.elements]
            self._conj[x] = col
        return col

    def conj_mask(self, mask: int, x: int, idx: Sequence[int] | None = None) -> int:
        col = self.conj(x)
        m = 0
        for i in (idx if idx is not None else _bits(mask)):
            m |= 1 << col[i]
        return m

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [e.order() for e in self.elements]
        return self._orders

    def closure(self, gens: Sequence[int], start: Sequence[int] = (0,)) -> tuple[int, list[int]]:
        """Close ``start`` (assumed to contain the identity) under right multiplication."""
        cols = [self.right(g) for g in gens]
        seen = bytearray(self.n)
        order = list(start)
        for i in order:
            seen[i] = 1
        for i in order:
            for col in cols:
                j = col[i]
                if not seen[j]:
                    seen[j] = 1
                    order.append(j)
        return _mask_of(order), order

    def group(self, mask: int, gens: Sequence[int] | None = None, idx: list[int] | None = None) -> "PermGroup":
        """Interned subgroup handle for ``mask``."""
        g = self.groups.get(mask)
        if g is None:
            if gens is None:
                gens = _small_generating_set(self, mask)
            g = PermGroup._make(self, mask, tuple(gens), idx)
            self.groups[mask] = g
        return g

    def subgroup_from_indices(self, gens: Sequence[int]) -> "PermGroup":
        gens = [g for g in dict.fromkeys(gens) if g != 0]
        mask, order = self.closure(gens)
        if mask in self.groups:
            return self.groups[mask]
        return self.group(mask, gens, sorted(order))


def _small_generating_set(uni: _Universe, mask: int) -> list[int]:
    gens: list[int] = []
    cur = 1
    for i in _bits(mask):
        if not (cur >> i) & 1:
            gens.append(i)
            cur, _ = uni.closure(gens)
            if cur == mask:
                break
    return gens


# ---------------------------------------------------------------------------
# groups


class PermGroup:
    """A finite permutation group.

    Groups below the element cap are backed by a universe (see module docs).
    Larger groups only answer order and membership queries.
    """

    __slots__ = ("degree", "_uni", "_mask", "_gen_idx", "_idx", "_chain", "_order", "_large_gens", "cache", "__weakref__")

    @classmethod
    def _make(cls, uni: _Universe, mask: int, gen_idx: tuple[int, ...], idx: list[int] | None = None) -> "PermGroup":
        self = object.__new__(cls)
        self.degree = uni.degree
        self._uni = uni
        self._mask = mask
        self._gen_idx = gen_idx
        self._idx = idx
        self._chain = None
        self._order = mask.bit_count()
        self.cache = {}
        return self

    @classmethod
    def _large(cls, degree: int, gens: tuple[Permutation, ...], chain: _StabChain) -> "PermGroup":
        self = object.__new__(cls)
        self.degree = degree
        self._uni = None
        self._mask = 0
        self._gen_idx = ()
        self._idx = None
        self._chain = chain
        self._order = chain.order()
        self._large_gens = gens
        self.cache = {}
        return self

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if self._uni is None:
            return self._large_gens
        return tuple(self._uni.elements[i] for i in self._gen_idx)

    gens = generators

    def _require_universe(self) -> _Universe:
        if self._uni is None:
            raise ResourceLimitError(
                f"group of order {self._order} exceeds element cap {limits.element_cap}")
        return self._uni

    @property
    def indices(self) -> list[int]:
        if self._idx is None:
            self._idx = _bits(self._mask)
        return self._idx

    @property
    def elements(self) -> list[Permutation]:
        uni = self._require_universe()
        return [uni.elements[i] for i in self.indices]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        if not isinstance(p, tuple) or len(p) != self.degree:
            return False
        if self._uni is None:
            return self._chain.contains(Permutation._raw(p))
        i = self._uni.index.get(p)
        return i is not None and bool((self._mask >> i) & 1)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self._order == 1

    # -- relations ---------------------------------------------------------

    def _same_universe(self, other: "PermGroup") -> bool:
        return self._uni is not None and self._uni is other._uni

    def issubgroup(self, other: "PermGroup") -> bool:
        if self._same_universe(other):
            return self._mask & ~other._mask == 0
        if self._order > other._order or other._order % self._order:
            return False
        return all(g in other for g in self.generators)

    def __le__(self, other: "PermGroup") -> bool:
        return self.issubgroup(other)

    def __lt__(self, other: "PermGroup") -> bool:
        return self.issubgroup(other) and self._order < other._order

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self._same_universe(other):
            return self._mask == other._mask
        return self.degree == other.degree and self._order == other._order and self.issubgroup(other)

    def __hash__(self) -> int:
        h = self.cache.get("_hash")
        if h is None:
            if self._uni is None:
                h = hash((self.degree, self._order))
            else:
                h = hash((self.degree, frozenset(self.elements)))
            self.cache["_hash"] = h
        return h

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"<PermGroup order={self._order} degree={self.degree} gens=[{gens}]>"

    # -- construction helpers ----------------------------------------------

    def subgroup(self, gens: Iterable[Permutation]) -> "PermGroup":
        """The subgroup generated by ``gens``, which must lie in this group."""
        uni = self._require_universe()
        idx = []
        for g in gens:
            g = Permutation(g)
            if g not in self:
                raise ContainmentError(f"{g.cycle_string()} is not an element of the group")
            idx.append(uni.index[g])
        return uni.subgroup_from_indices(idx)

    def trivial_subgroup(self) -> "PermGroup":
        uni = self._require_universe()
        return uni.group(1, (), [0])

    def sorted_key(self) -> tuple:
        """Encoding used for deterministic tie-breaking: the sorted element list."""
        return tuple(sorted(self.elements))


def group_from_generators(degree: int, gens: Iterable[Sequence[int]] = (), *, max_order: int | None = None) -> PermGroup:
    """Generate the permutation group of the given degree from ``gens``.

    Raises ``PermutationError`` on degree mismatch and ``ResourceLimitError``
    if the order exceeds ``max_order``.  Groups above the element cap are
    returned without an element table.
    """
    perms = []
    for g in gens:
        p = g if isinstance(g, Permutation) else Permutation(g)
        if len(p) != degree:
            raise PermutationError(f"generator {tuple(p)} has degree {len(p)}, expected {degree}")
        perms.append(p)
    chain = _StabChain(degree)
    for p in perms:
        chain.add_gen(p)
    order = chain.order()
    if max_order is not None and order > max_order:
        raise ResourceLimitError(f"group order {order} exceeds cap {max_order}")
    if order > limits.element_cap:
        return PermGroup._large(degree, tuple(perms), chain)
    ident = Permutation.identity(degree)
    elements = {ident}
    frontier = [ident]
    nontrivial = [p for p in dict.fromkeys(perms) if not p.is_identity()]
    for e in frontier:
        for p in nontrivial:
            q = e * p
            if q not in elements:
                elements.add(q)
                frontier.append(q)
    assert len(elements) == order
    uni = _Universe(degree, elements)
    gen_idx = tuple(dict.fromkeys(uni.index[p] for p in nontrivial))
    return uni.group(uni.full, gen_idx, list(range(uni.n)))


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return group_from_generators(max(n, 1), [])
    gens = [Permutation._raw(list(range(1, n)) + [0]), Permutation._raw([1, 0] + list(range(2, n)))]
    return group_from_generators(n, gens)
