"""Subgroup operations and quotients inside one element universe."""

from __future__ import annotations

from dataclasses import dataclass

from .perm import (
    ContainmentError,
    NotNormalError,
    Permutation,
    PermGroup,
    _mask_of,
    _Universe,
    group_from_generators,
)


def coerce(A: PermGroup, ambient: PermGroup) -> PermGroup:
    """Return ``A`` as a subgroup handle in ``ambient``'s universe.

    Raises ``ContainmentError`` unless ``A <= ambient``.
    """
    uni = ambient._require_universe()
    if A._uni is uni:
        if A._mask & ~ambient._mask:
            raise ContainmentError("subgroup is not contained in the ambient group")
        return A
    if A.degree != ambient.degree:
        raise ContainmentError(f"degree {A.degree} does not match ambient degree {ambient.degree}")
    idx = []
    for g in A.generators:
        i = uni.index.get(g)
        if i is None or not (ambient._mask >> i) & 1:
            raise ContainmentError(f"{g.cycle_string()} is not in the ambient group")
        idx.append(i)
    return uni.subgroup_from_indices(idx)


def _pair(A: PermGroup, B: PermGroup, ambient: PermGroup | None) -> tuple[PermGroup, PermGroup]:
    if ambient is not None:
        return coerce(A, ambient), coerce(B, ambient)
    if A._uni is not None and A._uni is B._uni:
        return A, B
    if B <= A:
        return A, coerce(B, A)
    if A <= B:
        return coerce(A, B), B
    J = group_from_generators(A.degree, list(A.generators) + list(B.generators))
    return coerce(A, J), coerce(B, J)


def intersection(A: PermGroup, B: PermGroup, ambient: PermGroup | None = None) -> PermGroup:
    A, B = _pair(A, B, ambient)
    return A._uni.group(A._mask & B._mask)


def join(A: PermGroup, B: PermGroup, ambient: PermGroup | None = None) -> PermGroup:
    """The subgroup generated by ``A`` and ``B``."""
    A, B = _pair(A, B, ambient)
    uni = A._uni
    if B._mask & ~A._mask == 0:
        return A
    if A._mask & ~B._mask == 0:
        return B
    key = ("join", A._mask, B._mask)
    hit = uni.memo.get(key)
    if hit is not None:
        return hit
    gens = list(dict.fromkeys(A._gen_idx + B._gen_idx))
    mask, order = uni.closure(gens, A.indices)
    result = uni.groups.get(mask) or uni.group(mask, gens, sorted(order))
    uni.memo[key] = result
    return result


def join_all(groups, ambient: PermGroup) -> PermGroup:
    result = ambient.trivial_subgroup()
    for g in groups:
        result = join(result, g, ambient)
    return result


def conjugate(A: PermGroup, x: Permutation, ambient: PermGroup | None = None) -> PermGroup:
    """``A^x = x^-1 A x``."""
    if ambient is not None:
        A = coerce(A, ambient)
    uni = A._require_universe()
    xi = uni.index.get(x)
    if xi is None:
        # x outside the universe: conjugate generators and build a fresh group
        return group_from_generators(A.degree, [g ** x for g in A.generators])
    if xi == 0:
        return A
    mask = uni.conj_mask(A._mask, xi, A.indices)
    col = uni.conj(xi)
    return uni.groups.get(mask) or uni.group(mask, [col[g] for g in A._gen_idx])


def is_normal(A: PermGroup, ambient: PermGroup) -> bool:
    A = coerce(A, ambient)
    uni = A._uni
    for x in ambient._gen_idx:
        col = uni.conj(x)
        m = A._mask
        for g in A._gen_idx:
            if not (m >> col[g]) & 1:
                return False
    return True


def normalizer(ambient: PermGroup, A: PermGroup) -> PermGroup:
    """``N_ambient(A)`` by direct element test."""
    A = coerce(A, ambient)
    uni = A._uni
    keep = []
    for x in ambient.indices:
        col = uni.conj(x)
        if all((A._mask >> col[g]) & 1 for g in A._gen_idx):
            keep.append(x)
    return uni.group(_mask_of(keep))


def centralizer(ambient: PermGroup, A: PermGroup) -> PermGroup:
    A = coerce(A, ambient)
    uni = A._uni
    keep = []
    for x in ambient.indices:
        col = uni.conj(x)
        if all(col[g] == g for g in A._gen_idx):
            keep.append(x)
    return uni.group(_mask_of(keep))


def center(G: PermGroup) -> PermGroup:
    return centralizer(G, G)


def core(ambient: PermGroup, A: PermGroup) -> PermGroup:
    """Largest normal subgroup of ``ambient`` contained in ``A``."""
    A = coerce(A, ambient)
    uni = A._uni
    mask = A._mask
    changed = True
    while changed:
        changed = False
        for x in ambient._gen_idx:
            m2 = mask & uni.conj_mask(mask, x)
            if m2 != mask:
                mask = m2
                changed = True
    return uni.group(mask)


def normal_closure(ambient: PermGroup, A: PermGroup) -> PermGroup:
    """Smallest normal subgroup of ``ambient`` containing ``A``."""
    A = coerce(A, ambient)
    uni = A._uni
    cur = A
    while True:
        extra = []
        for x in ambient._gen_idx:
            col = uni.conj(x)
            for g in cur._gen_idx:
                if not (cur._mask >> col[g]) & 1:
                    extra.append(col[g])
        if not extra:
            return cur
        gens = list(dict.fromkeys(cur._gen_idx + tuple(extra)))
        mask, order = uni.closure(gens, cur.indices)
        cur = uni.groups.get(mask) or uni.group(mask, gens, sorted(order))


def index(G: PermGroup, H: PermGroup) -> int:
    return G.order // H.order


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def element_set_product_size(A: PermGroup, B: PermGroup) -> int:
    return A.order * B.order // intersection(A, B).order


# ---------------------------------------------------------------------------
# quotients


@dataclass
class QuotientMap:
    """Epimorphism ``G -> G/N`` realised as the action on right cosets of ``N``."""

    source: PermGroup
    kernel: PermGroup
    target: PermGroup
    _coset_of: dict[int, int]
    _image_idx: list[int]

    def __call__(self, g: Permutation) -> Permutation:
        i = self.source._uni.index.get(g)
        if i is None or not (self.source._mask >> i) & 1:
            raise ContainmentError(f"{Permutation(g).cycle_string()} is not in the source group")
        return self.target._uni.elements[self._image_idx[self._coset_of[i]]]

    def image(self, A: PermGroup) -> PermGroup:
        """``AN/N`` as a subgroup of the quotient."""
        A = coerce(A, self.source)
        tu = self.target._uni
        return tu.subgroup_from_indices([self._image_idx[self._coset_of[g]] for g in A._gen_idx])

    def preimage(self, B: PermGroup) -> PermGroup:
        """Full preimage of a subgroup of the quotient."""
        B = coerce(B, self.target)
        keep = [i for i, c in self._coset_of.items() if (B._mask >> self._image_idx[c]) & 1]
        return self.source._uni.group(_mask_of(keep))


def quotient(G: PermGroup, N: PermGroup) -> tuple[PermGroup, QuotientMap]:
    """Faithful permutation representation of ``G/N`` (action on right cosets).

    The quotient has a fresh degree ``|G:N|``.  Raises ``NotNormalError`` if
    ``N`` is not normal in ``G``.
    """
    N = coerce(N, G)
    if not is_normal(N, G):
        raise NotNormalError("quotient requires a normal subgroup")
    uni: _Universe = G._uni
    key = ("quotient", G._mask, N._mask)
    hit = uni.memo.get(key)
    if hit is not None:
        return hit
    ncols = [uni.right(g) for g in N._gen_idx]
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for start in G.indices:
        if start in coset_of:
            continue
        c = len(reps)
        reps.append(start)
        coset_of[start] = c
        stack = [start]
        while stack:
            i = stack.pop()
            for col in ncols:
                j = col[i]
                if j not in coset_of:
                    coset_of[j] = c
                    stack.append(j)
    k = len(reps)
    gen_images = []
    for g in G._gen_idx:
        col = uni.right(g)
        gen_images.append(Permutation._raw(coset_of[col[r]] for r in reps))
    Q = group_from_generators(k, gen_images)
    # image of each coset: walk cosets from the identity coset along generators
    coset_perm: dict[int, Permutation] = {coset_of[0]: Permutation.identity(k)}
    frontier = [0]
    for i in frontier:
        pi = coset_perm[coset_of[i]]
        for g, img in zip(G._gen_idx, gen_images):
            j = uni.right(g)[i]
            c = coset_of[j]
            if c not in coset_perm:
                coset_perm[c] = pi * img
                frontier.append(j)
    tu = Q._uni
    image_idx = [tu.index[coset_perm[c]] for c in range(k)]
    result = (Q, QuotientMap(G, N, Q, coset_of, image_idx))
    uni.memo[key] = result
    return result
