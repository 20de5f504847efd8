"""Brute-force reference implementations working on plain tuples and frozensets.

Nothing here imports the engine's algorithms: elements are image tuples,
subgroups are frozensets of them, and everything is computed by closure and
exhaustive search.  Slow, but independent.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def compose(p: tuple, q: tuple) -> tuple:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[i] for i in p)


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(n: int) -> tuple:
    return tuple(range(n))


def closure(gens, degree: int) -> frozenset:
    e = identity(degree)
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def generated(elements, degree: int) -> frozenset:
    return closure(list(elements), degree)


def cyclic_subgroups(G: frozenset, degree: int) -> set[frozenset]:
    return {closure([g], degree) for g in G}


def all_subgroups(G: frozenset, degree: int) -> set[frozenset]:
    """Every subgroup, as the closure of a set of cyclic subgroups."""
    cyc = cyclic_subgroups(G, degree)
    found = set(cyc)
    frontier = list(cyc)
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyc:
                if not C <= S:
                    T = generated(S | C, degree)
                    if T not in found:
                        found.add(T)
                        nxt.append(T)
        frontier = nxt
    return found


def conj(h: tuple, x: tuple) -> tuple:
    return compose(compose(inverse(x), h), x)


def conjugate_set(H: frozenset, x: tuple) -> frozenset:
    return frozenset(conj(h, x) for h in H)


def is_normal(N: frozenset, G: frozenset) -> bool:
    return all(conjugate_set(N, x) == N for x in G)


def normal_closure(H: frozenset, G: frozenset, degree: int) -> frozenset:
    return generated({conj(h, x) for h in H for x in G}, degree)


def core(H: frozenset, G: frozenset) -> frozenset:
    out = H
    for x in G:
        out = out & conjugate_set(H, x)
    return out


def normalizer(H: frozenset, G: frozenset) -> frozenset:
    return frozenset(x for x in G if conjugate_set(H, x) == H)


def product_set(A: frozenset, B: frozenset) -> frozenset:
    return frozenset(compose(a, b) for a, b in product(A, B))


def permutes(A: frozenset, B: frozenset) -> bool:
    return product_set(A, B) == product_set(B, A)


def prime_support(n: int) -> frozenset[int]:
    out, p = set(), 2
    while n > 1:
        if n % p == 0:
            out.add(p)
            n //= p
        else:
            p += 1
    return frozenset(out)


def part(n: int, primes) -> int:
    out = 1
    for p in primes:
        while n % p == 0:
            n //= p
            out *= p
    return out


def halls(subs, order: int, primes) -> list[frozenset]:
    target = part(order, primes)
    return [S for S in subs if len(S) == target]


def element_order(g: tuple) -> int:
    e = identity(len(g))
    k, x = 1, g
    while x != e:
        x = compose(x, g)
        k += 1
    return k


def sigma_nilpotent(G: frozenset, degree: int, blocks) -> bool:
    """Direct product of normal Hall sigma_i-subgroups, checked on element sets."""
    order = len(G)
    subs = None
    parts = []
    for b in blocks:
        target = part(order, b)
        if target == 1:
            continue
        if subs is None:
            subs = [S for S in all_subgroups(G, degree) if is_normal(S, G)]
        normal_halls = [S for S in subs if len(S) == target]
        if len(normal_halls) != 1:
            return False
        parts.append(normal_halls[0])
    total = 1
    for P in parts:
        total *= len(P)
    if total != order:
        return False
    # pairwise commuting elements across the factors
    return all(compose(a, b) == compose(b, a)
               for i, P in enumerate(parts) for Q in parts[i + 1:] for a in P for b in Q)


def sigma_subnormal_oracle(G: frozenset, degree: int, blocks):
    """Return ``sn(H, K)``: naive recursion over all intermediate subgroups."""
    subs = sorted(all_subgroups(G, degree), key=len)
    block_of = {p: i for i, b in enumerate(blocks) for p in b}

    def primary(n: int) -> bool:
        return len({block_of[p] for p in prime_support(n)}) <= 1

    @lru_cache(maxsize=None)
    def sn(H: frozenset, K: frozenset) -> bool:
        if H == K:
            return True
        for M in subs:
            if len(M) >= len(K):
                break
            if H <= M <= K and (is_normal(M, K) or primary(len(K) // len(core(M, K)))) and sn(H, M):
                return True
        return False

    return sn, subs
