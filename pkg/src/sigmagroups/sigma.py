"""Arithmetic of prime partitions (sigma) and block selections (Pi)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .perm import GroupError, ResourceLimitError


class PartitionError(GroupError, ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def pi_of(n: int) -> frozenset[int]:
    """Prime support of ``n``."""
    if n < 1:
        raise ValueError("pi_of expects a positive integer")
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


def part(n: int, primes: Iterable[int]) -> int:
    """Largest divisor of ``n`` whose prime support lies in ``primes``."""
    out = 1
    for p in set(primes):
        while n % p == 0:
            n //= p
            out *= p
    return out


@dataclass(frozen=True)
class SigmaPartition:
    """A finite partition of a set of primes into disjoint blocks.

    Blocks are stored in canonical order (sorted by smallest prime), so equal
    partitions compare equal and block indices are deterministic.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = [frozenset(b) for b in self.blocks]
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise PartitionError("empty block")
            for p in b:
                if not is_prime(p):
                    raise PartitionError(f"{p} is not prime")
                if p in seen:
                    raise PartitionError(f"prime {p} occurs in two blocks")
                seen.add(p)
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=min)))

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "SigmaPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def singletons(cls, primes: Iterable[int]) -> "SigmaPartition":
        return cls(tuple(frozenset([p]) for p in set(primes)))

    @classmethod
    def two_block(cls, pi: Iterable[int], rest: Iterable[int]) -> "SigmaPartition":
        blocks = [frozenset(pi), frozenset(rest)]
        return cls(tuple(b for b in blocks if b))

    @classmethod
    def parse(cls, text: str) -> "SigmaPartition":
        """Parse ``"2,7|3"``."""
        text = text.strip()
        if not text:
            return cls(())
        blocks = []
        for chunk in text.split("|"):
            try:
                block = [int(x) for x in chunk.replace(" ", "").split(",") if x]
            except ValueError:
                raise PartitionError(f"bad partition literal {text!r}") from None
            if not block:
                raise PartitionError(f"empty block in {text!r}")
            if len(set(block)) != len(block):
                raise PartitionError(f"repeated prime in block {chunk!r}")
            blocks.append(frozenset(block))
        return cls(tuple(blocks))

    @cached_property
    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    @cached_property
    def _classify(self) -> dict[int, int]:
        return {p: i for i, b in enumerate(self.blocks) for p in b}

    def __len__(self) -> int:
        return len(self.blocks)

    def classify(self, p: int) -> int:
        try:
            return self._classify[p]
        except KeyError:
            raise PartitionError(f"prime {p} is not covered by partition {self.literal()}") from None

    def literal(self) -> str:
        return "|".join(",".join(map(str, sorted(b))) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks) + "}"

    def block_ids_of(self, n: int) -> frozenset[int]:
        return frozenset(self.classify(p) for p in pi_of(n))

    def all_selectors(self) -> Iterator["PiSelector"]:
        """Every non-empty Pi, smallest first."""
        k = len(self.blocks)
        for bits in sorted(range(1, 1 << k), key=lambda b: (b.bit_count(), b)):
            yield PiSelector(self, frozenset(i for i in range(k) if bits >> i & 1))


@dataclass(frozen=True)
class PiSelector:
    """A non-empty set of block indices of a partition."""

    partition: SigmaPartition
    chosen: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "chosen", frozenset(self.chosen))
        if not self.chosen:
            raise PartitionError("Pi must be non-empty")
        if any(not 0 <= i < len(self.partition.blocks) for i in self.chosen):
            raise PartitionError("block index out of range")

    @classmethod
    def parse(cls, partition: SigmaPartition, text: str) -> "PiSelector":
        """Parse ``"2,7"`` or ``"2,7|3"``; every listed block must be a block of the partition."""
        chosen = set()
        for chunk in text.split("|"):
            try:
                block = frozenset(int(x) for x in chunk.replace(" ", "").split(",") if x)
            except ValueError:
                raise PartitionError(f"bad Pi literal {text!r}") from None
            if block not in partition.blocks:
                raise PartitionError(f"{chunk!r} is not a block of {partition.literal()}")
            chosen.add(partition.blocks.index(block))
        return cls(partition, frozenset(chosen))

    @classmethod
    def of_blocks(cls, partition: SigmaPartition, blocks: Iterable[Iterable[int]]) -> "PiSelector":
        return cls(partition, frozenset(partition.blocks.index(frozenset(b)) for b in blocks))

    @cached_property
    def complement(self) -> frozenset[int]:
        return frozenset(range(len(self.partition.blocks))) - self.chosen

    @cached_property
    def primes(self) -> frozenset[int]:
        return frozenset().union(*(self.partition.blocks[i] for i in self.chosen))

    @cached_property
    def complement_primes(self) -> frozenset[int]:
        return self.partition.covered - self.primes

    @property
    def blocks(self) -> list[frozenset[int]]:
        return [self.partition.blocks[i] for i in sorted(self.chosen)]

    def complement_selector(self) -> "PiSelector | None":
        return PiSelector(self.partition, self.complement) if self.complement else None

    def literal(self) -> str:
        return "|".join(",".join(map(str, sorted(b))) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks) + "}"


def _check_covered(n: int, sigma: SigmaPartition) -> frozenset[int]:
    primes = pi_of(n)
    missing = primes - sigma.covered
    if missing:
        raise PartitionError(f"primes {sorted(missing)} are not covered by partition {sigma.literal()}")
    return primes


def sigma_of(n: int, sigma: SigmaPartition) -> frozenset[int]:
    """Indices of the blocks meeting ``pi_of(n)``."""
    _check_covered(n, sigma)
    return sigma.block_ids_of(n)


def sigma_of_group(G, sigma: SigmaPartition) -> frozenset[int]:
    return sigma_of(G.order, sigma)


def is_pi_number(n: int, pi: PiSelector) -> bool:
    _check_covered(n, pi.partition)
    return pi_of(n) <= pi.primes


def is_sigma_primary_number(n: int, sigma: SigmaPartition) -> bool:
    return len(sigma_of(n, sigma)) <= 1


def sigma_coprime(n: int, m: int, sigma: SigmaPartition) -> bool:
    return not (sigma_of(n, sigma) & sigma_of(m, sigma))


def pi_part(n: int, pi: PiSelector) -> int:
    _check_covered(n, pi.partition)
    return part(n, pi.primes)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def all_partitions(primes: Iterable[int], cap: int = 4) -> list[SigmaPartition]:
    """Every partition of ``primes`` (Bell-number many), in a fixed order."""
    items = sorted(set(primes))
    if len(items) > cap:
        raise ResourceLimitError(f"{len(items)} primes exceed the partition cap {cap}")
    out = [SigmaPartition(tuple(frozenset(b) for b in blocks)) for blocks in _set_partitions(items)]
    return sorted(out, key=lambda s: (len(s.blocks), s.literal()))
