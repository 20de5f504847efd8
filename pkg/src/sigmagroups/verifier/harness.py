"""Instances, suite specs and the loop that turns them into a report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..corpus import CorpusConfig, CorpusEntry, default_corpus
from ..groups import quotient
from ..lattice import Lattice, lattice
from ..perm import PermGroup, ResourceLimitError
from ..sigma import PiSelector, SigmaPartition, all_partitions, pi_of
from .predicates import DEFAULT, Predicates


@dataclass
class Inst:
    """One (group, sigma, Pi, subgroup, extras) instance of a suite clause.

    Subgroups are ids in the root lattice of ``entry.group``; ``extras`` maps
    a name to an id or a tuple of ids.
    """

    clause: str
    entry: CorpusEntry
    sigma: SigmaPartition | None = None
    pi: PiSelector | None = None
    h: int | None = None
    extras: dict = field(default_factory=dict)


@dataclass
class Verdict:
    hypothesis: bool
    conclusion: bool | None = None
    nontrivial: bool = False
    detail: dict = field(default_factory=dict)


@dataclass
class SuiteSpec:
    id: str
    title: str
    instances: Callable[["Ctx"], Iterator[Inst]]
    evaluate: Callable[["Ctx", Inst], Verdict]
    clauses: tuple[str, ...] = ("main",)
    floor: int = 10
    clause_floors: dict = field(default_factory=dict)
    max_order: int = 200
    pinned: frozenset[str] = frozenset()
    equivariant: bool = False

    def floor_of(self, clause: str) -> int:
        return self.clause_floors.get(clause, self.floor)


@dataclass
class Config:
    max_order: int | None = None
    corpus_dirs: tuple[str, ...] = ()
    d_property: str = "ECD"
    k_reading: str = "literal"
    prime_cap: int = 4
    hall_cap: int = 512
    skip_budget: int = 50
    floor_override: int | None = None
    spot_check_every: int = 37
    timings: bool = False


class Ctx:
    """Per-run state: config, predicate bundle, quotient caches."""

    def __init__(self, config: Config | None = None, predicates: Predicates | None = None):
        self.config = config or Config()
        self.pred = predicates or DEFAULT
        self.notes: dict[str, int] = {}

    def note(self, key: str, amount: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + amount

    def corpus(self, spec: SuiteSpec) -> list[CorpusEntry]:
        cap = self.config.max_order if self.config.max_order is not None else spec.max_order
        return default_corpus(CorpusConfig(max_order=cap, pinned_tags=spec.pinned,
                                           extra_dirs=self.config.corpus_dirs))

    def partitions(self, entry: CorpusEntry) -> list[SigmaPartition]:
        primes = pi_of(entry.order)
        if len(primes) > self.config.prime_cap:
            raise ResourceLimitError(f"{len(primes)} primes exceed the partition cap {self.config.prime_cap}")
        return all_partitions(primes)

    @staticmethod
    def lat(entry: CorpusEntry) -> Lattice:
        return lattice(entry.group)

    def quotient_lattice(self, lat: Lattice, n: int) -> tuple[Lattice, list[int]]:
        """Lattice of ``G/subs[n]`` and the image id of every id of ``lat``."""
        key = ("qlat", n)
        hit = lat.cache.get(key)
        if hit is None:
            Q, qmap = quotient(lat.group, lat.subs[n])
            qlat = lattice(Q)
            images = [qlat.id(qmap.image(S)) for S in lat.subs]
            hit = lat.cache[key] = (qlat, images)
        return hit


def subgroup_repr(G: PermGroup) -> list[str]:
    gens = [g.cycle_string() for g in G.generators]
    return gens or ["()"]


def entry_source(entry: CorpusEntry) -> str:
    src = entry.provenance.get("source")
    return src if src else f"corpus:{entry.name}"


def witness(inst: Inst, suite: str, verdict: Verdict | None = None) -> dict:
    lat = lattice(inst.entry.group)

    def ids_repr(v):
        if isinstance(v, tuple):
            return [subgroup_repr(lat.subs[i]) for i in v]
        return subgroup_repr(lat.subs[v])

    rec = {
        "suite": suite,
        "clause": inst.clause,
        "group": {"name": inst.entry.name, "source": entry_source(inst.entry),
                  "order": inst.entry.order, "degree": inst.entry.group.degree,
                  "generators": subgroup_repr(inst.entry.group)},
        "sigma": inst.sigma.literal() if inst.sigma is not None else None,
        "pi": inst.pi.literal() if inst.pi is not None else None,
        "subgroup": subgroup_repr(lat.subs[inst.h]) if inst.h is not None else None,
        "extras": {k: ids_repr(v) for k, v in sorted(inst.extras.items())},
    }
    if verdict is not None and verdict.detail:
        rec["detail"] = verdict.detail
    rec["replay"] = replay_command(rec)
    return rec


def _quote(s: str) -> str:
    return "'" + s.replace("'", "'\\''") + "'"


def replay_command(rec: dict) -> str:
    parts = ["sigmaverify", "check", "--group", _quote(rec["group"]["source"])]
    if rec["sigma"] is not None:
        parts += ["--sigma", _quote(rec["sigma"])]
    if rec["pi"] is not None:
        parts += ["--pi", _quote(rec["pi"])]
    if rec["subgroup"] is not None:
        parts += ["--subgroup", _quote(",".join(rec["subgroup"]))]
    parts += ["--predicate", rec["suite"], "--clause", rec["clause"]]
    for name, gens in rec["extras"].items():
        if gens and isinstance(gens[0], list):
            value = "|".join(",".join(g) for g in gens)
        else:
            value = ",".join(gens)
        parts += ["--extra", _quote(f"{name}={value}")]
    return " ".join(parts)


@dataclass
class ClauseTally:
    tested: int = 0
    vacuous: int = 0
    nontrivial: int = 0
    violations: int = 0


@dataclass
class SuiteReport:
    id: str
    title: str
    floor: int
    clauses: dict[str, ClauseTally]
    clause_floors: dict[str, int]
    violations: list[dict]
    resource_skips: list[dict]
    notes: dict[str, int]
    groups: int
    wall_time: float | None = None
    skip_budget: int = 50

    @property
    def instances_tested(self) -> int:
        return sum(c.tested for c in self.clauses.values())

    @property
    def instances_vacuous(self) -> int:
        return sum(c.vacuous for c in self.clauses.values())

    @property
    def instances_nontrivial(self) -> int:
        return sum(c.nontrivial for c in self.clauses.values())

    def below_floor(self) -> list[str]:
        return [name for name, c in self.clauses.items() if c.nontrivial < self.clause_floors[name]]

    @property
    def status(self) -> str:
        if self.violations:
            return "FAIL"
        if len(self.resource_skips) > self.skip_budget:
            return "SKIP"
        if self.below_floor():
            return "WARN"
        return "PASS"


def run_suite(spec: SuiteSpec, ctx: Ctx | None = None) -> SuiteReport:
    ctx = ctx or Ctx()
    ctx.notes = {}
    start = time.perf_counter()
    tallies = {c: ClauseTally() for c in spec.clauses}
    violations: list[dict] = []
    skips: list[dict] = []
    seen_groups: set[str] = set()
    count = 0
    for inst in _safe_instances(spec, ctx, skips):
        seen_groups.add(inst.entry.name)
        tally = tallies.setdefault(inst.clause, ClauseTally())
        try:
            v = spec.evaluate(ctx, inst)
        except ResourceLimitError as exc:
            skips.append({"group": inst.entry.name, "clause": inst.clause, "reason": str(exc)})
            continue
        tally.tested += 1
        if not v.hypothesis:
            tally.vacuous += 1
        else:
            if v.nontrivial:
                tally.nontrivial += 1
            if v.conclusion is False:
                tally.violations += 1
                violations.append(witness(inst, spec.id, v))
        count += 1
        every = ctx.config.spot_check_every
        if (spec.equivariant and every and count % every == 0 and inst.h is not None
                and not inst.extras):
            _spot_check(spec, ctx, inst, v, tallies, violations)
    floors = {c: (ctx.config.floor_override if ctx.config.floor_override is not None else spec.floor_of(c))
              for c in tallies}
    if "equivariance" in floors:
        floors["equivariance"] = 0
    return SuiteReport(spec.id, spec.title, spec.floor if ctx.config.floor_override is None else ctx.config.floor_override,
                       tallies, floors, violations, skips, dict(sorted(ctx.notes.items())), len(seen_groups),
                       time.perf_counter() - start if ctx.config.timings else None, ctx.config.skip_budget)


def _safe_instances(spec: SuiteSpec, ctx: Ctx, skips: list[dict]) -> Iterator[Inst]:
    """Iterate a suite's instances group by group, turning resource errors into skips."""
    for entry in ctx.corpus(spec):
        try:
            yield from spec.instances(ctx, entry)
        except ResourceLimitError as exc:
            skips.append({"group": entry.name, "clause": "*", "reason": str(exc)})


def _spot_check(spec, ctx, inst, v, tallies, violations) -> None:
    """Re-evaluate with the subgroup replaced by a conjugate; verdicts must agree."""
    lat = lattice(inst.entry.group)
    conj = [c for c in lat.classes()[lat.class_of(inst.h)] if c != inst.h]
    if not conj:
        return
    other = Inst(inst.clause, inst.entry, inst.sigma, inst.pi, conj[0], dict(inst.extras))
    w = spec.evaluate(ctx, other)
    tally = tallies.setdefault("equivariance", ClauseTally())
    tally.tested += 1
    tally.nontrivial += 1
    if (w.hypothesis, w.conclusion if w.hypothesis else None) != (v.hypothesis, v.conclusion if v.hypothesis else None):
        tally.violations += 1
        violations.append(witness(other, spec.id, Verdict(True, False, detail={"equivariance_with": inst.h})))
