"""Command-line front end: ``sigmaverify verify`` and ``sigmaverify check``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..corpus import CorpusEntry, resolve_group
from ..embedding import is_pi_permutable, is_schmidt, is_sigma_subnormal, sigma_nilpotent_residual
from ..hall import complete_hall_sets, hall_subgroups
from ..lattice import Lattice, lattice
from ..perm import GroupError, PermGroup, ResourceLimitError, parse_generator_list
from ..sigma import PiSelector, SigmaPartition, pi_of
from .harness import Config, Ctx, Inst, run_suite, subgroup_repr
from .predicates import Predicates
from .report import EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE, EXIT_VIOLATION, exit_code, to_json, to_text
from .suites import SUITES, get_suite

PREDICATES = (
    "s-permutable", "s-semipermutable", "pi-permutable", "pi-full", "sylow-type", "sigma-subnormal",
    "sigma-nilpotent", "sigma-soluble", "sigma-primary", "normal", "subnormal", "pi-closed",
    "schmidt", "residual", "hall",
)


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sigmaverify", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites over the corpus")
    v.add_argument("--suite", action="append", default=None,
                   help="suite id or 'all' (repeatable; default all)")
    v.add_argument("--max-order", type=int, default=None, help="override every suite's order cap")
    v.add_argument("--corpus", action="append", default=[], metavar="DIR",
                   help="extra directory of group files (repeatable)")
    v.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--d-property", choices=("ECD", "EC"), default="ECD")
    v.add_argument("--k-reading", choices=("literal", "conjugates"), default="literal")
    v.add_argument("--floor", type=int, default=None, help="override the nonvacuity floor")
    v.add_argument("--skip-budget", type=int, default=50)
    v.add_argument("--timings", action="store_true", help="record wall time per suite")
    v.add_argument("--list", action="store_true", help="list suite ids and exit")

    c = sub.add_parser("check", help="evaluate one predicate or replay one suite instance")
    c.add_argument("--group", required=True, help="group file or corpus:NAME")
    c.add_argument("--sigma", help="partition literal such as '2,7|3' (default: singletons)")
    c.add_argument("--pi", help="Pi literal, blocks separated by '|' (default: every block)")
    c.add_argument("--subgroup", help="generators in cycle notation, e.g. '(0 1),(2 3)'")
    c.add_argument("--predicate", required=True, help=f"one of {', '.join(PREDICATES)} or a suite id")
    c.add_argument("--clause", default=None, help="suite clause (suite replay only)")
    c.add_argument("--extra", action="append", default=[], metavar="NAME=GENS",
                   help="extra subgroup for a suite replay; '|' separates a tuple of subgroups")
    c.add_argument("--d-property", choices=("ECD", "EC"), default="ECD")
    return ap


# ---------------------------------------------------------------------------
# verify


def _verify(args) -> int:
    if args.list:
        for sid, spec in SUITES.items():
            print(f"{sid:<16} {spec.title}")
        return EXIT_PASS
    wanted = args.suite or ["all"]
    ids: list[str] = []
    for s in wanted:
        if s == "all":
            ids.extend(x for x in SUITES if x not in ids)
        elif s in SUITES:
            if s not in ids:
                ids.append(s)
        else:
            raise UsageError(f"unknown suite {s!r}; known: {', '.join(SUITES)}")
    for d in args.corpus:
        if not Path(d).is_dir():
            raise UsageError(f"corpus directory {d!r} does not exist")
    config = Config(max_order=args.max_order, corpus_dirs=tuple(args.corpus), d_property=args.d_property,
                    k_reading=args.k_reading, floor_override=args.floor, skip_budget=args.skip_budget,
                    timings=args.timings)
    ctx = Ctx(config)
    reports = [run_suite(get_suite(s), ctx) for s in ids]
    doc = to_json(reports) if args.format == "json" else to_text(reports)
    if args.report:
        Path(args.report).write_text(doc)
    else:
        sys.stdout.write(doc)
    return exit_code(reports)


# ---------------------------------------------------------------------------
# check


def _sigma_and_pi(args, G: PermGroup) -> tuple[SigmaPartition, PiSelector]:
    sigma = SigmaPartition.parse(args.sigma) if args.sigma else SigmaPartition.singletons(pi_of(G.order))
    missing = pi_of(G.order) - sigma.covered
    if missing:
        raise UsageError(f"primes {sorted(missing)} of |G| = {G.order} are not covered by {sigma.literal()}")
    if args.pi:
        pi = PiSelector.parse(sigma, args.pi)
    elif sigma.blocks:
        pi = PiSelector(sigma, frozenset(range(len(sigma.blocks))))
    else:
        pi = None
    return sigma, pi


def _subgroup(G: PermGroup, text: str | None) -> PermGroup:
    if text is None:
        return G
    return G.subgroup(parse_generator_list(text, G.degree))


def _gens(H: PermGroup) -> str:
    return ", ".join(subgroup_repr(H))


def check(args, predicates: Predicates | None = None, out=None) -> int:
    """Evaluate ``args.predicate`` and print the verdict; returns an exit code."""
    out = out or sys.stdout
    entry = resolve_group(args.group)
    G = entry.group
    sigma, pi = _sigma_and_pi(args, G)
    H = _subgroup(G, args.subgroup)
    if args.predicate in SUITES:
        return _replay(args, entry, sigma, pi, predicates, out)
    if args.predicate not in PREDICATES:
        raise UsageError(f"unknown predicate {args.predicate!r}; known: {', '.join(PREDICATES)} or a suite id")
    lat = lattice(G)
    h = lat.id(H)
    P = predicates or Predicates()
    name = args.predicate
    print(f"group {entry.name} (order {G.order}), subgroup of order {H.order}: {_gens(H)}", file=out)
    print(f"sigma = {sigma.literal()}" + (f", Pi = {pi.literal()}" if pi else ""), file=out)
    if name == "s-permutable":
        verdict = P.s_permutable(lat, h, lat.top)
    elif name == "s-semipermutable":
        verdict = P.s_semipermutable(lat, h, lat.top)
    elif name == "pi-permutable":
        verdict = P.pi_permutable(lat, h, lat.top, pi)
        if verdict and type(P) is Predicates:
            _, witness = is_pi_permutable(H, G, pi)
            for b, X in witness.members:
                print(f"  Hall {{{','.join(map(str, sorted(sigma.blocks[b])))}}}-subgroup: {_gens(X)}", file=out)
    elif name == "pi-full":
        verdict = P.pi_full(lat, h, pi)
        if verdict:
            print(f"  complete Hall Pi-sets: {len(complete_hall_sets(H, pi))}", file=out)
    elif name == "sylow-type":
        verdict = P.sylow_type(lat, h, pi, args.d_property)
    elif name == "sigma-subnormal":
        verdict = P.sigma_subnormal(lat, h, lat.top, sigma)
        if verdict:
            _, chain = is_sigma_subnormal(H, G, sigma)
            for step, (K, kind) in enumerate(zip(chain.chain, ("start",) + tuple(chain.step_kinds))):
                print(f"  A_{step} (order {K.order}, {_kind(kind, sigma)}): {_gens(K)}", file=out)
    elif name == "sigma-nilpotent":
        verdict = P.sigma_nilpotent(H, sigma)
    elif name == "sigma-soluble":
        verdict = P.sigma_soluble(H, sigma)
    elif name == "sigma-primary":
        verdict = len(sigma.block_ids_of(H.order)) <= 1
    elif name == "normal":
        verdict = P.is_normal(lat, h, lat.top)
    elif name == "subnormal":
        verdict = P.subnormal(lat, h, lat.top)
    elif name == "pi-closed":
        verdict = P.pi_closed(lat, h, pi.primes)
    elif name == "schmidt":
        verdict = is_schmidt(H)
    elif name == "residual":
        R = sigma_nilpotent_residual(H, sigma)
        print(f"  sigma-nilpotent residual of order {R.order}: {_gens(R)}", file=out)
        verdict = True
    else:  # hall
        halls = hall_subgroups(H, pi.primes)
        for X in halls:
            print(f"  Hall Pi-subgroup of order {X.order}: {_gens(X)}", file=out)
        verdict = bool(halls)
    print(f"{name}: {str(verdict).lower()}", file=out)
    return EXIT_PASS


def _kind(kind, sigma: SigmaPartition) -> str:
    if kind == "start":
        return "subgroup"
    if kind == "normal":
        return "normal step"
    return f"sigma-primary step, block {{{','.join(map(str, sorted(sigma.blocks[kind[1]])))}}}"


def _extra_ids(lat: Lattice, G: PermGroup, items: list[str]) -> dict:
    extras: dict = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"--extra expects NAME=GENS, got {item!r}")
        name, value = item.split("=", 1)
        parts = value.split("|")
        ids = tuple(lat.id(_subgroup(G, p)) for p in parts)
        extras[name.strip()] = ids if len(parts) > 1 or name.strip() == "Hall" else ids[0]
    return extras


def _replay(args, entry: CorpusEntry, sigma, pi, predicates, out) -> int:
    spec = get_suite(args.predicate)
    clause = args.clause or spec.clauses[0]
    if clause not in spec.clauses:
        raise UsageError(f"suite {spec.id} has clauses {', '.join(spec.clauses)}")
    lat = lattice(entry.group)
    h = lat.id(_subgroup(entry.group, args.subgroup)) if args.subgroup else None
    inst = Inst(clause, entry, sigma if args.sigma else None, pi if args.pi else None, h,
                _extra_ids(lat, entry.group, args.extra))
    ctx = Ctx(Config(d_property=args.d_property), predicates)
    v = spec.evaluate(ctx, inst)
    print(f"suite {spec.id} clause {clause} on {entry.name} (order {entry.order})", file=out)
    print(f"hypothesis: {str(v.hypothesis).lower()}", file=out)
    if v.hypothesis:
        print(f"conclusion: {str(v.conclusion).lower()}", file=out)
    for k, val in sorted(v.detail.items()):
        print(f"  {k}: {val}", file=out)
    if v.hypothesis and v.conclusion is False:
        print("VIOLATION", file=out)
        return EXIT_VIOLATION
    print("ok", file=out)
    return EXIT_PASS


# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        return check(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, GroupError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
