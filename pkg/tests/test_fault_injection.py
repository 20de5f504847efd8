"""Each wrong predicate must be caught by at least one of three guard suites."""

import io
import shlex

import pytest

from mutants import MUTANTS
from sigmagroups.verifier import Config, Ctx, get_suite, run_suite
from sigmagroups.verifier import cli
from sigmagroups.verifier.report import EXIT_PASS, EXIT_VIOLATION

GUARDS = ("thm_1_3_ii", "cor_1_6", "example_1_2_3")


def caught_by(mutant_cls):
    for sid in GUARDS:
        r = run_suite(get_suite(sid), Ctx(Config(), mutant_cls()))
        if r.violations:
            return sid, r
    return None, None


@pytest.mark.parametrize("mutant", MUTANTS, ids=lambda m: m.name)
def test_mutant_is_caught_and_replayable(mutant):
    sid, report = caught_by(mutant)
    assert sid is not None, f"{mutant.name} passed every guard suite"
    assert report.status == "FAIL"
    v = report.violations[0]
    args = cli._parser().parse_args(shlex.split(v["replay"])[1:])
    assert cli.check(args, mutant(), io.StringIO()) == EXIT_VIOLATION
    assert cli.check(args, None, io.StringIO()) == EXIT_PASS


def test_guards_are_green_with_correct_predicates():
    for sid in GUARDS:
        assert run_suite(get_suite(sid)).status == "PASS"
