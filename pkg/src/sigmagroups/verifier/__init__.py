"""Exhaustive verification of subgroup-embedding statements over a group corpus."""

from .harness import Config, Ctx, Inst, SuiteReport, SuiteSpec, Verdict, run_suite
from .predicates import Predicates
from .report import exit_code, to_json, to_text
from .suites import SUITES, get_suite

__all__ = ["Config", "Ctx", "Inst", "Predicates", "SUITES", "SuiteReport", "SuiteSpec", "Verdict",
           "exit_code", "get_suite", "run_suite", "to_json", "to_text"]
