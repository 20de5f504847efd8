import io
import json
import shlex

import pytest

from sigmagroups import corpus
from sigmagroups.lattice import lattice
from sigmagroups.sigma import PiSelector, SigmaPartition, pi_of
from sigmagroups.verifier import SUITES, Config, Ctx, Inst, get_suite, run_suite, to_json, to_text
from sigmagroups.verifier import cli
from sigmagroups.verifier.harness import witness
from sigmagroups.verifier.report import EXIT_PASS, EXIT_USAGE, EXIT_VACUOUS, EXIT_VIOLATION, exit_code


def test_registry_covers_every_statement():
    expected = {"thm_1_3_i", "thm_1_3_ii", "thm_1_3_iii", "lemma_2_1", "lemma_2_2", "lemma_2_3", "lemma_2_4",
                "prop_2_5", "cor_2_6", "prop_2_7", "cor_2_8", "example_1_2_3", "example_42"}
    expected |= {f"cor_1_{k}" for k in range(4, 14)}
    assert set(SUITES) == expected


def test_unknown_suite():
    with pytest.raises(KeyError):
        get_suite("no_such_suite")


def test_cor_1_6_small_run():
    r = run_suite(get_suite("cor_1_6"), Ctx(Config(max_order=100)))
    assert r.violations == []
    assert r.instances_tested >= r.instances_vacuous
    assert r.status == "PASS"


def test_example_42_suite():
    r = run_suite(get_suite("example_42"))
    assert r.status == "PASS"
    assert r.clauses["pi_prime_permutable"].nontrivial == 7


def test_floor_turns_into_warn():
    r = run_suite(get_suite("example_42"), Ctx(Config(floor_override=10_000)))
    assert r.status == "WARN" and exit_code([r]) == EXIT_VACUOUS


def test_report_is_byte_identical_across_runs():
    a = to_json([run_suite(get_suite(s)) for s in ("cor_1_4", "example_1_2_3")])
    b = to_json([run_suite(get_suite(s)) for s in ("cor_1_4", "example_1_2_3")])
    assert a == b
    doc = json.loads(a)
    assert [s["suite"] for s in doc["suites"]] == ["cor_1_4", "example_1_2_3"]
    assert "wall_time" not in doc["suites"][0]
    assert doc["suites"][0]["violations"] == []


def test_empty_report():
    assert json.loads(to_json([])) == {"exit_code": 0, "suites": []}
    assert "0 suites" in to_text([])


def test_timings_are_opt_in():
    r = run_suite(get_suite("example_42"), Ctx(Config(timings=True)))
    assert "wall_time" in json.loads(to_json([r]))["suites"][0]


def test_k_clause_is_recorded():
    r = run_suite(get_suite("thm_1_3_ii"), Ctx(Config(max_order=30)))
    assert r.notes["k_clause_checked"] >= r.notes["k_clause_satisfied"] > 0


def test_k_reading_conjugates_is_not_weaker():
    literal = run_suite(get_suite("thm_1_3_ii"), Ctx(Config(max_order=60)))
    conj = run_suite(get_suite("thm_1_3_ii"), Ctx(Config(max_order=60, k_reading="conjugates")))
    assert conj.violations == []
    assert conj.instances_nontrivial <= literal.instances_nontrivial


def test_ec_mode():
    """Dropping dominance from the D-property breaks containment in A5 but nothing else."""
    assert run_suite(get_suite("thm_1_3_iii"), Ctx(Config(max_order=60, d_property="EC"))).violations == []
    r = run_suite(get_suite("prop_2_7"), Ctx(Config(max_order=60, d_property="EC")))
    assert {(v["group"]["name"], v["sigma"], v["pi"], v["clause"]) for v in r.violations} == {
        ("A5", "2,3|5", "2,3", "contained")}


def _inst_for(entry, sigma, pi, h_pred):
    lat = lattice(entry.group)
    return [i for i in range(len(lat.subs)) if h_pred(lat, i)]


class TestSpecialisation:
    """Where two suites apply to the same instance they must agree."""

    def test_cor_1_11_agrees_with_thm_ii(self):
        ctx = Ctx()
        thm, cor = get_suite("thm_1_3_ii"), get_suite("cor_1_11")
        for e in corpus.default_corpus(corpus.CorpusConfig(max_order=60)):
            lat = lattice(e.group)
            for sigma in ctx.partitions(e):
                if not sigma.blocks:
                    continue
                pi = PiSelector(sigma, frozenset(range(len(sigma.blocks))))
                for h in lat.class_reps():
                    a = thm.evaluate(ctx, Inst("section", e, sigma, pi, h))
                    b = cor.evaluate(ctx, Inst("main", e, sigma, pi, h))
                    if a.hypothesis and b.hypothesis:
                        assert a.conclusion == b.conclusion

    def test_s_permutable_meets_thm_i_hypothesis(self):
        ctx = Ctx()
        thm, cor = get_suite("thm_1_3_i"), get_suite("cor_1_4")
        for e in corpus.default_corpus(corpus.CorpusConfig(max_order=60)):
            lat = lattice(e.group)
            sigma = SigmaPartition.singletons(pi_of(e.order))
            if not sigma.blocks:
                continue
            pi = PiSelector(sigma, frozenset(range(len(sigma.blocks))))
            for h in lat.class_reps():
                c = cor.evaluate(ctx, Inst("main", e, None, None, h))
                if c.hypothesis:
                    t = thm.evaluate(ctx, Inst("main", e, sigma, pi, h))
                    assert t.hypothesis and t.conclusion and c.conclusion


class TestCheckCommand:
    def run(self, *argv):
        out = io.StringIO()
        args = cli._parser().parse_args(["check", *argv])
        code = cli.check(args, out=out)
        return code, out.getvalue()

    def test_s_permutable_false(self):
        code, out = self.run("--group", "corpus:S3", "--sigma", "2|3", "--pi", "2|3", "--subgroup", "(0 1)",
                             "--predicate", "s-permutable")
        assert code == EXIT_PASS and out.strip().endswith("s-permutable: false")

    def test_pi_permutable_on_42_group(self):
        G = corpus.builtin_entry("C7_x_Aut(C7)").group
        H = next(X for X in lattice(G).subs if X.order == 3)
        code, out = self.run("--group", "corpus:C7_x_Aut(C7)", "--sigma", "7|2,3", "--pi", "7",
                             "--subgroup", H.generators[0].cycle_string(), "--predicate", "pi-permutable")
        assert out.strip().endswith("pi-permutable: true")
        assert "Hall {7}-subgroup" in out

    def test_sigma_subnormal_chain_is_printed(self):
        code, out = self.run("--group", "corpus:S4", "--sigma", "2|3", "--subgroup", "(0 1)(2 3)",
                             "--predicate", "sigma-subnormal")
        assert "A_0" in out and out.strip().endswith("true")

    @pytest.mark.parametrize("pred", cli.PREDICATES)
    def test_every_predicate_runs(self, pred):
        code, out = self.run("--group", "corpus:S4", "--sigma", "2|3", "--pi", "3", "--subgroup", "(0 1 2)",
                             "--predicate", pred)
        assert code == EXIT_PASS and out.strip().split(": ")[-1] in ("true", "false")

    def test_replays_suite_instance_with_tuple_extras(self):
        spec = get_suite("lemma_2_2")
        ctx = Ctx()
        entry = corpus.builtin_entry("S4")
        inst = next(i for i in spec.instances(ctx, entry) if i.clause == "4" and i.h not in (0, None))
        rec = witness(inst, spec.id)
        args = cli._parser().parse_args(shlex.split(rec["replay"])[1:])
        out = io.StringIO()
        assert cli.check(args, out=out) == EXIT_PASS
        expected = spec.evaluate(ctx, inst)
        assert f"hypothesis: {str(expected.hypothesis).lower()}" in out.getvalue()


class TestMain:
    def test_containment_error(self, capsys):
        assert cli.main(["check", "--group", "corpus:A4", "--subgroup", "(0 1)", "--predicate", "normal"]) == EXIT_USAGE
        assert "not an element" in capsys.readouterr().err

    def test_uncovered_prime(self, capsys):
        assert cli.main(["check", "--group", "corpus:S3", "--sigma", "2", "--predicate", "normal"]) == EXIT_USAGE

    def test_bad_partition(self):
        assert cli.main(["check", "--group", "corpus:S3", "--sigma", "2,4|3", "--predicate", "normal"]) == EXIT_USAGE

    def test_unknown_predicate(self):
        assert cli.main(["check", "--group", "corpus:S3", "--predicate", "bogus"]) == EXIT_USAGE

    def test_unknown_suite(self, capsys):
        assert cli.main(["verify", "--suite", "no_such_suite"]) == EXIT_USAGE
        assert "unknown suite" in capsys.readouterr().err

    def test_missing_group_file(self):
        assert cli.main(["check", "--group", "/nonexistent.yaml", "--predicate", "normal"]) == EXIT_USAGE

    def test_verify_writes_report(self, tmp_path):
        out = tmp_path / "r.json"
        code = cli.main(["verify", "--suite", "example_42", "--suite", "cor_1_6", "--max-order", "60",
                         "--report", str(out), "--format", "json"])
        assert code == EXIT_PASS
        doc = json.loads(out.read_text())
        assert [s["suite"] for s in doc["suites"]] == ["example_42", "cor_1_6"]

    def test_verify_text_and_list(self, capsys):
        assert cli.main(["verify", "--suite", "example_1_2_3"]) == EXIT_PASS
        assert "example_1_2_3" in capsys.readouterr().out
        assert cli.main(["verify", "--list"]) == EXIT_PASS

    def test_extra_corpus_directory(self, tmp_path):
        (tmp_path / "g.yaml").write_text("name: mine\ndegree: 4\ngenerators: ['(0 1 2 3)', '(0 2)']\n")
        assert cli.main(["verify", "--suite", "cor_1_4", "--corpus", str(tmp_path), "--max-order", "8"]) == EXIT_PASS

    def test_violation_exit_code(self):
        r = run_suite(get_suite("example_42"))
        r.violations.append({"clause": "x", "group": {"name": "g"}, "replay": ""})
        assert exit_code([r]) == EXIT_VIOLATION
