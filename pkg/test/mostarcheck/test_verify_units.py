import pytest
from frozendict import frozendict

from mostarcheck import MostarCheckError, verify
from mostarcheck.corpus import corpus
from mostarcheck.info import ClaimOutcome, Status, VerificationReport
from pymostar.formulas import CLAIMS, ClaimKind, FormulaValue, Suite
from pymostar.families import path_graph


@pytest.fixture(scope="module")
def small_corpus():
    return corpus(4, 7, random_per_order=3, pair_max_n=3, pair_random_per_order=1, triple_max_n=2)


def _statuses(outcomes: list[ClaimOutcome]) -> set[Status]:
    return {outcome.status for outcome in outcomes}


def test_every_claim_has_a_check():
    assert verify.unchecked_claims() == []


class TestCheckClaim:

    def test_families(self, small_corpus):
        outcomes = verify.check_claim("prop.families", small_corpus)
        assert _statuses(outcomes) == {Status.exact_match}
        assert len(outcomes) == 8 + 10 + 5 + 50
        assert max(outcome.params["s"] for outcome in outcomes) == 50

    def test_bottleneck_from_p3(self, small_corpus):
        (outcome,) = verify.check_claim("ex.bottleneck", small_corpus, {"G": "path(3)"})
        assert (outcome.oracle, outcome.formula, outcome.status) == (32, 24, Status.violated)

    def test_bottleneck_small(self, small_corpus):
        outcomes = verify.check_claim("ex.bottleneck", small_corpus, {"G": "path(2)"})
        assert outcomes[0].status == Status.exact_match

    def test_indu_bala_bound_counterexample(self, small_corpus):
        (outcome,) = verify.check_claim("thm.indu_bala.bound", small_corpus, {"G": "path(1)", "H": "star(5)"})
        assert (outcome.oracle, outcome.formula, outcome.status) == (144, 136, Status.violated)
        (exact,) = verify.check_claim("derived.indu_bala.exact", small_corpus, {"G": "path(1)", "H": "star(5)"})
        assert exact.status == Status.exact_match

    def test_bound_classification(self, small_corpus):
        (tight,) = verify.check_claim("thm.corona.bound", small_corpus, {"G": "path(2)", "H": "path(1)"})
        assert (tight.oracle, tight.formula, tight.status) == (4, 4, Status.bound_tight)
        (holds,) = verify.check_claim("thm.corona.bound", small_corpus, {"G": "path(2)", "H": "path(2)"})
        assert (holds.oracle, holds.formula, holds.status) == (12, 20, Status.bound_holds)

    def test_disconnected_skipped(self, small_corpus):
        (outcome,) = verify.check_claim("thm.corona.bound", small_corpus, {"G": "empty(2)", "H": "path(1)"})
        assert outcome.status == Status.skipped
        assert outcome.reason == verify.DISCONNECTED
        assert outcome.oracle is None and outcome.formula is None

    def test_precondition_skipped(self, small_corpus):
        (outcome,) = verify.check_claim("derived.lex.exact", small_corpus, {"G": "path(1)", "H": "path(2)"})
        assert outcome.status == Status.skipped
        assert "two vertices" in outcome.reason

    def test_total_irregularity_measure(self, small_corpus):
        (outcome,) = verify.check_claim("prop.irr_t.bound", small_corpus, {"G": "path(4)"})
        assert (outcome.oracle, outcome.formula, outcome.status) == (4, 6, Status.bound_holds)

    def test_cartesian_factor_lists(self, small_corpus):
        outcomes = verify.check_claim("thm.cartesian", small_corpus)
        assert any(len(outcome.params["factors"]) == 3 for outcome in outcomes)
        assert Status.violated not in _statuses(outcomes)

    def test_cartesian_named_factors(self, small_corpus):
        outcomes = verify.check_claim("thm.cartesian", small_corpus)
        factors = {tuple(outcome.params["factors"]) for outcome in outcomes}
        assert ("cycle(6)", "star(4)") in factors
        assert ("path(5)", "cycle(6)") in factors

    def test_regular_join_pool(self, small_corpus):
        outcomes = verify.check_claim("cor.join.regular", small_corpus)
        assert ("hypercube(3)", "cycle(6)") in {(outcome.params["G"], outcome.params["H"]) for outcome in outcomes}
        assert _statuses(outcomes) == {Status.exact_match}

    def test_ladder_sweep(self, small_corpus):
        outcomes = verify.check_claim("ex.ladder", small_corpus)
        assert sorted(outcome.params["a"] for outcome in outcomes) == list(range(1, 11))

    def test_partners_on_either_side(self, small_corpus):
        pairs = {(outcome.params["G"], outcome.params["H"])
                 for outcome in verify.check_claim("derived.corona.exact", small_corpus)}
        assert {("cycle(4)", "path(3)"), ("path(3)", "cycle(4)"), ("complete(1)", "complete(4)")} <= pairs

    def test_sorted(self, small_corpus):
        outcomes = verify.check_claim("derived.join.exact", small_corpus)
        assert outcomes == sorted(outcomes, key=lambda outcome: outcome.sort_key)

    def test_unknown_claim(self, small_corpus):
        with pytest.raises(MostarCheckError):
            verify.check_claim("thm.tensor", small_corpus)

    def test_missing_parameter(self, small_corpus):
        with pytest.raises(MostarCheckError):
            verify.check_claim("thm.join.bound", small_corpus, {"G": "path(2)"})

    def test_shared_oracle(self, small_corpus):
        oracle = verify.Oracle()
        verify.check_claim("ex.wheel", small_corpus, oracle=oracle)
        assert oracle.mostar(path_graph(4)) == 4
        assert path_graph(4) in oracle._mostar


class TestSuites:

    def test_suite_claims(self):
        assert len(verify.suite_claims(verify.ALL_SUITES)) == len(CLAIMS)
        assert all(claim.suite == Suite.bounds for claim in verify.suite_claims("bounds"))

    def test_unknown_suite(self):
        with pytest.raises(MostarCheckError):
            verify.suite_claims("proofs")

    def test_exact_suite_clean(self, small_corpus):
        report = verify.run_suite("exact", small_corpus, block_size=3)
        assert report.violations() == []
        assert set(report.summary) == {claim.claim_id for claim in verify.suite_claims("exact")}

    def test_bounds_suite_clean(self, small_corpus):
        report = verify.run_suite("bounds", small_corpus)
        assert verify.gate_violations(report) == []
        # the Indu-Bala bound is reported, not gated
        assert report.summary["thm.indu_bala.bound"].holds + report.summary["thm.indu_bala.bound"].tight > 0

    def test_examples_suite_reports_discrepancies(self, small_corpus):
        report = verify.run_suite("examples", small_corpus)
        violated = {outcome.claim_id for outcome in report.violations()}
        assert {"ex.bottleneck", "ex.bridge.path", "ex.cone"} <= violated
        assert verify.gate_violations(report) == []

    def test_report_sorted(self, small_corpus):
        report = verify.run_suite("bounds", small_corpus)
        keys = [outcome.sort_key for outcome in report.outcomes]
        assert keys == sorted(keys)

    def test_gate_violations(self):
        gated = ClaimOutcome("thm.join.bound", frozendict(), 5, 4, ClaimKind.upper_bound, Status.violated)
        reported = ClaimOutcome("ex.cone", frozendict(), 6, 18, ClaimKind.claimed_exact, Status.violated)
        report = VerificationReport(frozendict(), (reported, gated), frozendict())
        assert verify.gate_violations(report) == [gated]

    def test_wrong_formula_is_caught(self, small_corpus, monkeypatch):
        def bind(ctx, p):
            return verify.Binding(path_graph(3), FormulaValue("prop.families", 0))
        check = verify.Check("prop.families", lambda ctx: [{"s": 3}], bind)
        monkeypatch.setitem(verify._CHECKS, "prop.families", check)
        report = verify.run_suite("exact", small_corpus)
        assert [outcome.claim_id for outcome in verify.gate_violations(report)] == ["prop.families"]
