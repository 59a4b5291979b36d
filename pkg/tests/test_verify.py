import pytest

from nfmertens.field import Residue, kappa_exact
from nfmertens.verify import verify_all


class TestVerifyAll:
    def test_gaussian_small_grid_all_pass(self, gauss):
        report = verify_all(gauss, [10.0, 100.0, 1000.0], kappa_exact(gauss),
                            truncation_x=1e4)
        assert report.failures == ()
        names = {c.name for c in report.checks}
        assert {"first_mertens_error", "second_mertens_error",
                "third_mertens_error", "ideal_count_envelope",
                "ideal_log_sum_first_bound", "ideal_log_sum_second_bound",
                "legendre_chebyshev_identity", "mertens_constant_interval",
                "residue_lower_zimmert", "residue_upper_louboutin",
                "residue_lower_stark", "a_constant_inequality",
                "norm_power_case_table", "chebyshev_theta_classic"} <= names

    def test_rationals_runs_without_degree_two_constants(self, rationals):
        report = verify_all(rationals, [10.0, 100.0], kappa_exact(rationals),
                            truncation_x=1e4)
        assert report.failures == ()
        assert report.lambda_K is None
        assert report.upsilon_K is None
        names = {c.name for c in report.checks}
        assert "third_mertens_error" in names
        assert "first_mertens_error" not in names

    def test_positive_slack_everywhere(self, gauss):
        report = verify_all(gauss, [10.0, 100.0], kappa_exact(gauss),
                            truncation_x=1e4)
        for check in report.checks:
            assert check.log_slack > 0, check

    def test_failures_listed_first(self, golden):
        # a residue 20x too large breaks the upper bound; the report must
        # surface that failure at the top
        wrong = Residue(value=kappa_exact(golden).value * 20,
                        provenance="exact-class-number-formula")
        report = verify_all(golden, [10.0, 100.0], wrong, truncation_x=1e4)
        assert report.failures
        k = len(report.failures)
        assert all(not c.passed for c in report.checks[:k])
        assert all(c.passed for c in report.checks[k:])
        assert any(c.name == "residue_upper_louboutin" for c in report.failures)

    def test_estimated_kappa_skips_exactness_checks(self, gauss):
        est = Residue(value=0.7854, provenance="estimated-from-ideal-count")
        report = verify_all(gauss, [10.0, 100.0], est, truncation_x=1e4)
        names = {c.name for c in report.checks}
        assert "mertens_constant_interval" not in names
        assert "third_mertens_error" not in names
        assert "ideal_count_envelope" not in names
        # magnitude-level checks still run
        assert "first_mertens_error" in names

    def test_broadbent_toggle(self, gauss):
        report = verify_all(gauss, [10.0, 100.0], kappa_exact(gauss),
                            theta_variant="broadbent", truncation_x=1e4)
        names = {c.name for c in report.checks}
        assert "chebyshev_theta_broadbent" in names
        assert report.failures == ()

    def test_grid_validation(self, gauss):
        with pytest.raises(ValueError):
            verify_all(gauss, [], kappa_exact(gauss))
        with pytest.raises(ValueError):
            verify_all(gauss, [100.0, 10.0], kappa_exact(gauss))
        with pytest.raises(ValueError):
            verify_all(gauss, [1.0, 10.0], kappa_exact(gauss))

    def test_stark_skipped_when_flags_unknown(self, gauss):
        from nfmertens.field import load_field
        bare = load_field("poly = [1, 0, 1]\nclass_number = 1\n"
                          "regulator = 1.0\nroots_of_unity = 4\n")
        report = verify_all(bare, [10.0], kappa_exact(bare), truncation_x=1e4)
        assert report.stark_lower is None
        assert all(c.name != "residue_lower_stark" for c in report.checks)
