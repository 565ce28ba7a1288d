"""Cover classifications and the sampled verifier."""

import math

import pytest

from coarsepd import (
    DELTA,
    bottleneck_1pt,
    brick_classify,
    broken_interval_classify,
    diagram_point_sampler,
    interval_classify,
    line_sampler,
    lower_bound_demo,
    verify_cover,
)


class TestIntervalClassify:
    def test_first_interval(self):
        label = interval_classify(0.5, 1.0)
        assert (label.family, label.set_id) == (0, 0)

    def test_second_interval(self):
        label = interval_classify(2.5, 1.0)
        assert (label.family, label.set_id) == (1, 1)

    def test_same_family_sets_are_2R_apart(self):
        # set 0 covers [0, 2), set 2 covers [4, 6): gap 2 > R = 1
        assert interval_classify(1.999, 1.0).set_id == 0
        assert interval_classify(4.0, 1.0).set_id == 2
        assert interval_classify(4.0, 1.0).family == interval_classify(1.0, 1.0).family

    def test_negative_axis(self):
        label = interval_classify(-0.5, 1.0)
        assert label.set_id == -1 and label.family == 1


class TestBrickClassify:
    def test_delta_in_near_diagonal_set(self):
        label = brick_classify(DELTA, 1.0)
        assert (label.family, label.set_id) == (0, "N")

    def test_low_persistence_in_near_diagonal_set(self):
        label = brick_classify((0.0, 3.0), 1.0)
        assert (label.family, label.set_id) == (0, "N")

    def test_worked_formula(self):
        # q = 50, row j = floor((50-2)/2) = 24, brick i = floor((50-48)/4) = 0,
        # color (2*0+24) % 3 = 0 and j >= 1 keeps the brick separate
        label = brick_classify((0.0, 100.0), 1.0)
        assert label.family == 0
        assert label.set_id == ("brick", 0, 24)

    def test_row0_color0_merges_into_near_diagonal_set(self):
        # q in (2, 4], u in [0, 4) has i = j = 0, color 0
        label = brick_classify((0.0, 6.0), 1.0)  # u = 3, q = 3
        assert (label.family, label.set_id) == (0, "N")

    def test_partition_deterministic(self):
        a = (2.0, 30.0)
        assert brick_classify(a, 1.0) == brick_classify(a, 1.0)

    @pytest.mark.parametrize("s", [0.5, 3.0, 100.0])
    def test_scale_equivariance(self, s, rng):
        for _ in range(200):
            q = float(rng.uniform(0.01, 100.0))
            u = float(rng.uniform(q, q + 200.0))
            a = (u - q, u + q)
            scaled = ((u - q) * s, (u + q) * s)
            l1 = brick_classify(a, 1.0)
            l2 = brick_classify(scaled, s)
            assert l1 == l2


class TestVerifyCover:
    def test_brick_cover_no_violations(self):
        sample, perturb = diagram_point_sampler(1e4)
        report = verify_cover(sample, brick_classify, bottleneck_1pt,
                              1.0, 10000, 7, 6.0, perturb=perturb)
        assert report.ok
        assert report.min_same_family_cross_set_distance > 1.0
        assert report.max_set_diameter_observed <= 6.0

    def test_interval_cover_no_violations(self):
        sample, perturb = line_sampler(5000.0)
        report = verify_cover(sample, interval_classify,
                              lambda a, b: abs(a - b), 5.0, 10000, 3, 10.0,
                              perturb=perturb)
        assert report.ok
        assert report.uniform_bound_claimed == 10.0

    def test_broken_labeling_detected(self):
        sample, perturb = line_sampler(100.0)
        report = verify_cover(sample, broken_interval_classify,
                              lambda a, b: abs(a - b), 1.0, 10000, 11, 2.0,
                              perturb=perturb)
        assert len(report.violations) >= 1
        assert not report.ok

    def test_trials_must_be_positive(self):
        sample, _ = line_sampler()
        with pytest.raises(ValueError):
            verify_cover(sample, interval_classify, lambda a, b: abs(a - b),
                         1.0, 0, 0, 2.0)


class TestLowerBoundDemo:
    def test_sup_metric_preserved(self):
        report = lower_bound_demo(2, 10.0, 200, p=None, seed=1)
        assert report.max_deviation <= 1e-9

    def test_degenerate_pair(self):
        report = lower_bound_demo(1, 3.0, 1, p=None, seed=0)
        assert report.max_deviation <= 1e-9

    def test_l2_at_large_scale(self):
        report = lower_bound_demo(3, 1000.0, 100, p=2, seed=5)
        assert report.max_deviation <= 1e-6

    def test_dimension_guard(self):
        from coarsepd import TooLarge
        with pytest.raises(TooLarge):
            lower_bound_demo(4, 1.0, 10)
