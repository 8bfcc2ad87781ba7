# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import math

import pytest

from fuzzystp.config import get_settings
from fuzzystp.exceptions import DomainError
from fuzzystp.model import compile_model, evaluate
from fuzzystp.scalarization import PayoffTable, global_criterion_value, payoff_table, solve_global_criterion

PUBLISHED_BOUNDS = PayoffTable.from_bounds(8166.6, 8211.6, 770.1767, 785.95)
PUBLISHED_IDEAL = (8166.6, 770.1767)


class TestGlobalCriterionValue:
	def test_distance_from_ideal(self):
		value = global_criterion_value((30.0, 7.0), (20.0, 4.0), 2, (20.0, 4.0))
		assert value == pytest.approx(math.sqrt(0.5**2 + 0.75**2))

	def test_q_one_sums(self):
		assert global_criterion_value((30.0, 7.0), (20.0, 4.0), 1, (20.0, 4.0)) == pytest.approx(1.25)

	def test_zero_at_ideal(self):
		assert global_criterion_value((20.0, 4.0), (20.0, 4.0), 2, (20.0, 4.0)) == 0.0

	def test_values_below_ideal_count_zero(self):
		assert global_criterion_value((19.0, 5.0), (20.0, 4.0), 1, (20.0, 4.0)) == pytest.approx(0.25)

	def test_published_reference(self):
		value = global_criterion_value((8198.6, 771.1), PUBLISHED_IDEAL, 2, PUBLISHED_IDEAL)
		assert value == pytest.approx(0.004098, abs=1e-5)

	@pytest.mark.parametrize("q", [0.5, 0, -1])
	def test_rejects_small_q(self, q):
		with pytest.raises(DomainError, match="q must be >= 1"):
			global_criterion_value((1.0, 1.0), (1.0, 1.0), q, (1.0, 1.0))

	def test_rejects_nonpositive_denominator(self):
		with pytest.raises(DomainError, match="denominators"):
			global_criterion_value((1.0, 1.0), (0.0, 1.0), 2, (0.0, 1.0))


class TestSolveGlobalCriterion:
	def test_two_vehicle_by_ideal(self, two_vehicle):
		result = solve_global_criterion(compile_model(two_vehicle, 0.9, 0.9))
		assert (result.solution.f1, result.solution.f2) == pytest.approx((30.0, 7.0))
		assert result.G == pytest.approx(math.sqrt(0.8125))
		assert result.ideal == pytest.approx((20.0, 4.0))
		assert [point.f1 for point in result.frontier] == pytest.approx([40.0, 30.0, 20.0])
		assert [point.f2 for point in result.frontier] == pytest.approx([4.0, 7.0, 10.0])
		assert 0.0 <= result.gap <= result.G
		assert result.lower_bound <= result.G

	def test_q_one_prefers_fast_plan(self, two_vehicle):
		result = solve_global_criterion(compile_model(two_vehicle, 0.9, 0.9), q=1)
		assert (result.solution.f1, result.solution.f2) == pytest.approx((40.0, 4.0))
		assert result.G == pytest.approx(1.0)

	def test_by_range(self, two_vehicle):
		result = solve_global_criterion(compile_model(two_vehicle, 0.9, 0.9), normalization="by-range")
		assert (result.solution.f1, result.solution.f2) == pytest.approx((30.0, 7.0))
		assert result.G == pytest.approx(math.sqrt(0.5))
		assert result.normalization == "by-range"

	def test_frontier_f1_strictly_decreasing(self, two_vehicle):
		result = solve_global_criterion(compile_model(two_vehicle, 0.9, 0.9), resolution=0.5)
		values = [point.f1 for point in result.frontier]
		assert all(later < earlier for earlier, later in zip(values, values[1:]))
		assert all(point.G >= result.G for point in result.frontier)

	def test_lane_hits_ideal(self, lane):
		model = compile_model(lane, 0.9, 0.9)
		for q in (1, 2):
			result = solve_global_criterion(model, q=q)
			assert result.G == pytest.approx(0.0, abs=1e-9)
			assert (result.solution.f1, result.solution.f2) == pytest.approx((15.0, 7.0))
			assert len(result.frontier) == 1

	def test_sweep_limit(self, two_vehicle):
		settings = get_settings().override(sweep_limit=1)
		result = solve_global_criterion(compile_model(two_vehicle, 0.9, 0.9), settings=settings)
		assert len(result.frontier) == 1
		assert result.lower_bound <= result.G

	@pytest.mark.parametrize(
		"options, message",
		[
			({"q": 0.5}, "q must be >= 1"),
			({"resolution": 0.0}, "resolution must be positive"),
			({"normalization": "by-median"}, "Unknown normalization"),
		],
	)
	def test_rejects_bad_options(self, lane, options, message):
		with pytest.raises(DomainError, match=message):
			solve_global_criterion(compile_model(lane, 0.9, 0.9), **options)

	@pytest.mark.slow
	def test_published_ideal(self, steel):
		result = solve_global_criterion(
			compile_model(steel, 0.9, 0.9), ideal=PUBLISHED_IDEAL, bounds=PUBLISHED_BOUNDS
		)
		reference = global_criterion_value((8198.6, 771.1), PUBLISHED_IDEAL, 2, PUBLISHED_IDEAL)
		assert result.G <= reference + 1e-3
		assert evaluate(steel, result.solution, 0.9, 0.9).feasible
		assert result.gap >= 0.0

	@pytest.mark.slow
	def test_published_instance_sweep(self, steel):
		model = compile_model(steel, 0.9, 0.9)
		bounds = payoff_table(model)
		result = solve_global_criterion(model, bounds=bounds, settings=get_settings().override(sweep_limit=3))
		f1 = [point.f1 for point in result.frontier]
		f2 = [point.f2 for point in result.frontier]
		assert 2 <= len(result.frontier) <= 3
		assert all(later < earlier for earlier, later in zip(f1, f1[1:]))
		assert all(later >= earlier - 1e-6 for earlier, later in zip(f2, f2[1:]))
		assert result.gap >= 0.0
		for point in result.frontier:
			assert evaluate(steel, point.solution, 0.9, 0.9).feasible
