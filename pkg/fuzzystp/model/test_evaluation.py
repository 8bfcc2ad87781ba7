# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import pytest

from fuzzystp.engine import Sense
from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy import TrapezoidalFuzzy
from fuzzystp.io import parse_solution
from fuzzystp.model import MistpSolution, evaluate, fuzzy_objectives


class TestEvaluate:
	def test_published_plans_are_feasible(self, steel, fixtures_dir):
		for name in ("table6_solution.json", "table7_solution.json"):
			report = evaluate(steel, parse_solution(fixtures_dir / name, steel), 0.9, 0.9)
			assert report.feasible, report.violated_rows()
			assert report.violations == ()

	def test_published_plan_objectives(self, steel, fixtures_dir):
		first = evaluate(steel, parse_solution(fixtures_dir / "table6_solution.json", steel), 0.9, 0.9)
		assert first.f1 == pytest.approx(8112.0)
		assert first.f2 == pytest.approx(486.98 + 16926.4 / 60)
		second = evaluate(steel, parse_solution(fixtures_dir / "table7_solution.json", steel), 0.9, 0.9)
		assert second.f1 == pytest.approx(8152.6)
		assert second.f2 == pytest.approx(771.14)

	def test_tight_volume_row(self, steel, fixtures_dir):
		report = evaluate(steel, parse_solution(fixtures_dir / "table7_solution.json", steel), 0.9, 0.9)
		row = next(check for check in report.rows if check.label == "volume[i=2,j=3,k=2]")
		assert row.rhs == pytest.approx(696.0)
		assert row.slack == pytest.approx(0.0, abs=1e-9)
		assert row.satisfied

	def test_zero_plan_misses_every_demand(self, steel):
		report = evaluate(steel, MistpSolution.zeros(steel), 0.9, 0.9)
		assert not report.feasible
		violated = {check.label for check in report.violated_rows()}
		assert violated == {f"demand[j={j},p={p}]" for j in (1, 2, 3) for p in (1, 2)}
		assert report.f1 == 0.0
		assert report.f2 == 0.0

	def test_row_slack_sign(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, 2)], [(0, 0, 0, 0, 10.0)])
		report = evaluate(lane, plan, 0.9, 0.9)
		volume = next(check for check in report.rows if check.label == "volume[i=1,j=1,k=1]")
		assert volume.sense is Sense.LE
		assert volume.slack == pytest.approx(-2.0)
		assert not volume.satisfied
		demand = next(check for check in report.rows if check.label == "demand[j=1,p=1]")
		assert demand.slack == pytest.approx(0.0)
		assert demand.satisfied

	def test_lane_objectives(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, 3)], [(0, 0, 0, 0, 10.0)])
		report = evaluate(lane, plan, 0.9, 0.9)
		assert report.feasible
		assert report.f1 == pytest.approx(15.0)
		assert report.f2 == pytest.approx(3 * 2.0 + 10 * 6.0 / 60)

	def test_integrality_and_sign_violations(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, 2.5)], [(0, 0, 0, 0, -1.0)])
		report = evaluate(lane, plan, 0.9, 0.9)
		assert not report.feasible
		assert any(violation.startswith("fractional trips: z[i=1,j=1,k=1]") for violation in report.violations)
		assert any(violation.startswith("negative shipment: x[i=1,j=1,k=1,p=1]") for violation in report.violations)

	def test_dimension_mismatch(self, steel, lane):
		with pytest.raises(DomainError, match="dimension mismatch"):
			evaluate(steel, MistpSolution.zeros(lane), 0.9, 0.9)

	def test_confidence_out_of_range(self, lane):
		with pytest.raises(DomainError, match="gamma"):
			evaluate(lane, MistpSolution.zeros(lane), 0.9, 0.0)


class TestFuzzyObjectives:
	def test_aggregates_trapezoids(self, two_vehicle):
		plan = MistpSolution.from_entries(two_vehicle, [(0, 0, 0, 1), (0, 0, 1, 1)], [(0, 0, 0, 0, 4.0), (0, 0, 1, 0, 4.0)])
		cost, time = fuzzy_objectives(two_vehicle, plan)
		assert cost == TrapezoidalFuzzy(26.0, 28.0, 30.0, 30.0)
		assert time.as_tuple() == pytest.approx((5.0, 6.0, 7.0, 7.0))

	def test_negative_entries_contribute_nothing(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, -2)], [(0, 0, 0, 0, -5.0)])
		cost, time = fuzzy_objectives(lane, plan)
		assert cost.as_tuple() == (0.0, 0.0, 0.0, 0.0)
		assert time.as_tuple() == (0.0, 0.0, 0.0, 0.0)
