# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import json
import math

from fuzzystp.io import FRONT_HEADERS, RunReport, evaluation_to_dict, front_rows, write_front_csv
from fuzzystp.model import MistpSolution, evaluate
from fuzzystp.scalarization import ParetoPoint


class TestRunReport:
	def test_drops_empty_sections(self):
		report = RunReport("lane", "abc", "single", 0.9, 0.9, "optimal")
		document = report.to_dict()
		assert document["instance"] == {"name": "lane", "digest": "abc"}
		assert "bounds" not in document
		assert "front" not in document
		assert "solution" not in document

	def test_solution_and_extras(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, 3)], [(0, 0, 0, 0, 10.0)]).with_objectives(15.0, 7.0)
		report = RunReport("lane", "abc", "fuzzy-programming", 0.9, 0.9, "optimal", extras={"lambda": 1.0})
		report.set_solution(plan)
		document = json.loads(report.dumps())
		assert document["objectives"] == {"f1": 15.0, "f2": 7.0}
		assert document["lambda"] == 1.0
		assert document["solution"]["z"] == [{"i": 1, "j": 1, "k": 1, "value": 3}]

	def test_non_finite_values_become_null(self):
		report = RunReport("lane", "abc", "single", 0.9, 0.9, "infeasible", objectives={"f1": math.nan, "f2": 1.0})
		assert json.loads(report.dumps())["objectives"] == {"f1": None, "f2": 1.0}


class TestFront:
	def test_rows_sorted_by_cost(self):
		points = [ParetoPoint(40.0, 4.0, weight=0.0), ParetoPoint(20.0, 10.0, weight=1.0)]
		assert front_rows(points, "weights") == [
			{"w": 1.0, "f1": 20.0, "f2": 10.0},
			{"w": 0.0, "f1": 40.0, "f2": 4.0},
		]

	def test_epsilon_rows_carry_criterion(self):
		rows = front_rows([ParetoPoint(30.0, 7.0, epsilon=39.9, G=0.9)], "epsilon")
		assert rows == [{"eps": 39.9, "f1": 30.0, "f2": 7.0, "G": 0.9}]

	def test_csv(self, tmp_path):
		path = tmp_path / "front.csv"
		rows = front_rows([ParetoPoint(20.0, 10.0, weight=1.0), ParetoPoint(30.0, 7.0, weight=0.5)], "weights")
		write_front_csv(path, rows, FRONT_HEADERS["weights"])
		assert path.read_text(encoding="utf-8").splitlines() == ["w,f1,f2", "1.0,20.0,10.0", "0.5,30.0,7.0"]


class TestEvaluationToDict:
	def test_lists_every_row(self, lane):
		plan = MistpSolution.from_entries(lane, [(0, 0, 0, 2)], [(0, 0, 0, 0, 10.0)])
		document = evaluation_to_dict(evaluate(lane, plan, 0.9, 0.9))
		assert document["feasible"] is False
		assert [row["label"] for row in document["rows"]] == [
			"supply[i=1,p=1]",
			"demand[j=1,p=1]",
			"volume[i=1,j=1,k=1]",
			"weight[i=1,j=1,k=1]",
			"fleet[k=1]",
		]
		volume = document["rows"][2]
		assert volume["sense"] == "<="
		assert volume["satisfied"] is False
		assert document["fuzzy_cost"] == [10.0, 10.0, 10.0, 10.0]
