# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Run Reports and Front Files

A run report is a JSON object. Floats are written with ``repr`` precision,
so every value reads back exactly; non-finite values become null. Apart
from ``wall_time`` a report depends only on the command line and the
input files.
"""

import csv
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path
from typing import Any

from fuzzystp.io.solutions import solution_to_dict
from fuzzystp.model import EvaluationReport, MistpSolution
from fuzzystp.scalarization import ParetoPoint

FRONT_HEADERS = {
	"weights": ("w", "f1", "f2"),
	"epsilon": ("eps", "f1", "f2", "G"),
}


def _finite(value: Any) -> Any:
	if isinstance(value, float) and not math.isfinite(value):
		return None
	if isinstance(value, dict):
		return {key: _finite(item) for key, item in value.items()}
	if isinstance(value, list | tuple):
		return [_finite(item) for item in value]
	return value


@dataclass
class RunReport:
	"""
	Everything a `solve` run produced.

	Attributes:
	    instance_name, instance_digest: Identify the input
	    method: Scalarization method name
	    eta, gamma: Confidence levels
	    status: Status of the returned plan, or of the scan
	    bounds: L and U used, with their source (computed or injected)
	    objectives: f1 and f2 of the returned plan
	    extras: Method-specific values such as lambda, G, gap, q
	    front: Scan points (weight or eps, f1, f2[, G])
	    solution: Nonzero z then x entries of the returned plan
	    statistics: MILP solve, node and pivot totals
	    settings: Settings that differ between runs (divisor, node limit, workers)
	    wall_time: Seconds spent, the only nondeterministic field
	"""

	instance_name: str
	instance_digest: str
	method: str
	eta: float
	gamma: float
	status: str
	bounds: dict[str, Any] | None = None
	objectives: dict[str, float] | None = None
	extras: dict[str, Any] = field(default_factory=dict)
	front: list[dict[str, float]] = field(default_factory=list)
	solution: dict[str, Any] | None = None
	statistics: dict[str, int] = field(default_factory=dict)
	settings: dict[str, Any] = field(default_factory=dict)
	wall_time: float = 0.0

	def set_solution(self, solution: MistpSolution) -> None:
		self.objectives = {"f1": solution.f1, "f2": solution.f2}
		self.solution = solution_to_dict(solution)

	def to_dict(self) -> dict[str, Any]:
		document = {
			"instance": {"name": self.instance_name, "digest": self.instance_digest},
			"method": self.method,
			"eta": self.eta,
			"gamma": self.gamma,
			"status": self.status,
			"bounds": self.bounds,
			"objectives": self.objectives,
			**self.extras,
			"front": self.front or None,
			"solution": self.solution,
			"statistics": self.statistics,
			"settings": self.settings,
			"wall_time": self.wall_time,
		}
		return _finite({key: value for key, value in document.items() if value is not None})

	def dumps(self) -> str:
		return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"


def front_rows(points: Sequence[ParetoPoint], kind: str) -> list[dict[str, float]]:
	"""Front points as CSV/report rows, sorted by f1 ascending."""
	header = FRONT_HEADERS[kind]
	rows = []
	for point in sorted(points, key=lambda point: point.objectives):
		scan = point.weight if kind == "weights" else point.epsilon
		values = (scan, point.f1, point.f2, point.G)
		rows.append(dict(zip(header, values[: len(header)], strict=True)))
	return rows


def write_front_csv(path: str | PathLike, rows: Sequence[dict[str, float]], header: Sequence[str]) -> None:
	with Path(path).open("w", newline="", encoding="utf-8") as handle:
		writer = csv.DictWriter(handle, fieldnames=list(header), lineterminator="\n")
		writer.writeheader()
		for row in rows:
			writer.writerow({key: repr(float(row[key])) for key in header})


def evaluation_to_dict(report: EvaluationReport) -> dict[str, Any]:
	"""JSON-ready form of an evaluation report, listing every row's slack."""
	return _finite(
		{
			"feasible": report.feasible,
			"objectives": {"f1": report.f1, "f2": report.f2},
			"fuzzy_cost": list(report.fuzzy_cost.as_tuple()),
			"fuzzy_time": list(report.fuzzy_time.as_tuple()),
			"violations": list(report.violations),
			"rows": [
				{
					"label": check.label,
					"sense": check.sense.value,
					"activity": check.activity,
					"rhs": check.rhs,
					"slack": check.slack,
					"satisfied": check.satisfied,
				}
				for check in report.rows
			],
		}
	)
