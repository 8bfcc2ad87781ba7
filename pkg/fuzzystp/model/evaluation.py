# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Evaluation - Replay of a Transportation Plan Against the Fuzzy Model

Recomputes both objectives from the aggregate fuzzy objectives at the
plan and checks every constraint row directly on the instance data. Shares
no code with the compiler or the MILP engine, so it serves as the oracle
for both.

Usage:
    from fuzzystp.model import evaluate

    report = evaluate(instance, solution, eta=0.9, gamma=0.9)
    if not report.feasible:
        for check in report.violated_rows():
            print(check.label, check.slack)
"""

import logging
import math
from dataclasses import dataclass, field

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Sense
from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy import TrapezoidalFuzzy, linear_combination, pessimistic_value
from fuzzystp.model.compiler import check_confidence
from fuzzystp.model.instance import Instance, has_shape
from fuzzystp.model.solution import MistpSolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RowCheck:
	"""One constraint row at the plan; negative slack means violated."""

	label: str
	sense: Sense
	activity: float
	rhs: float
	slack: float
	satisfied: bool


@dataclass(frozen=True)
class EvaluationReport:
	"""
	Objectives and constraint replay of one plan.

	Attributes:
	    f1: eta-pessimistic value of the fuzzy cost
	    f2: gamma-pessimistic value of the fuzzy time (hours)
	    fuzzy_cost: Aggregate trapezoidal cost at the plan
	    fuzzy_time: Aggregate trapezoidal time at the plan (hours)
	    rows: Every supply, demand, volume, weight and fleet row, in compile order
	    violations: Nonnegativity and integrality violations
	"""

	f1: float
	f2: float
	fuzzy_cost: TrapezoidalFuzzy
	fuzzy_time: TrapezoidalFuzzy
	rows: tuple[RowCheck, ...]
	violations: tuple[str, ...] = field(default=())

	@property
	def feasible(self) -> bool:
		return not self.violations and all(check.satisfied for check in self.rows)

	def violated_rows(self) -> list[RowCheck]:
		return [check for check in self.rows if not check.satisfied]


def _check_dimensions(instance: Instance, solution: MistpSolution) -> None:
	m, n, K, l = instance.m, instance.n, instance.K, instance.l
	if not has_shape(solution.x, (m, n, K, l)):
		raise DomainError("dimension mismatch: 'x' must have shape {0}".format((m, n, K, l)))
	if not has_shape(solution.z, (m, n, K)):
		raise DomainError("dimension mismatch: 'z' must have shape {0}".format((m, n, K)))


def fuzzy_objectives(
	instance: Instance,
	solution: MistpSolution,
	settings: SolverSettings | None = None,
) -> tuple[TrapezoidalFuzzy, TrapezoidalFuzzy]:
	"""
	Aggregate trapezoidal cost and time of a plan.

	Cost is the sum of per-trip costs weighted by trips. Time adds per-trip
	travel times weighted by trips and per-unit handling times weighted by
	units shipped, converted into hours. Negative plan entries contribute
	nothing; ``evaluate`` reports them as violations.
	"""
	settings = settings or get_settings()
	_check_dimensions(instance, solution)
	cost_terms = []
	time_terms = []
	for i, j, k in instance.lanes():
		trips = max(float(solution.z[i][j][k]), 0.0)
		cost_terms.append((trips, instance.cost[i][j][k]))
		time_terms.append((trips, instance.travel_time[i][j][k]))
		for p in range(instance.l):
			units = max(float(solution.x[i][j][k][p]), 0.0)
			time_terms.append((units / settings.handling_divisor, instance.handling_time[p][k]))
	return linear_combination(cost_terms), linear_combination(time_terms)


def _row(label: str, sense: Sense, activity: float, rhs: float, tol: float) -> RowCheck:
	slack = rhs - activity if sense is Sense.LE else activity - rhs
	return RowCheck(label, sense, activity, rhs, slack, slack >= -tol)


def evaluate(
	instance: Instance,
	solution: MistpSolution,
	eta: float,
	gamma: float,
	settings: SolverSettings | None = None,
) -> EvaluationReport:
	"""
	Recompute the objectives of a plan and check every constraint row.

	Args:
	    instance: Instance the plan belongs to
	    solution: Plan to replay
	    eta: Confidence level of the cost objective
	    gamma: Confidence level of the time objective
	    settings: Feasibility and integrality tolerances, handling-time divisor

	Returns:
	    EvaluationReport

	Raises:
	    DomainError: If the plan's dimensions do not match the instance, or eta/gamma is out of range
	"""
	settings = settings or get_settings()
	eta = check_confidence("eta", eta)
	gamma = check_confidence("gamma", gamma)
	fuzzy_cost, fuzzy_time = fuzzy_objectives(instance, solution, settings)
	tol = settings.feasibility_tol
	x, z = solution.x, solution.z
	m, n, K, l = instance.m, instance.n, instance.K, instance.l

	violations = []
	for i, j, k in instance.lanes():
		trips = float(z[i][j][k])
		if trips < -tol:
			violations.append("negative trips: z[i={0},j={1},k={2}] = {3}".format(i + 1, j + 1, k + 1, trips))
		if abs(trips - round(trips)) > settings.integrality_tol:
			violations.append("fractional trips: z[i={0},j={1},k={2}] = {3}".format(i + 1, j + 1, k + 1, trips))
		for p in range(l):
			if x[i][j][k][p] < -tol:
				violations.append(
					"negative shipment: x[i={0},j={1},k={2},p={3}] = {4}".format(i + 1, j + 1, k + 1, p + 1, x[i][j][k][p])
				)

	rows = []
	for i in range(m):
		for p in range(l):
			shipped = math.fsum(x[i][j][k][p] for j in range(n) for k in range(K))
			rows.append(_row(f"supply[i={i + 1},p={p + 1}]", Sense.LE, shipped, instance.supply[i][p], tol))
	for j in range(n):
		for p in range(l):
			received = math.fsum(x[i][j][k][p] for i in range(m) for k in range(K))
			rows.append(_row(f"demand[j={j + 1},p={p + 1}]", Sense.GE, received, instance.demand[j][p], tol))
	for capacity, unit, name in (
		(instance.volume_cap, instance.unit_volume, "volume"),
		(instance.weight_cap, instance.unit_weight, "weight"),
	):
		for i, j, k in instance.lanes():
			load = math.fsum(unit[p] * x[i][j][k][p] for p in range(l))
			rows.append(
				_row(f"{name}[i={i + 1},j={j + 1},k={k + 1}]", Sense.LE, load, z[i][j][k] * capacity[k], tol)
			)
	for k in range(K):
		used = math.fsum(z[i][j][k] for i in range(m) for j in range(n))
		rows.append(_row(f"fleet[k={k + 1}]", Sense.LE, used, instance.fleet[k], tol))

	report = EvaluationReport(
		f1=pessimistic_value(fuzzy_cost, eta),
		f2=pessimistic_value(fuzzy_time, gamma),
		fuzzy_cost=fuzzy_cost,
		fuzzy_time=fuzzy_time,
		rows=tuple(rows),
		violations=tuple(violations),
	)
	logger.debug(
		"Evaluated plan: f1=%.6f f2=%.6f, %d violated rows", report.f1, report.f2, len(report.violated_rows())
	)
	return report
