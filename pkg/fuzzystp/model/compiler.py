# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Compiler - Fuzzy Chance-Constrained Model to Deterministic Bi-Objective MILP

Minimizing the eta-pessimistic value of the fuzzy cost and the
gamma-pessimistic value of the fuzzy time reduces, because pessimistic
values are linear over nonnegative combinations of trapezoids, to two
linear objectives whose coefficients are the pessimistic values of the
individual parameters:

    cost coefficient of z[i][j][k]  = pessimistic(c[i][j][k], eta)
    time coefficient of z[i][j][k]  = pessimistic(t[i][j][k], gamma)
    time coefficient of x[i][j][k][p] = pessimistic(a[p][k], gamma) / handling_divisor

Variable layout: all x[i][j][k][p] (continuous) first, in index order, then
all z[i][j][k] (integer). Row layout: supply (i, p), demand (j, p), volume
(i, j, k), weight (i, j, k), fleet (k).

Usage:
    from fuzzystp.model import compile_model

    model = compile_model(instance, eta=0.9, gamma=0.9)
    lp = model.to_program(model.objective_cost)
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Constraint, LinearProgram, Sense, SolveResult, Status
from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy import pessimistic_value
from fuzzystp.model.instance import Instance, validate
from fuzzystp.model.solution import MistpSolution

logger = logging.getLogger(__name__)


def _clean(value: float) -> float:
	# pivot round-off on variables that are zero at the vertex
	return 0.0 if abs(value) < 1e-9 else float(value)


def check_confidence(name: str, value: float) -> float:
	value = float(value)
	if not 0 < value <= 1:
		raise DomainError("'{0}' must lie in (0, 1], got {1}".format(name, value))
	return value


@dataclass(frozen=True)
class CompiledModel:
	"""
	Deterministic bi-objective MILP for one instance at confidence levels (eta, gamma).

	Attributes:
	    instance: Source instance
	    eta, gamma: Confidence levels baked into the objective coefficients
	    handling_divisor: Factor that converted handling times into hours
	    objective_cost: Linear coefficients of f1
	    objective_time: Linear coefficients of f2
	    matrix, senses, rhs: Constraint rows
	    row_labels: 1-based label of every row, e.g. ``volume[i=1,j=2,k=1]``
	    upper: Variable upper bounds (z[i][j][k] <= fleet[k])
	    integer: Integrality flags (True for z)
	"""

	instance: Instance
	eta: float
	gamma: float
	handling_divisor: float
	objective_cost: np.ndarray
	objective_time: np.ndarray
	matrix: np.ndarray
	senses: tuple[Sense, ...]
	rhs: np.ndarray
	row_labels: tuple[str, ...]
	upper: np.ndarray
	integer: np.ndarray

	@property
	def num_continuous(self) -> int:
		instance = self.instance
		return instance.m * instance.n * instance.K * instance.l

	@property
	def num_integer(self) -> int:
		instance = self.instance
		return instance.m * instance.n * instance.K

	@property
	def num_variables(self) -> int:
		return self.num_continuous + self.num_integer

	@property
	def num_rows(self) -> int:
		return self.rhs.shape[0]

	def x_index(self, i: int, j: int, k: int, p: int) -> int:
		instance = self.instance
		return ((i * instance.n + j) * instance.K + k) * instance.l + p

	def z_index(self, i: int, j: int, k: int) -> int:
		instance = self.instance
		return self.num_continuous + (i * instance.n + j) * instance.K + k

	def variable_labels(self) -> list[str]:
		instance = self.instance
		labels = [
			f"x[{i + 1},{j + 1},{k + 1},{p + 1}]" for i, j, k in instance.lanes() for p in range(instance.l)
		]
		labels.extend(f"z[{i + 1},{j + 1},{k + 1}]" for i, j, k in instance.lanes())
		return labels

	def to_program(self, objective: np.ndarray, extra_rows: Sequence[Constraint] = ()) -> LinearProgram:
		"""Single-objective MILP over the model's rows, bounds and integrality."""
		lp = LinearProgram(
			objective=objective,
			matrix=self.matrix,
			senses=self.senses,
			rhs=self.rhs,
			upper=self.upper,
			integer=self.integer,
		)
		return lp.with_rows(list(extra_rows))

	def objective_values(self, vector: np.ndarray) -> tuple[float, float]:
		"""(f1, f2) of a variable vector; extra trailing variables are ignored."""
		vector = np.asarray(vector, dtype=float)[: self.num_variables]
		return float(self.objective_cost @ vector), float(self.objective_time @ vector)

	def encode(self, solution: MistpSolution) -> np.ndarray:
		"""Variable vector of a plan."""
		vector = np.zeros(self.num_variables)
		for i, j, k in self.instance.lanes():
			vector[self.z_index(i, j, k)] = solution.z[i][j][k]
			for p in range(self.instance.l):
				vector[self.x_index(i, j, k, p)] = solution.x[i][j][k][p]
		return vector

	def decode(self, vector: np.ndarray | None, status: Status = Status.OPTIMAL) -> MistpSolution:
		"""
		Plan carried by a solver vector.

		An iteration-limit status with a vector (the incumbent) decodes as a
		feasible plan; a missing vector decodes as an all-zero plan with the
		given status and nan objectives.
		"""
		instance = self.instance
		if vector is None:
			empty = MistpSolution.zeros(instance)
			return MistpSolution(empty.x, empty.z, status=status)
		vector = np.asarray(vector, dtype=float)[: self.num_variables]
		z = tuple(
			tuple(tuple(int(round(vector[self.z_index(i, j, k)])) for k in range(instance.K)) for j in range(instance.n))
			for i in range(instance.m)
		)
		x = tuple(
			tuple(
				tuple(
					tuple(_clean(vector[self.x_index(i, j, k, p)]) for p in range(instance.l)) for k in range(instance.K)
				)
				for j in range(instance.n)
			)
			for i in range(instance.m)
		)
		status = Status.FEASIBLE if status is Status.ITERATION_LIMIT else status
		solution = MistpSolution(x=x, z=z, status=status)
		return solution.with_objectives(*self.objective_values(self.encode(solution)))

	def decode_result(self, result: SolveResult) -> MistpSolution:
		return self.decode(result.x, result.status)


def compile_model(
	instance: Instance,
	eta: float,
	gamma: float,
	settings: SolverSettings | None = None,
) -> CompiledModel:
	"""
	Compile the fuzzy chance-constrained MISTP into a deterministic bi-objective MILP.

	Args:
	    instance: Validated instance
	    eta: Confidence level of the cost objective, in (0, 1]
	    gamma: Confidence level of the time objective, in (0, 1]
	    settings: Supplies ``handling_divisor`` (minutes per hour by default)

	Returns:
	    CompiledModel

	Raises:
	    DomainError: If eta or gamma is out of range
	    ValidationError: If the instance does not validate
	"""
	settings = settings or get_settings()
	eta = check_confidence("eta", eta)
	gamma = check_confidence("gamma", gamma)
	validate(instance).raise_for_errors()

	m, n, K, l = instance.m, instance.n, instance.K, instance.l
	num_x = m * n * K * l
	num_z = m * n * K
	total = num_x + num_z

	def x_index(i, j, k, p):
		return ((i * n + j) * K + k) * l + p

	def z_index(i, j, k):
		return num_x + (i * n + j) * K + k

	objective_cost = np.zeros(total)
	objective_time = np.zeros(total)
	handling = [
		[pessimistic_value(instance.handling_time[p][k], gamma) / settings.handling_divisor for k in range(K)]
		for p in range(l)
	]
	for i, j, k in instance.lanes():
		objective_cost[z_index(i, j, k)] = pessimistic_value(instance.cost[i][j][k], eta)
		objective_time[z_index(i, j, k)] = pessimistic_value(instance.travel_time[i][j][k], gamma)
		for p in range(l):
			objective_time[x_index(i, j, k, p)] = handling[p][k]

	rows: list[np.ndarray] = []
	senses: list[Sense] = []
	rhs: list[float] = []
	labels: list[str] = []

	def add_row(coefficients, sense, bound, label):
		rows.append(coefficients)
		senses.append(sense)
		rhs.append(float(bound))
		labels.append(label)

	for i in range(m):
		for p in range(l):
			row = np.zeros(total)
			for j in range(n):
				for k in range(K):
					row[x_index(i, j, k, p)] = 1.0
			add_row(row, Sense.LE, instance.supply[i][p], f"supply[i={i + 1},p={p + 1}]")
	for j in range(n):
		for p in range(l):
			row = np.zeros(total)
			for i in range(m):
				for k in range(K):
					row[x_index(i, j, k, p)] = 1.0
			add_row(row, Sense.GE, instance.demand[j][p], f"demand[j={j + 1},p={p + 1}]")
	for capacity, unit, name in (
		(instance.volume_cap, instance.unit_volume, "volume"),
		(instance.weight_cap, instance.unit_weight, "weight"),
	):
		for i, j, k in instance.lanes():
			row = np.zeros(total)
			for p in range(l):
				row[x_index(i, j, k, p)] = unit[p]
			row[z_index(i, j, k)] = -capacity[k]
			add_row(row, Sense.LE, 0.0, f"{name}[i={i + 1},j={j + 1},k={k + 1}]")
	for k in range(K):
		row = np.zeros(total)
		for i in range(m):
			for j in range(n):
				row[z_index(i, j, k)] = 1.0
		add_row(row, Sense.LE, instance.fleet[k], f"fleet[k={k + 1}]")

	upper = np.full(total, np.inf)
	integer = np.zeros(total, dtype=bool)
	for i, j, k in instance.lanes():
		upper[z_index(i, j, k)] = instance.fleet[k]
		integer[z_index(i, j, k)] = True

	for array in (objective_cost, objective_time, upper, integer):
		array.setflags(write=False)
	matrix = np.array(rows)
	matrix.setflags(write=False)
	rhs_array = np.array(rhs)
	rhs_array.setflags(write=False)
	logger.debug(
		"Compiled %d continuous + %d integer variables, %d rows (eta=%g, gamma=%g)", num_x, num_z, len(rows), eta, gamma
	)
	return CompiledModel(
		instance=instance,
		eta=eta,
		gamma=gamma,
		handling_divisor=settings.handling_divisor,
		objective_cost=objective_cost,
		objective_time=objective_time,
		matrix=matrix,
		senses=tuple(senses),
		rhs=rhs_array,
		row_labels=tuple(labels),
		upper=upper,
		integer=integer,
	)
