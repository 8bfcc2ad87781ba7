# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Linear Program Containers

A LinearProgram minimizes ``objective @ x`` subject to constraint rows
``matrix @ x (<=, >=, =) rhs`` and variable bounds ``lower <= x <= upper``,
with an integrality flag per variable. Containers are immutable; the
``with_*`` helpers return augmented copies.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from fuzzystp.exceptions import DomainError


class Sense(str, Enum):
	LE = "<="
	GE = ">="
	EQ = "="


class Status(str, Enum):
	OPTIMAL = "optimal"
	FEASIBLE = "feasible"
	INFEASIBLE = "infeasible"
	UNBOUNDED = "unbounded"
	ITERATION_LIMIT = "iteration-limit"


def _frozen(values: ArrayLike, dtype=float) -> np.ndarray:
	array = np.array(values, dtype=dtype)
	array.setflags(write=False)
	return array


@dataclass(frozen=True)
class Constraint:
	"""A single row ``coefficients @ x (sense) rhs``."""

	coefficients: np.ndarray
	sense: Sense
	rhs: float

	def __post_init__(self):
		object.__setattr__(self, "coefficients", _frozen(self.coefficients))
		object.__setattr__(self, "sense", Sense(self.sense))
		object.__setattr__(self, "rhs", float(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
	"""
	Minimization problem over constraint rows and bounded variables.

	Attributes:
	    objective: Cost vector, shape (n,)
	    matrix: Constraint coefficients, shape (m, n)
	    senses: One Sense per row
	    rhs: Right-hand sides, shape (m,)
	    lower: Lower bounds, default 0
	    upper: Upper bounds, default +inf
	    integer: Integrality flags, default all False
	"""

	objective: np.ndarray
	matrix: np.ndarray
	senses: tuple[Sense, ...]
	rhs: np.ndarray
	lower: np.ndarray = field(default=None)
	upper: np.ndarray = field(default=None)
	integer: np.ndarray = field(default=None)

	def __post_init__(self):
		objective = _frozen(self.objective)
		n = objective.shape[0] if objective.ndim == 1 else -1
		if n < 0:
			raise DomainError("Objective must be a vector, got shape {0}".format(objective.shape))
		matrix = np.array(self.matrix, dtype=float).reshape(-1, n) if n else np.zeros((len(self.rhs), 0))
		matrix.setflags(write=False)
		rhs = _frozen(self.rhs)
		senses = tuple(Sense(sense) for sense in self.senses)
		if matrix.shape[0] != rhs.shape[0] or len(senses) != rhs.shape[0]:
			raise DomainError(
				"Row counts disagree: matrix {0}, senses {1}, rhs {2}".format(matrix.shape[0], len(senses), rhs.shape[0])
			)
		if not np.all(np.isfinite(rhs)) or not np.all(np.isfinite(matrix)) or not np.all(np.isfinite(objective)):
			raise DomainError("Objective, coefficients and right-hand sides must be finite")
		lower = _frozen(np.zeros(n) if self.lower is None else self.lower)
		upper = _frozen(np.full(n, np.inf) if self.upper is None else self.upper)
		integer = _frozen(np.zeros(n, dtype=bool) if self.integer is None else self.integer, dtype=bool)
		for name, array in (("lower", lower), ("upper", upper), ("integer", integer)):
			if array.shape != (n,):
				raise DomainError("'{0}' must have shape ({1},), got {2}".format(name, n, array.shape))
		if not np.all(np.isfinite(lower)):
			raise DomainError("Lower bounds must be finite")
		object.__setattr__(self, "objective", objective)
		object.__setattr__(self, "matrix", matrix)
		object.__setattr__(self, "senses", senses)
		object.__setattr__(self, "rhs", rhs)
		object.__setattr__(self, "lower", lower)
		object.__setattr__(self, "upper", upper)
		object.__setattr__(self, "integer", integer)

	@classmethod
	def from_rows(cls, objective: ArrayLike, rows: Sequence[Constraint], **bounds) -> "LinearProgram":
		"""Build a program from a list of Constraint rows."""
		n = len(objective)
		matrix = np.array([row.coefficients for row in rows], dtype=float).reshape(len(rows), n)
		return cls(
			objective=objective,
			matrix=matrix,
			senses=tuple(row.sense for row in rows),
			rhs=[row.rhs for row in rows],
			**bounds,
		)

	@property
	def num_variables(self) -> int:
		return self.objective.shape[0]

	@property
	def num_rows(self) -> int:
		return self.rhs.shape[0]

	def with_objective(self, objective: ArrayLike) -> "LinearProgram":
		return LinearProgram(objective, self.matrix, self.senses, self.rhs, self.lower, self.upper, self.integer)

	def with_rows(self, rows: Sequence[Constraint]) -> "LinearProgram":
		"""
		Append constraint rows.

		Raises:
		    DomainError: If a row is not dimensioned like the program's rows
		"""
		if not rows:
			return self
		for row in rows:
			if row.coefficients.shape != (self.num_variables,):
				raise DomainError(
					"Extra row has {0} coefficients, program has {1} variables".format(
						row.coefficients.shape, self.num_variables
					)
				)
		return LinearProgram(
			self.objective,
			np.vstack([self.matrix, [row.coefficients for row in rows]]),
			self.senses + tuple(row.sense for row in rows),
			np.concatenate([self.rhs, [row.rhs for row in rows]]),
			self.lower,
			self.upper,
			self.integer,
		)

	def with_column(
		self,
		cost: float,
		coefficients: ArrayLike | None = None,
		lower: float = 0.0,
		upper: float = np.inf,
		integer: bool = False,
	) -> "LinearProgram":
		"""Append one variable; ``coefficients`` gives its entry in each existing row."""
		column = np.zeros(self.num_rows) if coefficients is None else np.asarray(coefficients, dtype=float)
		return LinearProgram(
			np.append(self.objective, cost),
			np.hstack([self.matrix, column.reshape(-1, 1)]),
			self.senses,
			self.rhs,
			np.append(self.lower, lower),
			np.append(self.upper, upper),
			np.append(self.integer, integer),
		)

	def with_bounds(self, lower: ArrayLike, upper: ArrayLike) -> "LinearProgram":
		return LinearProgram(self.objective, self.matrix, self.senses, self.rhs, lower, upper, self.integer)

	def violation(self, x: np.ndarray) -> float:
		"""Largest row or bound violation of ``x``; 0 when feasible."""
		activity = self.matrix @ x
		worst = 0.0
		for sense, lhs, rhs in zip(self.senses, activity, self.rhs, strict=True):
			if sense is Sense.LE:
				worst = max(worst, lhs - rhs)
			elif sense is Sense.GE:
				worst = max(worst, rhs - lhs)
			else:
				worst = max(worst, abs(lhs - rhs))
		if x.size:
			worst = max(worst, float(np.max(self.lower - x)), float(np.max(x - self.upper)))
		return worst


@dataclass(frozen=True)
class SolveResult:
	"""
	Outcome of an LP or MILP solve.

	Attributes:
	    status: Terminal status
	    x: Variable values, or None when no point is available
	    objective: Objective value at ``x`` (nan without a point)
	    nodes: Branch-and-bound nodes (or oracle assignments) evaluated
	    iterations: Total simplex pivots
	"""

	status: Status
	x: np.ndarray | None = None
	objective: float = float("nan")
	nodes: int = 0
	iterations: int = 0

	def __post_init__(self):
		if self.x is not None:
			object.__setattr__(self, "x", _frozen(self.x))

	@property
	def has_solution(self) -> bool:
		return self.x is not None
