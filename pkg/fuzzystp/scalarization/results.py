# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

import threading
from dataclasses import dataclass, field

from fuzzystp.engine import SolveResult
from fuzzystp.exceptions import DomainError
from fuzzystp.model import MistpSolution


@dataclass(frozen=True)
class PayoffTable:
	"""
	Per-objective bounds of the bi-objective model.

	Attributes:
	    L: Best value of each objective minimized alone, (L1, L2)
	    U: Worst value of each objective over the two single-objective argmins, (U1, U2)
	    argmins: Lexicographic argmin of each objective; None for injected bounds
	    injected: True when the bounds were supplied rather than computed
	"""

	L: tuple[float, float]
	U: tuple[float, float]
	argmins: tuple[MistpSolution | None, MistpSolution | None] = (None, None)
	injected: bool = False

	def __post_init__(self):
		object.__setattr__(self, "L", tuple(float(value) for value in self.L))
		object.__setattr__(self, "U", tuple(float(value) for value in self.U))
		for t in range(2):
			if not self.L[t] <= self.U[t]:
				raise DomainError(
					"Bounds of objective {0} are crossed: L={1} > U={2}".format(t + 1, self.L[t], self.U[t])
				)

	@classmethod
	def from_bounds(cls, L1: float, U1: float, L2: float, U2: float) -> "PayoffTable":
		"""Bounds supplied by the caller, e.g. published values for a reproduction run."""
		return cls(L=(L1, L2), U=(U1, U2), injected=True)

	def range(self, t: int) -> float:
		return self.U[t] - self.L[t]

	def as_dict(self) -> dict[str, float | str]:
		return {
			"L1": self.L[0],
			"U1": self.U[0],
			"L2": self.L[1],
			"U2": self.U[1],
			"source": "injected" if self.injected else "computed",
		}


@dataclass(frozen=True)
class ParetoPoint:
	"""A (f1, f2) pair with the plan that attains it and the scan parameter that produced it."""

	f1: float
	f2: float
	solution: MistpSolution | None = None
	weight: float | None = None
	epsilon: float | None = None
	G: float | None = None

	@property
	def objectives(self) -> tuple[float, float]:
		return (self.f1, self.f2)


@dataclass(frozen=True)
class FuzzyProgrammingResult:
	"""Max-min compromise: the achieved satisfaction level and the plan."""

	lambda_value: float
	solution: MistpSolution
	memberships: tuple[float, float]


@dataclass(frozen=True)
class GlobalCriterionResult:
	"""
	Frontier point closest to the ideal under the global criterion.

	Attributes:
	    G: Criterion value at the returned plan
	    solution: Returned plan
	    lower_bound: No frontier point missed by the sweep grid can have a smaller G
	    gap: G - lower_bound
	    frontier: Sweep points in visiting order (f1 strictly decreasing)
	"""

	G: float
	solution: MistpSolution
	lower_bound: float
	gap: float
	frontier: tuple[ParetoPoint, ...]
	ideal: tuple[float, float]
	q: float
	normalization: str


@dataclass
class SolveStats:
	"""Running totals of MILP solves; safe to update from worker threads."""

	solves: int = 0
	nodes: int = 0
	iterations: int = 0
	_lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

	def record(self, result: SolveResult) -> None:
		with self._lock:
			self.solves += 1
			self.nodes += result.nodes
			self.iterations += result.iterations

	def as_dict(self) -> dict[str, int]:
		return {"solves": self.solves, "nodes": self.nodes, "iterations": self.iterations}
