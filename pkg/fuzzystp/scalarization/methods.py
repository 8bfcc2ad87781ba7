# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Scalarization Method Registry

Named entry points used by the command line. Each method takes a compiled
model, a MethodRequest and settings, and returns a MethodOutcome that the
report layer serializes.

Custom methods can be registered with the decorator:

    @register_method("my-method")
    def my_method(model, request, settings, stats):
        ...
        return MethodOutcome(solution=solution)
"""

from collections.abc import Callable
from dataclasses import dataclass, field

from fuzzystp.config import SolverSettings
from fuzzystp.exceptions import DomainError
from fuzzystp.model import CompiledModel, MistpSolution
from fuzzystp.scalarization.fuzzy_programming import solve_fuzzy_programming
from fuzzystp.scalarization.global_criterion import solve_global_criterion
from fuzzystp.scalarization.lexicographic import payoff_table, solve_single
from fuzzystp.scalarization.results import ParetoPoint, PayoffTable, SolveStats
from fuzzystp.scalarization.weighted_sum import nondominated_filter, weighted_sum_front


@dataclass(frozen=True)
class MethodRequest:
	"""Options of one run; each method reads the ones it needs."""

	objective: str = "cost"
	bounds: PayoffTable | None = None
	ideal: tuple[float, float] | None = None
	q: float = 2
	normalization: str = "by-ideal"
	resolution: float | None = None
	weights: tuple[float, ...] = ()


@dataclass
class MethodOutcome:
	"""
	Result of a method run.

	Attributes:
	    solution: Returned plan; None for front-only methods
	    bounds: Payoff table used, if any
	    lambda_value: Max-min satisfaction level (fuzzy programming)
	    G, gap: Criterion value and grid gap (global criterion)
	    front: Points written to the front CSV
	    front_kind: "weights" or "epsilon", selecting the CSV columns
	"""

	solution: MistpSolution | None = None
	bounds: PayoffTable | None = None
	lambda_value: float | None = None
	G: float | None = None
	gap: float | None = None
	front: list[ParetoPoint] = field(default_factory=list)
	front_kind: str | None = None


MethodFunc = Callable[[CompiledModel, MethodRequest, SolverSettings, SolveStats], MethodOutcome]


class MethodRegistry:
	"""Registry of scalarization methods by command-line name."""

	_methods: dict[str, MethodFunc] = {}

	@classmethod
	def register(cls, name: str, func: MethodFunc) -> None:
		cls._methods[name] = func

	@classmethod
	def get(cls, name: str) -> MethodFunc | None:
		return cls._methods.get(name)

	@classmethod
	def list_methods(cls) -> list[str]:
		return list(cls._methods.keys())


def register_method(name: str) -> Callable[[MethodFunc], MethodFunc]:
	"""Decorator to register a scalarization method under ``name``."""

	def decorator(func: MethodFunc) -> MethodFunc:
		MethodRegistry.register(name, func)
		return func

	return decorator


def get_method(name: str) -> MethodFunc:
	"""
	Get a scalarization method by name.

	Raises:
	    DomainError: If no method is registered under ``name``
	"""
	func = MethodRegistry.get(name)
	if func is None:
		raise DomainError(
			"Unknown method '{0}'. Available: {1}".format(name, ", ".join(MethodRegistry.list_methods()))
		)
	return func


def _bounds(model: CompiledModel, request: MethodRequest, settings: SolverSettings, stats: SolveStats) -> PayoffTable:
	return request.bounds or payoff_table(model, settings, stats)


@register_method("single")
def single_method(model, request, settings, stats):
	return MethodOutcome(solution=solve_single(model, request.objective, settings, stats))


@register_method("fuzzy-programming")
def fuzzy_programming_method(model, request, settings, stats):
	bounds = _bounds(model, request, settings, stats)
	result = solve_fuzzy_programming(model, bounds, settings, stats)
	return MethodOutcome(solution=result.solution, bounds=bounds, lambda_value=result.lambda_value)


@register_method("global-criterion")
def global_criterion_method(model, request, settings, stats):
	bounds = _bounds(model, request, settings, stats)
	result = solve_global_criterion(
		model,
		ideal=request.ideal,
		q=request.q,
		normalization=request.normalization,
		resolution=request.resolution,
		bounds=bounds,
		settings=settings,
		stats=stats,
	)
	return MethodOutcome(
		solution=result.solution,
		bounds=bounds,
		G=result.G,
		gap=result.gap,
		front=nondominated_filter(result.frontier, key=lambda point: point.objectives),
		front_kind="epsilon",
	)


@register_method("weighted-sum")
def weighted_sum_method(model, request, settings, stats):
	bounds = _bounds(model, request, settings, stats)
	front = weighted_sum_front(model, bounds, request.weights, settings, stats)
	return MethodOutcome(bounds=bounds, front=front, front_kind="weights")
