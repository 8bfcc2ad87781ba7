# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Weighted-Sum Front and Nondominated Filtering

For each weight w in [0, 1] the scan minimizes

    w * (f1 - L1) / (U1 - L1) + (1 - w) * (f2 - L2) / (U2 - L2)

(a zero range divides by 1). The end points w = 1 and w = 0 reuse the
lexicographic argmins so they land exactly on L1 and L2. Scans are
independent solves and run on a thread pool when ``workers`` > 1.
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Status
from fuzzystp.exceptions import DomainError
from fuzzystp.model import CompiledModel, MistpSolution
from fuzzystp.scalarization.lexicographic import run_milp, solve_single
from fuzzystp.scalarization.results import ParetoPoint, PayoffTable, SolveStats

logger = logging.getLogger(__name__)

T = TypeVar("T")


def nondominated_filter(
	points: Iterable[T],
	key: Callable[[T], tuple[float, float]] | None = None,
) -> list[T]:
	"""
	Points not dominated by any other, both coordinates minimized.

	Output is ordered by f1 ascending (f2 breaking ties, input order after
	that); points with identical coordinates collapse to the first one.

	Example:
	    >>> nondominated_filter([(1, 2), (2, 1), (2, 2)])
	    [(1, 2), (2, 1)]
	"""
	key = key or (lambda point: (point[0], point[1]))
	kept = []
	best_f2 = np.inf
	for point in sorted(points, key=key):
		f2 = key(point)[1]
		if f2 < best_f2:
			kept.append(point)
			best_f2 = f2
	return kept


def evenly_spaced_weights(count: int) -> list[float]:
	"""``count`` weights from 0 to 1 inclusive; a single weight is 0.5."""
	if count < 1:
		raise DomainError("Weight count must be at least 1, got {0}".format(count))
	if count == 1:
		return [0.5]
	return [float(w) for w in np.linspace(0.0, 1.0, count)]


def random_weights(count: int, seed: int | None = None) -> list[float]:
	"""``count`` sorted weights drawn uniformly from [0, 1]."""
	if count < 1:
		raise DomainError("Weight count must be at least 1, got {0}".format(count))
	rng = np.random.default_rng(seed)
	return sorted(float(w) for w in rng.random(count))


def _check_weights(weights: Sequence[float]) -> list[float]:
	if not weights:
		raise DomainError("weighted_sum_front needs at least one weight")
	checked = []
	for w in weights:
		w = float(w)
		if not 0 <= w <= 1:
			raise DomainError("Weights must lie in [0, 1], got {0}".format(w))
		checked.append(w)
	return checked


def weighted_sum_front(
	model: CompiledModel,
	bounds: PayoffTable,
	weights: Sequence[float],
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> list[ParetoPoint]:
	"""
	Supported nondominated points from a scan over weights.

	Args:
	    model: Compiled bi-objective model
	    bounds: Payoff table used for normalization (and its argmins for w in {0, 1})
	    weights: Weights on the normalized cost objective, each in [0, 1]
	    settings: Solver settings; ``workers`` sets the thread pool size
	    stats: Optional solve counter

	Returns:
	    Mutually nondominated points sorted by f1 ascending, each tagged with
	    the first weight that produced it

	Raises:
	    DomainError: If ``weights`` is empty or a weight lies outside [0, 1]
	    InfeasibleError: If a scan solve finds no plan
	"""
	settings = settings or get_settings()
	weights = _check_weights(weights)
	scales = [bounds.range(t) if bounds.range(t) > 0 else 1.0 for t in range(2)]

	def solve(w: float) -> ParetoPoint:
		if w in (0.0, 1.0):
			t = 0 if w == 1.0 else 1
			solution = bounds.argmins[t] or solve_single(model, ("cost", "time")[t], settings, stats)
		else:
			objective = w * model.objective_cost / scales[0] + (1.0 - w) * model.objective_time / scales[1]
			result = run_milp(model.to_program(objective), "weighted sum w={0:g}".format(w), settings, stats)
			status = Status.FEASIBLE if result.status is Status.ITERATION_LIMIT else Status.OPTIMAL
			solution = model.decode(result.x, status)
		logger.debug("w=%.6f -> f1=%.6f f2=%.6f", w, solution.f1, solution.f2)
		return _point(solution, w)

	if settings.workers > 1 and len(weights) > 1:
		with ThreadPoolExecutor(max_workers=settings.workers) as executor:
			points = list(executor.map(solve, weights))
	else:
		points = [solve(w) for w in weights]
	front = nondominated_filter(points, key=lambda point: point.objectives)
	logger.info("Weighted-sum scan: %d weight(s), %d nondominated point(s)", len(weights), len(front))
	return front


def _point(solution: MistpSolution, weight: float) -> ParetoPoint:
	return ParetoPoint(solution.f1, solution.f2, solution, weight=weight)
