# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Branch and Bound for Mixed-Integer Linear Programs

Best-bound search over LP relaxations solved by the bounded dense simplex.
Each node carries its own variable bounds and the optimal basis of its
parent, so a child re-solves with a few dual pivots from where the parent
stopped; branching splits the integer variable
whose value is closest to a half (lowest index on ties) into a floor child
and a ceiling child. Nodes with equal bounds are expanded in creation
order, so the floor child of a split is expanded before its ceiling child.
"""

import heapq
import itertools
import logging
from collections.abc import Sequence

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine.program import Constraint, LinearProgram, SolveResult, Status
from fuzzystp.engine.simplex import Basis, BoundedSimplex

logger = logging.getLogger(__name__)


def _integral_bounds(lp: LinearProgram, settings: SolverSettings) -> tuple[np.ndarray, np.ndarray]:
	lower = np.array(lp.lower, dtype=float)
	upper = np.array(lp.upper, dtype=float)
	flagged = lp.integer
	lower[flagged] = np.ceil(lower[flagged] - settings.integrality_tol)
	upper[flagged] = np.floor(upper[flagged] + settings.integrality_tol)
	return lower, upper


def solve_milp(
	lp: LinearProgram,
	extra_rows: Sequence[Constraint] | None = None,
	settings: SolverSettings | None = None,
) -> SolveResult:
	"""
	Minimize a mixed-integer linear program.

	Args:
	    lp: Program with integrality flags
	    extra_rows: Side constraints appended to ``lp``'s rows
	    settings: Tolerances and node limit

	Returns:
	    SolveResult with status optimal, infeasible, unbounded or
	    iteration-limit (carrying the incumbent, if any)
	"""
	settings = settings or get_settings()
	if extra_rows:
		lp = lp.with_rows(extra_rows)
	flagged = lp.integer
	lower, upper = _integral_bounds(lp, settings)
	simplex = BoundedSimplex(lp, settings)

	if not flagged.any():
		result, _ = simplex.solve(lower, upper)
		return SolveResult(result.status, result.x, result.objective, nodes=1, iterations=result.iterations)

	counter = itertools.count()
	frontier: list[tuple[float, int, np.ndarray, np.ndarray, Basis | None]] = [
		(-np.inf, next(counter), lower, upper, None)
	]
	incumbent: np.ndarray | None = None
	incumbent_value = np.inf
	nodes = 0
	iterations = 0
	exhausted = True

	while frontier:
		bound, _, node_lower, node_upper, start = heapq.heappop(frontier)
		if bound >= incumbent_value - settings.gap_tol:
			break
		if nodes >= settings.node_limit:
			logger.warning("Node limit %d reached with %d open node(s)", settings.node_limit, len(frontier) + 1)
			exhausted = False
			break
		nodes += 1
		relaxation, basis = simplex.solve(node_lower, node_upper, start)
		iterations += relaxation.iterations

		if relaxation.status is Status.INFEASIBLE:
			continue
		if relaxation.status is Status.UNBOUNDED:
			return SolveResult(Status.UNBOUNDED, nodes=nodes, iterations=iterations)
		if relaxation.status is Status.ITERATION_LIMIT:
			exhausted = False
			continue
		if relaxation.objective >= incumbent_value - settings.gap_tol:
			continue

		x = relaxation.x
		fraction = x - np.floor(x)
		distance = np.minimum(fraction, 1.0 - fraction)
		fractional = flagged & (distance > settings.integrality_tol)
		if not fractional.any():
			candidate = np.array(x)
			candidate[flagged] = np.round(candidate[flagged])
			incumbent = candidate
			incumbent_value = float(lp.objective @ candidate)
			logger.debug("Incumbent %.10g at node %d", incumbent_value, nodes)
			continue

		column = int(np.argmax(np.where(fractional, distance, -1.0)))
		floor_upper = node_upper.copy()
		floor_upper[column] = np.floor(x[column])
		ceil_lower = node_lower.copy()
		ceil_lower[column] = np.ceil(x[column])
		heapq.heappush(frontier, (relaxation.objective, next(counter), node_lower, floor_upper, basis))
		heapq.heappush(frontier, (relaxation.objective, next(counter), ceil_lower, node_upper, basis))

	logger.debug("Branch and bound finished: %d node(s), %d pivot(s)", nodes, iterations)
	if incumbent is None:
		status = Status.INFEASIBLE if exhausted else Status.ITERATION_LIMIT
		return SolveResult(status, nodes=nodes, iterations=iterations)
	status = Status.OPTIMAL if exhausted else Status.ITERATION_LIMIT
	return SolveResult(status, incumbent, incumbent_value, nodes=nodes, iterations=iterations)
