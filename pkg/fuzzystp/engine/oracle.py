# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""Exhaustive enumeration of small integer programs, used to check branch and bound."""

import itertools
import math
from collections.abc import Sequence

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine.program import LinearProgram, SolveResult, Status
from fuzzystp.engine.simplex import BoundedSimplex
from fuzzystp.exceptions import DomainError


def brute_force_oracle(
	lp: LinearProgram,
	z_upper_bounds: Sequence[int],
	settings: SolverSettings | None = None,
) -> SolveResult:
	"""
	Enumerate every assignment of the integer variables and solve the residual LP.

	Args:
	    lp: Program with integrality flags
	    z_upper_bounds: Inclusive upper bound of each flagged variable, in index order
	    settings: Enumeration budget and LP tolerances

	Returns:
	    The best assignment found; ``nodes`` counts the assignments visited

	Raises:
	    DomainError: If the bounds do not match the flagged variables or the
	        enumeration would exceed the budget
	"""
	settings = settings or get_settings()
	flagged = np.flatnonzero(lp.integer)
	if len(z_upper_bounds) != flagged.size:
		raise DomainError(
			"Expected {0} integer upper bound(s), got {1}".format(flagged.size, len(z_upper_bounds))
		)
	if any(int(bound) < 0 for bound in z_upper_bounds):
		raise DomainError("Integer upper bounds must be nonnegative")
	size = math.prod(int(bound) + 1 for bound in z_upper_bounds)
	if size > settings.enumeration_budget:
		raise DomainError(
			"Enumeration of {0} assignments exceeds the budget of {1}".format(size, settings.enumeration_budget)
		)

	simplex = BoundedSimplex(lp, settings)
	best: SolveResult | None = None
	visited = 0
	iterations = 0
	for assignment in itertools.product(*(range(int(bound) + 1) for bound in z_upper_bounds)):
		lower = np.array(lp.lower, dtype=float)
		upper = np.array(lp.upper, dtype=float)
		values = np.array(assignment, dtype=float)
		if np.any(values < lower[flagged] - settings.integrality_tol) or np.any(
			values > upper[flagged] + settings.integrality_tol
		):
			continue
		lower[flagged] = values
		upper[flagged] = values
		visited += 1
		result, _ = simplex.solve(lower, upper)
		iterations += result.iterations
		if result.status is Status.UNBOUNDED:
			return SolveResult(Status.UNBOUNDED, nodes=visited, iterations=iterations)
		if result.status is not Status.OPTIMAL:
			continue
		if best is None or result.objective < best.objective - 1e-12:
			best = result

	if best is None:
		return SolveResult(Status.INFEASIBLE, nodes=visited, iterations=iterations)
	return SolveResult(Status.OPTIMAL, best.x, best.objective, nodes=visited, iterations=iterations)
