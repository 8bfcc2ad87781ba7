# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Single-Objective Solves and the Payoff Table

Each objective is minimized alone with a lexicographic tie-break: among the
optima of the primary objective (within a relative tolerance), the other
objective is minimized. This pins down the argmins, and with them the
upper bounds U, when the primary objective has alternate optima.
"""

import logging
from collections.abc import Sequence

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Constraint, LinearProgram, SolveResult, Status, solve_milp
from fuzzystp.exceptions import DomainError, InfeasibleError
from fuzzystp.model import CompiledModel, MistpSolution
from fuzzystp.scalarization.results import PayoffTable, SolveStats

logger = logging.getLogger(__name__)

OBJECTIVES = ("cost", "time")


def objective_vector(model: CompiledModel, objective: str) -> np.ndarray:
	if objective == "cost":
		return model.objective_cost
	if objective == "time":
		return model.objective_time
	raise DomainError("Unknown objective '{0}', expected one of: {1}".format(objective, ", ".join(OBJECTIVES)))


def run_milp(
	lp: LinearProgram,
	what: str,
	settings: SolverSettings,
	stats: SolveStats | None = None,
) -> SolveResult:
	"""
	Solve one MILP for a driver.

	Returns the optimum, or the incumbent when the node limit stops the search.

	Raises:
	    InfeasibleError: If the solve ends without a point
	"""
	result = solve_milp(lp, settings=settings)
	if stats is not None:
		stats.record(result)
	if result.status is Status.OPTIMAL:
		return result
	if result.status is Status.ITERATION_LIMIT and result.has_solution:
		logger.warning("Node limit reached while minimizing %s; keeping the incumbent", what)
		return result
	raise InfeasibleError(
		"Minimizing {0} ended with status '{1}'".format(what, result.status.value), result.status.value
	)


def solve_lexicographic(
	model: CompiledModel,
	primary: str,
	extra_rows: Sequence[Constraint] = (),
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> tuple[float, MistpSolution]:
	"""
	Minimize ``primary``, then the other objective among the primary's optima.

	Returns:
	    (optimal value of the primary objective, plan)
	"""
	settings = settings or get_settings()
	first_objective = objective_vector(model, primary)
	secondary = OBJECTIVES[1 - OBJECTIVES.index(primary)]
	first = run_milp(model.to_program(first_objective, extra_rows), primary, settings, stats)
	slack = settings.lexicographic_rtol * max(1.0, abs(first.objective))
	tie_break = Constraint(first_objective, "<=", first.objective + slack)
	second = run_milp(
		model.to_program(objective_vector(model, secondary), [*extra_rows, tie_break]),
		"{0} among {1} optima".format(secondary, primary),
		settings,
		stats,
	)
	limited = Status.ITERATION_LIMIT in (first.status, second.status)
	solution = model.decode(second.x, Status.FEASIBLE if limited else Status.OPTIMAL)
	logger.debug("Lexicographic %s-first optimum %.6f at (%.6f, %.6f)", primary, first.objective, solution.f1, solution.f2)
	return first.objective, solution


def solve_single(
	model: CompiledModel,
	objective: str = "cost",
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> MistpSolution:
	"""Minimize one objective alone, breaking ties on the other."""
	_, solution = solve_lexicographic(model, objective, settings=settings, stats=stats)
	return solution


def payoff_table(
	model: CompiledModel,
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> PayoffTable:
	"""
	Ideal point and upper bounds of both objectives.

	L[t] is the optimum of objective t alone; U[t] is the largest value of
	objective t over the two lexicographic argmins.

	Raises:
	    InfeasibleError: If the model has no feasible plan
	"""
	L1, cost_first = solve_lexicographic(model, "cost", settings=settings, stats=stats)
	L2, time_first = solve_lexicographic(model, "time", settings=settings, stats=stats)
	L1 = min(L1, cost_first.f1, time_first.f1)
	L2 = min(L2, cost_first.f2, time_first.f2)
	table = PayoffTable(
		L=(L1, L2),
		U=(max(cost_first.f1, time_first.f1), max(cost_first.f2, time_first.f2)),
		argmins=(cost_first, time_first),
	)
	logger.info("Payoff table: L=(%.6f, %.6f) U=(%.6f, %.6f)", *table.L, *table.U)
	return table
