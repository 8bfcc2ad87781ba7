# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Fuzzy Programming (Max-Min) Compromise

Each objective gets a linear membership that is 1 at its lower bound L and
0 at its upper bound U. The compromise maximizes the smallest membership
lambda with one extra continuous column:

    maximize    lambda
    subject to  f_t + lambda * (U_t - L_t) <= U_t    for t = 1, 2
                0 <= lambda <= 1
                every model row

An objective with U_t == L_t has constant membership 1; its row keeps
f_t <= U_t with a zero lambda coefficient and it is left out of the min.

Usage:
    from fuzzystp.scalarization import payoff_table, solve_fuzzy_programming

    result = solve_fuzzy_programming(model, payoff_table(model))
    print(result.lambda_value, result.solution.f1, result.solution.f2)
"""

import logging

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Constraint, Status
from fuzzystp.model import CompiledModel, MistpSolution
from fuzzystp.scalarization.lexicographic import run_milp
from fuzzystp.scalarization.results import FuzzyProgrammingResult, PayoffTable, SolveStats

logger = logging.getLogger(__name__)


def memberships(solution: MistpSolution, bounds: PayoffTable) -> tuple[float, float]:
	"""Linear membership of each objective at a plan, clipped to [0, 1]."""
	values = []
	for t, achieved in enumerate((solution.f1, solution.f2)):
		spread = bounds.range(t)
		if spread <= 0:
			values.append(1.0)
		else:
			values.append(float(np.clip((bounds.U[t] - achieved) / spread, 0.0, 1.0)))
	return values[0], values[1]


def satisfaction(solution: MistpSolution, bounds: PayoffTable) -> float:
	"""Smallest membership over the objectives with a nonzero range; 1 if there is none."""
	levels = [level for t, level in enumerate(memberships(solution, bounds)) if bounds.range(t) > 0]
	return min(levels, default=1.0)


def solve_fuzzy_programming(
	model: CompiledModel,
	bounds: PayoffTable,
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> FuzzyProgrammingResult:
	"""
	Max-min compromise between cost and time.

	Args:
	    model: Compiled bi-objective model
	    bounds: Computed or injected L and U of both objectives
	    settings: Solver tolerances and limits
	    stats: Optional solve counter

	Returns:
	    FuzzyProgrammingResult with lambda = min_t (U_t - f_t) / (U_t - L_t) at the plan

	Raises:
	    InfeasibleError: If no plan keeps every objective within its upper bound
	"""
	settings = settings or get_settings()
	base = model.to_program(np.zeros(model.num_variables)).with_column(-1.0, upper=1.0)
	rows = []
	for t, objective in enumerate((model.objective_cost, model.objective_time)):
		spread = bounds.range(t)
		if spread <= 0:
			logger.warning("Objective %d has U == L = %g; its membership is constant", t + 1, bounds.U[t])
		rows.append(Constraint(np.append(objective, max(spread, 0.0)), "<=", bounds.U[t]))
	result = run_milp(base.with_rows(rows), "-lambda", settings, stats)

	status = Status.FEASIBLE if result.status is Status.ITERATION_LIMIT else Status.OPTIMAL
	solution = model.decode(result.x, status)
	level = satisfaction(solution, bounds)
	solved_level = float(result.x[-1])
	if abs(level - solved_level) > 1e-6:
		logger.debug("Solver lambda %.9f differs from recomputed %.9f", solved_level, level)
	logger.info("Fuzzy programming compromise: lambda=%.6f f1=%.6f f2=%.6f", level, solution.f1, solution.f2)
	return FuzzyProgrammingResult(lambda_value=level, solution=solution, memberships=memberships(solution, bounds))
