# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Global Criterion Method

Minimizes the normalized q-norm distance to the ideal point

    G = ( sum_t ( max(f_t - L_t, 0) / D_t ) ** q ) ** (1 / q)

with D_t = L_t ("by-ideal") or D_t = U_t - L_t ("by-range"). An injected
ideal need not be attainable; values below it count as zero deviation. G
is nondecreasing in each objective, so its minimum lies on the
nondominated frontier. The frontier is traced with an epsilon-constraint sweep:
minimize f2 subject to f1 <= eps, starting from eps = U1 and moving eps to
the achieved f1 minus ``resolution`` after every solve. Frontier points
whose f1 falls inside a skipped window of width ``resolution`` are not
visited; the reported lower bound covers them.
"""

import logging

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine import Constraint
from fuzzystp.exceptions import DomainError, InfeasibleError
from fuzzystp.model import CompiledModel
from fuzzystp.scalarization.lexicographic import payoff_table, run_milp
from fuzzystp.scalarization.results import GlobalCriterionResult, ParetoPoint, PayoffTable, SolveStats

logger = logging.getLogger(__name__)

NORMALIZATIONS = ("by-ideal", "by-range")


def global_criterion_value(
	point: tuple[float, float],
	ideal: tuple[float, float],
	q: float,
	denominators: tuple[float, float],
) -> float:
	"""
	Normalized q-norm excess of a point over the ideal.

	Raises:
	    DomainError: If q < 1 or a denominator is not positive
	"""
	if not q >= 1:
		raise DomainError("The global criterion exponent q must be >= 1, got {0}".format(q))
	if any(not denominator > 0 for denominator in denominators):
		raise DomainError("Normalization denominators must be positive, got {0}".format(tuple(denominators)))
	total = sum(
		(max(value - best, 0.0) / denominator) ** q
		for value, best, denominator in zip(point, ideal, denominators, strict=True)
	)
	return total ** (1.0 / q)


def denominators_for(
	normalization: str,
	ideal: tuple[float, float],
	bounds: PayoffTable,
) -> tuple[float, float]:
	if normalization == "by-ideal":
		if any(not value > 0 for value in ideal):
			raise DomainError("by-ideal normalization needs a positive ideal point, got {0}".format(tuple(ideal)))
		return (float(ideal[0]), float(ideal[1]))
	if normalization == "by-range":
		return tuple(bounds.range(t) if bounds.range(t) > 0 else 1.0 for t in range(2))
	raise DomainError(
		"Unknown normalization '{0}', expected one of: {1}".format(normalization, ", ".join(NORMALIZATIONS))
	)


def solve_global_criterion(
	model: CompiledModel,
	ideal: tuple[float, float] | None = None,
	q: float = 2,
	normalization: str = "by-ideal",
	resolution: float | None = None,
	bounds: PayoffTable | None = None,
	settings: SolverSettings | None = None,
	stats: SolveStats | None = None,
) -> GlobalCriterionResult:
	"""
	Frontier point minimizing the global criterion.

	Args:
	    model: Compiled bi-objective model
	    ideal: (L1, L2) to measure from; defaults to the payoff table's L
	    q: Norm exponent, >= 1
	    normalization: "by-ideal" or "by-range"
	    resolution: Sweep step in f1 units; defaults to (U1 - L1) / 200
	    bounds: Payoff table supplying U1 and the range denominators; computed when omitted
	    settings: Solver tolerances, limits and the sweep cap
	    stats: Optional solve counter

	Returns:
	    GlobalCriterionResult

	Raises:
	    DomainError: If q < 1, the normalization is unknown or the resolution is not positive
	    InfeasibleError: If the model has no feasible plan
	"""
	settings = settings or get_settings()
	if not q >= 1:
		raise DomainError("The global criterion exponent q must be >= 1, got {0}".format(q))
	if resolution is not None and not resolution > 0:
		raise DomainError("Sweep resolution must be positive, got {0}".format(resolution))
	if normalization not in NORMALIZATIONS:
		raise DomainError(
			"Unknown normalization '{0}', expected one of: {1}".format(normalization, ", ".join(NORMALIZATIONS))
		)
	bounds = bounds or payoff_table(model, settings, stats)
	ideal = tuple(float(value) for value in (ideal or bounds.L))
	denominators = denominators_for(normalization, ideal, bounds)
	L1, U1 = bounds.L[0], bounds.U[0]
	if resolution is None:
		resolution = (U1 - L1) / 200 if U1 > L1 else 1.0

	def criterion(f1: float, f2: float) -> float:
		return global_criterion_value((f1, f2), ideal, q, denominators)

	frontier: list[ParetoPoint] = []
	epsilon = U1 + settings.feasibility_tol
	floor = min(L1, ideal[0]) - settings.feasibility_tol
	while True:
		if len(frontier) >= settings.sweep_limit:
			logger.warning("Sweep stopped after %d solves with eps=%.6f", settings.sweep_limit, epsilon)
			break
		cap = Constraint(model.objective_cost, "<=", epsilon)
		try:
			result = run_milp(model.to_program(model.objective_time, [cap]), "time with cost <= eps", settings, stats)
		except InfeasibleError:
			if not frontier:
				raise
			break
		f1, f2 = model.objective_values(result.x)
		frontier.append(
			ParetoPoint(f1, f2, model.decode(result.x, result.status), epsilon=epsilon, G=criterion(f1, f2))
		)
		logger.debug("eps=%.6f -> f1=%.6f f2=%.6f G=%.9f", epsilon, f1, f2, frontier[-1].G)
		epsilon = f1 - resolution
		if epsilon < floor:
			break

	def window_bound(low: float, high: float, f2: float) -> float:
		# unvisited points have f1 in [low, high] and f2 >= the visited f2
		return criterion(low, f2)

	best = min(frontier, key=lambda point: point.G)
	lower_bound = best.G
	for point in frontier:
		lower_bound = min(lower_bound, window_bound(max(L1, point.f1 - resolution), point.f1, point.f2))
	if len(frontier) >= settings.sweep_limit:
		lower_bound = min(lower_bound, window_bound(L1, max(L1, epsilon), frontier[-1].f2))
	solution = best.solution
	logger.info(
		"Global criterion: G=%.9f at (%.6f, %.6f) after %d frontier solves, gap %.3g",
		best.G,
		best.f1,
		best.f2,
		len(frontier),
		best.G - lower_bound,
	)
	return GlobalCriterionResult(
		G=best.G,
		solution=solution,
		lower_bound=lower_bound,
		gap=best.G - lower_bound,
		frontier=tuple(frontier),
		ideal=ideal,
		q=q,
		normalization=normalization,
	)
