# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Bounded-Variable Dense Simplex

Solves the continuous relaxation of a LinearProgram on a dense tableau.
Every row gets a slack column, ``A x + s = b``, whose bounds carry the row
sense: ``s >= 0`` for ``<=``, ``s <= 0`` for ``>=`` and ``s = 0`` for ``=``.
Variable bounds stay bounds. A nonbasic column rests at its lower or upper
bound and the ratio test stops a move at whichever bound comes first, so
``z <= Q`` never becomes a row.

A solve starts from the all-slack basis, or from the optimal basis of an
earlier solve of the same program under other bounds (branch and bound
hands each node's basis to its children). Phase 1 minimizes the total bound
violation of the basic variables and phase 2 the true objective; when the
starting basis is already dual feasible the dual simplex takes its place
and only the violated bounds are repaired.

Entering columns follow the largest reduced cost until ``bland_after``
consecutive degenerate pivots, after which Bland's rule (lowest eligible
index) takes over for the rest of the solve. Ratio-test ties go to the
lowest basic index, so identical input always produces identical pivots.

Usage:
    simplex = BoundedSimplex(lp)
    result, basis = simplex.solve(lower, upper)
    child, _ = simplex.solve(lower, tighter_upper, start=basis)
"""

import logging
from dataclasses import dataclass

import numpy as np

from fuzzystp.config import SolverSettings, get_settings
from fuzzystp.engine.program import LinearProgram, Sense, SolveResult, Status

logger = logging.getLogger(__name__)

# pivots between refactorizations of the basis
REFACTOR_EVERY = 64


@dataclass(frozen=True)
class Basis:
	"""Basic column of each row, and which nonbasic columns rest at their upper bound."""

	basic: np.ndarray
	at_upper: np.ndarray


class _Tableau:
	"""``B^-1 [A | I]`` for one set of bounds, with the current point of every column."""

	def __init__(self, simplex: "BoundedSimplex", lower: np.ndarray, upper: np.ndarray, start: Basis):
		self.simplex = simplex
		self.settings = simplex.settings
		self.lower = lower
		self.upper = upper
		self.basic = np.array(start.basic, dtype=int)
		self.is_basic = np.zeros(lower.shape[0], dtype=bool)
		self.is_basic[self.basic] = True
		self.at_upper = np.array(start.at_upper, dtype=bool) & ~self.is_basic
		self.x = np.zeros(lower.shape[0])
		self.table = np.zeros((self.basic.shape[0], lower.shape[0]))
		self.pivots = 0
		self.since_refactor = 0
		self.stalled = 0
		self.bland = False

	def basis(self) -> Basis:
		return Basis(self.basic.copy(), self.at_upper.copy())

	def _place_nonbasic(self) -> None:
		has_lower = np.isfinite(self.lower)
		has_upper = np.isfinite(self.upper)
		self.at_upper = ((self.at_upper & has_upper) | (~has_lower & has_upper)) & ~self.is_basic
		resting = np.where(self.at_upper, self.upper, np.where(has_lower, self.lower, 0.0))
		self.x = np.where(self.is_basic, self.x, resting)

	def refactor(self) -> bool:
		"""Rebuild the tableau and the basic values from the basis; False when the basis is singular."""
		self._place_nonbasic()
		self.since_refactor = 0
		if self.basic.size == 0:
			return True
		matrix = self.simplex.matrix
		nonbasic = ~self.is_basic
		residual = self.simplex.rhs - matrix[:, nonbasic] @ self.x[nonbasic]
		try:
			solved = np.linalg.solve(matrix[:, self.basic], np.column_stack([matrix, residual]))
		except np.linalg.LinAlgError:
			return False
		if not np.all(np.isfinite(solved)):
			return False
		self.table = solved[:, :-1]
		self.x[self.basic] = solved[:, -1]
		return True

	def reduced(self, cost: np.ndarray) -> np.ndarray:
		return cost - cost[self.basic] @ self.table

	def movable(self) -> tuple[np.ndarray, np.ndarray]:
		"""Nonbasic columns that can still increase, and those that can still decrease."""
		nonbasic = ~self.is_basic
		return nonbasic & (self.x < self.upper), nonbasic & (self.x > self.lower)

	def violations(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
		tol = self.settings.feasibility_tol
		values = self.x[self.basic]
		return values, values < self.lower[self.basic] - tol, values > self.upper[self.basic] + tol

	def primal_feasible(self) -> bool:
		_, below, above = self.violations()
		return not (below.any() or above.any())

	def dual_feasible(self) -> bool:
		tol = self.settings.feasibility_tol
		reduced = self.reduced(self.simplex.cost)
		up, down = self.movable()
		return not np.any((up & (reduced < -tol)) | (down & (reduced > tol)))

	def _track(self, degenerate: bool) -> None:
		if not degenerate:
			self.stalled = 0
			return
		self.stalled += 1
		if not self.bland and self.stalled >= self.settings.bland_after:
			logger.debug("Switching to Bland's rule after %d stalled pivots", self.stalled)
			self.bland = True

	def pivot(self, row: int, column: int, leaving_at_upper: bool) -> None:
		leaving = self.basic[row]
		table = self.table
		table[row] /= table[row, column]
		factors = table[:, column].copy()
		factors[row] = 0.0
		table -= np.outer(factors, table[row])
		table[:, column] = 0.0
		table[row, column] = 1.0
		self.is_basic[leaving] = False
		self.at_upper[leaving] = leaving_at_upper
		self.x[leaving] = self.upper[leaving] if leaving_at_upper else self.lower[leaving]
		self.basic[row] = column
		self.is_basic[column] = True
		self.at_upper[column] = False
		self.pivots += 1
		self.since_refactor += 1
		if self.since_refactor >= REFACTOR_EVERY:
			self.refactor()

	def primal(self, phase_one: bool, limit: int) -> Status:
		"""
		Primal simplex over the bounded columns.

		Phase 1 prices each violated basic bound at one unit and stops once
		the basis is feasible; an infeasible basic variable moving toward its
		violated bound stops there, one moving away is not limited.
		"""
		eps = self.settings.pivot_eps
		rows = self.basic.shape[0]
		cost = self.simplex.cost
		below = above = np.zeros(rows, dtype=bool)
		while self.pivots < limit:
			if phase_one:
				values, below, above = self.violations()
				if not (below.any() or above.any()):
					return Status.OPTIMAL
				cost = np.zeros(self.x.shape[0])
				cost[self.basic[below]] = -1.0
				cost[self.basic[above]] = 1.0
			else:
				values = self.x[self.basic]
			reduced = self.reduced(cost)
			up, down = self.movable()
			increase = up & (reduced < -eps)
			eligible = increase | (down & (reduced > eps))
			if not eligible.any():
				return Status.INFEASIBLE if phase_one else Status.OPTIMAL
			if self.bland:
				column = int(np.flatnonzero(eligible)[0])
			else:
				column = int(np.argmax(np.where(eligible, np.abs(reduced), -1.0)))
			direction = 1.0 if increase[column] else -1.0

			# basic values move by -step * alpha
			alpha = direction * self.table[:, column]
			lower = self.lower[self.basic]
			upper = self.upper[self.basic]
			falling = (alpha > eps) & ~below
			rising = (alpha < -eps) & ~above
			ratios = np.full(rows, np.inf)
			ratios[falling] = (values[falling] - np.where(above, upper, lower)[falling]) / alpha[falling]
			ratios[rising] = (np.where(below, lower, upper)[rising] - values[rising]) / -alpha[rising]
			ratios = np.maximum(ratios, 0.0)
			best = ratios.min() if rows else np.inf
			span = self.upper[column] - self.lower[column]

			if span <= best:
				if not np.isfinite(span):
					return Status.UNBOUNDED
				self.x[self.basic] -= span * alpha
				self.x[column] += direction * span
				self.at_upper[column] = direction > 0
				self.pivots += 1
				self._track(False)
				continue

			ties = np.flatnonzero(ratios <= best + eps * max(1.0, abs(best)))
			row = int(ties[np.argmin(self.basic[ties])])
			leaving_at_upper = bool(above[row]) if alpha[row] > 0 else not bool(below[row])
			self.x[self.basic] -= best * alpha
			self.x[column] += direction * best
			self._track(best <= eps)
			self.pivot(row, column, leaving_at_upper)
		return Status.ITERATION_LIMIT

	def dual(self, limit: int) -> Status:
		"""Dual simplex from a dual feasible basis: repair the worst violated basic bound each pivot."""
		eps = self.settings.pivot_eps
		cost = self.simplex.cost
		while self.pivots < limit:
			values, below, above = self.violations()
			infeasible = below | above
			if not infeasible.any():
				return Status.OPTIMAL
			if self.bland:
				candidates = np.flatnonzero(infeasible)
				row = int(candidates[np.argmin(self.basic[candidates])])
			else:
				lower = self.lower[self.basic]
				upper = self.upper[self.basic]
				excess = np.where(below, lower - values, np.where(above, values - upper, 0.0))
				row = int(np.argmax(excess))

			entries = self.table[row].copy()
			up, down = self.movable()
			if below[row]:
				eligible = (up & (entries < -eps)) | (down & (entries > eps))
				target = self.lower[self.basic[row]]
			else:
				eligible = (up & (entries > eps)) | (down & (entries < -eps))
				target = self.upper[self.basic[row]]
			if not eligible.any():
				return Status.INFEASIBLE
			reduced = self.reduced(cost)
			ratios = np.full(entries.shape[0], np.inf)
			ratios[eligible] = np.abs(reduced[eligible]) / np.abs(entries[eligible])
			column = int(np.argmin(ratios))

			step = (values[row] - target) / entries[column]
			self.x[self.basic] -= step * self.table[:, column]
			self.x[column] += step
			self._track(ratios[column] <= eps)
			self.pivot(row, column, bool(above[row]))
		return Status.ITERATION_LIMIT

	def optimize(self, limit: int) -> Status:
		while True:
			if self.dual_feasible():
				status = self.dual(limit)
			else:
				status = self.primal(phase_one=True, limit=limit)
				if status is Status.OPTIMAL:
					status = self.primal(phase_one=False, limit=limit)
			if status is not Status.OPTIMAL or self.since_refactor == 0:
				return status
			# confirm on a fresh factorization; drift sends the solve round again
			self.refactor()
			if self.primal_feasible() and self.dual_feasible():
				return status


class BoundedSimplex:
	"""
	A LinearProgram prepared for repeated solves under changing variable bounds.

	The rows, objective and slack bounds are fixed at construction; each call
	to ``solve`` supplies the variable bounds and, optionally, a starting basis.
	"""

	def __init__(self, lp: LinearProgram, settings: SolverSettings | None = None):
		self.settings = settings or get_settings()
		self.objective = lp.objective
		self.num_variables = lp.num_variables
		rows = lp.num_rows
		self.matrix = np.hstack([np.asarray(lp.matrix, dtype=float), np.eye(rows)])
		self.rhs = np.asarray(lp.rhs, dtype=float)
		self.cost = np.concatenate([lp.objective, np.zeros(rows)])
		self.slack_lower = np.array([-np.inf if sense is Sense.GE else 0.0 for sense in lp.senses])
		self.slack_upper = np.array([np.inf if sense is Sense.LE else 0.0 for sense in lp.senses])

	def slack_basis(self) -> Basis:
		"""All slacks basic; structural columns with a negative cost start at a finite upper bound."""
		n = self.num_variables
		rows = self.rhs.shape[0]
		at_upper = np.zeros(n + rows, dtype=bool)
		at_upper[:n] = self.objective < 0
		return Basis(np.arange(n, n + rows), at_upper)

	def solve(
		self,
		lower: np.ndarray,
		upper: np.ndarray,
		start: Basis | None = None,
	) -> tuple[SolveResult, Basis | None]:
		"""
		Solve the relaxation under the given variable bounds.

		Args:
		    lower: Lower bounds (finite)
		    upper: Upper bounds (may be +inf)
		    start: Optimal basis of an earlier solve of this program, if any

		Returns:
		    (SolveResult, optimal basis or None)
		"""
		settings = self.settings
		lower = np.asarray(lower, dtype=float)
		upper = np.asarray(upper, dtype=float)
		if np.any(lower > upper + settings.feasibility_tol):
			return SolveResult(Status.INFEASIBLE), None

		full_lower = np.concatenate([lower, self.slack_lower])
		full_upper = np.concatenate([upper, self.slack_upper])
		tableau = None
		if start is not None:
			tableau = _Tableau(self, full_lower, full_upper, start)
			if not tableau.refactor():
				logger.debug("Starting basis is singular; falling back to the slack basis")
				tableau = None
		if tableau is None:
			tableau = _Tableau(self, full_lower, full_upper, self.slack_basis())
			tableau.refactor()

		status = tableau.optimize(settings.pivot_limit)
		if status is not Status.OPTIMAL:
			if status is Status.ITERATION_LIMIT:
				logger.warning("Simplex stopped at the pivot limit (%d)", settings.pivot_limit)
			return SolveResult(status, iterations=tableau.pivots), None

		x = np.minimum(np.maximum(tableau.x[: self.num_variables], lower), upper)
		result = SolveResult(
			Status.OPTIMAL, x=x, objective=float(self.objective @ x), nodes=0, iterations=tableau.pivots
		)
		return result, tableau.basis()


def solve_bounded(
	lp: LinearProgram,
	lower: np.ndarray,
	upper: np.ndarray,
	settings: SolverSettings | None = None,
) -> SolveResult:
	"""
	Solve the continuous relaxation of ``lp`` with the given variable bounds.

	Args:
	    lp: Program whose rows and objective are used; its own bounds are ignored
	    lower: Lower bounds (finite)
	    upper: Upper bounds (may be +inf)
	    settings: Tolerances and pivot limits

	Returns:
	    SolveResult with status optimal, infeasible, unbounded or iteration-limit
	"""
	result, _ = BoundedSimplex(lp, settings).solve(lower, upper)
	return result


def solve_lp(lp: LinearProgram, settings: SolverSettings | None = None) -> SolveResult:
	"""
	Solve the continuous relaxation of ``lp`` (integrality flags are ignored).

	Example:
	    >>> lp = LinearProgram([-1.0], [[1.0]], ["<="], [3.0])
	    >>> solve_lp(lp).objective
	    -3.0
	"""
	return solve_bounded(lp, np.asarray(lp.lower, dtype=float), np.asarray(lp.upper, dtype=float), settings)
