# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Credibility Measures - Possibility, Necessity and Credibility of Threshold Events

For a trapezoidal variable the measures of {xi <= x} and {xi >= x} are
piecewise linear in x and are evaluated in closed form from the sup
definitions. A degenerate ramp (r1 = r2 or r3 = r4) is a step, never a
division by zero.

The threshold functions accept a scalar or a numpy array of thresholds and
return a float or an array of the same shape.

The alpha-pessimistic value is the smallest r with Cr{xi <= r} >= alpha; the
alpha-optimistic value is the largest r with Cr{xi >= r} >= alpha.
"""

import numpy as np
from numpy.typing import ArrayLike

from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy.trapezoid import TrapezoidalFuzzy


def _ramp(x: np.ndarray, start: float, end: float) -> np.ndarray:
	"""0 before start, 1 after end, linear between; a step at start when start == end."""
	if end > start:
		return np.clip((x - start) / (end - start), 0.0, 1.0)
	return np.where(x >= start, 1.0, 0.0)


def _falling(x: np.ndarray, start: float, end: float) -> np.ndarray:
	"""1 up to start, 0 from end on, linear between; a step at start when start == end."""
	if end > start:
		return np.clip((end - x) / (end - start), 0.0, 1.0)
	return np.where(x <= start, 1.0, 0.0)


def _result(value: np.ndarray) -> float | np.ndarray:
	return float(value) if np.ndim(value) == 0 else value


def possibility_leq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Pos{xi <= x}: sup of membership on (-inf, x]."""
	return _result(_ramp(np.asarray(x, dtype=float), xi.r1, xi.r2))


def necessity_leq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Nec{xi <= x}: one minus the sup of membership on (x, inf)."""
	return _result(_ramp(np.asarray(x, dtype=float), xi.r3, xi.r4))


def credibility_leq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Cr{xi <= x} = (Pos{xi <= x} + Nec{xi <= x}) / 2."""
	x = np.asarray(x, dtype=float)
	return _result(0.5 * (_ramp(x, xi.r1, xi.r2) + _ramp(x, xi.r3, xi.r4)))


def possibility_geq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Pos{xi >= x}: sup of membership on [x, inf)."""
	return _result(_falling(np.asarray(x, dtype=float), xi.r3, xi.r4))


def necessity_geq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Nec{xi >= x}: one minus the sup of membership on (-inf, x)."""
	return _result(_falling(np.asarray(x, dtype=float), xi.r1, xi.r2))


def credibility_geq(xi: TrapezoidalFuzzy, x: ArrayLike) -> float | np.ndarray:
	"""Cr{xi >= x} = (Pos{xi >= x} + Nec{xi >= x}) / 2."""
	x = np.asarray(x, dtype=float)
	return _result(0.5 * (_falling(x, xi.r3, xi.r4) + _falling(x, xi.r1, xi.r2)))


def _check_alpha(alpha: float) -> float:
	alpha = float(alpha)
	if not 0 < alpha <= 1:
		raise DomainError("Confidence level must lie in (0, 1], got {0}".format(alpha))
	return alpha


def pessimistic_value(xi: TrapezoidalFuzzy, alpha: float) -> float:
	"""
	alpha-pessimistic value inf{r : Cr{xi <= r} >= alpha}.

	Raises:
	    DomainError: If alpha is outside (0, 1]
	"""
	alpha = _check_alpha(alpha)
	if alpha <= 0.5:
		return (1 - 2 * alpha) * xi.r1 + 2 * alpha * xi.r2
	return 2 * (1 - alpha) * xi.r3 + (2 * alpha - 1) * xi.r4


def optimistic_value(xi: TrapezoidalFuzzy, alpha: float) -> float:
	"""
	alpha-optimistic value sup{r : Cr{xi >= r} >= alpha}.

	Raises:
	    DomainError: If alpha is outside (0, 1]
	"""
	alpha = _check_alpha(alpha)
	if alpha <= 0.5:
		return 2 * alpha * xi.r3 + (1 - 2 * alpha) * xi.r4
	return (2 * alpha - 1) * xi.r1 + 2 * (1 - alpha) * xi.r2
