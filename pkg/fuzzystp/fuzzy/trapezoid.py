# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Trapezoidal Fuzzy Variables

A trapezoidal fuzzy variable (r1, r2, r3, r4) has membership rising linearly
on [r1, r2], equal to 1 on the plateau [r2, r3] and falling linearly on
[r3, r4]. Triangular variables are the r2 = r3 case and crisp numbers the
r1 = r2 = r3 = r4 case.

Usage:
    from fuzzystp.fuzzy import TrapezoidalFuzzy, linear_combination

    cost = TrapezoidalFuzzy(101, 102, 104, 105)
    total = linear_combination([(3, cost), (2, TrapezoidalFuzzy.crisp(90))])
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from numbers import Real

from fuzzystp.exceptions import DomainError


@dataclass(frozen=True)
class TrapezoidalFuzzy:
	"""
	Immutable trapezoidal fuzzy variable.

	Attributes:
	    r1: Left end of the support
	    r2: Left end of the plateau
	    r3: Right end of the plateau
	    r4: Right end of the support
	"""

	r1: float
	r2: float
	r3: float
	r4: float

	def __post_init__(self):
		values = self.as_tuple()
		if not all(math.isfinite(value) for value in values):
			raise DomainError("Trapezoid components must be finite, got {0}".format(values))
		if not (self.r1 <= self.r2 <= self.r3 <= self.r4):
			raise DomainError("non-monotone trapezoid {0}: expected r1 <= r2 <= r3 <= r4".format(values))

	@classmethod
	def crisp(cls, value: float) -> "TrapezoidalFuzzy":
		"""Build the degenerate trapezoid (c, c, c, c)."""
		value = float(value)
		return cls(value, value, value, value)

	@classmethod
	def coerce(cls, value: "TrapezoidalFuzzy | Real | Sequence[Real]") -> "TrapezoidalFuzzy":
		"""
		Build a trapezoid from a 4-sequence or a scalar.

		Args:
		    value: An existing trapezoid, a crisp number or four components

		Returns:
		    The corresponding TrapezoidalFuzzy

		Raises:
		    DomainError: If the value has the wrong shape or is non-monotone
		"""
		if isinstance(value, TrapezoidalFuzzy):
			return value
		if isinstance(value, bool):
			raise DomainError("Expected a number or a 4-array, got {0!r}".format(value))
		if isinstance(value, Real):
			return cls.crisp(float(value))
		if isinstance(value, Sequence) and not isinstance(value, str):
			if len(value) != 4:
				raise DomainError("Expected 4 components, got {0}".format(len(value)))
			if not all(isinstance(item, Real) and not isinstance(item, bool) for item in value):
				raise DomainError("Trapezoid components must be numbers, got {0!r}".format(list(value)))
			return cls(*(float(item) for item in value))
		raise DomainError("Expected a number or a 4-array, got {0!r}".format(value))

	def as_tuple(self) -> tuple[float, float, float, float]:
		return (self.r1, self.r2, self.r3, self.r4)

	@property
	def is_crisp(self) -> bool:
		return self.r1 == self.r4

	def __neg__(self) -> "TrapezoidalFuzzy":
		return negate(self)


def membership(xi: TrapezoidalFuzzy, x: float) -> float:
	"""
	Possibility distribution of a trapezoidal variable.

	The plateau [r2, r3] is closed; a degenerate ramp (r1 = r2 or r3 = r4)
	is a step, so the point r1 = r2 has membership 1.
	"""
	if xi.r2 <= x <= xi.r3:
		return 1.0
	if xi.r1 < x < xi.r2:
		return (x - xi.r1) / (xi.r2 - xi.r1)
	if xi.r3 < x < xi.r4:
		return (xi.r4 - x) / (xi.r4 - xi.r3)
	return 0.0


def negate(xi: TrapezoidalFuzzy) -> TrapezoidalFuzzy:
	"""Return -xi = (-r4, -r3, -r2, -r1)."""
	return TrapezoidalFuzzy(-xi.r4, -xi.r3, -xi.r2, -xi.r1)


def linear_combination(terms: Iterable[tuple[float, TrapezoidalFuzzy]]) -> TrapezoidalFuzzy:
	"""
	Nonnegatively weighted sum of trapezoidal variables.

	Args:
	    terms: Pairs of (weight, variable); weights must be >= 0

	Returns:
	    The componentwise weighted sum; (0, 0, 0, 0) for no terms

	Raises:
	    DomainError: If any weight is negative
	"""
	columns: list[list[float]] = [[], [], [], []]
	for weight, xi in terms:
		weight = float(weight)
		if not weight >= 0:
			raise DomainError("linear_combination requires nonnegative weights, got {0}".format(weight))
		for column, component in zip(columns, xi.as_tuple(), strict=True):
			column.append(weight * component)
	return TrapezoidalFuzzy(*(math.fsum(column) for column in columns))
