# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from collections.abc import Iterable
from dataclasses import dataclass

from fuzzystp.engine import Status
from fuzzystp.model.instance import Instance


@dataclass(frozen=True)
class MistpSolution:
	"""
	Shipments and vehicle trips of one transportation plan.

	Attributes:
	    x: Units shipped, x[i][j][k][p]
	    z: Vehicle trips, z[i][j][k]
	    f1: Cost objective (currency), nan when not evaluated
	    f2: Time objective (hours), nan when not evaluated
	    status: Solver status the plan came from
	"""

	x: tuple
	z: tuple
	f1: float = float("nan")
	f2: float = float("nan")
	status: Status = Status.FEASIBLE

	@classmethod
	def from_entries(
		cls,
		instance: Instance,
		z_entries: Iterable[tuple[int, int, int, float]],
		x_entries: Iterable[tuple[int, int, int, int, float]],
		status: Status = Status.FEASIBLE,
	) -> "MistpSolution":
		"""Build a plan from sparse 0-based (i, j, k[, p], value) entries; absent entries are zero."""
		z = [[[0 for _ in range(instance.K)] for _ in range(instance.n)] for _ in range(instance.m)]
		x = [
			[[[0.0 for _ in range(instance.l)] for _ in range(instance.K)] for _ in range(instance.n)]
			for _ in range(instance.m)
		]
		for i, j, k, value in z_entries:
			z[i][j][k] = value
		for i, j, k, p, value in x_entries:
			x[i][j][k][p] = float(value)
		return cls(x=_nested_tuple(x), z=_nested_tuple(z), status=status)

	@classmethod
	def zeros(cls, instance: Instance) -> "MistpSolution":
		return cls.from_entries(instance, [], [])

	def with_objectives(self, f1: float, f2: float) -> "MistpSolution":
		return MistpSolution(self.x, self.z, float(f1), float(f2), self.status)

	def z_entries(self) -> list[tuple[int, int, int, float]]:
		"""Nonzero trips as 0-based (i, j, k, value)."""
		return [
			(i, j, k, value)
			for i, plane in enumerate(self.z)
			for j, row in enumerate(plane)
			for k, value in enumerate(row)
			if value
		]

	def x_entries(self) -> list[tuple[int, int, int, int, float]]:
		"""Nonzero shipments as 0-based (i, j, k, p, value)."""
		return [
			(i, j, k, p, value)
			for i, plane in enumerate(self.x)
			for j, row in enumerate(plane)
			for k, products in enumerate(row)
			for p, value in enumerate(products)
			if value
		]


def _nested_tuple(value):
	if isinstance(value, list):
		return tuple(_nested_tuple(item) for item in value)
	return value
