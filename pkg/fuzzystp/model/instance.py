# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Instance - Data Model of the Multi-Item Solid Transportation Problem

Sources i, destinations j, vehicle types k and products p. Per-trip costs
and travel times are indexed [i][j][k], handling times [p][k]; capacities
and fleet sizes are per vehicle type, unit volume and weight per product,
supplies [i][p] and demands [j][p].

Indices are 0-based in code and 1-based in every message and report.
"""

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass, field, fields
from numbers import Integral, Real
from typing import Any

from fuzzystp.exceptions import ValidationError
from fuzzystp.fuzzy import TrapezoidalFuzzy

FUZZY_TABLES = ("cost", "travel_time", "handling_time")


def _freeze(value: Any) -> Any:
	if isinstance(value, list | tuple):
		return tuple(_freeze(item) for item in value)
	return value


@dataclass(frozen=True)
class Instance:
	"""
	Immutable MISTP data set.

	Attributes:
	    m, n, K, l: Counts of sources, destinations, vehicle types and products
	    cost: Per-trip cost c[i][j][k] (currency)
	    travel_time: Per-trip travel time t[i][j][k] (hours)
	    handling_time: Loading and unloading time a[p][k] per unit (minutes)
	    volume_cap, weight_cap: Capacity per vehicle of type k (ft3, kg)
	    unit_volume, unit_weight: Size of one unit of product p (ft3, kg)
	    supply: Units of product p available at source i, [i][p]
	    demand: Units of product p required at destination j, [j][p]
	    fleet: Vehicles of type k available
	    name: Optional label carried into reports
	"""

	m: int
	n: int
	K: int
	l: int
	cost: tuple
	travel_time: tuple
	handling_time: tuple
	volume_cap: tuple
	weight_cap: tuple
	unit_volume: tuple
	unit_weight: tuple
	supply: tuple
	demand: tuple
	fleet: tuple
	name: str = field(default="")

	def __post_init__(self):
		for item in fields(self):
			object.__setattr__(self, item.name, _freeze(getattr(self, item.name)))

	def expected_shapes(self) -> dict[str, tuple[int, ...]]:
		m, n, K, l = self.m, self.n, self.K, self.l
		return {
			"cost": (m, n, K),
			"travel_time": (m, n, K),
			"handling_time": (l, K),
			"volume_cap": (K,),
			"weight_cap": (K,),
			"unit_volume": (l,),
			"unit_weight": (l,),
			"supply": (m, l),
			"demand": (n, l),
			"fleet": (K,),
		}

	def lanes(self) -> Iterator[tuple[int, int, int]]:
		"""Every (i, j, k) in index order."""
		return itertools.product(range(self.m), range(self.n), range(self.K))


@dataclass
class ValidationReport:
	"""Errors block compilation; warnings are informational."""

	errors: list[str] = field(default_factory=list)
	warnings: list[str] = field(default_factory=list)

	@property
	def ok(self) -> bool:
		return not self.errors

	def raise_for_errors(self) -> None:
		if self.errors:
			raise ValidationError(self.errors)


def has_shape(table: Any, shape: tuple[int, ...]) -> bool:
	if not shape:
		return not isinstance(table, tuple)
	return isinstance(table, tuple) and len(table) == shape[0] and all(has_shape(row, shape[1:]) for row in table)


def _entries(table: tuple, shape: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], Any]]:
	for index in itertools.product(*(range(size) for size in shape)):
		value = table
		for position in index:
			value = value[position]
		yield index, value


def _label(name: str, index: tuple[int, ...], letters: str) -> str:
	return "{0}[{1}]".format(name, ",".join(f"{letter}={position + 1}" for letter, position in zip(letters, index, strict=True)))


INDEX_LETTERS = {
	"cost": "ijk",
	"travel_time": "ijk",
	"handling_time": "pk",
	"volume_cap": "k",
	"weight_cap": "k",
	"unit_volume": "p",
	"unit_weight": "p",
	"supply": "ip",
	"demand": "jp",
	"fleet": "k",
}


def _is_number(value: Any) -> bool:
	return isinstance(value, Real) and not isinstance(value, bool) and math.isfinite(value)


def validate(instance: Instance) -> ValidationReport:
	"""
	Check an instance for consistency and necessary feasibility conditions.

	Errors: bad dimensions, shape mismatches, negative or non-finite data,
	non-positive capacities, supply short of demand for a product, and a
	fleet too small (by volume or weight) to carry total demand.
	Warnings: crisp fuzzy entries.

	Returns:
	    ValidationReport; an empty error list means ``compile_model`` accepts the instance
	"""
	report = ValidationReport()
	for name in ("m", "n", "K", "l"):
		value = getattr(instance, name)
		if not isinstance(value, Integral) or isinstance(value, bool) or value < 1:
			report.errors.append("dimension '{0}' must be an integer >= 1, got {1!r}".format(name, value))
	if report.errors:
		return report

	shapes = instance.expected_shapes()
	for name, shape in shapes.items():
		if not has_shape(getattr(instance, name), shape):
			report.errors.append("dimension mismatch: '{0}' must have shape {1}".format(name, shape))
	if report.errors:
		return report

	for name in FUZZY_TABLES:
		for index, value in _entries(getattr(instance, name), shapes[name]):
			label = _label(name, index, INDEX_LETTERS[name])
			if not isinstance(value, TrapezoidalFuzzy):
				report.errors.append("{0} is not a trapezoidal fuzzy value: {1!r}".format(label, value))
			elif value.r1 < 0:
				report.errors.append("negative data: {0} = {1}".format(label, value.as_tuple()))
			elif value.is_crisp:
				report.warnings.append("{0} is crisp ({1})".format(label, value.r1))

	positive = ("volume_cap", "weight_cap", "unit_volume", "unit_weight")
	for name in (*positive, "supply", "demand", "fleet"):
		for index, value in _entries(getattr(instance, name), shapes[name]):
			label = _label(name, index, INDEX_LETTERS[name])
			if not _is_number(value):
				report.errors.append("{0} must be a finite number, got {1!r}".format(label, value))
			elif name in positive and value <= 0:
				report.errors.append("{0} must be positive, got {1}".format(label, value))
			elif value < 0:
				report.errors.append("negative data: {0} = {1}".format(label, value))
			elif name == "fleet" and value != int(value):
				report.errors.append("{0} must be a whole number of vehicles, got {1}".format(label, value))
	if report.errors:
		return report

	for p in range(instance.l):
		available = math.fsum(instance.supply[i][p] for i in range(instance.m))
		required = math.fsum(instance.demand[j][p] for j in range(instance.n))
		if available < required:
			report.errors.append(
				"supply < demand for product {0}: {1:g} available, {2:g} required".format(p + 1, available, required)
			)

	for capacity, unit, label in (("volume_cap", "unit_volume", "volume"), ("weight_cap", "unit_weight", "weight")):
		fleet_capacity = math.fsum(
			instance.fleet[k] * getattr(instance, capacity)[k] for k in range(instance.K)
		)
		load = math.fsum(
			getattr(instance, unit)[p] * instance.demand[j][p] for p in range(instance.l) for j in range(instance.n)
		)
		if fleet_capacity < load:
			report.errors.append(
				"fleet {0} capacity {1:g} is below the {0} of total demand {2:g}".format(label, fleet_capacity, load)
			)
	return report
