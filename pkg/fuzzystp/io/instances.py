# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Instance Documents

An instance is one JSON object. Units are part of the key names:

    {
        "name": "steel",
        "dimensions": {"m": 2, "n": 3, "K": 2, "l": 2},
        "cost": [[[[101, 102, 104, 105], ...]]],        # [i][j][k], currency per trip
        "travel_time_hours": [[[[5, 5.5, 6, 6.2], ...]]],  # [i][j][k]
        "handling_time_minutes": [[[8, 8.5, 9, 10], ...]],  # [p][k], per unit
        "volume_cap_ft3": [406.12, 348],
        "weight_cap_kg": [18400, 15767],
        "unit_volume_ft3": [19.94, 12.66],
        "unit_weight_kg": [45, 40],
        "supply": [[625, 450], [428, 380]],              # [i][p]
        "demand": [[340, 275], [360, 250], [345, 280]],  # [j][p]
        "fleet": [52, 35]
    }

Fuzzy entries are 4-arrays or plain numbers (crisp). Keys starting with an
underscore are comments and are ignored. Error key paths use 0-based
indices, e.g. ``cost[0][1][0]``.

Usage:
    from fuzzystp.io import parse_instance

    instance = parse_instance("fuzzystp/fixtures/steel.json")
"""

import hashlib
import json
import logging
from numbers import Real
from os import PathLike
from pathlib import Path
from typing import Any

from fuzzystp.exceptions import DomainError, InstanceError
from fuzzystp.fuzzy import TrapezoidalFuzzy
from fuzzystp.model import Instance, validate

logger = logging.getLogger(__name__)

DIMENSIONS = ("m", "n", "K", "l")

# document key -> (Instance field, index dimensions, holds fuzzy entries)
TABLES = {
	"cost": ("cost", ("m", "n", "K"), True),
	"travel_time_hours": ("travel_time", ("m", "n", "K"), True),
	"handling_time_minutes": ("handling_time", ("l", "K"), True),
	"volume_cap_ft3": ("volume_cap", ("K",), False),
	"weight_cap_kg": ("weight_cap", ("K",), False),
	"unit_volume_ft3": ("unit_volume", ("l",), False),
	"unit_weight_kg": ("unit_weight", ("l",), False),
	"supply": ("supply", ("m", "l"), False),
	"demand": ("demand", ("n", "l"), False),
	"fleet": ("fleet", ("K",), False),
}


def _is_number(value: Any) -> bool:
	return isinstance(value, Real) and not isinstance(value, bool)


def _read_dimensions(document: dict) -> dict[str, int]:
	dimensions = document.get("dimensions")
	if not isinstance(dimensions, dict):
		raise InstanceError("missing field or not an object", "dimensions")
	sizes = {}
	for name in DIMENSIONS:
		value = dimensions.get(name)
		path = f"dimensions.{name}"
		if value is None:
			raise InstanceError("missing field", path)
		if not _is_number(value) or value != int(value) or value < 1:
			raise InstanceError("must be an integer >= 1, got {0!r}".format(value), path)
		sizes[name] = int(value)
	return sizes


def _read_table(value: Any, shape: tuple[int, ...], path: str, fuzzy: bool, integral: bool) -> Any:
	if shape:
		if not isinstance(value, list):
			raise InstanceError("expected an array of {0} entries, got {1!r}".format(shape[0], value), path)
		if len(value) != shape[0]:
			raise InstanceError(
				"dimension mismatch: expected {0} entries, got {1}".format(shape[0], len(value)), path
			)
		return tuple(
			_read_table(item, shape[1:], f"{path}[{index}]", fuzzy, integral) for index, item in enumerate(value)
		)
	if fuzzy:
		try:
			return TrapezoidalFuzzy.coerce(value)
		except DomainError as error:
			raise InstanceError(str(error), path)
	if not _is_number(value):
		raise InstanceError("expected a number, got {0!r}".format(value), path)
	if integral:
		if value != int(value):
			raise InstanceError("expected a whole number, got {0!r}".format(value), path)
		return int(value)
	return float(value)


def instance_from_dict(document: Any) -> Instance:
	"""
	Build an Instance from a decoded JSON document.

	Raises:
	    InstanceError: On a missing or unknown field, a dimension mismatch,
	        a non-numeric entry or a non-monotone trapezoid
	"""
	if not isinstance(document, dict):
		raise InstanceError("instance document must be a JSON object")
	known = {"name", "dimensions", *TABLES}
	for key in document:
		if key not in known and not key.startswith("_"):
			raise InstanceError("unknown field", key)
	sizes = _read_dimensions(document)
	tables = {}
	for key, (name, dims, fuzzy) in TABLES.items():
		if key not in document:
			raise InstanceError("missing field", key)
		shape = tuple(sizes[dim] for dim in dims)
		tables[name] = _read_table(document[key], shape, key, fuzzy, integral=key == "fleet")
	name = document.get("name", "")
	if not isinstance(name, str):
		raise InstanceError("expected a string, got {0!r}".format(name), "name")
	return Instance(**sizes, **tables, name=name)


def parse_instance(path: str | PathLike, check: bool = True) -> Instance:
	"""
	Read and validate an instance file.

	Args:
	    path: JSON instance file
	    check: Run validation; warnings are logged, errors raise

	Raises:
	    InstanceError: If the file is not valid JSON or violates the schema
	    ValidationError: If ``check`` and the instance has validation errors
	"""
	path = Path(path)
	try:
		document = json.loads(path.read_text(encoding="utf-8"))
	except json.JSONDecodeError as error:
		raise InstanceError("invalid JSON: {0}".format(error), str(path))
	instance = instance_from_dict(document)
	if check:
		report = validate(instance)
		for warning in report.warnings:
			logger.warning("%s: %s", path.name, warning)
		report.raise_for_errors()
	logger.debug("Parsed instance '%s' (m=%d, n=%d, K=%d, l=%d)", instance.name, instance.m, instance.n, instance.K, instance.l)
	return instance


def _dump_table(value: Any) -> Any:
	if isinstance(value, tuple):
		return [_dump_table(item) for item in value]
	if isinstance(value, TrapezoidalFuzzy):
		return list(value.as_tuple())
	return value


def instance_to_dict(instance: Instance) -> dict[str, Any]:
	"""JSON-ready document; the inverse of ``instance_from_dict``."""
	document: dict[str, Any] = {}
	if instance.name:
		document["name"] = instance.name
	document["dimensions"] = {name: getattr(instance, name) for name in DIMENSIONS}
	for key, (name, _, _) in TABLES.items():
		document[key] = _dump_table(getattr(instance, name))
	return document


def serialize_instance(instance: Instance) -> str:
	return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def instance_digest(instance: Instance) -> str:
	"""SHA-256 of the canonical (sorted, compact) serialization."""
	canonical = json.dumps(instance_to_dict(instance), sort_keys=True, separators=(",", ":"))
	return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
