# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Solution documents list nonzero entries with 1-based indices:

    {"z": [{"i": 1, "j": 1, "k": 1, "value": 13}, ...],
     "x": [{"i": 1, "j": 1, "k": 1, "p": 1, "value": 153}, ...]}

Absent entries are zero.
"""

import json
from os import PathLike
from pathlib import Path
from typing import Any

from fuzzystp.exceptions import InstanceError
from fuzzystp.model import Instance, MistpSolution


def _read_entries(document: dict, key: str, letters: str, limits: tuple[int, ...]) -> list[tuple]:
	entries = document.get(key, [])
	if not isinstance(entries, list):
		raise InstanceError("expected an array of entries", key)
	seen = set()
	parsed = []
	for position, entry in enumerate(entries):
		path = f"{key}[{position}]"
		if not isinstance(entry, dict):
			raise InstanceError("expected an object", path)
		index = []
		for letter, limit in zip(letters, limits, strict=True):
			value = entry.get(letter)
			if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= limit:
				raise InstanceError("index must be an integer in 1..{0}, got {1!r}".format(limit, value), f"{path}.{letter}")
			index.append(value - 1)
		amount = entry.get("value")
		if not isinstance(amount, int | float) or isinstance(amount, bool):
			raise InstanceError("expected a number, got {0!r}".format(amount), f"{path}.value")
		if tuple(index) in seen:
			raise InstanceError("duplicate entry", path)
		seen.add(tuple(index))
		parsed.append((*index, amount))
	return parsed


def solution_from_dict(document: Any, instance: Instance) -> MistpSolution:
	"""
	Build a plan for ``instance`` from a decoded solution document.

	Raises:
	    InstanceError: On a malformed entry, an index out of range or a duplicate entry
	"""
	if not isinstance(document, dict):
		raise InstanceError("solution document must be a JSON object")
	m, n, K, l = instance.m, instance.n, instance.K, instance.l
	z_entries = _read_entries(document, "z", "ijk", (m, n, K))
	x_entries = _read_entries(document, "x", "ijkp", (m, n, K, l))
	return MistpSolution.from_entries(instance, z_entries, x_entries)


def parse_solution(path: str | PathLike, instance: Instance) -> MistpSolution:
	path = Path(path)
	try:
		document = json.loads(path.read_text(encoding="utf-8"))
	except json.JSONDecodeError as error:
		raise InstanceError("invalid JSON: {0}".format(error), str(path))
	return solution_from_dict(document, instance)


def solution_to_dict(solution: MistpSolution) -> dict[str, list[dict[str, Any]]]:
	"""Nonzero trips then shipments, in index order, 1-based."""
	return {
		"z": [
			{"i": i + 1, "j": j + 1, "k": k + 1, "value": value} for i, j, k, value in solution.z_entries()
		],
		"x": [
			{"i": i + 1, "j": j + 1, "k": k + 1, "p": p + 1, "value": value}
			for i, j, k, p, value in solution.x_entries()
		],
	}


def serialize_solution(solution: MistpSolution) -> str:
	return json.dumps(solution_to_dict(solution), indent=2) + "\n"
