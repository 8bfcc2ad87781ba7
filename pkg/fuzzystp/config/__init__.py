# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""
Solver Settings - Tolerances, Limits and Defaults

Every numeric knob used by the engine and the drivers lives here so that a
run is fully described by its settings object.

Usage:
    from fuzzystp.config import get_settings

    settings = get_settings().override(node_limit=10_000, workers=4)
"""

from dataclasses import dataclass, fields, replace
from typing import Any

from fuzzystp.exceptions import ConfigurationError


@dataclass(frozen=True)
class SolverSettings:
	"""
	Immutable bundle of solver tolerances and limits.

	Attributes:
	    feasibility_tol: Absolute tolerance on constraint row activity
	    integrality_tol: Distance from an integer still counted as integral
	    gap_tol: Absolute bound-pruning gap in branch-and-bound
	    pivot_eps: Smallest magnitude accepted as a pivot element
	    pivot_limit: Maximum simplex pivots per LP solve
	    bland_after: Consecutive non-improving pivots before switching to Bland's rule
	    node_limit: Maximum branch-and-bound nodes per MILP solve
	    enumeration_budget: Maximum integer assignments the brute-force oracle visits
	    handling_divisor: Divides handling times before they enter the time objective
	    lexicographic_rtol: Relative slack on a first-stage optimum when re-optimizing
	    eta: Default confidence level for the cost objective
	    gamma: Default confidence level for the time objective
	    q: Default exponent of the global criterion
	    sweep_limit: Maximum ε-constraint solves in one global criterion sweep
	    workers: Worker threads for independent solves (1 = sequential)
	"""

	feasibility_tol: float = 1e-6
	integrality_tol: float = 1e-6
	gap_tol: float = 1e-6
	pivot_eps: float = 1e-9
	pivot_limit: int = 50_000
	bland_after: int = 1_000
	node_limit: int = 200_000
	enumeration_budget: int = 1_000_000
	handling_divisor: float = 60.0
	lexicographic_rtol: float = 1e-6
	eta: float = 0.9
	gamma: float = 0.9
	q: int = 2
	sweep_limit: int = 250
	workers: int = 1

	def __post_init__(self):
		for field in fields(self):
			value = getattr(self, field.name)
			if field.name in ("eta", "gamma"):
				if not 0 < value <= 1:
					raise ConfigurationError("Setting '{0}' must lie in (0, 1], got {1}".format(field.name, value))
			elif value <= 0:
				raise ConfigurationError("Setting '{0}' must be positive, got {1}".format(field.name, value))

	def override(self, **changes: Any) -> "SolverSettings":
		"""
		Return a copy with the given settings replaced.

		``None`` values are ignored so CLI options can be passed straight through.

		Raises:
		    ConfigurationError: If a key is unknown or a value out of range
		"""
		known = {field.name for field in fields(self)}
		unknown = sorted(set(changes) - known)
		if unknown:
			raise ConfigurationError("Unknown setting(s): {0}".format(", ".join(unknown)))
		return replace(self, **{key: value for key, value in changes.items() if value is not None})


DEFAULT_SETTINGS = SolverSettings()


def get_settings() -> SolverSettings:
	"""Get the default solver settings."""
	return DEFAULT_SETTINGS


__all__ = ["DEFAULT_SETTINGS", "SolverSettings", "get_settings"]
