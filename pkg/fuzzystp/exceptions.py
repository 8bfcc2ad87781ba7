# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

"""Exception hierarchy shared by every fuzzystp module."""


class FuzzySTPError(Exception):
	"""Base class for all errors raised by fuzzystp."""


class DomainError(FuzzySTPError, ValueError):
	"""An argument lies outside the domain of the operation."""


class ConfigurationError(FuzzySTPError):
	"""A solver setting override is unknown or out of range."""


class InstanceError(FuzzySTPError):
	"""An instance document violates the schema.

	Attributes:
	    key_path: Location of the offending value, e.g. ``cost[0][1][0]``
	"""

	def __init__(self, message: str, key_path: str = ""):
		self.key_path = key_path
		super().__init__(f"{key_path}: {message}" if key_path else message)


class ValidationError(FuzzySTPError):
	"""An instance failed validation and cannot be compiled."""

	def __init__(self, errors: list[str]):
		self.errors = list(errors)
		super().__init__("Instance has {0} validation error(s): {1}".format(len(self.errors), "; ".join(self.errors)))


class InfeasibleError(FuzzySTPError):
	"""A solve required by a multi-objective driver did not reach an optimum."""

	def __init__(self, message: str, status: str):
		self.status = status
		super().__init__(message)
