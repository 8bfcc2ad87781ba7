# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from fuzzystp.io.instances import (
	instance_digest,
	instance_from_dict,
	instance_to_dict,
	parse_instance,
	serialize_instance,
)
from fuzzystp.io.reports import FRONT_HEADERS, RunReport, evaluation_to_dict, front_rows, write_front_csv
from fuzzystp.io.solutions import parse_solution, serialize_solution, solution_from_dict, solution_to_dict

__all__ = [
	"FRONT_HEADERS",
	"RunReport",
	"evaluation_to_dict",
	"front_rows",
	"instance_digest",
	"instance_from_dict",
	"instance_to_dict",
	"parse_instance",
	"parse_solution",
	"serialize_instance",
	"serialize_solution",
	"solution_from_dict",
	"solution_to_dict",
	"write_front_csv",
]
