# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from fuzzystp.model.compiler import CompiledModel, check_confidence, compile_model
from fuzzystp.model.evaluation import EvaluationReport, RowCheck, evaluate, fuzzy_objectives
from fuzzystp.model.instance import Instance, ValidationReport, validate
from fuzzystp.model.solution import MistpSolution

__all__ = [
	"CompiledModel",
	"EvaluationReport",
	"Instance",
	"MistpSolution",
	"RowCheck",
	"ValidationReport",
	"check_confidence",
	"compile_model",
	"evaluate",
	"fuzzy_objectives",
	"validate",
]
