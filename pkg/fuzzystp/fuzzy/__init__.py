# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from fuzzystp.fuzzy.credibility import (
	credibility_geq,
	credibility_leq,
	necessity_geq,
	necessity_leq,
	optimistic_value,
	pessimistic_value,
	possibility_geq,
	possibility_leq,
)
from fuzzystp.fuzzy.trapezoid import TrapezoidalFuzzy, linear_combination, membership, negate

__all__ = [
	"TrapezoidalFuzzy",
	"credibility_geq",
	"credibility_leq",
	"linear_combination",
	"membership",
	"necessity_geq",
	"necessity_leq",
	"negate",
	"optimistic_value",
	"pessimistic_value",
	"possibility_geq",
	"possibility_leq",
]
