# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import pytest

from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy import TrapezoidalFuzzy, linear_combination, membership, negate


class TestTrapezoidalFuzzy:
	def test_rejects_non_monotone_components(self):
		with pytest.raises(DomainError, match="non-monotone trapezoid"):
			TrapezoidalFuzzy(4, 3, 2, 1)

	def test_rejects_non_finite_components(self):
		with pytest.raises(DomainError):
			TrapezoidalFuzzy(0, 1, 2, float("inf"))

	def test_crisp_is_degenerate(self):
		xi = TrapezoidalFuzzy.crisp(7)
		assert xi.as_tuple() == (7.0, 7.0, 7.0, 7.0)
		assert xi.is_crisp

	def test_coerce_accepts_scalars_and_sequences(self):
		assert TrapezoidalFuzzy.coerce(3) == TrapezoidalFuzzy.crisp(3)
		assert TrapezoidalFuzzy.coerce([101, 102, 104, 105]) == TrapezoidalFuzzy(101, 102, 104, 105)

	@pytest.mark.parametrize("value", [[1, 2, 3], "1234", True, None, [1, 2, "3", 4]])
	def test_coerce_rejects_bad_shapes(self, value):
		with pytest.raises(DomainError):
			TrapezoidalFuzzy.coerce(value)

	def test_negate_reverses_components(self):
		assert negate(TrapezoidalFuzzy(1, 2, 3, 4)) == TrapezoidalFuzzy(-4, -3, -2, -1)
		assert -TrapezoidalFuzzy(1, 2, 3, 4) == TrapezoidalFuzzy(-4, -3, -2, -1)


class TestMembership:
	@pytest.mark.parametrize(
		("x", "expected"),
		[(2.5, 1.0), (1.5, 0.5), (5.0, 0.0), (2.0, 1.0), (3.0, 1.0), (3.5, 0.5), (1.0, 0.0), (4.0, 0.0)],
	)
	def test_standard_trapezoid(self, x, expected):
		assert membership(TrapezoidalFuzzy(1, 2, 3, 4), x) == pytest.approx(expected)

	def test_step_ramp_has_full_membership_at_the_step(self):
		xi = TrapezoidalFuzzy(1, 1, 3, 4)
		assert membership(xi, 1.0) == 1.0
		assert membership(xi, 0.999) == 0.0

	def test_crisp_number(self):
		xi = TrapezoidalFuzzy.crisp(2)
		assert membership(xi, 2.0) == 1.0
		assert membership(xi, 2.1) == 0.0


class TestLinearCombination:
	def test_scaling(self):
		assert linear_combination([(2, TrapezoidalFuzzy(1, 2, 3, 4))]) == TrapezoidalFuzzy(2, 4, 6, 8)

	def test_addition(self):
		terms = [(1, TrapezoidalFuzzy(1, 2, 3, 4)), (1, TrapezoidalFuzzy(0, 1, 1, 2))]
		assert linear_combination(terms) == TrapezoidalFuzzy(1, 3, 4, 6)

	def test_empty_sum(self):
		assert linear_combination([]) == TrapezoidalFuzzy(0, 0, 0, 0)

	def test_negative_weight_is_rejected(self):
		with pytest.raises(DomainError):
			linear_combination([(-1, TrapezoidalFuzzy(1, 2, 3, 4))])

	def test_output_stays_ordered(self, rng):
		for _ in range(200):
			terms = [
				(float(rng.uniform(0, 10)), TrapezoidalFuzzy(*sorted(rng.uniform(-50, 50, 4))))
				for _ in range(int(rng.integers(0, 6)))
			]
			xi = linear_combination(terms)
			assert xi.r1 <= xi.r2 <= xi.r3 <= xi.r4
