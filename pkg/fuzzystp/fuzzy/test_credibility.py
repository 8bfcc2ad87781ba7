# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import numpy as np
import pytest

from fuzzystp.exceptions import DomainError
from fuzzystp.fuzzy import (
	TrapezoidalFuzzy,
	credibility_geq,
	credibility_leq,
	linear_combination,
	negate,
	optimistic_value,
	pessimistic_value,
)

ALPHAS = np.arange(1, 100) / 100.0


def random_trapezoids(rng: np.random.Generator, count: int) -> list[TrapezoidalFuzzy]:
	"""Random trapezoids, a fifth of them with a step ramp and some fully crisp."""
	trapezoids = []
	for index in range(count):
		r = np.sort(rng.uniform(-50.0, 150.0, 4))
		if index % 5 == 1:
			r[1] = r[0]
		elif index % 5 == 2:
			r[3] = r[2]
		elif index % 25 == 3:
			r[:] = r[0]
		trapezoids.append(TrapezoidalFuzzy(*r))
	return trapezoids


def bisect_pessimistic(xi: TrapezoidalFuzzy, alphas: np.ndarray, steps: int = 80) -> np.ndarray:
	"""inf{r : Cr{xi <= r} >= alpha}, one bisection per alpha run side by side."""
	lo = np.full_like(alphas, xi.r1 - 1.0)
	hi = np.full_like(alphas, xi.r4)
	for _ in range(steps):
		mid = 0.5 * (lo + hi)
		accept = credibility_leq(xi, mid) >= alphas
		hi = np.where(accept, mid, hi)
		lo = np.where(accept, lo, mid)
	return hi


def bisect_optimistic(xi: TrapezoidalFuzzy, alphas: np.ndarray, steps: int = 80) -> np.ndarray:
	"""sup{r : Cr{xi >= r} >= alpha}, one bisection per alpha run side by side."""
	lo = np.full_like(alphas, xi.r1)
	hi = np.full_like(alphas, xi.r4 + 1.0)
	for _ in range(steps):
		mid = 0.5 * (lo + hi)
		accept = credibility_geq(xi, mid) >= alphas
		lo = np.where(accept, mid, lo)
		hi = np.where(accept, hi, mid)
	return lo


class TestCredibility:
	@pytest.mark.parametrize(("x", "expected"), [(2.0, 0.5), (0.0, 0.0), (3.5, 0.75), (2.7, 0.5), (4.0, 1.0), (1.5, 0.25)])
	def test_credibility_leq(self, x, expected):
		assert credibility_leq(TrapezoidalFuzzy(1, 2, 3, 4), x) == pytest.approx(expected)

	def test_credibility_geq_mirrors_leq(self):
		xi = TrapezoidalFuzzy(1, 2, 3, 4)
		assert credibility_geq(xi, 3.0) == pytest.approx(0.5)
		assert credibility_geq(xi, 1.5) == pytest.approx(0.75)
		assert credibility_geq(xi, 0.0) == 1.0
		assert credibility_geq(xi, 5.0) == 0.0

	def test_step_ramps_are_well_defined(self):
		xi = TrapezoidalFuzzy(1, 1, 3, 3)
		assert credibility_leq(xi, 0.99) == 0.0
		assert credibility_leq(xi, 1.0) == 0.5
		assert credibility_leq(xi, 3.0) == 1.0
		assert credibility_geq(xi, 3.0) == 0.5

	def test_array_thresholds(self):
		values = credibility_leq(TrapezoidalFuzzy(1, 2, 3, 4), np.array([0.0, 2.0, 3.5, 9.0]))
		assert isinstance(values, np.ndarray)
		np.testing.assert_allclose(values, [0.0, 0.5, 0.75, 1.0])

	def test_nondecreasing(self, rng):
		grid = np.linspace(-60.0, 160.0, 2001)
		for xi in random_trapezoids(rng, 50):
			assert np.all(np.diff(credibility_leq(xi, grid)) >= 0)
			assert np.all(np.diff(credibility_geq(xi, grid)) <= 0)


class TestAlphaValues:
	@pytest.mark.parametrize(("alpha", "expected"), [(0.9, 104.8), (0.5, 102.0), (1.0, 105.0), (0.25, 101.5)])
	def test_pessimistic_value(self, alpha, expected):
		assert pessimistic_value(TrapezoidalFuzzy(101, 102, 104, 105), alpha) == pytest.approx(expected, abs=1e-12)

	@pytest.mark.parametrize(("alpha", "expected"), [(0.5, 3.0), (1.0, 1.0), (0.25, 3.5), (0.75, 1.5)])
	def test_optimistic_value(self, alpha, expected):
		assert optimistic_value(TrapezoidalFuzzy(1, 2, 3, 4), alpha) == pytest.approx(expected, abs=1e-12)

	@pytest.mark.parametrize("alpha", [0.0, -0.1, 1.0000001, float("nan")])
	def test_alpha_out_of_range(self, alpha):
		xi = TrapezoidalFuzzy(1, 2, 3, 4)
		with pytest.raises(DomainError):
			pessimistic_value(xi, alpha)
		with pytest.raises(DomainError):
			optimistic_value(xi, alpha)

	def test_crisp_consistency(self):
		xi = TrapezoidalFuzzy.crisp(42.5)
		for alpha in ALPHAS:
			assert pessimistic_value(xi, alpha) == pytest.approx(42.5, abs=1e-12)
			assert optimistic_value(xi, alpha) == pytest.approx(42.5, abs=1e-12)


class TestOracleProperties:
	def test_closed_forms_match_bisection(self, rng):
		for xi in random_trapezoids(rng, 1000):
			pessimistic = np.array([pessimistic_value(xi, alpha) for alpha in ALPHAS])
			optimistic = np.array([optimistic_value(xi, alpha) for alpha in ALPHAS])
			np.testing.assert_allclose(pessimistic, bisect_pessimistic(xi, ALPHAS), rtol=0, atol=1e-9)
			np.testing.assert_allclose(optimistic, bisect_optimistic(xi, ALPHAS), rtol=0, atol=1e-9)

	def test_monotone_in_alpha(self, rng):
		for xi in random_trapezoids(rng, 200):
			pessimistic = [pessimistic_value(xi, alpha) for alpha in ALPHAS]
			optimistic = [optimistic_value(xi, alpha) for alpha in ALPHAS]
			assert np.all(np.diff(pessimistic) >= -1e-12)
			assert np.all(np.diff(optimistic) <= 1e-12)

	def test_duality(self, rng):
		for xi in random_trapezoids(rng, 1000):
			for alpha in ALPHAS:
				assert optimistic_value(xi, alpha) == pytest.approx(-pessimistic_value(negate(xi), alpha), abs=1e-9)

	def test_linearity_under_pessimism(self, rng):
		trapezoids = random_trapezoids(rng, 1000)
		for start in range(0, 1000, 5):
			terms = [(float(rng.uniform(0.0, 20.0)), xi) for xi in trapezoids[start : start + 5]]
			combined = linear_combination(terms)
			for alpha in ALPHAS:
				expected = sum(weight * pessimistic_value(xi, alpha) for weight, xi in terms)
				assert pessimistic_value(combined, alpha) == pytest.approx(expected, abs=1e-9)
