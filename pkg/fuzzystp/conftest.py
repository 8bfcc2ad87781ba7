# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

from pathlib import Path

import numpy as np
import pytest

from fuzzystp.fuzzy import TrapezoidalFuzzy
from fuzzystp.io import parse_instance
from fuzzystp.model import Instance

FIXTURES = Path(__file__).parent / "fixtures"


def crisp(value: float) -> TrapezoidalFuzzy:
	return TrapezoidalFuzzy.crisp(value)


def lane_instance(fleet: int = 5) -> Instance:
	"""One source, destination, vehicle type and product; 10 units, 4 per trip at cost 5."""
	return Instance(
		m=1,
		n=1,
		K=1,
		l=1,
		cost=[[[crisp(5.0)]]],
		travel_time=[[[crisp(2.0)]]],
		handling_time=[[crisp(6.0)]],
		volume_cap=[4.0],
		weight_cap=[100.0],
		unit_volume=[1.0],
		unit_weight=[1.0],
		supply=[[10.0]],
		demand=[[10.0]],
		fleet=[fleet],
		name="lane",
	)


def two_vehicle_instance() -> Instance:
	"""
	8 units over one lane with a cheap slow vehicle (cost 10, 5 h) and a dear
	fast one (cost 20, 2 h), 4 units per trip. The nondominated plans are
	(20, 10), (30, 7) and (40, 4).
	"""
	return Instance(
		m=1,
		n=1,
		K=2,
		l=1,
		cost=[[[TrapezoidalFuzzy(8.0, 9.0, 10.0, 10.0), TrapezoidalFuzzy(18.0, 19.0, 20.0, 20.0)]]],
		travel_time=[[[TrapezoidalFuzzy(4.0, 4.5, 5.0, 5.0), TrapezoidalFuzzy(1.0, 1.5, 2.0, 2.0)]]],
		handling_time=[[crisp(0.0), crisp(0.0)]],
		volume_cap=[4.0, 4.0],
		weight_cap=[100.0, 100.0],
		unit_volume=[1.0],
		unit_weight=[1.0],
		supply=[[8.0]],
		demand=[[8.0]],
		fleet=[2, 2],
		name="two-vehicle",
	)


@pytest.fixture
def rng() -> np.random.Generator:
	return np.random.default_rng(20260418)


@pytest.fixture
def fixtures_dir() -> Path:
	return FIXTURES


@pytest.fixture(scope="session")
def steel() -> Instance:
	return parse_instance(FIXTURES / "steel.json")


@pytest.fixture
def lane() -> Instance:
	return lane_instance()


@pytest.fixture
def two_vehicle() -> Instance:
	return two_vehicle_instance()
