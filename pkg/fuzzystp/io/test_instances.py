# Copyright (c) 2026, Shaqwieer and Contributors
# See license.txt

import copy
import json

import pytest

from fuzzystp.exceptions import InstanceError, ValidationError
from fuzzystp.fuzzy import TrapezoidalFuzzy
from fuzzystp.io import instance_digest, instance_from_dict, instance_to_dict, parse_instance, serialize_instance


@pytest.fixture
def document(fixtures_dir) -> dict:
	return json.loads((fixtures_dir / "steel.json").read_text(encoding="utf-8"))


class TestParseInstance:
	def test_published_instance(self, steel):
		assert (steel.m, steel.n, steel.K, steel.l) == (2, 3, 2, 2)
		assert steel.name == "steel"
		assert steel.cost[0][0][0] == TrapezoidalFuzzy(101, 102, 104, 105)
		assert steel.handling_time[1][1] == TrapezoidalFuzzy(6, 7, 8, 8.5)
		assert steel.fleet == (52, 35)
		assert all(isinstance(size, int) for size in steel.fleet)
		assert steel.supply[1] == (428.0, 380.0)

	def test_comment_keys_ignored(self, document):
		assert "_comment" in document
		assert instance_from_dict(document).travel_time[0][1][1] == TrapezoidalFuzzy(4.5, 4.8, 5.4, 5.6)

	def test_crisp_numbers_accepted(self, document):
		document["cost"][1][2][1] = 95
		assert instance_from_dict(document).cost[1][2][1] == TrapezoidalFuzzy.crisp(95.0)

	def test_non_monotone_trapezoid(self, document):
		document["cost"][0][0][0] = [4, 3, 2, 1]
		with pytest.raises(InstanceError, match="non-monotone trapezoid") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "cost[0][0][0]"
		assert str(caught.value).startswith("cost[0][0][0]: ")

	def test_wrong_component_count(self, document):
		document["travel_time_hours"][0][1][1] = [4.5, 4, 8, 5.4, 5.6]
		with pytest.raises(InstanceError, match="Expected 4 components") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "travel_time_hours[0][1][1]"

	def test_dimension_mismatch(self, document):
		document["demand"].pop()
		with pytest.raises(InstanceError, match="dimension mismatch: expected 3 entries, got 2") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "demand"

	def test_nested_dimension_mismatch(self, document):
		document["cost"][1][0] = [[102, 104, 106, 107]]
		with pytest.raises(InstanceError) as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "cost[1][0]"

	def test_missing_field(self, document):
		del document["weight_cap_kg"]
		with pytest.raises(InstanceError, match="missing field") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "weight_cap_kg"

	def test_missing_dimension(self, document):
		del document["dimensions"]["K"]
		with pytest.raises(InstanceError, match="missing field") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "dimensions.K"

	def test_unknown_field(self, document):
		document["distance"] = []
		with pytest.raises(InstanceError, match="unknown field"):
			instance_from_dict(document)

	def test_fractional_fleet(self, document):
		document["fleet"] = [52.5, 35]
		with pytest.raises(InstanceError, match="whole number") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "fleet[0]"

	def test_non_numeric_entry(self, document):
		document["supply"][0][1] = "450"
		with pytest.raises(InstanceError, match="expected a number") as caught:
			instance_from_dict(document)
		assert caught.value.key_path == "supply[0][1]"

	def test_invalid_json(self, tmp_path):
		path = tmp_path / "broken.json"
		path.write_text("{", encoding="utf-8")
		with pytest.raises(InstanceError, match="invalid JSON"):
			parse_instance(path)

	def test_validation_runs_on_parse(self, document, tmp_path):
		document["fleet"] = [1, 1]
		path = tmp_path / "short.json"
		path.write_text(json.dumps(document), encoding="utf-8")
		with pytest.raises(ValidationError, match="fleet volume capacity"):
			parse_instance(path)
		assert parse_instance(path, check=False).fleet == (1, 1)


class TestSerializeInstance:
	def test_parse_serialize_parse(self, steel, tmp_path):
		path = tmp_path / "copy.json"
		path.write_text(serialize_instance(steel), encoding="utf-8")
		assert parse_instance(path) == steel

	def test_document_shape(self, steel, document):
		expected = copy.deepcopy(document)
		del expected["_comment"]
		assert instance_to_dict(steel) == expected

	def test_digest_is_stable(self, steel, document):
		digest = instance_digest(steel)
		assert len(digest) == 64
		assert instance_digest(instance_from_dict(document)) == digest
		document["supply"][0][0] = 626
		assert instance_digest(instance_from_dict(document)) != digest
