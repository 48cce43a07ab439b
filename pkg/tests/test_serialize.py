import json

import pytest

from matchroid import (
    CyclicGroup,
    GroundSet,
    InstanceError,
    IntegerWindow,
    ProductGroup,
    UniformMatroid,
    match_matroid,
    parse_instance,
    parse_instance_obj,
)
from matchroid.serialize import (
    canonical_json,
    match_report_to_json,
    matroid_to_json,
    parse_group,
    parse_matroid,
)


def test_group_json_kinds():
    assert parse_group({"kind": "cyclic", "n": 7}) == CyclicGroup(7)
    assert parse_group({"kind": "product", "factors": [2, 3]}) == ProductGroup([2, 3])
    assert parse_group({"kind": "zwindow", "lo": -2, "hi": 5}) == IntegerWindow(-2, 5)


def test_group_json_schema_errors():
    with pytest.raises(InstanceError) as err:
        parse_group({"kind": "ring", "n": 7})
    assert err.value.kind == "schema-violation"


def test_matroid_json_round_trip():
    group = CyclicGroup(11)
    reps = [
        {"ground": [1, 2, 3], "rep": {"kind": "uniform", "rank": 2}},
        {"ground": [1, 2, 3], "rep": {"kind": "free"}},
        {"ground": [1, 2, 3], "rep": {"kind": "bases", "list": [[1, 2], [1, 3]]}},
        {"ground": [1, 2, 3, 4], "rep": {"kind": "ch", "rank": 2, "ch": [[3, 4]]}},
        {
            "ground": [1, 2, 3, 4],
            "rep": {"kind": "partition", "blocks": [[1], [2, 3, 4]], "caps": [1, 1]},
        },
    ]
    for obj in reps:
        m = parse_matroid(group, obj, "matroids.M")
        again = parse_matroid(group, matroid_to_json(m), "matroids.M")
        assert matroid_to_json(again) == matroid_to_json(m)


def test_product_group_elements_are_arrays():
    group = ProductGroup([2, 3])
    obj = {
        "group": {"kind": "product", "factors": [2, 3]},
        "matroids": {
            "M": {"ground": [[0, 1], [1, 0], [1, 2]], "rep": {"kind": "uniform", "rank": 2}}
        },
        "subsets": {"A": [[0, 1], [1, 2]]},
    }
    inst = parse_instance_obj(obj)
    assert inst.group == group
    assert inst.matroid("M").ground.elements == ((0, 1), (1, 0), (1, 2))
    assert inst.subset("A").elems == {(0, 1), (1, 2)}


def test_element_out_of_group_is_not_reduced():
    obj = {
        "group": {"kind": "cyclic", "n": 7},
        "subsets": {"A": [1, 9]},
    }
    with pytest.raises(InstanceError) as err:
        parse_instance_obj(obj)
    assert err.value.kind == "element-out-of-group"
    assert "subsets.A" in err.value.field


def test_close_circuit_hyperplanes_named_invariant():
    obj = {
        "group": {"kind": "cyclic", "n": 11},
        "matroids": {
            "N": {"ground": [1, 2, 3, 4], "rep": {"kind": "ch", "rank": 2, "ch": [[1, 2], [1, 3]]}}
        },
    }
    with pytest.raises(InstanceError) as err:
        parse_instance_obj(obj)
    assert err.value.kind == "invariant-violation"
    assert "too close" in str(err.value)


def test_unknown_rep_kind():
    obj = {
        "group": {"kind": "cyclic", "n": 7},
        "matroids": {"M": {"ground": [1], "rep": {"kind": "graphic"}}},
    }
    with pytest.raises(InstanceError) as err:
        parse_instance_obj(obj)
    assert err.value.kind == "schema-violation"


def test_duplicate_subset_elements():
    obj = {"group": {"kind": "cyclic", "n": 7}, "subsets": {"A": [1, 1]}}
    with pytest.raises(InstanceError) as err:
        parse_instance_obj(obj)
    assert err.value.kind == "invariant-violation"


def test_missing_names_reported():
    inst = parse_instance_obj({"group": {"kind": "cyclic", "n": 7}})
    with pytest.raises(InstanceError):
        inst.matroid("M")
    with pytest.raises(InstanceError):
        inst.subset("A")


def test_parse_instance_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InstanceError) as err:
        parse_instance(str(bad))
    assert "line" in str(err.value)
    with pytest.raises(InstanceError):
        parse_instance(str(tmp_path / "missing.json"))


def test_parse_instance_file(tmp_path, sym_counterexample_file):
    inst = parse_instance(sym_counterexample_file)
    assert inst.matroid("M").rank_value == 2
    assert len(inst.subset("A")) == 3


def test_canonical_json_is_stable():
    doc = {"b": [3, 1], "a": {"y": 2, "x": 1}}
    assert canonical_json(doc) == canonical_json(json.loads(canonical_json(doc)))
    assert canonical_json(doc) == '{"a":{"x":1,"y":2},"b":[3,1]}'


def test_match_report_json_shape():
    group = CyclicGroup(7)
    m = UniformMatroid(GroundSet(group, [1, 2, 3]), 2)
    doc = match_report_to_json(match_matroid(m, m))
    assert doc["matched"] is True
    assert doc["failing_basis"] is None
    assert [e["basis"] for e in doc["witnesses"]] == [[1, 2], [1, 3], [2, 3]]
    for entry in doc["witnesses"]:
        assert entry["witness"]["perm"] == [0, 1]


def test_more_schema_errors():
    with pytest.raises(InstanceError):
        parse_instance_obj([1, 2])
    with pytest.raises(InstanceError):
        parse_instance_obj({"subsets": {}})
    with pytest.raises(InstanceError):
        parse_matroid(CyclicGroup(7), "nope", "matroids.M")
    with pytest.raises(InstanceError):
        parse_matroid(CyclicGroup(7), {"ground": [1]}, "matroids.M")
    with pytest.raises(InstanceError):
        parse_matroid(
            CyclicGroup(7), {"ground": [1], "rep": {"kind": "uniform"}}, "matroids.M"
        )
    with pytest.raises(InstanceError) as err:
        parse_instance_obj(
            {"group": {"kind": "product", "factors": [2, 3]}, "subsets": {"A": [3]}}
        )
    assert err.value.kind == "schema-violation"  # product elements are arrays


def test_semi_progression_report_json():
    from matchroid import IntegerWindow, GroupSubset, classify_progression
    from matchroid.serialize import progression_report_to_json

    w = IntegerWindow(-10, 10)
    doc = progression_report_to_json(
        classify_progression(GroupSubset.of(w, [0, 1, 3]))
    )
    assert doc == {
        "kind": "semi-progression",
        "progression": {"a": 1, "x": 2, "k": 2},
        "removed": 0,
    }
