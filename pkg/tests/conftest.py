import json

import pytest

from matchroid import CyclicGroup, IntegerWindow, ProductGroup


@pytest.fixture
def c7():
    return CyclicGroup(7)


@pytest.fixture
def c11():
    return CyclicGroup(11)


@pytest.fixture
def window():
    return IntegerWindow(-10, 10)


@pytest.fixture
def small_groups():
    return [
        CyclicGroup(4),
        CyclicGroup(6),
        CyclicGroup(7),
        ProductGroup([2, 3]),
        ProductGroup([2, 2, 2]),
    ]


def write_instance(tmp_path, obj, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def sym_counterexample_file(tmp_path):
    """The transversal matroid on [4] that is not matched to itself."""
    return write_instance(
        tmp_path,
        {
            "group": {"kind": "zwindow", "lo": 0, "hi": 8},
            "matroids": {
                "M": {
                    "ground": [1, 2, 3, 4],
                    "rep": {"kind": "partition", "blocks": [[1], [2, 3, 4]], "caps": [1, 1]},
                },
                "U": {"ground": [1, 2, 3, 4], "rep": {"kind": "uniform", "rank": 2}},
            },
            "subsets": {"A": [1, 2, 3], "B": [1, 2, 3], "F1": [4], "F2": [3, 4]},
        },
    )
