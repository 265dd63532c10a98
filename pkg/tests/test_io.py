import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hbounds import Tensor
from hbounds.io import TensorFileError, bundled, load, save, tensor_from_dict, tensor_to_dict
from hbounds.tensor import TensorSizeError


def written_out_A1():
    """All 16 entries of A1, listed slot by slot."""
    a = np.zeros((2,) * 4)
    a[0, 0, 0, 0], a[1, 1, 1, 1] = 18, 20
    for idx in ["1222", "2122", "2212", "2221"]:
        a[tuple(int(c) - 1 for c in idx)] = 3
    for idx in ["1122", "2211", "1221", "2112", "2121", "1212"]:
        a[tuple(int(c) - 1 for c in idx)] = 2
    for idx in ["1112", "2111", "1211", "1121"]:
        a[tuple(int(c) - 1 for c in idx)] = 2
    return Tensor(a)


def test_symmetrized_coords_give_A1(A1):
    assert A1 == written_out_A1()


def test_dense_roundtrip_bit_exact(tmp_path, A1):
    path = tmp_path / "a1.json"
    save(A1, path)
    doc = json.loads(path.read_text())
    assert doc["format"] == "dense" and len(doc["dense"]) == 16
    again = load(path)
    assert again == A1
    save(again, tmp_path / "b.json")
    assert (tmp_path / "b.json").read_text() == path.read_text()


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from([1, 2, 3]),
    st.sampled_from([1, 2, 3]),
    st.data(),
)
def test_coords_dense_coords_roundtrip(m, n, data):
    arr = data.draw(arrays(np.float64, (n,) * m, elements=st.floats(-1e6, 1e6, allow_subnormal=False)))
    A = Tensor(arr)
    via_coords = tensor_from_dict(json.loads(json.dumps(tensor_to_dict(A, "coords"))))
    assert via_coords == A
    dense = tensor_from_dict(tensor_to_dict(via_coords, "dense"))
    assert tensor_to_dict(dense, "coords") == tensor_to_dict(A, "coords")


def test_conflicting_orbit_values_rejected():
    doc = {
        "order": 3,
        "dim": 2,
        "format": "coords",
        "symmetrize": True,
        "entries": [{"idx": [1, 1, 2], "val": 1}, {"idx": [2, 1, 1], "val": 2}],
    }
    with pytest.raises(TensorFileError, match="conflicting"):
        tensor_from_dict(doc)
    doc["symmetrize"] = False
    A = tensor_from_dict(doc)
    assert A[(0, 0, 1)] == 1 and A[(1, 0, 0)] == 2 and A[(0, 1, 0)] == 0


def test_repeated_equal_values_allowed():
    doc = {
        "order": 2,
        "dim": 2,
        "format": "coords",
        "symmetrize": True,
        "entries": [{"idx": [1, 2], "val": 4}, {"idx": [2, 1], "val": 4}],
    }
    np.testing.assert_array_equal(tensor_from_dict(doc).data, [[0, 4], [4, 0]])


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"order": 0, "dim": 2, "dense": []},
        {"order": 2, "dim": True, "dense": [1]},
        {"order": 2, "dim": 2, "dense": [1, 2, 3]},
        {"order": 2, "dim": 2, "dense": [1, 2, 3, "x"]},
        {"order": 2, "dim": 2, "format": "sparse"},
        {"order": 2, "dim": 2, "format": "coords", "entries": [{"idx": [1, 3], "val": 1}]},
        {"order": 2, "dim": 2, "format": "coords", "entries": [{"idx": [1], "val": 1}]},
        {"order": 2, "dim": 2, "format": "coords", "entries": [{"val": 1}]},
        {"order": 2, "dim": 2, "format": "coords", "entries": {}},
        {"order": 2, "dim": 2, "dense": [1, 2, 3, float("nan")]},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(TensorFileError):
        tensor_from_dict(doc)


def test_guard_applies_before_allocation():
    with pytest.raises(TensorSizeError):
        tensor_from_dict({"order": 20, "dim": 10, "format": "coords", "entries": []})
    with pytest.raises(TensorSizeError):
        tensor_from_dict({"order": 2, "dim": 3, "dense": [0] * 9}, max_entries=8)


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(TensorFileError):
        load(path)


def test_bundled_tensors():
    assert bundled("A2")[(0, 0, 1, 1)] == -2
    np.testing.assert_array_equal(bundled("counterexample").data, [[-1, -0.5], [-0.5, -1]])
