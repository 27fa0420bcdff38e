from __future__ import annotations

import json
import warnings

import pytest

from branchlab.embedding import from_spec_dict, load_embedding, space_dims
from branchlab.errors import DimensionMismatchError, ParseError, ValidationError


def test_space_dims_examples():
    assert space_dims(load_embedding("diag:A1")).as_json() == {"dim_X": 3, "dim_G": 3, "n": 0}
    assert space_dims(load_embedding("diag:A2")).as_json() == {"dim_X": 9, "dim_G": 8, "n": 1}
    assert space_dims(load_embedding("principal-a1:A2")).as_json() == {"dim_X": 4, "dim_G": 3, "n": 1}


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "A1xA1", "C3"])
def test_diagonal_dims(t):
    e = load_embedding(f"diag:{t}")
    npos = len(e.target.positive_roots)
    d = space_dims(e)
    assert d.dim_X == 3 * npos
    assert d.dim_G == e.target.dim_group


def test_floor_warns():
    with pytest.warns(UserWarning):
        d = space_dims(load_embedding("id:B2"))
    assert d.n == 0 and d.warning


def test_builtin_matrices():
    assert load_embedding("diag:A1").restriction == ((1, 1),)
    assert load_embedding("principal-a1:A2").restriction == ((2, 2),)
    assert load_embedding("principal-a1:A3").restriction == ((3, 4, 3),)
    assert load_embedding("id:B2").restriction == ((1, 0), (0, 1))


def test_fingerprint_ignores_name_and_key_order(tmp_path):
    spec = {"matrix": [[2, 2]], "target": "A1", "source": "A2"}
    path = tmp_path / "e.json"
    path.write_text(json.dumps(spec))
    e = load_embedding(str(path))
    assert e.fingerprint == load_embedding("principal-a1:A2").fingerprint
    assert e.name == "custom"


def test_custom_valid_embedding(tmp_path):
    # sl2 in the upper-left corner of sl3: 3 = 2 + 1
    e = from_spec_dict({"source": "A2", "target": "A1", "matrix": [[1, 0]]})
    from branchlab.characters import branch
    assert branch(e, (1, 0)).table == {(0,): 1, (1,): 1}


def test_custom_invalid_embedding_rejected():
    with pytest.raises(ValidationError):
        from_spec_dict({"source": "A2", "target": "A1", "matrix": [[1, 2]]})


def test_spec_shape_errors(tmp_path):
    with pytest.raises(DimensionMismatchError):
        from_spec_dict({"source": "A2", "target": "A1", "matrix": [[1, 0, 0]]})
    with pytest.raises(ParseError):
        from_spec_dict({"source": "A2", "target": "A1"})
    with pytest.raises(ParseError):
        load_embedding("nope:A1")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ParseError):
        load_embedding(str(bad))
