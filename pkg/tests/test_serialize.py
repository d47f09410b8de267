import json

import pytest
from hypothesis import given, strategies as st

from hopfkit.hopf import group_algebra, verify_hopf_axioms
from hopfkit.serialize import SchemaError, dump, from_dict, load, same_structure, to_dict


def _round(h):
    return from_dict(json.loads(json.dumps(to_dict(h))))


def test_round_trip_H(H, tmp_path):
    assert same_structure(H, _round(H))
    path = tmp_path / "h.json"
    dump(H, str(path))
    h2 = load(str(path))
    assert same_structure(H, h2)
    assert verify_hopf_axioms(h2, mode="full").ok


def test_round_trip_double(D):
    d = to_dict(D.carrier)
    assert d["dim"] == 256
    assert same_structure(D.carrier, from_dict(d))


def test_dump_is_deterministic(H, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    dump(H, str(a))
    dump(H, str(b))
    assert a.read_bytes() == b.read_bytes()


@given(st.integers(1, 7))
def test_round_trip_group_algebras(n):
    g = group_algebra(n)
    assert same_structure(g, _round(g))


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d["counit"].__setitem__(0, "1/0"), "$.counit[0]"),
    (lambda d: d["counit"].__setitem__(1, 3), "$.counit[1]"),
    (lambda d: d["mult"][3][2][0].__setitem__(1, "foo"), "$.mult[3][2][0][1]"),
    (lambda d: d["mult"][0].__setitem__(0, 99), "$.mult[0][0]"),
    (lambda d: d["comult"][2][1][0].__setitem__(2, "1 +"), "$.comult[2][1][0][2]"),
    (lambda d: d.pop("antipode"), "$"),
    (lambda d: d["antipode"].pop(), "$.antipode"),
    (lambda d: d.__setitem__("dim", 0), "$.dim"),
    (lambda d: d["basis"].pop(), "$.basis"),
])
def test_schema_errors(H, mutate, where):
    d = json.loads(json.dumps(to_dict(H)))
    mutate(d)
    with pytest.raises(SchemaError) as e:
        from_dict(d)
    assert e.value.where == where


def test_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{\"dim\": 1,")
    with pytest.raises(SchemaError):
        load(str(p))


def test_same_structure_detects_change(H):
    d = to_dict(H)
    d["counit"][0] = "2"
    assert not same_structure(H, from_dict(d))
