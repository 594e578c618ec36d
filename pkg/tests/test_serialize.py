import json

from qfock.canonical import canonical_basis, canonical_vector
from qfock.fock import BlockId, FockVec
from qfock.laurent import Laurent
from qfock.partitions import EMPTY, Partition
from qfock.serialize import parse, render_table, serialize
from qfock.symfunc import eta_expansion

P = Partition


def test_example_vector_round_trip():
    g = canonical_vector(P([12, 4, 4, 3, 1, 1]), 3)
    assert parse(serialize(g)) == g


def test_matrix_round_trip():
    D = canonical_basis(BlockId(2, EMPTY, 2), minus=True)
    assert parse(serialize(D)) == D


def test_one_by_one_block_record():
    rec = json.loads(serialize(canonical_basis(BlockId(3, P([3, 1]), 0))))
    assert rec["order"] == ["[3,1]"] and rec["rows"] == [[[[0, 1]]]]


def test_empty_values():
    assert render_table(FockVec()) == ""
    assert json.loads(serialize(FockVec())) == {"kind": "fock", "terms": []}
    assert serialize([]) == "[]"


def test_other_kinds_round_trip():
    for value in (Laurent({-2: 3, 1: -1}), P([4, 4, 1]), eta_expansion((EMPTY, P([1]), P([2])), 3)):
        assert parse(serialize(value)) == value


def test_nested_report_round_trip():
    rep = {"vector": FockVec({P([2]): Laurent(1)}), "ok": True, "list": [P([1]), 3]}
    assert parse(serialize(rep)) == rep


def test_serialize_is_deterministic():
    g = canonical_vector(P([3, 3]), 2)
    assert serialize(g) == serialize(FockVec(dict(reversed(list(g.items())))))
