"""Workspace JSON round trips stay exact, byte for byte."""

import json
from fractions import Fraction

import numpy as np
import pytest

from hopfstrict.actions import GGrading, counterexample_action
from hopfstrict.docio import Workspace, WorkspaceError, dumps, load, loads, save
from hopfstrict.fields import Field
from hopfstrict.modules import regular_module
from hopfstrict.ribbon import RibbonData

Q = Field.Q()
F5 = Field.GF(5)


def full_workspace(field) -> Workspace:
    act = counterexample_action(field)
    ws = Workspace(field=field)
    ws.add_action("dihedral", act, group_name="klein", algebra_name="kz2")
    ws.gradings["flat"] = GGrading(act.group, act.algebra,
                                   np.zeros(act.algebra.dim, dtype=np.int64))
    ws.modules["reg"] = regular_module(act.algebra)
    n = act.algebra.dim
    rv = field.zeros(n * n)
    rv[0] = field.one
    ws.ribbon = RibbonData(act.algebra, rv, act.algebra.unit.copy())
    return ws


@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_round_trip_is_byte_identical(field):
    text = dumps(full_workspace(field))
    assert dumps(loads(text)) == text
    assert text.endswith("\n")


def test_loaded_objects_match():
    ws = full_workspace(F5)
    ws2 = loads(dumps(ws))
    act, act2 = ws.actions["dihedral"], ws2.actions["dihedral"]
    assert np.array_equal(act2.algebra.mu, act.algebra.mu)
    assert np.array_equal(act2.phi, act.phi)
    assert np.array_equal(act2.comp, act.comp)
    assert act2.group.names == act.group.names
    assert np.array_equal(ws2.gradings["flat"].degrees, ws.gradings["flat"].degrees)
    assert np.array_equal(ws2.modules["reg"].rho, ws.modules["reg"].rho)
    assert ws2.modules["reg"].label == "reg"
    assert np.array_equal(ws2.ribbon.rvec, ws.ribbon.rvec)
    assert np.array_equal(ws2.ribbon.theta, ws.ribbon.theta)
    # coalgebra data survives too
    alg2 = ws2.algebras["kz2"]
    assert alg2.has_coalgebra and alg2.has_antipode


def test_scalars_are_stored_in_field_notation():
    doc = json.loads(dumps(full_workspace(F5)))
    assert doc["algebras"]["kz2"]["unit"] == ["1 mod 5", "0 mod 5"]
    assert Q.format(Fraction(3, 4)) == "3/4"
    assert Q.parse("3/4") == Fraction(3, 4)
    assert F5.parse("2 mod 5") == 2


def test_save_load_files(tmp_path):
    ws = full_workspace(Q)
    path = tmp_path / "ws.json"
    save(str(path), ws)
    assert dumps(load(str(path))) == dumps(ws)


def test_unregistered_reference_is_an_error():
    act = counterexample_action(Q)
    ws = Workspace(field=Q)
    ws.actions["orphan"] = act            # group/algebra never registered
    with pytest.raises(WorkspaceError):
        dumps(ws)


def test_bad_documents_are_rejected():
    with pytest.raises(WorkspaceError):
        loads("this is not json")
    with pytest.raises(WorkspaceError):
        loads(json.dumps({"version": 99, "field": "Q"}))
    with pytest.raises(WorkspaceError):
        loads(json.dumps({"version": 1, "field": "GF(6)"}))
