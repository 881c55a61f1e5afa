"""Exact JSON workspaces.

Every scalar is stored as a string in the field's own notation ("3/4" over
the rationals, "2 mod 5" over a prime field), so nothing is lost to floats
and a load/dump cycle reproduces the file byte for byte: `dumps` is
canonical (sorted keys, fixed indent, trailing newline).

A workspace holds named groups, algebras, actions, gradings and modules plus
at most one ribbon datum; cross references go by name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .actions import GGrading, WeakGAction
from .algebras import StructuredAlgebra
from .fields import Field, FieldError, field_from_name
from .groups import FiniteGroup
from .modules import ModuleRep
from .ribbon import RibbonData

FORMAT_VERSION = 1


class WorkspaceError(ValueError):
    pass


def _vec_out(field: Field, v: np.ndarray) -> list[str]:
    return [field.format(x) for x in v]


def _vec_in(field: Field, lst) -> np.ndarray:
    out = np.empty(len(lst), dtype=object)
    for i, s in enumerate(lst):
        out[i] = field.parse(s)
    return out


def _mat_out(field: Field, m: np.ndarray) -> list[list[str]]:
    return [_vec_out(field, row) for row in m]


def _mat_in(field: Field, rows) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        out[i] = _vec_in(field, row)
    return out


def _sparse3_out(field: Field, t: np.ndarray) -> list[list]:
    entries = []
    n0, n1, n2 = t.shape
    for i in range(n0):
        for j in range(n1):
            for k in range(n2):
                if t[i, j, k] != field.zero:
                    entries.append([i, j, k, field.format(t[i, j, k])])
    return entries


def _sparse3_in(field: Field, entries, shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out[...] = field.zero
    for i, j, k, s in entries:
        out[i, j, k] = field.parse(s)
    return out


def group_to_dict(grp: FiniteGroup) -> dict:
    return {"names": list(grp.names),
            "table": [[int(x) for x in row] for row in grp.table]}


def group_from_dict(d: dict) -> FiniteGroup:
    return FiniteGroup(np.array(d["table"], dtype=np.int64), list(d["names"]))


def algebra_to_dict(field: Field, alg: StructuredAlgebra) -> dict:
    out = {
        "dim": alg.dim,
        "labels": list(alg.labels),
        "mu": _sparse3_out(field, alg.mu),
        "unit": _vec_out(field, alg.unit),
    }
    if alg.has_coalgebra:
        out["coproduct"] = [[[field.format(c), u, v] for c, u, v in terms]
                            for terms in alg.coproduct]
        out["counit"] = _vec_out(field, alg.counit)
    if alg.has_antipode:
        out["antipode"] = _mat_out(field, alg.antipode)
    return out


def algebra_from_dict(field: Field, d: dict) -> StructuredAlgebra:
    n = d["dim"]
    mu = _sparse3_in(field, d["mu"], (n, n, n))
    unit = _vec_in(field, d["unit"])
    coproduct = None
    counit = None
    antipode = None
    if "coproduct" in d:
        coproduct = [[(field.parse(c), u, v) for c, u, v in terms]
                     for terms in d["coproduct"]]
        counit = _vec_in(field, d["counit"])
    if "antipode" in d:
        antipode = _mat_in(field, d["antipode"])
    return StructuredAlgebra(field=field, mu=mu, unit=unit,
                             labels=list(d["labels"]), coproduct=coproduct,
                             counit=counit, antipode=antipode)


@dataclass
class Workspace:
    field: Field
    groups: dict = dc_field(default_factory=dict)
    algebras: dict = dc_field(default_factory=dict)
    actions: dict = dc_field(default_factory=dict)
    gradings: dict = dc_field(default_factory=dict)
    modules: dict = dc_field(default_factory=dict)
    ribbon: RibbonData | None = None

    def _name_of(self, table: dict, obj, kind: str) -> str:
        for name, val in table.items():
            if val is obj:
                return name
        raise WorkspaceError(f"{kind} is not registered in the workspace")

    def add_action(self, name: str, action: WeakGAction,
                   group_name: str | None = None, algebra_name: str | None = None):
        if group_name is not None:
            self.groups.setdefault(group_name, action.group)
        if algebra_name is not None:
            self.algebras.setdefault(algebra_name, action.algebra)
        self.actions[name] = action

    def to_dict(self) -> dict:
        f = self.field
        out = {
            "version": FORMAT_VERSION,
            "field": f.describe(),
            "groups": {k: group_to_dict(v) for k, v in self.groups.items()},
            "algebras": {k: algebra_to_dict(f, v)
                         for k, v in self.algebras.items()},
            "actions": {}, "gradings": {}, "modules": {},
        }
        for name, act in self.actions.items():
            out["actions"][name] = {
                "group": self._name_of(self.groups, act.group, "group"),
                "algebra": self._name_of(self.algebras, act.algebra, "algebra"),
                "phi": [_mat_out(f, act.phi[g]) for g in range(act.group.order)],
                "comp": [[_vec_out(f, act.comp[g, h])
                          for h in range(act.group.order)]
                         for g in range(act.group.order)],
            }
        for name, gr in self.gradings.items():
            out["gradings"][name] = {
                "group": self._name_of(self.groups, gr.group, "group"),
                "algebra": self._name_of(self.algebras, gr.algebra, "algebra"),
                "degrees": [int(x) for x in gr.degrees],
            }
        for name, mod in self.modules.items():
            out["modules"][name] = {
                "algebra": self._name_of(self.algebras, mod.algebra, "algebra"),
                "dim": mod.dim,
                "rho": _sparse3_out(f, mod.rho),
            }
        if self.ribbon is not None:
            out["ribbon"] = {
                "algebra": self._name_of(self.algebras, self.ribbon.algebra,
                                         "algebra"),
                "r": _vec_out(f, self.ribbon.rvec),
                "theta": _vec_out(f, self.ribbon.theta),
            }
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Workspace":
        if d.get("version") != FORMAT_VERSION:
            raise WorkspaceError(f"unsupported workspace version {d.get('version')}")
        try:
            f = field_from_name(d["field"])
        except (KeyError, FieldError) as exc:
            raise WorkspaceError(f"bad field entry: {exc}") from exc
        ws = cls(field=f)
        for name, gd in d.get("groups", {}).items():
            ws.groups[name] = group_from_dict(gd)
        for name, ad in d.get("algebras", {}).items():
            ws.algebras[name] = algebra_from_dict(f, ad)
        for name, ad in d.get("actions", {}).items():
            grp = ws.groups[ad["group"]]
            alg = ws.algebras[ad["algebra"]]
            phi = np.empty((grp.order, alg.dim, alg.dim), dtype=object)
            comp = np.empty((grp.order, grp.order, alg.dim), dtype=object)
            for g in range(grp.order):
                phi[g] = _mat_in(f, ad["phi"][g])
                for h in range(grp.order):
                    comp[g, h] = _vec_in(f, ad["comp"][g][h])
            ws.actions[name] = WeakGAction(group=grp, algebra=alg,
                                           phi=phi, comp=comp)
        for name, gd in d.get("gradings", {}).items():
            ws.gradings[name] = GGrading(
                group=ws.groups[gd["group"]], algebra=ws.algebras[gd["algebra"]],
                degrees=np.array(gd["degrees"], dtype=np.int64))
        for name, md in d.get("modules", {}).items():
            alg = ws.algebras[md["algebra"]]
            rho = _sparse3_in(f, md["rho"], (alg.dim, md["dim"], md["dim"]))
            ws.modules[name] = ModuleRep(alg, rho, label=name)
        if "ribbon" in d:
            rd = d["ribbon"]
            ws.ribbon = RibbonData(ws.algebras[rd["algebra"]],
                                   _vec_in(f, rd["r"]), _vec_in(f, rd["theta"]))
        return ws


def dumps(ws: Workspace) -> str:
    return json.dumps(ws.to_dict(), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Workspace:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"not valid JSON: {exc}") from exc
    return Workspace.from_dict(d)


def save(path: str, ws: Workspace):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(ws))


def load(path: str) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
