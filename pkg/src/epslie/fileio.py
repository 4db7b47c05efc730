"""Algebra and module files: structured JSON, exactly representable rationals.

Algebra files:
  {"grading": {"free_rank": r, "torsion": [..], "form": [[..]]},
   "basis": [{"label": str, "degree": [..]}, ..],
   "brackets": [{"i": a, "j": b, "terms": [{"k": c, "coeff": "p/q"}, ..]}, ..]}

Module files add sparse-triplet action matrices, one per algebra basis
element:
  {"basis": [..as above..],
   "action": [{"op": i, "entries": [{"row": r, "col": c, "coeff": "p/q"}]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import EpsLieAlgebra
from .exactlin import RationalSparseMatrix
from .gmodule import GradedModule
from .grading import CommutationFactor, GradingGroup


class ParseError(ValueError):
    pass


class ValidationFailure(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__("validation failed: %r" % (report,))


def coeff_str(x: Fraction):
    return str(x)


def parse_coeff(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError("bad coefficient %r: %s" % (s, e))


def algebra_to_dict(L: EpsLieAlgebra):
    brackets = []
    for (i, j) in sorted(L.table):
        terms = [
            {"k": k, "coeff": coeff_str(c)}
            for k, c in sorted(L.table[(i, j)].items())
        ]
        brackets.append({"i": i, "j": j, "terms": terms})
    return {
        "grading": {
            "free_rank": L.group.free_rank,
            "torsion": list(L.group.torsion_orders),
            "form": [list(row) for row in L.factor.form],
        },
        "basis": [
            {"label": lab, "degree": list(deg)}
            for lab, deg in zip(L.labels, L.degrees)
        ],
        "brackets": brackets,
    }


def algebra_from_dict(data):
    try:
        gr = data["grading"]
        group = GradingGroup(int(gr["free_rank"]), tuple(gr.get("torsion", ())))
        factor = CommutationFactor(group, tuple(tuple(r) for r in gr["form"]))
        labels = [str(b["label"]) for b in data["basis"]]
        degrees = [tuple(b["degree"]) for b in data["basis"]]
        brackets = {}
        for rec in data.get("brackets", ()):
            vec = {int(t["k"]): parse_coeff(t["coeff"]) for t in rec["terms"]}
            brackets[(int(rec["i"]), int(rec["j"]))] = vec
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError("malformed algebra data: %s" % e)
    L = EpsLieAlgebra(factor, labels, degrees, brackets)
    report = L.validate()
    if not report.ok:
        raise ValidationFailure(report)
    return L


def module_to_dict(V: GradedModule):
    action = []
    for i, m in enumerate(V.action):
        entries = [
            {"row": r, "col": c, "coeff": coeff_str(v)}
            for (r, c), v in sorted(m.entries.items())
        ]
        action.append({"op": i, "entries": entries})
    return {
        "basis": [
            {"label": lab, "degree": list(deg)}
            for lab, deg in zip(V.labels, V.degrees)
        ],
        "action": action,
    }


def module_from_dict(data, L: EpsLieAlgebra):
    try:
        labels = [str(b["label"]) for b in data["basis"]]
        degrees = [tuple(b["degree"]) for b in data["basis"]]
        dim = len(labels)
        mats = [RationalSparseMatrix(dim, dim) for _ in range(L.dim)]
        for rec in data.get("action", ()):
            i = int(rec["op"])
            if not 0 <= i < L.dim:
                raise ParseError("action op index %d out of range" % i)
            ent = {
                (int(t["row"]), int(t["col"])): parse_coeff(t["coeff"])
                for t in rec["entries"]
            }
            mats[i] = RationalSparseMatrix(dim, dim, ent)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError("malformed module data: %s" % e)
    V = GradedModule(L, labels, degrees, mats)
    report = V.validate()
    if not report.ok:
        raise ValidationFailure(report)
    return V


def save_algebra(L, path):
    with open(path, "w") as fh:
        json.dump(algebra_to_dict(L), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_algebra(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise ParseError("bad JSON in %s: line %d: %s" % (path, e.lineno, e.msg))
    return algebra_from_dict(data)


def save_module(V, path):
    with open(path, "w") as fh:
        json.dump(module_to_dict(V), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_module(path, L):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise ParseError("bad JSON in %s: line %d: %s" % (path, e.lineno, e.msg))
    return module_from_dict(data, L)
