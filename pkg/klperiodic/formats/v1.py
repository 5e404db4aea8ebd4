""" Version 1 of the klperiodic data description

This is the first version of the JSON description of the values
klperiodic computes with and of the reports it produces. Every value
type has a plain JSON encoding:

  LaurentPoly   [[exponent, coefficient], ...], exponent-ascending
  WeylElt       the canonical word, as an array of generator indices
  AffineElt     {"word": [...], "translation": [...]}
  Alcove        the encoding of its coordinate
  PeriodicVec   {"floor": N, "terms": [[alcove, laurent], ...]}
  HeckeElt      {"basis": "T~", "floor": N, "terms": [[word, laurent], ...]}
  SimpleKL      {"w": word, "z": word}
  K0Vec         [[simple, laurent], ...]
  BoxFunction   [[a, b, laurent], ...], lexicographic in (a, b)
"""
import json
from typing import Dict, List

from ..alcove import AffineElt, Alcove, AlcoveSpace
from ..cato import K0Vec, SimpleKL
from ..coxeter import CartanDatum, WeylElt
from ..heckemod import HeckeElt
from ..laurent import LaurentPoly
from ..meta import Index, ValidationResult
from ..padic import BoxFunction
from ..periodic import PeriodicVec
from ..util.types import JSONDict, LaurentJSON


VERSION = "1"


def describe_laurent(p: LaurentPoly) -> LaurentJSON:
    return [[e, c] for e, c in p]


def describe_affine(x: AffineElt) -> Dict:
    return {"word": list(x.w.word), "translation": list(x.translation)}


def _sort_key(data) -> str:
    return json.dumps(data, sort_keys=True)


def describe(value):
    """Create the JSON description of `value`"""
    if isinstance(value, LaurentPoly):
        return describe_laurent(value)
    if isinstance(value, WeylElt):
        return list(value.word)
    if isinstance(value, CartanDatum):
        return value.label or [list(row) for row in value.cartan]
    if isinstance(value, AffineElt):
        return describe_affine(value)
    if isinstance(value, Alcove):
        return describe_affine(value.coord)
    if isinstance(value, PeriodicVec):
        terms = [[describe(a), describe_laurent(c)] for a, c in value.terms.items()]
        return {"floor": value.floor, "terms": sorted(terms, key=lambda t: _sort_key(t[0]))}
    if isinstance(value, HeckeElt):
        terms = [[list(w.word), describe_laurent(value.coefficient(w))] for w in value.support()]
        return {"basis": "T~", "floor": value.floor, "terms": terms}
    if isinstance(value, SimpleKL):
        return {"w": list(value.w.word), "z": list(value.z.word)}
    if isinstance(value, K0Vec):
        return [[describe(s), describe_laurent(value.terms[s])] for s in value.support()]
    if isinstance(value, BoxFunction):
        return [[a, b, describe_laurent(value.coefficient(a, b))] for a, b in value.boxes()]
    raise ValueError(f"Cannot describe {type(value).__name__}")


def load_laurent(description: LaurentJSON) -> LaurentPoly:
    return LaurentPoly([(int(e), int(c)) for e, c in description])


def load_affine(description: Dict, space: AlcoveSpace) -> AffineElt:
    w = space.group.element(description["word"])
    return AffineElt(w, tuple(description["translation"]))


def load_alcove(description: Dict, space: AlcoveSpace) -> Alcove:
    return Alcove(space, load_affine(description, space))


def load_box(description: List) -> BoxFunction:
    return BoxFunction({(int(a), int(b)): load_laurent(c) for a, b, c in description})


def load_periodic(description: Dict, space: AlcoveSpace) -> PeriodicVec:
    terms = {}
    for alcove, coeff in description["terms"]:
        terms[load_alcove(alcove, space)] = load_laurent(coeff)
    return PeriodicVec(space, terms, description.get("floor"))


def output(report: Dict) -> JSONDict:
    """Convert a suite report into the v1 format

    Checks are sorted by their id; absent witnesses are omitted.
    """
    checks = []
    for check in sorted(report["checks"], key=lambda c: c["check_id"]):
        entry = {
            "check_id": check["check_id"],
            "status": check["status"],
            "floor": check.get("floor"),
        }
        if check.get("witness") is not None:
            entry["witness"] = check["witness"]
        if "duration" in check:
            entry["duration"] = round(check["duration"], 3)
        checks.append(entry)

    return {
        "suite": report["suite"],
        "type": report["type"],
        "success": all(c["status"] == "pass" for c in checks),
        "checks": checks,
    }


def validate(report: Dict, index: Index) -> ValidationResult:
    """Validate a report against the `report` schema"""
    schema = index.get_schema("report")
    return schema.validate(report)
